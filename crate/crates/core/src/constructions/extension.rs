use crate::algebra::{for_each_tuple, table_len, Element, FiniteAlgebra};
use crate::error::{Error, Result};

/// Default bound on the number of new table entries for exhaustive
/// extension enumeration.
pub const DEFAULT_EXTENSION_ENTRY_LIMIT: usize = 12;

/// Table positions, in the extended algebra of size `n + 1`, of the tuples
/// that involve the new point `n`; one list per symbol.
pub fn new_entry_positions(alg: &FiniteAlgebra) -> Vec<Vec<usize>> {
    let n = alg.size();
    alg.signature()
        .symbols()
        .iter()
        .map(|s| {
            let mut positions = Vec::new();
            let mut i = 0;
            for_each_tuple(n + 1, s.arity, |t| {
                if t.contains(&n) {
                    positions.push(i);
                }
                i += 1;
            });
            positions
        })
        .collect()
}

fn extend_tables(alg: &FiniteAlgebra) -> Result<Vec<Vec<Element>>> {
    let n = alg.size();
    let mut tables = Vec::new();
    for (symbol, s) in alg.signature().symbols().iter().enumerate() {
        let mut table = Vec::with_capacity(table_len(n + 1, s.arity)?);
        for_each_tuple(n + 1, s.arity, |t| {
            table.push(if t.contains(&n) {
                n
            } else {
                alg.value(symbol, t)
            });
        });
        tables.push(table);
    }
    Ok(tables)
}

/// Adds the point `alpha = n`. `fill[f]` lists the values of `f` on the new
/// tuples in lexicographic order; old tuples keep their values.
pub fn one_point_extension(alg: &FiniteAlgebra, fill: &[Vec<Element>]) -> Result<FiniteAlgebra> {
    let positions = new_entry_positions(alg);
    if fill.len() != positions.len() {
        return Err(Error::InvalidFill(format!(
            "{} symbols but {} fill lists",
            positions.len(),
            fill.len()
        )));
    }
    let mut tables = extend_tables(alg)?;
    for (symbol, (pos, values)) in positions.iter().zip(fill).enumerate() {
        if pos.len() != values.len() {
            return Err(Error::InvalidFill(format!(
                "`{}` needs {} new entries, got {}",
                alg.signature().name(symbol),
                pos.len(),
                values.len()
            )));
        }
        for (&p, &v) in pos.iter().zip(values) {
            tables[symbol][p] = v;
        }
    }
    FiniteAlgebra::new(
        format!("{}+1", alg.name()),
        alg.signature().clone(),
        alg.size() + 1,
        tables,
    )
}

/// Every one-point extension, in odometer order over the new entries.
pub struct OnePointExtensions {
    current: FiniteAlgebra,
    slots: Vec<(usize, usize)>,
    started: bool,
    done: bool,
}

impl OnePointExtensions {
    pub fn new(alg: &FiniteAlgebra, limit: usize) -> Result<Self> {
        let positions = new_entry_positions(alg);
        let slots: Vec<(usize, usize)> = positions
            .iter()
            .enumerate()
            .flat_map(|(f, ps)| ps.iter().map(move |&p| (f, p)))
            .collect();
        if slots.len() > limit {
            return Err(Error::GuardExceeded {
                what: "one-point extension new entries",
                required: slots.len() as u128,
                limit: limit as u128,
            });
        }
        let mut tables = extend_tables(alg)?;
        for &(f, p) in &slots {
            tables[f][p] = 0;
        }
        let current = FiniteAlgebra::new(
            format!("{}+1", alg.name()),
            alg.signature().clone(),
            alg.size() + 1,
            tables,
        )?;
        Ok(OnePointExtensions {
            current,
            slots,
            started: false,
            done: false,
        })
    }

    /// Number of extensions this enumeration produces.
    pub fn total(&self) -> u128 {
        (self.current.size() as u128).saturating_pow(self.slots.len() as u32)
    }

    fn advance(&mut self) -> bool {
        let size = self.current.size();
        let tables = self.current.tables_mut();
        for &(f, p) in self.slots.iter().rev() {
            tables[f][p] += 1;
            if tables[f][p] < size {
                return true;
            }
            tables[f][p] = 0;
        }
        false
    }

    /// Visits each extension in place, without cloning tables.
    pub fn for_each(mut self, mut visit: impl FnMut(&FiniteAlgebra)) {
        if self.started || self.done {
            return;
        }
        loop {
            visit(&self.current);
            if !self.advance() {
                return;
            }
        }
    }
}

impl Iterator for OnePointExtensions {
    type Item = FiniteAlgebra;

    fn next(&mut self) -> Option<FiniteAlgebra> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.current.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixed_points;
    use crate::algebra::ElementSet;
    use crate::constructions::catalog;

    #[test]
    fn predecessor_extensions() {
        let p2 = catalog::predecessor_trunc(2);
        let fixed = one_point_extension(&p2, &[vec![3]]).unwrap();
        assert_eq!(fixed.table(0), &[0, 0, 1, 3]);
        assert_eq!(fixed_points(&fixed).unwrap(), ElementSet::from_iter([0, 3]));

        let down = one_point_extension(&p2, &[vec![1]]).unwrap();
        let mut a = 3;
        let mut steps = 0;
        while a != 0 {
            a = down.value(0, &[a]);
            steps += 1;
        }
        assert_eq!(steps, 2);

        let all: Vec<_> = OnePointExtensions::new(&p2, 12).unwrap().collect();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|e| &e.table(0)[..3] == p2.table(0)));
    }

    #[test]
    fn fill_validation() {
        let p2 = catalog::predecessor_trunc(2);
        assert!(matches!(
            one_point_extension(&p2, &[vec![]]),
            Err(Error::InvalidFill(_))
        ));
        assert!(one_point_extension(&p2, &[]).is_err());
        assert!(matches!(
            one_point_extension(&p2, &[vec![4]]),
            Err(Error::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn binary_positions_and_guard() {
        let z3 = catalog::zmod(3).unwrap();
        // 4^2 - 3^2 new entries
        assert_eq!(new_entry_positions(&z3)[0].len(), 7);
        let ext = OnePointExtensions::new(&z3, 12).unwrap();
        assert_eq!(ext.total(), 4u128.pow(7));
        let z4 = catalog::zmod(4).unwrap();
        assert!(OnePointExtensions::new(&z4, 8).is_err());
        let mut seen = 0;
        OnePointExtensions::new(&z4, 12).unwrap().for_each(|e| {
            assert_eq!(e.value(0, &[1, 2]), 3);
            seen += 1;
        });
        assert_eq!(seen, 5usize.pow(9));
    }
}
