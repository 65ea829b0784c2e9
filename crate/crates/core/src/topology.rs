//! The topology on a finite algebra whose basic open sets are the
//! subalgebra universes.
//!
//! Subalgebras are closed under intersection, so every point has a smallest
//! open neighbourhood, the subalgebra it generates, and the topology is
//! Alexandroff: a set is open iff it contains the smallest open set of each
//! of its points.

use crate::algebra::{
    enumerate_subalgebras, fixed_points, Element, ElementSet, FiniteAlgebra, SubalgebraOptions,
};
use crate::decision::{decide_finite, RamseyStatus};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyBasis {
    size: usize,
    opens: Vec<ElementSet>,
    smallest: Vec<ElementSet>,
}

impl TopologyBasis {
    /// Basic opens from [`enumerate_subalgebras`]. In singleton mode only
    /// the subalgebras generated by one element are listed, which still
    /// determines every smallest open set.
    pub fn new(alg: &FiniteAlgebra, options: SubalgebraOptions) -> Result<Self> {
        let opens = enumerate_subalgebras(alg, options)?;
        let n = alg.size();
        let smallest = (0..n)
            .map(|a| {
                opens
                    .iter()
                    .filter(|u| u.contains(a))
                    .fold(ElementSet::full(n), |acc, u| acc.intersection(u))
            })
            .collect();
        Ok(TopologyBasis {
            size: n,
            opens,
            smallest,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn basic_opens(&self) -> &[ElementSet] {
        &self.opens
    }

    /// The intersection of all basic opens containing `a`.
    pub fn smallest_open(&self, a: Element) -> Result<&ElementSet> {
        self.smallest.get(a).ok_or(Error::ElementOutOfRange {
            element: a,
            size: self.size,
        })
    }

    fn check(&self, u: &ElementSet) -> Result<()> {
        match u.iter().find(|&&a| a >= self.size) {
            Some(&a) => Err(Error::ElementOutOfRange {
                element: a,
                size: self.size,
            }),
            None => Ok(()),
        }
    }

    pub fn is_open(&self, u: &ElementSet) -> Result<bool> {
        self.check(u)?;
        Ok(u.iter().all(|&a| self.smallest[a].is_subset(u)))
    }

    /// Whether the basic open `u` has an open complement.
    pub fn is_clopen_basic(&self, u: &ElementSet) -> Result<bool> {
        self.check(u)?;
        if self.opens.binary_search_by(|o| cmp_basis(o, u)).is_err() {
            return Err(Error::InvalidSubset(format!("{u} is not a basic open set")));
        }
        self.is_open(&u.complement(self.size))
    }

    /// Basic opens other than `∅` and the universe whose complement is
    /// open, in basis order.
    pub fn nontrivial_clopens(&self) -> Vec<&ElementSet> {
        self.opens
            .iter()
            .filter(|u| !u.is_empty() && u.len() < self.size)
            .filter(|u| self.is_open(&u.complement(self.size)).expect("in range"))
            .collect()
    }
}

// basis order: by size, then lexicographically
fn cmp_basis(a: &ElementSet, b: &ElementSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Density {
    Dense,
    /// The smallest open set around `point` misses every fixed point.
    NotDense {
        point: Element,
    },
}

/// Whether the fixed points of a unary algebra meet every nonempty open set.
pub fn fixed_point_density(alg: &FiniteAlgebra) -> Result<Density> {
    let fixed = fixed_points(alg)?;
    let basis = TopologyBasis::new(
        alg,
        SubalgebraOptions {
            singletons_only: true,
            ..SubalgebraOptions::default()
        },
    )?;
    for a in 0..alg.size() {
        if basis.smallest[a].is_disjoint(&fixed) {
            return Ok(Density::NotDense { point: a });
        }
    }
    Ok(Density::Dense)
}

/// Whether every subalgebra inside the open set `u` is Ramsey.
fn open_part_is_ramsey(alg: &FiniteAlgebra, basis: &TopologyBasis, u: &ElementSet) -> Result<bool> {
    if crate::algebra::closure(alg, u)? == *u {
        let (sub, _) = alg.restrict(u)?;
        return Ok(decide_finite(&sub).status() == RamseyStatus::Ramsey);
    }
    for &a in u {
        let (sub, _) = alg.restrict(&basis.smallest[a])?;
        if decide_finite(&sub).status() != RamseyStatus::Ramsey {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Looks for a nontrivial clopen basic set `U` such that `U` and its
/// complement carry only Ramsey subalgebras; the algebra is then Ramsey.
/// Returns the first such `U`.
pub fn clopen_ramsey_lift(
    alg: &FiniteAlgebra,
    options: SubalgebraOptions,
) -> Result<Option<ElementSet>> {
    let basis = TopologyBasis::new(alg, options)?;
    for u in basis.nontrivial_clopens() {
        let rest = u.complement(alg.size());
        if open_part_is_ramsey(alg, &basis, u)? && open_part_is_ramsey(alg, &basis, &rest)? {
            return Ok(Some(u.clone()));
        }
    }
    Ok(None)
}

/// If the proper nonempty subalgebras cover the universe and are all
/// Ramsey, returns whether the algebra itself is Ramsey; otherwise `None`.
pub fn proper_cover_conclusion(
    alg: &FiniteAlgebra,
    options: SubalgebraOptions,
) -> Result<Option<bool>> {
    let basis = TopologyBasis::new(alg, options)?;
    let n = alg.size();
    let proper: Vec<&ElementSet> = basis
        .opens
        .iter()
        .filter(|u| !u.is_empty() && u.len() < n)
        .collect();
    let covered = proper.iter().fold(ElementSet::new(), |acc, u| acc.union(u));
    if covered.len() < n {
        return Ok(None);
    }
    for u in &proper {
        let (sub, _) = alg.restrict(u)?;
        if decide_finite(&sub).status() != RamseyStatus::Ramsey {
            return Ok(None);
        }
    }
    Ok(Some(decide_finite(alg).status() == RamseyStatus::Ramsey))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature;
    use crate::constructions::catalog;

    fn full(alg: &FiniteAlgebra) -> TopologyBasis {
        TopologyBasis::new(alg, SubalgebraOptions::default()).unwrap()
    }

    fn set(xs: &[Element]) -> ElementSet {
        xs.iter().copied().collect()
    }

    fn identity2() -> FiniteAlgebra {
        let sig = Signature::new([("i", 1)]).unwrap();
        FiniteAlgebra::new("id", sig, 2, vec![vec![0, 1]]).unwrap()
    }

    #[test]
    fn smallest_opens() {
        let p3 = catalog::predecessor_trunc(3);
        let b = full(&p3);
        assert_eq!(b.smallest_open(2).unwrap(), &set(&[0, 1, 2]));
        assert_eq!(b.smallest_open(0).unwrap(), &set(&[0]));
        assert!(b.smallest_open(4).is_err());
        let a5 = full(&catalog::dlimit_trunc(5));
        assert_eq!(a5.smallest_open(3).unwrap(), &set(&[3]));
    }

    #[test]
    fn openness() {
        let b = full(&catalog::predecessor_trunc(3));
        assert!(b.is_open(&set(&[0, 1])).unwrap());
        assert!(!b.is_open(&set(&[1, 2, 3])).unwrap());
        assert!(b.is_open(&ElementSet::new()).unwrap());
        assert!(b.is_open(&set(&[5])).is_err());
    }

    #[test]
    fn clopens() {
        let b = full(&catalog::predecessor_trunc(3));
        assert!(!b.is_clopen_basic(&set(&[0])).unwrap());
        assert!(b.nontrivial_clopens().is_empty());
        assert!(matches!(
            b.is_clopen_basic(&set(&[1])),
            Err(Error::InvalidSubset(_))
        ));

        assert!(full(&identity2()).is_clopen_basic(&set(&[0])).unwrap());
        let a3 = full(&catalog::dlimit_trunc(3));
        assert!(a3.is_clopen_basic(&set(&[0, 1])).unwrap());
    }

    #[test]
    fn density() {
        assert_eq!(
            fixed_point_density(&catalog::predecessor_trunc(6)).unwrap(),
            Density::Dense
        );
        assert_eq!(
            fixed_point_density(&catalog::swap2()).unwrap(),
            Density::NotDense { point: 0 }
        );
        assert_eq!(fixed_point_density(&identity2()).unwrap(), Density::Dense);
        assert!(fixed_point_density(&catalog::zmod(2).unwrap()).is_err());
    }

    #[test]
    fn lifts() {
        let opts = SubalgebraOptions::default();
        let a3 = catalog::dlimit_trunc(3);
        let lift = clopen_ramsey_lift(&a3, opts).unwrap().unwrap();
        assert!(full(&a3).is_clopen_basic(&lift).unwrap());
        assert_eq!(decide_finite(&a3).status(), RamseyStatus::Ramsey);
        assert_eq!(
            clopen_ramsey_lift(&catalog::predecessor_trunc(3), opts).unwrap(),
            None
        );
        assert_eq!(
            clopen_ramsey_lift(&identity2(), opts).unwrap(),
            Some(set(&[0]))
        );
        assert_eq!(clopen_ramsey_lift(&catalog::swap2(), opts).unwrap(), None);
    }

    #[test]
    fn covers() {
        let opts = SubalgebraOptions::default();
        assert_eq!(
            proper_cover_conclusion(&catalog::dlimit_trunc(4), opts).unwrap(),
            Some(true)
        );
        // only trivial subalgebras
        assert_eq!(
            proper_cover_conclusion(&catalog::swap2(), opts).unwrap(),
            None
        );
        // {3} is not covered by a proper subalgebra
        assert_eq!(
            proper_cover_conclusion(&catalog::predecessor_trunc(3), opts).unwrap(),
            None
        );
    }
}
