use std::sync::Arc;

use super::HomomorphismMap;
use crate::algebra::{Element, FiniteAlgebra, FixedPointHint, Interpretation, Rule, RuleAlgebra};
use crate::error::{Error, Result};

/// Default bound on the universe size of a finite product.
pub const DEFAULT_PRODUCT_LIMIT: usize = 1_000_000;

/// Mixed-radix encoding of product tuples: `(a_0, .., a_{m-1})` has rank
/// `a_0 * n_1 * .. * n_{m-1} + .. + a_{m-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductIndex {
    sizes: Vec<usize>,
}

impl ProductIndex {
    pub fn new(sizes: Vec<usize>) -> Self {
        ProductIndex { sizes }
    }

    pub fn factor_sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn size(&self) -> usize {
        self.sizes.iter().product()
    }

    pub fn encode(&self, coords: &[Element]) -> Result<Element> {
        if coords.len() != self.sizes.len() {
            return Err(Error::ArityMismatch {
                expected: self.sizes.len(),
                found: coords.len(),
            });
        }
        let mut rank = 0;
        for (&c, &n) in coords.iter().zip(&self.sizes) {
            if c >= n {
                return Err(Error::ElementOutOfRange {
                    element: c,
                    size: n,
                });
            }
            rank = rank * n + c;
        }
        Ok(rank)
    }

    pub fn decode(&self, mut rank: Element) -> Vec<Element> {
        let mut coords = vec![0; self.sizes.len()];
        for (slot, &n) in coords.iter_mut().zip(&self.sizes).rev() {
            *slot = rank % n;
            rank /= n;
        }
        coords
    }

    /// The projection onto factor `i`.
    pub fn projection(&self, i: usize) -> Result<HomomorphismMap> {
        let target = *self
            .sizes
            .get(i)
            .ok_or_else(|| Error::InvalidMap(format!("product has no factor {i}")))?;
        let map = (0..self.size()).map(|r| self.decode(r)[i]).collect();
        HomomorphismMap::new(self.size(), target, map)
    }
}

/// Cartesian product with coordinate-wise operations.
pub fn product(algs: &[FiniteAlgebra], limit: usize) -> Result<(FiniteAlgebra, ProductIndex)> {
    let first = algs
        .first()
        .ok_or_else(|| Error::InvalidBound("product needs at least one factor".into()))?;
    for alg in &algs[1..] {
        first.same_signature(alg)?;
    }
    let size = algs
        .iter()
        .try_fold(1usize, |acc, a| acc.checked_mul(a.size()))
        .filter(|&s| s <= limit)
        .ok_or_else(|| Error::GuardExceeded {
            what: "product universe size",
            required: algs.iter().map(|a| a.size() as u128).product(),
            limit: limit as u128,
        })?;
    let index = ProductIndex::new(algs.iter().map(|a| a.size()).collect());
    let decoded: Vec<Vec<Element>> = (0..size).map(|r| index.decode(r)).collect();
    let name = algs.iter().map(|a| a.name()).collect::<Vec<_>>().join("x");
    let mut coord_args = Vec::new();
    let mut result = vec![0; algs.len()];
    let alg = FiniteAlgebra::from_fn(name, first.signature().clone(), size, |f, t| {
        for (i, factor) in algs.iter().enumerate() {
            coord_args.clear();
            coord_args.extend(t.iter().map(|&r| decoded[r][i]));
            result[i] = factor.value(f, &coord_args);
        }
        result
            .iter()
            .zip(&index.sizes)
            .fold(0, |acc, (&c, &n)| acc * n + c)
    })?;
    Ok((alg, index))
}

/// How the coordinates beyond a finite window are understood to continue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tail {
    /// Coordinate `i` holds `i`.
    Diagonal,
}

/// A finite window onto an infinite product: elements are `width`-tuples and
/// coordinate `i` follows factor `i mod factors.len()`.
#[derive(Clone, Debug)]
pub struct WindowedProduct {
    pub algebra: RuleAlgebra<Vec<Element>>,
    pub width: usize,
    pub tail: Tail,
}

impl WindowedProduct {
    /// The window of the element described by the tail rule.
    pub fn tail_window(&self) -> Vec<Element> {
        match self.tail {
            Tail::Diagonal => diagonal_window(self.width),
        }
    }
}

/// `(0, 1, .., width-1)`.
pub fn diagonal_window(width: usize) -> Vec<Element> {
    (0..width).collect()
}

pub fn rule_product(factors: &[RuleAlgebra], width: usize) -> Result<WindowedProduct> {
    if width == 0 {
        return Err(Error::InvalidBound(
            "window width must be at least 1".into(),
        ));
    }
    let first = factors
        .first()
        .ok_or_else(|| Error::InvalidBound("product needs at least one factor".into()))?;
    if factors.iter().any(|f| f.signature() != first.signature()) {
        return Err(Error::SignatureMismatch);
    }
    let coordinate: Vec<RuleAlgebra> = (0..width)
        .map(|i| factors[i % factors.len()].clone())
        .collect();
    let coordinate = Arc::new(coordinate);

    let rules: Vec<Rule<Vec<Element>>> = (0..first.signature().len())
        .map(|symbol| {
            let coordinate = Arc::clone(&coordinate);
            let rule: Rule<Vec<Element>> = Arc::new(move |args: &[Vec<Element>]| {
                let mut column = Vec::with_capacity(args.len());
                (0..coordinate.len())
                    .map(|i| {
                        column.clear();
                        column.extend(args.iter().map(|a| a[i]));
                        coordinate[i].apply(symbol, &column)
                    })
                    .collect()
            });
            rule
        })
        .collect();

    let hint = if factors
        .iter()
        .any(|f| matches!(f.hint(), FixedPointHint::NoneExist))
    {
        FixedPointHint::NoneExist
    } else if factors
        .iter()
        .all(|f| matches!(f.hint(), FixedPointHint::Predicate(_)))
    {
        let coordinate = Arc::clone(&coordinate);
        FixedPointHint::Predicate(Arc::new(move |v: &Vec<Element>| {
            v.iter()
                .zip(coordinate.iter())
                .all(|(x, alg)| match alg.hint() {
                    FixedPointHint::Predicate(p) => p(x),
                    _ => false,
                })
        }))
    } else {
        FixedPointHint::Unknown
    };

    let carrier_coords = Arc::clone(&coordinate);
    let name = format!("{}^{}", first.name(), width);
    let algebra = RuleAlgebra::new(name, first.signature().clone(), rules)?
        .with_carrier(move |v: &Vec<Element>| {
            v.len() == carrier_coords.len()
                && v.iter()
                    .zip(carrier_coords.iter())
                    .all(|(x, alg)| alg.contains(x))
        })
        .with_hint(hint);
    Ok(WindowedProduct {
        algebra,
        width,
        tail: Tail::Diagonal,
    })
}
