use std::fmt;

use super::HomomorphismMap;
use crate::algebra::{for_each_tuple, Element, ElementSet, FiniteAlgebra, SymbolId};
use crate::error::{Error, Result};

/// A partition of `{0, .., n-1}`. Blocks are ordered by their least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CongruencePartition {
    blocks: Vec<ElementSet>,
    block_of: Vec<usize>,
}

impl CongruencePartition {
    pub fn new(n: usize, blocks: Vec<ElementSet>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &a in block {
                if a >= n {
                    return Err(Error::ElementOutOfRange {
                        element: a,
                        size: n,
                    });
                }
                if block_of[a] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("{a} lies in two blocks")));
                }
                block_of[a] = i;
            }
        }
        if let Some(a) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition(format!("{a} is not covered")));
        }
        Ok(Self::from_labels(&block_of))
    }

    /// Groups elements with equal labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut rename = std::collections::HashMap::new();
        let mut block_of = Vec::with_capacity(labels.len());
        let mut members: Vec<Vec<Element>> = Vec::new();
        for (a, label) in labels.iter().enumerate() {
            let next = rename.len();
            let b = *rename.entry(label).or_insert(next);
            if b == members.len() {
                members.push(Vec::new());
            }
            members[b].push(a);
            block_of.push(b);
        }
        CongruencePartition {
            blocks: members
                .into_iter()
                .map(ElementSet::from_sorted_unchecked)
                .collect(),
            block_of,
        }
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn one_block(n: usize) -> Self {
        Self::from_labels(&vec![0; n])
    }

    pub fn universe_size(&self) -> usize {
        self.block_of.len()
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, a: Element) -> usize {
        self.block_of[a]
    }

    pub fn related(&self, a: Element, b: Element) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &CongruencePartition) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&a| other.related(a, b.as_slice()[0])))
    }
}

/// Related argument tuples whose images fall in different blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceViolation {
    pub symbol: SymbolId,
    pub left: Vec<Element>,
    pub right: Vec<Element>,
    pub left_value: Element,
    pub right_value: Element,
}

impl fmt::Display for CongruenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "symbol {} maps {:?} to {} and {:?} to {}",
            self.symbol, self.left, self.left_value, self.right, self.right_value
        )
    }
}

fn check_sizes(alg: &FiniteAlgebra, part: &CongruencePartition) -> Result<()> {
    if part.universe_size() != alg.size() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} elements, algebra has {}",
            part.universe_size(),
            alg.size()
        )));
    }
    Ok(())
}

/// Checks compatibility with every operation. Returns `None` for a
/// congruence, otherwise the lexicographically first violating pair of
/// tuples.
pub fn check_congruence(
    alg: &FiniteAlgebra,
    part: &CongruencePartition,
) -> Result<Option<CongruenceViolation>> {
    check_sizes(alg, part)?;
    if single_coordinate_compatible(alg, part) {
        return Ok(None);
    }
    Ok(first_violation(alg, part))
}

// Compatibility follows from changing one coordinate at a time.
fn single_coordinate_compatible(alg: &FiniteAlgebra, part: &CongruencePartition) -> bool {
    let mut other = Vec::new();
    for (symbol, sym) in alg.signature().symbols().iter().enumerate() {
        let mut ok = true;
        for_each_tuple(alg.size(), sym.arity, |t| {
            if !ok {
                return;
            }
            let v = part.block_of(alg.value(symbol, t));
            for i in 0..t.len() {
                let rep = part.blocks()[part.block_of(t[i])].as_slice()[0];
                if rep == t[i] {
                    continue;
                }
                other.clear();
                other.extend_from_slice(t);
                other[i] = rep;
                if part.block_of(alg.value(symbol, &other)) != v {
                    ok = false;
                    return;
                }
            }
        });
        if !ok {
            return false;
        }
    }
    true
}

fn first_violation(alg: &FiniteAlgebra, part: &CongruencePartition) -> Option<CongruenceViolation> {
    for (symbol, sym) in alg.signature().symbols().iter().enumerate() {
        let k = sym.arity;
        let mut found = None;
        for_each_tuple(alg.size(), k, |left| {
            if found.is_some() {
                return;
            }
            let left_value = alg.value(symbol, left);
            // walk the product of the blocks of `left`, lexicographically
            let choices: Vec<&[Element]> = left
                .iter()
                .map(|&a| part.blocks()[part.block_of(a)].as_slice())
                .collect();
            let mut idx = vec![0usize; k];
            let mut right = vec![0; k];
            loop {
                for (slot, (c, &i)) in right.iter_mut().zip(choices.iter().zip(&idx)) {
                    *slot = c[i];
                }
                let right_value = alg.value(symbol, &right);
                if !part.related(left_value, right_value) {
                    found = Some(CongruenceViolation {
                        symbol,
                        left: left.to_vec(),
                        right: right.clone(),
                        left_value,
                        right_value,
                    });
                    return;
                }
                let mut pos = k;
                loop {
                    if pos == 0 {
                        return;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < choices[pos].len() {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// The least congruence containing every pair in `pairs`.
pub fn congruence_closure(
    alg: &FiniteAlgebra,
    pairs: &[(Element, Element)],
) -> Result<CongruencePartition> {
    let n = alg.size();
    let mut uf = UnionFind::new(n);
    for &(a, b) in pairs {
        alg.check_element(a)?;
        alg.check_element(b)?;
        uf.union(a, b);
    }
    let mut other = Vec::new();
    let mut changed = true;
    while changed {
        changed = false;
        for (symbol, sym) in alg.signature().symbols().iter().enumerate() {
            for_each_tuple(n, sym.arity, |t| {
                for i in 0..t.len() {
                    let rep = uf.find(t[i]);
                    if rep == t[i] {
                        continue;
                    }
                    other.clear();
                    other.extend_from_slice(t);
                    other[i] = rep;
                    changed |= uf.union(alg.value(symbol, t), alg.value(symbol, &other));
                }
            });
        }
    }
    let labels: Vec<usize> = (0..n).map(|a| uf.find(a)).collect();
    Ok(CongruencePartition::from_labels(&labels))
}

/// Every congruence of `alg`, by brute force over all set partitions.
/// Only sensible for small universes.
pub fn enumerate_congruences(alg: &FiniteAlgebra) -> Vec<CongruencePartition> {
    let n = alg.size();
    let mut out = Vec::new();
    // restricted growth strings
    let mut labels = vec![0usize; n];
    loop {
        let part = CongruencePartition::from_labels(&labels);
        if single_coordinate_compatible(alg, &part) {
            out.push(part);
        }
        let mut i = n;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            let max_before = labels[..i].iter().copied().max().unwrap_or(0);
            if labels[i] <= max_before {
                labels[i] += 1;
                for l in &mut labels[i + 1..] {
                    *l = 0;
                }
                break;
            }
        }
    }
}

/// The quotient by a congruence together with the projection `a -> [a]`.
pub fn quotient(
    alg: &FiniteAlgebra,
    part: &CongruencePartition,
) -> Result<(FiniteAlgebra, HomomorphismMap)> {
    if let Some(v) = check_congruence(alg, part)? {
        return Err(Error::NotACongruence(v.to_string()));
    }
    let reps: Vec<Element> = part.blocks().iter().map(|b| b.as_slice()[0]).collect();
    let mut args = Vec::new();
    let q = FiniteAlgebra::from_fn(
        format!("{}/E", alg.name()),
        alg.signature().clone(),
        part.num_blocks(),
        |f, t| {
            args.clear();
            args.extend(t.iter().map(|&b| reps[b]));
            part.block_of(alg.value(f, &args))
        },
    )?;
    let map = (0..alg.size()).map(|a| part.block_of(a)).collect();
    let rho = HomomorphismMap::new(alg.size(), part.num_blocks(), map)?;
    Ok((q, rho))
}
