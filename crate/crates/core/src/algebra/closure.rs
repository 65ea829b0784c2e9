use std::collections::{HashSet, VecDeque};

use super::{Element, ElementSet, FiniteAlgebra, SymbolId};
use crate::error::{Error, Result};

/// Default universe-size limit for full subalgebra enumeration.
pub const DEFAULT_SUBSET_LIMIT: usize = 20;

/// How an element first entered a closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Origin {
    Seed,
    Step {
        symbol: SymbolId,
        args: Vec<Element>,
    },
}

/// Semi-naive closure computation: each round only evaluates tuples that
/// contain at least one element added in the previous round.
pub(crate) struct ClosureBuilder<'a> {
    alg: &'a FiniteAlgebra,
    members: Vec<Element>,
    present: Vec<bool>,
    origin: Option<Vec<Option<Origin>>>,
    processed: usize,
}

impl<'a> ClosureBuilder<'a> {
    pub(crate) fn new(alg: &'a FiniteAlgebra, track_origin: bool) -> Self {
        ClosureBuilder {
            alg,
            members: Vec::new(),
            present: vec![false; alg.size()],
            origin: track_origin.then(|| vec![None; alg.size()]),
            processed: 0,
        }
    }

    /// Starts from a set already known to be closed.
    pub(crate) fn from_closed(alg: &'a FiniteAlgebra, closed: &ElementSet) -> Self {
        let mut b = ClosureBuilder::new(alg, false);
        for &a in closed {
            b.present[a] = true;
            b.members.push(a);
        }
        b.processed = b.members.len();
        b
    }

    /// Adds a seed; returns true if it was new.
    pub(crate) fn seed(&mut self, a: Element) -> bool {
        if self.present[a] {
            return false;
        }
        self.present[a] = true;
        self.members.push(a);
        if let Some(origin) = &mut self.origin {
            origin[a] = Some(Origin::Seed);
        }
        true
    }

    /// Members in discovery order.
    pub(crate) fn members(&self) -> &[Element] {
        &self.members
    }

    pub(crate) fn origin(&self, a: Element) -> Option<&Origin> {
        self.origin.as_ref().and_then(|o| o[a].as_ref())
    }

    /// Runs to the fixpoint, or until `stop` accepts a newly discovered
    /// element (seeds included). Returns the accepted element.
    pub(crate) fn run(&mut self, mut stop: impl FnMut(Element) -> bool) -> Option<Element> {
        if let Some(&a) = self.members[self.processed..].iter().find(|&&a| stop(a)) {
            return Some(a);
        }
        let alg = self.alg;
        let mut args: Vec<Element> = Vec::new();
        let mut idx: Vec<usize> = Vec::new();
        while self.processed < self.members.len() {
            let old = self.processed;
            let cur = self.members.len();
            self.processed = cur;
            for (symbol, sym) in alg.signature().symbols().iter().enumerate() {
                let k = sym.arity;
                // `first` is the first position holding an element from the last round
                for first in 0..k {
                    if first > 0 && old == 0 {
                        break;
                    }
                    let lo = |pos: usize| if pos == first { old } else { 0 };
                    let hi = |pos: usize| if pos < first { old } else { cur };
                    idx.clear();
                    idx.extend((0..k).map(lo));
                    loop {
                        args.clear();
                        args.extend(idx.iter().map(|&i| self.members[i]));
                        let v = alg.value(symbol, &args);
                        if !self.present[v] {
                            self.present[v] = true;
                            self.members.push(v);
                            if let Some(origin) = &mut self.origin {
                                origin[v] = Some(Origin::Step {
                                    symbol,
                                    args: args.clone(),
                                });
                            }
                            if stop(v) {
                                return Some(v);
                            }
                        }
                        // advance the odometer
                        let mut pos = k;
                        loop {
                            if pos == 0 {
                                break;
                            }
                            pos -= 1;
                            idx[pos] += 1;
                            if idx[pos] < hi(pos) {
                                break;
                            }
                            idx[pos] = lo(pos);
                            if pos == 0 {
                                pos = usize::MAX;
                                break;
                            }
                        }
                        if pos == usize::MAX {
                            break;
                        }
                    }
                }
            }
        }
        None
    }

    pub(crate) fn into_set(self) -> ElementSet {
        let sorted = (0..self.present.len())
            .filter(|&a| self.present[a])
            .collect();
        ElementSet::from_sorted_unchecked(sorted)
    }
}

/// The least superset of `seed` closed under every operation.
pub fn closure(alg: &FiniteAlgebra, seed: &ElementSet) -> Result<ElementSet> {
    alg.check_set(seed)?;
    let mut b = ClosureBuilder::new(alg, false);
    for &a in seed {
        b.seed(a);
    }
    b.run(|_| false);
    Ok(b.into_set())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubalgebraOptions {
    /// Largest universe for which every closed subset is enumerated.
    pub limit: usize,
    /// Only return the empty set and the singly generated subalgebras.
    pub singletons_only: bool,
    /// Ignore `limit`.
    pub force: bool,
}

impl Default for SubalgebraOptions {
    fn default() -> Self {
        SubalgebraOptions {
            limit: DEFAULT_SUBSET_LIMIT,
            singletons_only: false,
            force: false,
        }
    }
}

/// Every closed subset (subalgebra universe), including `∅` and the whole
/// universe, sorted by size and then lexicographically.
pub fn enumerate_subalgebras(
    alg: &FiniteAlgebra,
    opts: SubalgebraOptions,
) -> Result<Vec<ElementSet>> {
    let n = alg.size();
    let mut found: HashSet<ElementSet> = HashSet::new();
    found.insert(ElementSet::new());
    if opts.singletons_only {
        for a in 0..n {
            found.insert(closure(alg, &ElementSet::singleton(a))?);
        }
    } else {
        if n > opts.limit && !opts.force {
            return Err(Error::GuardExceeded {
                what: "subset enumeration universe size",
                required: n as u128,
                limit: opts.limit as u128,
            });
        }
        // every closed set is reached by adding generators one at a time
        let mut queue = VecDeque::from([ElementSet::new()]);
        while let Some(closed) = queue.pop_front() {
            for a in 0..n {
                if closed.contains(a) {
                    continue;
                }
                let mut b = ClosureBuilder::from_closed(alg, &closed);
                b.seed(a);
                b.run(|_| false);
                let next = b.into_set();
                if found.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    let mut out: Vec<ElementSet> = found.into_iter().collect();
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(out)
}

/// All `a` with `f(a, .., a) = a` for every symbol `f`.
pub fn idempotents(alg: &FiniteAlgebra) -> ElementSet {
    ElementSet::from_sorted_unchecked((0..alg.size()).filter(|&a| alg.is_idempotent(a)).collect())
}

/// All points fixed by every operation of a unary algebra.
pub fn fixed_points(alg: &FiniteAlgebra) -> Result<ElementSet> {
    alg.signature().ensure_unary()?;
    Ok(idempotents(alg))
}
