//! Deciding the Ramsey property.
//!
//! A finite algebra is Ramsey exactly when every nonempty subalgebra holds an
//! idempotent. Since every nonempty subalgebra contains a singly generated
//! one, it suffices to look inside `closure({a})` for each element `a`.
//! For unary signatures this becomes reachability of the fixed-point set.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::algebra::{
    enumerate_subalgebras, fixed_points, idempotents, ClosureBuilder, Element, ElementSet,
    FiniteAlgebra, FixedPointHint, Interpretation, OrderlyTerm, Origin, RuleAlgebra, Signature,
    SubalgebraOptions, SymbolId,
};
use crate::error::{Error, Result};

/// Default depth bound for [`search_unary_rule`].
pub const DEFAULT_MAX_DEPTH: usize = 64;

/// Terms wider than this are printed as straight-line programs.
pub const TERM_WIDTH_LIMIT: u128 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RamseyStatus {
    Ramsey,
    NotRamsey,
    Unknown,
}

impl fmt::Display for RamseyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RamseyStatus::Ramsey => "Ramsey",
            RamseyStatus::NotRamsey => "NotRamsey",
            RamseyStatus::Unknown => "Unknown",
        })
    }
}

/// One operation application inside a [`Derivation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationStep {
    pub symbol: SymbolId,
    pub args: Vec<Element>,
    pub result: Element,
}

/// A straight-line program that builds elements from a single source.
/// Each step may only use the source and results of earlier steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub source: Element,
    pub steps: Vec<DerivationStep>,
}

impl Derivation {
    pub fn empty(source: Element) -> Self {
        Derivation {
            source,
            steps: Vec::new(),
        }
    }

    /// Derivation of an iterated unary composite; `word[0]` is applied first.
    pub fn from_word(alg: &FiniteAlgebra, source: Element, word: &[SymbolId]) -> Self {
        let mut cur = source;
        let steps = word
            .iter()
            .map(|&symbol| {
                let result = alg.value(symbol, &[cur]);
                let step = DerivationStep {
                    symbol,
                    args: vec![cur],
                    result,
                };
                cur = result;
                step
            })
            .collect();
        Derivation { source, steps }
    }

    /// Replays every step. Returns the set of reached elements, or `None`
    /// if a step uses an unavailable argument or misstates its result.
    pub fn replay(&self, alg: &FiniteAlgebra) -> Option<ElementSet> {
        if self.source >= alg.size() {
            return None;
        }
        let mut known = vec![false; alg.size()];
        known[self.source] = true;
        for step in &self.steps {
            let arity = alg.signature().arity(step.symbol).ok()?;
            if step.args.len() != arity || !step.args.iter().all(|&a| a < alg.size() && known[a]) {
                return None;
            }
            if alg.value(step.symbol, &step.args) != step.result {
                return None;
            }
            known[step.result] = true;
        }
        Some((0..alg.size()).filter(|&a| known[a]).collect())
    }

    /// The unary word spelled by the steps, if they form a chain.
    pub fn word(&self) -> Option<Vec<SymbolId>> {
        let mut cur = self.source;
        let mut word = Vec::with_capacity(self.steps.len());
        for step in &self.steps {
            if step.args != [cur] {
                return None;
            }
            word.push(step.symbol);
            cur = step.result;
        }
        Some(word)
    }

    fn last_producer(&self) -> HashMap<Element, usize> {
        let mut producer = HashMap::new();
        for (i, step) in self.steps.iter().enumerate() {
            producer.entry(step.result).or_insert(i);
        }
        producer
    }

    /// Width of the orderly term [`Derivation::term_for`] would build.
    pub fn term_width(&self, target: Element) -> Option<u128> {
        let producer = self.last_producer();
        let mut width: HashMap<Element, u128> = HashMap::from([(self.source, 1)]);
        for (i, step) in self.steps.iter().enumerate() {
            if producer[&step.result] != i || step.result == self.source {
                continue;
            }
            let w = step
                .args
                .iter()
                .map(|a| width.get(a).copied().unwrap_or(1))
                .fold(0u128, |acc, w| acc.saturating_add(w));
            width.insert(step.result, w);
        }
        width.get(&target).copied()
    }

    /// Unfolds the program into an orderly term `t` with
    /// `t(source, .., source) = target`.
    pub fn term_for(&self, sig: &Signature, target: Element) -> Option<OrderlyTerm> {
        let producer = self.last_producer();
        let mut terms: HashMap<Element, OrderlyTerm> =
            HashMap::from([(self.source, OrderlyTerm::var())]);
        for (i, step) in self.steps.iter().enumerate() {
            if producer[&step.result] != i || step.result == self.source {
                continue;
            }
            let children = step
                .args
                .iter()
                .map(|a| terms.get(a).cloned())
                .collect::<Option<Vec<_>>>()?;
            terms.insert(
                step.result,
                OrderlyTerm::apply(sig, step.symbol, children).ok()?,
            );
        }
        terms.remove(&target)
    }
}

/// Evidence that `element` generates a subalgebra containing the idempotent
/// `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub element: Element,
    pub target: Element,
    pub derivation: Derivation,
}

impl Certificate {
    pub fn verify(&self, alg: &FiniteAlgebra) -> bool {
        self.derivation.source == self.element
            && self
                .derivation
                .replay(alg)
                .is_some_and(|reached| reached.contains(self.target))
            && alg.is_idempotent(self.target)
    }

    /// The certificate's term, if it is no wider than [`TERM_WIDTH_LIMIT`].
    pub fn term(&self, sig: &Signature) -> Option<OrderlyTerm> {
        match self.derivation.term_width(self.target) {
            Some(w) if w <= TERM_WIDTH_LIMIT => self.derivation.term_for(sig, self.target),
            _ => None,
        }
    }
}

/// An element whose generated subalgebra `closure` holds no idempotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub element: Element,
    pub closure: ElementSet,
}

impl Witness {
    /// Checks that `closure` is closed, contains `element`, and has no
    /// idempotent.
    pub fn verify(&self, alg: &FiniteAlgebra) -> bool {
        self.closure.contains(self.element)
            && crate::algebra::closure(alg, &self.closure).ok().as_ref() == Some(&self.closure)
            && self.closure.iter().all(|&a| !alg.is_idempotent(a))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamseyVerdict {
    /// One certificate per element, in element order. Empty when the
    /// verdict comes from the all-subalgebras check.
    Ramsey {
        certificates: Vec<Certificate>,
    },
    NotRamsey {
        witness: Witness,
    },
    Unknown {
        depth: usize,
    },
}

impl RamseyVerdict {
    pub fn status(&self) -> RamseyStatus {
        match self {
            RamseyVerdict::Ramsey { .. } => RamseyStatus::Ramsey,
            RamseyVerdict::NotRamsey { .. } => RamseyStatus::NotRamsey,
            RamseyVerdict::Unknown { .. } => RamseyStatus::Unknown,
        }
    }

    /// Re-checks every certificate or the witness against `alg`.
    pub fn verify(&self, alg: &FiniteAlgebra) -> bool {
        match self {
            RamseyVerdict::Ramsey { certificates } => certificates
                .iter()
                .enumerate()
                .all(|(a, c)| c.element == a && c.verify(alg)),
            RamseyVerdict::NotRamsey { witness } => witness.verify(alg),
            RamseyVerdict::Unknown { .. } => true,
        }
    }

    /// Line-oriented report: `verdict ..` then `cert`, `witness` or `depth`
    /// lines.
    pub fn render(&self, sig: &Signature) -> String {
        let mut out = format!("verdict {}\n", self.status());
        match self {
            RamseyVerdict::Ramsey { certificates } => {
                for c in certificates {
                    out.push_str(&format!(
                        "cert {} {} {}\n",
                        c.element,
                        render_proof(sig, c),
                        c.target
                    ));
                }
            }
            RamseyVerdict::NotRamsey { witness } => {
                let elems: Vec<String> = witness.closure.iter().map(|a| a.to_string()).collect();
                out.push_str(&format!(
                    "witness {} {}\n",
                    witness.element,
                    elems.join(",")
                ));
            }
            RamseyVerdict::Unknown { depth } => out.push_str(&format!("depth {depth}\n")),
        }
        out
    }
}

fn render_proof(sig: &Signature, c: &Certificate) -> String {
    if let Some(t) = c.term(sig) {
        return t.display(sig).to_string();
    }
    let steps: Vec<String> = c
        .derivation
        .steps
        .iter()
        .map(|s| {
            let args: Vec<String> = s.args.iter().map(|a| a.to_string()).collect();
            format!("{}({})={}", sig.name(s.symbol), args.join(","), s.result)
        })
        .collect();
    format!("slp:{}", steps.join(";"))
}

/// Keeps only the steps needed to produce `target`, in discovery order.
fn derivation_from_origins(
    builder: &ClosureBuilder<'_>,
    source: Element,
    target: Element,
) -> Derivation {
    let mut needed = vec![target];
    let mut wanted = std::collections::HashSet::from([target]);
    while let Some(a) = needed.pop() {
        if let Some(Origin::Step { args, .. }) = builder.origin(a) {
            for &b in args {
                if wanted.insert(b) {
                    needed.push(b);
                }
            }
        }
    }
    let steps = builder
        .members()
        .iter()
        .filter(|a| wanted.contains(a))
        .filter_map(|&a| match builder.origin(a) {
            Some(Origin::Step { symbol, args }) => Some(DerivationStep {
                symbol: *symbol,
                args: args.clone(),
                result: a,
            }),
            _ => None,
        })
        .collect();
    Derivation { source, steps }
}

/// Searches `closure({b})` for an idempotent, returning it with the
/// operations that reach it from `b`.
pub fn singleton_fr_witness(alg: &FiniteAlgebra, b: Element) -> Result<Option<Certificate>> {
    alg.check_element(b)?;
    let mut builder = ClosureBuilder::new(alg, true);
    builder.seed(b);
    Ok(builder
        .run(|v| alg.is_idempotent(v))
        .map(|target| Certificate {
            element: b,
            target,
            derivation: derivation_from_origins(&builder, b, target),
        }))
}

/// Decides a finite algebra by searching each `closure({a})` for an
/// idempotent.
pub fn decide_finite(alg: &FiniteAlgebra) -> RamseyVerdict {
    let mut certificates = Vec::with_capacity(alg.size());
    for a in 0..alg.size() {
        let mut builder = ClosureBuilder::new(alg, true);
        builder.seed(a);
        match builder.run(|v| alg.is_idempotent(v)) {
            Some(target) => certificates.push(Certificate {
                element: a,
                target,
                derivation: derivation_from_origins(&builder, a, target),
            }),
            None => {
                return RamseyVerdict::NotRamsey {
                    witness: Witness {
                        element: a,
                        closure: builder.into_set(),
                    },
                }
            }
        }
    }
    RamseyVerdict::Ramsey { certificates }
}

/// Status of [`decide_finite`] without certificates. An element is good as
/// soon as its closure meets an idempotent or an element already known good.
pub fn is_ramsey(alg: &FiniteAlgebra) -> bool {
    if alg.size() <= 64 {
        return is_ramsey_small(alg);
    }
    let n = alg.size();
    let mut good: Vec<bool> = (0..n).map(|a| alg.is_idempotent(a)).collect();
    for a in 0..n {
        if good[a] {
            continue;
        }
        let mut builder = ClosureBuilder::new(alg, false);
        builder.seed(a);
        if builder.run(|v| good[v]).is_none() {
            return false;
        }
        good[a] = true;
    }
    true
}

// Same propagation with closures held in a 64-bit mask.
fn is_ramsey_small(alg: &FiniteAlgebra) -> bool {
    let n = alg.size();
    let symbols = alg.signature().symbols();
    let mut good = 0u64;
    for a in 0..n {
        if alg.is_idempotent(a) {
            good |= 1 << a;
        }
    }
    let mut members = [0usize; 64];
    let mut idx = [0usize; 64];
    for a in 0..n {
        if good & (1 << a) != 0 {
            continue;
        }
        let mut set = 1u64 << a;
        'grow: loop {
            let mut len = 0;
            let mut bits = set;
            while bits != 0 {
                members[len] = bits.trailing_zeros() as usize;
                len += 1;
                bits &= bits - 1;
            }
            let mut grown = set;
            for (symbol, sym) in symbols.iter().enumerate() {
                let table = alg.table(symbol);
                let k = sym.arity;
                idx[..k].fill(0);
                loop {
                    let pos = idx[..k].iter().fold(0, |acc, &i| acc * n + members[i]);
                    grown |= 1 << table[pos];
                    let mut j = k;
                    while j > 0 {
                        j -= 1;
                        idx[j] += 1;
                        if idx[j] < len {
                            break;
                        }
                        idx[j] = 0;
                    }
                    if j == 0 && idx[0] == 0 {
                        break;
                    }
                }
            }
            if grown & good != 0 {
                good |= 1 << a;
                break 'grow;
            }
            if grown == set {
                return false;
            }
            set = grown;
        }
    }
    true
}

/// Literal form of the criterion: every nonempty subalgebra contains an
/// idempotent. Exponential; kept as a cross-check.
pub fn decide_finite_via_all_subalgebras(
    alg: &FiniteAlgebra,
    options: SubalgebraOptions,
) -> Result<RamseyVerdict> {
    let idem = idempotents(alg);
    let subalgebras = enumerate_subalgebras(alg, options)?;
    for u in &subalgebras {
        if !u.is_empty() && u.is_disjoint(&idem) {
            // the first such set is minimal, so any element generates it
            let element = u.first().expect("nonempty");
            return Ok(RamseyVerdict::NotRamsey {
                witness: Witness {
                    element,
                    closure: u.clone(),
                },
            });
        }
    }
    Ok(RamseyVerdict::Ramsey {
        certificates: Vec::new(),
    })
}

/// Shortest-distance-to-fixed-points table for a unary algebra, by reverse
/// breadth-first search.
fn distances_to_fixed(alg: &FiniteAlgebra) -> Result<(ElementSet, Vec<Option<usize>>)> {
    let fixed = fixed_points(alg)?;
    let n = alg.size();
    let mut preimages: Vec<Vec<Element>> = vec![Vec::new(); n];
    for symbol in 0..alg.signature().len() {
        for (a, &b) in alg.table(symbol).iter().enumerate() {
            preimages[b].push(a);
        }
    }
    let mut dist = vec![None; n];
    let mut queue = VecDeque::new();
    for &s in &fixed {
        dist[s] = Some(0);
        queue.push_back(s);
    }
    while let Some(b) = queue.pop_front() {
        let d = dist[b].expect("queued elements have a distance");
        for &a in &preimages[b] {
            if dist[a].is_none() {
                dist[a] = Some(d + 1);
                queue.push_back(a);
            }
        }
    }
    Ok((fixed, dist))
}

/// Decides a unary algebra by fixed-point reachability. Each certificate
/// is a shortest word, lexicographically least by symbol index.
pub fn decide_unary_finite(alg: &FiniteAlgebra) -> Result<RamseyVerdict> {
    let (_, dist) = distances_to_fixed(alg)?;
    let symbols = alg.signature().len();
    let mut certificates = Vec::with_capacity(alg.size());
    for a in 0..alg.size() {
        let Some(mut d) = dist[a] else {
            let mut reach = ClosureBuilder::new(alg, false);
            reach.seed(a);
            reach.run(|_| false);
            return Ok(RamseyVerdict::NotRamsey {
                witness: Witness {
                    element: a,
                    closure: reach.into_set(),
                },
            });
        };
        let mut word = Vec::with_capacity(d);
        let mut cur = a;
        while d > 0 {
            let symbol = (0..symbols)
                .find(|&s| dist[alg.value(s, &[cur])] == Some(d - 1))
                .expect("some symbol moves one step closer");
            word.push(symbol);
            cur = alg.value(symbol, &[cur]);
            d -= 1;
        }
        certificates.push(Certificate {
            element: a,
            target: cur,
            derivation: Derivation::from_word(alg, a, &word),
        });
    }
    Ok(RamseyVerdict::Ramsey { certificates })
}

/// Result of a bounded search from one start element of a unary rule
/// algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleSearchOutcome<V> {
    /// `word` (first symbol applied first) sends `start` to the fixed point
    /// `target`.
    Reached { word: Vec<SymbolId>, target: V },
    /// The algebra declares that no fixed point exists.
    NoFixedPoints,
    /// No fixed point within `depth` applications.
    Exhausted { depth: usize },
}

impl<V> RuleSearchOutcome<V> {
    pub fn status(&self) -> RamseyStatus {
        match self {
            RuleSearchOutcome::Reached { .. } => RamseyStatus::Ramsey,
            RuleSearchOutcome::NoFixedPoints => RamseyStatus::NotRamsey,
            RuleSearchOutcome::Exhausted { .. } => RamseyStatus::Unknown,
        }
    }
}

impl<V: fmt::Debug> RuleSearchOutcome<V> {
    pub fn render(&self, sig: &Signature, start: &V) -> String {
        let mut out = format!("scope start {start:?}\nverdict {}\n", self.status());
        match self {
            RuleSearchOutcome::Reached { word, target } => {
                let term = OrderlyTerm::from_word(sig, word).expect("word over the signature");
                out.push_str(&format!(
                    "cert {start:?} {} {target:?}\n",
                    term.display(sig)
                ));
            }
            RuleSearchOutcome::NoFixedPoints => out.push_str("witness none-exist\n"),
            RuleSearchOutcome::Exhausted { depth } => out.push_str(&format!("depth {depth}\n")),
        }
        out
    }
}

/// Breadth-first search over words of length at most `max_depth` from
/// `start`. A point is fixed when every symbol maps it to itself. A
/// declared-empty fixed-point set answers immediately; exhaustion alone
/// never yields a negative answer.
pub fn search_unary_rule<V>(
    alg: &RuleAlgebra<V>,
    start: V,
    max_depth: usize,
) -> Result<RuleSearchOutcome<V>>
where
    V: Clone + Eq + std::hash::Hash + Ord + fmt::Debug + 'static,
{
    alg.signature().ensure_unary()?;
    if !alg.contains(&start) {
        return Err(Error::NotInCarrier);
    }
    let predicate = match alg.hint() {
        FixedPointHint::NoneExist => return Ok(RuleSearchOutcome::NoFixedPoints),
        FixedPointHint::Predicate(p) => Some(p.clone()),
        FixedPointHint::Unknown => None,
    };
    let symbols = alg.signature().len();
    let is_fixed = |v: &V| -> Result<bool> {
        let fixed = (0..symbols).all(|s| alg.apply(s, std::slice::from_ref(v)) == *v);
        if let Some(p) = &predicate {
            if p(v) != fixed {
                return Err(Error::HintMismatch(format!("{v:?}")));
            }
        }
        Ok(fixed)
    };
    // parent links for word recovery
    let mut parent: HashMap<V, Option<(V, SymbolId)>> = HashMap::from([(start.clone(), None)]);
    let mut frontier = vec![start.clone()];
    let word_to = |parent: &HashMap<V, Option<(V, SymbolId)>>, mut v: V| {
        let mut word = Vec::new();
        while let Some(Some((p, s))) = parent.get(&v) {
            word.push(*s);
            v = p.clone();
        }
        word.reverse();
        word
    };
    if is_fixed(&start)? {
        return Ok(RuleSearchOutcome::Reached {
            word: Vec::new(),
            target: start,
        });
    }
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for v in &frontier {
            for s in 0..symbols {
                let w = alg.apply(s, std::slice::from_ref(v));
                if parent.contains_key(&w) {
                    continue;
                }
                parent.insert(w.clone(), Some((v.clone(), s)));
                if is_fixed(&w)? {
                    return Ok(RuleSearchOutcome::Reached {
                        word: word_to(&parent, w.clone()),
                        target: w,
                    });
                }
                next.push(w);
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(RuleSearchOutcome::Exhausted { depth: max_depth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, diagonal_window, rule_product};

    fn g_swap() -> FiniteAlgebra {
        let sig = Signature::new([("g", 2)]).unwrap();
        FiniteAlgebra::new("g", sig, 2, vec![vec![1, 0, 0, 0]]).unwrap()
    }

    #[test]
    fn finite_examples() {
        for n in [0, 1, 7, 50] {
            let a = catalog::dlimit_trunc(n);
            let v = decide_finite(&a);
            assert_eq!(v.status(), RamseyStatus::Ramsey);
            let RamseyVerdict::Ramsey { certificates } = &v else {
                unreachable!()
            };
            assert!(certificates
                .iter()
                .all(|c| c.target == c.element && c.derivation.steps.is_empty()));
            assert!(v.verify(&a));
        }
        let g = g_swap();
        assert_eq!(g.table(0)[3], 0);
        let v = decide_finite(&g);
        assert_eq!(
            v,
            RamseyVerdict::NotRamsey {
                witness: Witness {
                    element: 0,
                    closure: ElementSet::full(2)
                }
            }
        );
        assert!(v.verify(&g));
        assert!(!is_ramsey(&g));
    }

    #[test]
    fn subalgebra_route_examples() {
        let opts = SubalgebraOptions::default();
        let p3 = catalog::predecessor_trunc(3);
        assert_eq!(
            decide_finite_via_all_subalgebras(&p3, opts)
                .unwrap()
                .status(),
            RamseyStatus::Ramsey
        );
        let s = catalog::swap2();
        assert_eq!(
            decide_finite_via_all_subalgebras(&s, opts).unwrap(),
            RamseyVerdict::NotRamsey {
                witness: Witness {
                    element: 0,
                    closure: ElementSet::full(2)
                }
            }
        );
        let one = catalog::predecessor_trunc(0);
        assert_eq!(
            decide_finite_via_all_subalgebras(&one, opts)
                .unwrap()
                .status(),
            RamseyStatus::Ramsey
        );
    }

    #[test]
    fn unary_examples() {
        let p = catalog::predecessor_trunc(1000);
        let v = decide_unary_finite(&p).unwrap();
        let RamseyVerdict::Ramsey { certificates } = &v else {
            panic!("{v:?}")
        };
        for (k, c) in certificates.iter().enumerate() {
            assert_eq!(c.derivation.word().unwrap(), vec![0; k]);
            assert_eq!(c.target, 0);
        }
        assert!(v.verify(&p));

        let v = decide_unary_finite(&catalog::swap2()).unwrap();
        assert_eq!(v.status(), RamseyStatus::NotRamsey);

        let sig = Signature::new([("i", 1)]).unwrap();
        let id = FiniteAlgebra::new("id", sig, 3, vec![vec![0, 1, 2]]).unwrap();
        let RamseyVerdict::Ramsey { certificates } = decide_unary_finite(&id).unwrap() else {
            panic!()
        };
        assert!(certificates
            .iter()
            .all(|c| c.derivation.word() == Some(vec![])));
        assert!(decide_unary_finite(&catalog::zmod(2).unwrap()).is_err());
    }

    #[test]
    fn unary_words_are_lexicographically_least() {
        // 2 -f-> 1 -f-> 0 and 2 -g-> 3 -g-> 0, with 0 fixed by both
        let sig = Signature::new([("f", 1), ("g", 1)]).unwrap();
        let a =
            FiniteAlgebra::new("fork", sig, 4, vec![vec![0, 0, 1, 0], vec![0, 0, 3, 0]]).unwrap();
        let RamseyVerdict::Ramsey { certificates } = decide_unary_finite(&a).unwrap() else {
            panic!()
        };
        assert_eq!(certificates[2].derivation.word().unwrap(), vec![0, 0]);
        assert_eq!(certificates[3].derivation.word().unwrap(), vec![0]);
    }

    #[test]
    fn singleton_witnesses() {
        let c = singleton_fr_witness(&catalog::dlimit_trunc(9), 7)
            .unwrap()
            .unwrap();
        assert_eq!((c.target, c.derivation.steps.len()), (7, 0));

        let z4 = catalog::zmod(4).unwrap();
        let c = singleton_fr_witness(&z4, 1).unwrap().unwrap();
        assert_eq!(c.target, 0);
        assert_eq!(
            c.derivation.steps,
            vec![
                DerivationStep {
                    symbol: 0,
                    args: vec![1, 1],
                    result: 2
                },
                DerivationStep {
                    symbol: 0,
                    args: vec![2, 2],
                    result: 0
                },
            ]
        );
        assert!(c.verify(&z4));
        let t = c.term(z4.signature()).unwrap();
        assert_eq!(
            t.display(z4.signature()).to_string(),
            "+(+(x0,x1),+(x2,x3))"
        );

        assert_eq!(singleton_fr_witness(&catalog::swap2(), 0).unwrap(), None);
    }

    #[test]
    fn rule_searches() {
        let p = catalog::predecessor_rule();
        assert_eq!(
            search_unary_rule(&p, 17, 20).unwrap(),
            RuleSearchOutcome::Reached {
                word: vec![0; 17],
                target: 0
            }
        );
        assert_eq!(
            search_unary_rule(&p, 17, 16).unwrap(),
            RuleSearchOutcome::Exhausted { depth: 16 }
        );
        assert_eq!(
            search_unary_rule(&catalog::z_shift_rule(), 5, 64).unwrap(),
            RuleSearchOutcome::NoFixedPoints
        );
        let window = rule_product(&[p], 12).unwrap();
        let start = diagonal_window(12);
        assert_eq!(
            search_unary_rule(&window.algebra, start.clone(), 5)
                .unwrap()
                .status(),
            RamseyStatus::Unknown
        );
        match search_unary_rule(&window.algebra, start, 11).unwrap() {
            RuleSearchOutcome::Reached { word, target } => {
                assert_eq!(word.len(), 11);
                assert_eq!(target, vec![0; 12]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn wrong_hint_is_reported() {
        use std::sync::Arc;
        let p =
            catalog::predecessor_rule().with_hint(FixedPointHint::Predicate(Arc::new(|&v| v == 1)));
        assert!(matches!(
            search_unary_rule(&p, 3, 10),
            Err(Error::HintMismatch(_))
        ));
    }

    #[test]
    fn rendering() {
        let z4 = catalog::zmod(4).unwrap();
        let text = decide_finite(&z4).render(z4.signature());
        assert_eq!(
            text,
            "verdict Ramsey\ncert 0 x0 0\ncert 1 +(+(x0,x1),+(x2,x3)) 0\ncert 2 +(x0,x1) 0\ncert 3 +(+(x0,x1),+(x2,x3)) 0\n"
        );
        let s = catalog::swap2();
        assert_eq!(
            decide_finite(&s).render(s.signature()),
            "verdict NotRamsey\nwitness 0 0,1\n"
        );
        assert_eq!(
            RamseyVerdict::Unknown { depth: 5 }.render(s.signature()),
            "verdict Unknown\ndepth 5\n"
        );
    }

    #[test]
    fn wide_terms_fall_back_to_programs() {
        // doubling in Z/2^13 needs 13 squarings, a term of width 2^13
        let z = catalog::zmod(1 << 13).unwrap();
        let c = singleton_fr_witness(&z, 1).unwrap().unwrap();
        assert!(c.verify(&z));
        assert_eq!(c.derivation.term_width(0), Some(1 << 13));
        assert!(c.term(z.signature()).is_none());
        let text = RamseyVerdict::Ramsey {
            certificates: vec![c],
        }
        .render(z.signature());
        assert!(text
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("cert 1 slp:+(1,1)=2;"));
    }

    #[test]
    fn fast_check_matches_verdicts() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let sigs = [
            Signature::new([("g", 2)]).unwrap(),
            Signature::new([("f", 1), ("g", 2)]).unwrap(),
            Signature::new([("t", 3)]).unwrap(),
        ];
        for i in 0..3000 {
            let n = rng.gen_range(1..=6);
            let alg =
                FiniteAlgebra::from_fn("r", sigs[i % 3].clone(), n, |_, _| rng.gen_range(0..n))
                    .unwrap();
            let expected = decide_finite(&alg).status() == RamseyStatus::Ramsey;
            assert_eq!(is_ramsey(&alg), expected, "{:?}", alg.tables());
        }
        let big = catalog::zmod(70).unwrap();
        assert!(is_ramsey(&big));
        assert!(!is_ramsey(&catalog::swap2()));
    }
}
