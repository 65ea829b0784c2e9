//! Finite-prefix reductions and finite-reduct sets.
//!
//! A reduction of a sequence applies orderly terms to consecutive blocks of
//! a subsequence: block positions must increase strictly from the first
//! step to the last, but blocks need not be adjacent in the source.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{
    eval_unchecked, Element, ElementSet, Interpretation, OrderlyTerm, Signature, TermCatalog,
};
use crate::constructions::catalog;
use crate::error::{Error, Result};

/// Default bound on the work of [`fr_prefix`] and [`enumerate_reductions`].
pub const DEFAULT_REDUCTION_LIMIT: u128 = 10_000_000;

/// How to extend a sequence over the naturals past its stored prefix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorRule {
    /// `b(i) = i`
    Naturals,
    /// `b(i) = 2i + 1`
    Odds,
}

impl GeneratorRule {
    pub fn element(self, i: usize) -> Element {
        match self {
            GeneratorRule::Naturals => i,
            GeneratorRule::Odds => 2 * i + 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GeneratorRule::Naturals => "naturals",
            GeneratorRule::Odds => "odds",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "naturals" => Some(GeneratorRule::Naturals),
            "odds" => Some(GeneratorRule::Odds),
            _ => None,
        }
    }
}

/// A finite prefix of a sequence, optionally with a rule for the rest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SequencePrefix {
    elements: Vec<Element>,
    generator: Option<GeneratorRule>,
}

impl SequencePrefix {
    pub fn new(elements: Vec<Element>) -> Self {
        SequencePrefix {
            elements,
            generator: None,
        }
    }

    /// The first `len` terms of `rule`.
    pub fn generated(rule: GeneratorRule, len: usize) -> Self {
        SequencePrefix {
            elements: (0..len).map(|i| rule.element(i)).collect(),
            generator: Some(rule),
        }
    }

    /// Attaches `rule`, which must reproduce the stored prefix.
    pub fn with_generator(elements: Vec<Element>, rule: GeneratorRule) -> Result<Self> {
        if let Some(i) = (0..elements.len()).find(|&i| elements[i] != rule.element(i)) {
            return Err(Error::InvalidSequence(format!(
                "element {i} is {} but rule `{}` gives {}",
                elements[i],
                rule.name(),
                rule.element(i)
            )));
        }
        Ok(SequencePrefix {
            elements,
            generator: Some(rule),
        })
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generator(&self) -> Option<GeneratorRule> {
        self.generator
    }

    /// The prefix of length `len`, generating new terms if needed.
    pub fn extended(&self, len: usize) -> Result<SequencePrefix> {
        if len <= self.len() {
            return Ok(SequencePrefix {
                elements: self.elements[..len].to_vec(),
                generator: self.generator,
            });
        }
        let rule = self.generator.ok_or_else(|| {
            Error::InvalidSequence(format!(
                "cannot extend a prefix of length {} without a rule",
                self.len()
            ))
        })?;
        Ok(SequencePrefix::generated(rule, len))
    }

    fn check_carrier<A: Interpretation<Value = Element> + ?Sized>(&self, alg: &A) -> Result<()> {
        if self.elements.iter().all(|a| alg.contains(a)) {
            Ok(())
        } else {
            Err(Error::NotInCarrier)
        }
    }
}

/// One block of a reduction: `term` applied to the source at `positions`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReductionStep {
    pub term: OrderlyTerm,
    pub positions: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReductionWitness {
    pub steps: Vec<ReductionStep>,
    pub output: Vec<Element>,
}

impl ReductionWitness {
    /// `x0` at every position: the source reduces to itself.
    pub fn identity(src: &SequencePrefix) -> Self {
        ReductionWitness {
            steps: (0..src.len())
                .map(|i| ReductionStep {
                    term: OrderlyTerm::var(),
                    positions: vec![i],
                })
                .collect(),
            output: src.elements.clone(),
        }
    }

    /// Builds the witness and computes its output.
    pub fn evaluate<A: Interpretation<Value = Element> + ?Sized>(
        alg: &A,
        src: &SequencePrefix,
        steps: Vec<ReductionStep>,
    ) -> Result<Self> {
        let mut w = ReductionWitness {
            steps,
            output: Vec::new(),
        };
        check_shape(alg.signature(), src, &w, false)?;
        w.output = w
            .steps
            .iter()
            .map(|s| {
                let args: Vec<Element> = s.positions.iter().map(|&p| src.elements[p]).collect();
                eval_unchecked(alg, &s.term, &args)
            })
            .collect();
        Ok(w)
    }

    /// If `self` reduces `src` to `a` and `next` reduces `a` to `c`, the
    /// composite reduces `src` to `c`.
    pub fn then(&self, next: &ReductionWitness) -> Result<ReductionWitness> {
        let mut steps = Vec::with_capacity(next.steps.len());
        for (j, step) in next.steps.iter().enumerate() {
            let mut inner = Vec::with_capacity(step.positions.len());
            let mut positions = Vec::new();
            for &p in &step.positions {
                let s = self.steps.get(p).ok_or_else(|| {
                    Error::MalformedWitness(format!(
                        "step {j} uses position {p} of an output of length {}",
                        self.steps.len()
                    ))
                })?;
                inner.push(s.term.clone());
                positions.extend_from_slice(&s.positions);
            }
            if inner.len() != step.term.width() {
                return Err(Error::MalformedWitness(format!(
                    "step {j} has {} positions for a term of width {}",
                    inner.len(),
                    step.term.width()
                )));
            }
            steps.push(ReductionStep {
                term: substitute(&step.term, &mut inner.into_iter()),
                positions,
            });
        }
        Ok(ReductionWitness {
            steps,
            output: next.output.clone(),
        })
    }
}

fn substitute(t: &OrderlyTerm, leaves: &mut impl Iterator<Item = OrderlyTerm>) -> OrderlyTerm {
    match t {
        OrderlyTerm::Var => leaves.next().expect("one replacement per leaf"),
        OrderlyTerm::Apply { symbol, children } => OrderlyTerm::Apply {
            symbol: *symbol,
            children: children.iter().map(|c| substitute(c, leaves)).collect(),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionViolation {
    /// `position` in `step` does not come after every earlier position.
    PositionsNotIncreasing { step: usize, position: usize },
    /// The stored output differs from the evaluated term.
    OutputMismatch {
        step: usize,
        expected: Element,
        found: Element,
    },
}

impl fmt::Display for ReductionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionViolation::PositionsNotIncreasing { step, position } => {
                write!(
                    f,
                    "step {step}: position {position} does not follow the previous one"
                )
            }
            ReductionViolation::OutputMismatch {
                step,
                expected,
                found,
            } => write!(
                f,
                "step {step}: term evaluates to {expected}, output says {found}"
            ),
        }
    }
}

fn check_shape(
    sig: &Signature,
    src: &SequencePrefix,
    w: &ReductionWitness,
    with_output: bool,
) -> Result<()> {
    if with_output && w.output.len() != w.steps.len() {
        return Err(Error::MalformedWitness(format!(
            "{} steps but {} outputs",
            w.steps.len(),
            w.output.len()
        )));
    }
    for (j, step) in w.steps.iter().enumerate() {
        step.term.validate(sig)?;
        if step.positions.len() != step.term.width() {
            return Err(Error::MalformedWitness(format!(
                "step {j} has {} positions for a term of width {}",
                step.positions.len(),
                step.term.width()
            )));
        }
        if let Some(&p) = step.positions.iter().find(|&&p| p >= src.len()) {
            return Err(Error::MalformedWitness(format!(
                "step {j} uses position {p} of a prefix of length {}",
                src.len()
            )));
        }
    }
    Ok(())
}

/// Checks both clauses of a reduction: every output is its term applied
/// to its block, and the blocks concatenate to a subsequence of `src`.
pub fn check_reduction<A: Interpretation<Value = Element> + ?Sized>(
    alg: &A,
    src: &SequencePrefix,
    w: &ReductionWitness,
) -> Result<Option<ReductionViolation>> {
    check_shape(alg.signature(), src, w, true)?;
    src.check_carrier(alg)?;
    let mut last: Option<usize> = None;
    for (step, s) in w.steps.iter().enumerate() {
        for &position in &s.positions {
            if last.is_some_and(|l| position <= l) {
                return Ok(Some(ReductionViolation::PositionsNotIncreasing {
                    step,
                    position,
                }));
            }
            last = Some(position);
        }
    }
    for (step, s) in w.steps.iter().enumerate() {
        let args: Vec<Element> = s.positions.iter().map(|&p| src.elements[p]).collect();
        let expected = eval_unchecked(alg, &s.term, &args);
        if expected != w.output[step] {
            return Ok(Some(ReductionViolation::OutputMismatch {
                step,
                expected,
                found: w.output[step],
            }));
        }
    }
    Ok(None)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c = 1u128;
    for i in 0..k {
        c = c.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    c
}

/// Advances `combo` to the next strictly increasing tuple over `[lo, hi)`.
fn next_combination(combo: &mut [usize], hi: usize) -> bool {
    let m = combo.len();
    for i in (0..m).rev() {
        if combo[i] < hi - (m - i) {
            combo[i] += 1;
            for j in i + 1..m {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Terms within the bounds, grouped by width (`by_width[m - 1]`).
fn terms_by_width(sig: &Signature, max_width: usize, max_size: usize) -> Vec<Vec<OrderlyTerm>> {
    let mut catalog = TermCatalog::new(sig);
    (1..=max_width)
        .map(|m| {
            (0..=max_size)
                .flat_map(|s| catalog.terms(m, s).iter().cloned().collect::<Vec<_>>())
                .collect()
        })
        .collect()
}

fn term_counts(sig: &Signature, max_width: usize, max_size: usize) -> Vec<u128> {
    let mut catalog = TermCatalog::new(sig);
    (1..=max_width)
        .map(|m| (0..=max_size).fold(0u128, |acc, s| acc.saturating_add(catalog.count(m, s))))
        .collect()
}

fn check_width(max_width: usize) -> Result<()> {
    if max_width == 0 {
        Err(Error::InvalidBound("max width must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Number of (term, subsequence) pairs [`fr_prefix`] evaluates.
pub fn fr_prefix_work(sig: &Signature, len: usize, max_width: usize, max_size: usize) -> u128 {
    term_counts(sig, max_width.min(len), max_size)
        .iter()
        .enumerate()
        .fold(0u128, |acc, (i, &t)| {
            acc.saturating_add(t.saturating_mul(binomial(len, i + 1)))
        })
}

/// Every value of an orderly term within the bounds applied to a
/// subsequence of `src` of matching length.
pub fn fr_prefix<A: Interpretation<Value = Element> + ?Sized>(
    alg: &A,
    src: &SequencePrefix,
    max_width: usize,
    max_size: usize,
    limit: u128,
) -> Result<BTreeSet<Element>> {
    check_width(max_width)?;
    src.check_carrier(alg)?;
    let len = src.len();
    let work = fr_prefix_work(alg.signature(), len, max_width, max_size);
    if work > limit {
        return Err(Error::GuardExceeded {
            what: "FR prefix evaluations",
            required: work,
            limit,
        });
    }
    let terms = terms_by_width(alg.signature(), max_width.min(len), max_size);
    let mut out = BTreeSet::new();
    let mut args = Vec::new();
    for (i, group) in terms.iter().enumerate() {
        let m = i + 1;
        if group.is_empty() {
            continue;
        }
        let mut combo: Vec<usize> = (0..m).collect();
        loop {
            args.clear();
            args.extend(combo.iter().map(|&p| src.elements[p]));
            for t in group {
                out.insert(eval_unchecked(alg, t, &args));
            }
            if !next_combination(&mut combo, len) {
                break;
            }
        }
    }
    Ok(out)
}

/// Number of reductions of `len` source positions to `out_len` outputs,
/// given the number of terms of each width.
fn count_reductions(len: usize, out_len: usize, counts: &[u128]) -> u128 {
    // n[k][i]: ways to place k more steps using positions >= i
    let mut n = vec![vec![0u128; len + 1]; out_len + 1];
    n[0] = vec![1; len + 1];
    for k in 1..=out_len {
        for i in (0..=len).rev() {
            let mut total = 0u128;
            for (w, &t) in counts.iter().enumerate() {
                let m = w + 1;
                if t == 0 {
                    continue;
                }
                for q in i + m - 1..len {
                    let ways = binomial(q - i, m - 1).saturating_mul(n[k - 1][q + 1]);
                    total = total.saturating_add(t.saturating_mul(ways));
                }
            }
            n[k][i] = total;
        }
    }
    n[out_len][0]
}

/// Number of witnesses [`enumerate_reductions`] would yield.
pub fn reduction_count(
    sig: &Signature,
    len: usize,
    out_len: usize,
    max_width: usize,
    max_size: usize,
) -> u128 {
    count_reductions(len, out_len, &term_counts(sig, max_width, max_size))
}

#[derive(Clone, Debug)]
struct Frame {
    width: usize,
    term: usize,
    combo: Vec<usize>,
}

/// Lazy stream of every reduction of a prefix with a fixed output length.
///
/// Order: the first step varies slowest; within a step, by width, then
/// term order, then positions lexicographically.
pub struct Reductions<'a, A: ?Sized> {
    alg: &'a A,
    src: Vec<Element>,
    terms: Vec<Vec<OrderlyTerm>>,
    frames: Vec<Frame>,
    out_len: usize,
    pending: bool,
}

impl<'a, A: Interpretation<Value = Element> + ?Sized> Reductions<'a, A> {
    // positions that must stay free for the steps after `j`
    fn reserve(&self, j: usize) -> usize {
        self.out_len - j - 1
    }

    fn first_frame(&self, j: usize, lower: usize) -> Option<Frame> {
        let hi = self.src.len().checked_sub(self.reserve(j))?;
        let width = (1..=self.terms.len()).find(|&m| !self.terms[m - 1].is_empty())?;
        (lower + width <= hi).then(|| Frame {
            width,
            term: 0,
            combo: (lower..lower + width).collect(),
        })
    }

    fn lower(&self, j: usize) -> usize {
        if j == 0 {
            0
        } else {
            *self.frames[j - 1].combo.last().expect("nonempty block") + 1
        }
    }

    fn advance_frame(&mut self, j: usize) -> bool {
        let hi = self.src.len() - self.reserve(j);
        let lower = self.lower(j);
        let terms = &self.terms;
        let frame = &mut self.frames[j];
        if next_combination(&mut frame.combo, hi) {
            return true;
        }
        if frame.term + 1 < terms[frame.width - 1].len() {
            frame.term += 1;
            frame.combo = (lower..lower + frame.width).collect();
            return true;
        }
        for m in frame.width + 1..=terms.len() {
            if terms[m - 1].is_empty() {
                continue;
            }
            if lower + m > hi {
                return false;
            }
            *frame = Frame {
                width: m,
                term: 0,
                combo: (lower..lower + m).collect(),
            };
            return true;
        }
        false
    }

    fn current(&self) -> ReductionWitness {
        let steps: Vec<ReductionStep> = self
            .frames
            .iter()
            .map(|f| ReductionStep {
                term: self.terms[f.width - 1][f.term].clone(),
                positions: f.combo.clone(),
            })
            .collect();
        let mut args = Vec::new();
        let output = steps
            .iter()
            .map(|s| {
                args.clear();
                args.extend(s.positions.iter().map(|&p| self.src[p]));
                eval_unchecked(self.alg, &s.term, &args)
            })
            .collect();
        ReductionWitness { steps, output }
    }
}

impl<A: Interpretation<Value = Element> + ?Sized> Iterator for Reductions<'_, A> {
    type Item = ReductionWitness;

    fn next(&mut self) -> Option<ReductionWitness> {
        if self.frames.is_empty() {
            return None;
        }
        if self.pending {
            self.pending = false;
            return Some(self.current());
        }
        let mut j = self.out_len;
        loop {
            if j == 0 {
                self.frames.clear();
                return None;
            }
            j -= 1;
            if self.advance_frame(j) {
                break;
            }
        }
        for k in j + 1..self.out_len {
            let lower = self.lower(k);
            self.frames[k] = self.first_frame(k, lower).expect("room reserved");
        }
        Some(self.current())
    }
}

/// Every reduction of `src` with exactly `out_len` outputs and terms within
/// the bounds, each exactly once.
pub fn enumerate_reductions<'a, A: Interpretation<Value = Element> + ?Sized>(
    alg: &'a A,
    src: &SequencePrefix,
    out_len: usize,
    max_width: usize,
    max_size: usize,
    limit: u128,
) -> Result<Reductions<'a, A>> {
    check_width(max_width)?;
    if out_len == 0 {
        return Err(Error::InvalidBound(
            "output length must be at least 1".into(),
        ));
    }
    src.check_carrier(alg)?;
    let total = reduction_count(alg.signature(), src.len(), out_len, max_width, max_size);
    if total > limit {
        return Err(Error::GuardExceeded {
            what: "reductions to enumerate",
            required: total,
            limit,
        });
    }
    let mut it = Reductions {
        alg,
        src: src.elements.clone(),
        terms: terms_by_width(alg.signature(), max_width, max_size),
        frames: Vec::with_capacity(out_len),
        out_len,
        pending: true,
    };
    for j in 0..out_len {
        let lower = it.lower(j);
        match it.first_frame(j, lower) {
            Some(f) => it.frames.push(f),
            None => {
                it.frames.clear();
                break;
            }
        }
    }
    Ok(it)
}

/// Membership tests for subsets of the naturals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SubsetPredicate {
    Evens,
    Odds,
    /// `lo <= a <= hi`
    Interval {
        lo: Element,
        hi: Element,
    },
    List(ElementSet),
    /// `a mod modulus` is one of `residues`.
    Residue {
        modulus: Element,
        residues: Vec<Element>,
    },
}

impl SubsetPredicate {
    pub fn contains(&self, a: Element) -> bool {
        match self {
            SubsetPredicate::Evens => a.is_multiple_of(2),
            SubsetPredicate::Odds => a % 2 == 1,
            SubsetPredicate::Interval { lo, hi } => (*lo..=*hi).contains(&a),
            SubsetPredicate::List(set) => set.contains(a),
            SubsetPredicate::Residue { modulus, residues } => residues.contains(&(a % modulus)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Homogeneity {
    AllIn,
    AllOut,
    Mixed,
}

impl fmt::Display for Homogeneity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Homogeneity::AllIn => "all-in",
            Homogeneity::AllOut => "all-out",
            Homogeneity::Mixed => "mixed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneityReport {
    pub fr: BTreeSet<Element>,
    pub in_x: BTreeSet<Element>,
    pub out_x: BTreeSet<Element>,
    pub verdict: Homogeneity,
}

impl HomogeneityReport {
    pub fn classify(fr: BTreeSet<Element>, x: &SubsetPredicate) -> Self {
        let (in_x, out_x): (BTreeSet<_>, BTreeSet<_>) = fr.iter().partition(|&&a| x.contains(a));
        let verdict = match (in_x.is_empty(), out_x.is_empty()) {
            (_, true) => Homogeneity::AllIn,
            (true, false) => Homogeneity::AllOut,
            (false, false) => Homogeneity::Mixed,
        };
        HomogeneityReport {
            fr,
            in_x,
            out_x,
            verdict,
        }
    }
}

/// Classifies the FR prefix of `src` against `x`.
pub fn homogeneity_check<A: Interpretation<Value = Element> + ?Sized>(
    alg: &A,
    src: &SequencePrefix,
    x: &SubsetPredicate,
    max_width: usize,
    max_size: usize,
    limit: u128,
) -> Result<HomogeneityReport> {
    let fr = fr_prefix(alg, src, max_width, max_size, limit)?;
    Ok(HomogeneityReport::classify(fr, x))
}

/// A term and subsequence of `0, 1, .., n` whose value leaves `[N, M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimViolation {
    pub term: OrderlyTerm,
    pub subsequence: Vec<Element>,
    pub value: Element,
}

/// For the direct-limit operation: every term of width at least 2 applied
/// to an increasing sequence with first entry `N` and last entry `M`
/// evaluates into `[N, M)`. Checked over all subsequences of
/// `0, 1, .., n_max`.
pub fn verify_dlimit_claim(
    n_max: usize,
    max_width: usize,
    max_size: usize,
) -> Result<Option<ClaimViolation>> {
    check_width(max_width)?;
    let alg = catalog::dlimit_rule();
    let len = n_max + 1;
    let terms = terms_by_width(alg.signature(), max_width.min(len), max_size);
    for (i, group) in terms.iter().enumerate().skip(1) {
        let m = i + 1;
        let mut combo: Vec<usize> = (0..m).collect();
        loop {
            let (first, last) = (combo[0], combo[m - 1]);
            for t in group {
                let value = eval_unchecked(&alg, t, &combo);
                if value < first || value >= last {
                    return Ok(Some(ClaimViolation {
                        term: t.clone(),
                        subsequence: combo.clone(),
                        value,
                    }));
                }
            }
            if !next_combination(&mut combo, len) {
                break;
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParityViolation {
    /// The output is not an increasing sequence of source values.
    NotSubsequence(ReductionWitness),
    /// `a(1)` and `f(a(0), a(1))` share a parity, so the output might be
    /// homogeneous for the evens.
    SameParity(ReductionWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityReport {
    /// Reductions examined, per output length starting at 1.
    pub examined: Vec<u128>,
    pub violation: Option<ParityViolation>,
}

/// Over `src = 0, 1, .., n_max` in the direct-limit algebra, enumerates the
/// reductions of every output length up to `max_out_len` and checks that
/// each output is an increasing sequence of source values and that, from
/// length 2 on, `a(1)` and `f(a(0), a(1))` have opposite parity. Both lie
/// in the FR set of the output, so no examined reduction is homogeneous
/// for the evens.
pub fn verify_dlimit_parity_witness(
    n_max: usize,
    max_width: usize,
    max_size: usize,
    max_out_len: usize,
    limit: u128,
) -> Result<ParityReport> {
    let alg = catalog::dlimit_rule();
    let src = SequencePrefix::generated(GeneratorRule::Naturals, n_max + 1);
    let mut examined = Vec::new();
    for out_len in 1..=max_out_len.min(src.len()) {
        let mut count = 0u128;
        for w in enumerate_reductions(&alg, &src, out_len, max_width, max_size, limit)? {
            count += 1;
            let increasing = w.output.windows(2).all(|p| p[0] < p[1]);
            if !increasing || w.output.iter().any(|&a| a > n_max) {
                examined.push(count);
                return Ok(ParityReport {
                    examined,
                    violation: Some(ParityViolation::NotSubsequence(w)),
                });
            }
            if out_len >= 2 {
                let (a0, a1) = (w.output[0], w.output[1]);
                if catalog::dlimit(a0, a1) % 2 == a1 % 2 {
                    examined.push(count);
                    return Ok(ParityReport {
                        examined,
                        violation: Some(ParityViolation::SameParity(w)),
                    });
                }
            }
        }
        examined.push(count);
    }
    Ok(ParityReport {
        examined,
        violation: None,
    })
}
