//! The bundled regression suite: one check per published result, each
//! reporting pass or fail with a short detail line.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    closure, enumerate_subalgebras, evaluate, idempotents, Element, ElementSet, FiniteAlgebra,
    OrderlyTerm, Signature, SubalgebraOptions,
};
use crate::constructions::{
    catalog, check_homomorphism, diagonal_window, enumerate_congruences, product, quotient,
    rule_product, OnePointExtensions, DEFAULT_EXTENSION_ENTRY_LIMIT, DEFAULT_PRODUCT_LIMIT,
};
use crate::decision::{
    decide_finite, decide_finite_via_all_subalgebras, decide_unary_finite, is_ramsey,
    search_unary_rule, RamseyStatus, RamseyVerdict, RuleSearchOutcome,
};
use crate::reduction::{
    check_reduction, fr_prefix, verify_dlimit_claim, verify_dlimit_parity_witness, GeneratorRule,
    ReductionStep, ReductionWitness, SequencePrefix, DEFAULT_REDUCTION_LIMIT,
};
use crate::topology::{
    clopen_ramsey_lift, fixed_point_density, proper_cover_conclusion, Density, TopologyBasis,
};

const SEED: u64 = 0x5eed_2026;

/// Result of one regression check.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:>2} {}: {} ({:.2} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

pub const CHECKS: [(usize, &str); 10] = [
    (1, "semigroup oracle"),
    (2, "decision equivalence"),
    (3, "unary characterization"),
    (4, "catalog verdicts"),
    (5, "direct-limit bounds"),
    (6, "direct-limit parity"),
    (7, "preservation"),
    (8, "worked reduction"),
    (9, "diagonal windows"),
    (10, "subalgebra topology"),
];

pub fn run(id: usize) -> Option<Outcome> {
    let name = CHECKS.iter().find(|c| c.0 == id)?.1;
    let check: fn() -> (bool, String) = match id {
        1 => semigroup_oracle,
        2 => decision_equivalence,
        3 => unary_characterization,
        4 => catalog_verdicts,
        5 => direct_limit_bounds,
        6 => direct_limit_parity,
        7 => preservation,
        8 => worked_reduction,
        9 => diagonal_windows,
        10 => subalgebra_topology,
        _ => return None,
    };
    let start = Instant::now();
    let (mut passed, mut detail) = check();
    let elapsed = start.elapsed();
    let budget = match id {
        1 => Some(30),
        5 | 6 => Some(60),
        _ => None,
    };
    if let Some(secs) = budget {
        if elapsed > Duration::from_secs(secs) {
            passed = false;
            detail.push_str(&format!("; exceeded the {secs} s budget"));
        }
    }
    Some(Outcome {
        id,
        name,
        passed,
        detail,
        elapsed,
    })
}

pub fn run_all() -> Vec<Outcome> {
    CHECKS.iter().filter_map(|&(id, _)| run(id)).collect()
}

/// Every table of the given arities on `{0, .., n-1}`, as algebras over
/// `sig`.
pub fn all_algebras(sig: &Signature, n: usize, mut visit: impl FnMut(&FiniteAlgebra)) {
    let arities: Vec<usize> = sig.symbols().iter().map(|s| s.arity).collect();
    let mut alg = FiniteAlgebra::from_fn("t", sig.clone(), n, |_, _| 0).expect("zero tables");
    let slots: Vec<(usize, usize)> = arities
        .iter()
        .enumerate()
        .flat_map(|(f, &k)| (0..n.pow(k as u32)).map(move |p| (f, p)))
        .collect();
    loop {
        visit(&alg);
        let tables = alg.tables_mut();
        let mut advanced = false;
        for &(f, p) in slots.iter().rev() {
            tables[f][p] += 1;
            if tables[f][p] < n {
                advanced = true;
                break;
            }
            tables[f][p] = 0;
        }
        if !advanced {
            return;
        }
    }
}

pub fn unary_signature(symbols: usize) -> Signature {
    Signature::new(
        ["f", "g", "h", "k"]
            .into_iter()
            .take(symbols)
            .map(|s| (s, 1)),
    )
    .expect("distinct")
}

/// All unary algebras with at most `max_size` elements and at most
/// `max_symbols` operations, including the empty signature.
pub fn unary_family(max_size: usize, max_symbols: usize, mut visit: impl FnMut(&FiniteAlgebra)) {
    for symbols in 0..=max_symbols {
        let sig = unary_signature(symbols);
        for n in 1..=max_size {
            all_algebras(&sig, n, &mut visit);
        }
    }
}

pub fn random_algebra(rng: &mut impl Rng, sig: &Signature, n: usize) -> FiniteAlgebra {
    FiniteAlgebra::from_fn("random", sig.clone(), n, |_, _| rng.gen_range(0..n)).expect("in range")
}

pub fn binary_signatures() -> Vec<Signature> {
    vec![
        Signature::new([("g", 2)]).expect("valid"),
        Signature::new([("g", 2), ("h", 2)]).expect("valid"),
        Signature::new([("f", 1), ("g", 2)]).expect("valid"),
    ]
}

/// `count` algebras with one binary operation, sizes uniform on
/// `1..=max_size`, tables uniform, keeping only Ramsey ones.
pub fn sample_binary_ramsey(seed: u64, count: usize, max_size: usize) -> Vec<FiniteAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sig = Signature::new([("g", 2)]).expect("valid");
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=max_size);
        let alg = random_algebra(&mut rng, &sig, n);
        if is_ramsey(&alg) {
            out.push(alg);
        }
    }
    out
}

pub fn is_associative(alg: &FiniteAlgebra, symbol: usize) -> bool {
    let n = alg.size();
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                let ab = alg.value(symbol, &[a, b]);
                let bc = alg.value(symbol, &[b, c]);
                alg.value(symbol, &[ab, c]) == alg.value(symbol, &[a, bc])
            })
        })
    })
}

/// Advances to the next permutation in lexicographic order.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn semigroup_oracle() -> (bool, String) {
    // associative operations on 1, 2, 3 points
    let known = [1usize, 8, 113];
    let sig = Signature::new([("g", 2)]).expect("valid");
    let mut counts = Vec::new();
    let mut failures = 0usize;
    for n in 1..=3 {
        let mut count = 0;
        all_algebras(&sig, n, |alg| {
            if is_associative(alg, 0) {
                count += 1;
                let v = decide_finite(alg);
                if v.status() != RamseyStatus::Ramsey || !v.verify(alg) {
                    failures += 1;
                }
            }
        });
        counts.push(count);
    }
    let passed = failures == 0 && counts == known;
    (
        passed,
        format!("semigroups on 1/2/3 points: {counts:?}, non-Ramsey: {failures}"),
    )
}

fn decision_equivalence() -> (bool, String) {
    let opts = SubalgebraOptions::default();
    let agrees = |alg: &FiniteAlgebra| {
        let fast = decide_finite(alg);
        let slow = decide_finite_via_all_subalgebras(alg, opts).expect("small universe");
        fast.status() == slow.status() && fast.verify(alg) && slow.verify(alg)
    };
    let mut unary = 0usize;
    let mut disagreements = 0usize;
    unary_family(3, 2, |alg| {
        unary += 1;
        if !agrees(alg) {
            disagreements += 1;
        }
    });
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let sigs = binary_signatures();
    let random = 10_000;
    for i in 0..random {
        let sig = &sigs[i % sigs.len()];
        let n = rng.gen_range(1..=4);
        if !agrees(&random_algebra(&mut rng, sig, n)) {
            disagreements += 1;
        }
    }
    (
        disagreements == 0,
        format!("{unary} unary + {random} random binary-signature algebras, {disagreements} disagreements"),
    )
}

fn unary_characterization() -> (bool, String) {
    let mut cases = 0usize;
    let mut disagreements = 0usize;
    unary_family(4, 2, |alg| {
        cases += 1;
        let ramsey = decide_unary_finite(alg).expect("unary").status() == RamseyStatus::Ramsey;
        let dense = fixed_point_density(alg).expect("unary") == Density::Dense;
        if ramsey != dense {
            disagreements += 1;
        }
    });
    (
        disagreements == 0,
        format!("{cases} unary algebras, {disagreements} disagreements"),
    )
}

fn catalog_verdicts() -> (bool, String) {
    let mut problems = Vec::new();
    for n in 1..=1000 {
        let p = catalog::predecessor_trunc(n);
        match decide_unary_finite(&p).expect("unary") {
            RamseyVerdict::Ramsey { certificates } => {
                let ok = certificates.iter().enumerate().all(|(k, c)| {
                    c.target == 0 && c.derivation.word().is_some_and(|w| w.len() == k)
                });
                if !ok {
                    problems.push(format!("P_{n}: certificate word lengths"));
                }
                if n % 100 == 0 && !certificates.iter().all(|c| c.verify(&p)) {
                    problems.push(format!("P_{n}: certificate replay"));
                }
            }
            other => problems.push(format!("P_{n}: {}", other.status())),
        }
    }
    for n in 0..=50 {
        let a = catalog::dlimit_trunc(n);
        if idempotents(&a) != a.universe() {
            problems.push(format!("A_{n}: not every element is idempotent"));
        }
        if decide_finite(&a).status() != RamseyStatus::Ramsey {
            problems.push(format!("A_{n}: not Ramsey"));
        }
    }
    let swap = catalog::swap2();
    if decide_finite(&swap).status() != RamseyStatus::NotRamsey
        || decide_unary_finite(&swap).expect("unary").status() != RamseyStatus::NotRamsey
    {
        problems.push("swap2 is not rejected".into());
    }
    let z = catalog::z_shift_rule();
    for start in [0, 1, 2, 17] {
        if search_unary_rule(&z, start, 64).expect("unary") != RuleSearchOutcome::NoFixedPoints {
            problems.push(format!("z-shift from {start} is not rejected"));
        }
    }
    let detail = if problems.is_empty() {
        "P_1..P_1000 Ramsey with words p^k, A_0..A_50 idempotent and Ramsey, swap2 and z-shift rejected".to_string()
    } else {
        problems.join("; ")
    };
    (problems.is_empty(), detail)
}

fn direct_limit_bounds() -> (bool, String) {
    let claim = verify_dlimit_claim(12, 4, 3).expect("valid bounds");
    let d = catalog::dlimit_rule();
    let sig = crate::algebra::Interpretation::signature(&d).clone();
    let left = OrderlyTerm::parse(&sig, "f(f(x0,x1),x2)").expect("term");
    let right = OrderlyTerm::parse(&sig, "f(x0,f(x1,x2))").expect("term");
    let l = evaluate(&d, &left, &[0, 0, 3]).expect("evaluates");
    let r = evaluate(&d, &right, &[0, 0, 3]).expect("evaluates");
    let passed = claim.is_none() && (l, r) == (2, 1);
    let detail = match claim {
        None => format!("no term leaves [N, M) on 0..=12; f(f(0,0),3) = {l}, f(0,f(0,3)) = {r}"),
        Some(v) => format!(
            "{} on {:?} gives {}",
            v.term.display(&sig),
            v.subsequence,
            v.value
        ),
    };
    (passed, detail)
}

fn direct_limit_parity() -> (bool, String) {
    match verify_dlimit_parity_witness(10, 3, 2, 11, DEFAULT_REDUCTION_LIMIT) {
        Ok(report) => {
            let total: u128 = report.examined.iter().sum();
            let passed = report.violation.is_none() && report.examined.len() == 11;
            let detail = match &report.violation {
                None => format!("{total} reductions of 0..=10 with output lengths 1..=11, none homogeneous for the evens"),
                Some(v) => format!("{v:?}"),
            };
            (passed, detail)
        }
        Err(e) => (false, e.to_string()),
    }
}

#[derive(Default)]
struct PreservationTally {
    algebras: usize,
    quotients: usize,
    permutations: usize,
    restrictions: usize,
    products: usize,
    extensions: u64,
    violations: Vec<String>,
}

impl PreservationTally {
    fn check(&mut self, alg: &FiniteAlgebra) {
        self.algebras += 1;
        for part in enumerate_congruences(alg) {
            let (q, rho) = quotient(alg, &part).expect("congruence");
            self.quotients += 1;
            let epi = check_homomorphism(alg, &q, &rho)
                .expect("same signature")
                .is_epimorphism();
            if !epi || !is_ramsey(&q) {
                self.violations
                    .push(format!("quotient of {:?}", alg.tables()));
            }
        }
        let mut perm: Vec<Element> = (0..alg.size()).collect();
        loop {
            self.permutations += 1;
            if !is_ramsey(&alg.permuted(&perm).expect("permutation")) {
                self.violations
                    .push(format!("relabelling {perm:?} of {:?}", alg.tables()));
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        for u in enumerate_subalgebras(alg, SubalgebraOptions::default()).expect("small") {
            if u.is_empty() {
                continue;
            }
            self.restrictions += 1;
            let (sub, _) = alg.restrict(&u).expect("closed");
            if !is_ramsey(&sub) {
                self.violations
                    .push(format!("restriction to {u} of {:?}", alg.tables()));
            }
        }
        if let Ok(ext) = OnePointExtensions::new(alg, DEFAULT_EXTENSION_ENTRY_LIMIT) {
            let mut bad = 0u64;
            let mut seen = 0u64;
            ext.for_each(|e| {
                seen += 1;
                if !is_ramsey(e) {
                    bad += 1;
                }
            });
            self.extensions += seen;
            if bad > 0 {
                self.violations
                    .push(format!("{bad} extensions of {:?}", alg.tables()));
            }
        }
    }

    fn check_products(&mut self, factors: &[FiniteAlgebra]) {
        let small: Vec<&FiniteAlgebra> = factors.iter().filter(|a| a.size() <= 3).collect();
        for a in &small {
            for b in &small {
                if a.signature() != b.signature() {
                    continue;
                }
                self.products += 1;
                let (p, _) =
                    product(&[(*a).clone(), (*b).clone()], DEFAULT_PRODUCT_LIMIT).expect("small");
                if !is_ramsey(&p) {
                    self.violations.push(format!(
                        "product of {:?} and {:?}",
                        a.tables(),
                        b.tables()
                    ));
                }
            }
        }
    }
}

fn preservation() -> (bool, String) {
    let mut tally = PreservationTally::default();
    let mut unary = Vec::new();
    unary_family(4, 2, |alg| {
        if is_ramsey(alg) {
            unary.push(alg.clone());
        }
    });
    let binary = sample_binary_ramsey(SEED ^ 7, 500, 4);
    for alg in unary.iter().chain(&binary) {
        tally.check(alg);
    }
    tally.check_products(&unary);
    tally.check_products(&binary);
    let detail = format!(
        "{} Ramsey algebras ({} unary, {} binary): {} quotients, {} relabellings, {} restrictions, {} products, {} extensions, {} violations",
        tally.algebras,
        unary.len(),
        binary.len(),
        tally.quotients,
        tally.permutations,
        tally.restrictions,
        tally.products,
        tally.extensions,
        tally.violations.len()
    );
    let detail = match tally.violations.first() {
        Some(v) => format!("{detail}; first: {v}"),
        None => detail,
    };
    (tally.violations.is_empty(), detail)
}

fn worked_reduction() -> (bool, String) {
    let add = catalog::nat_add_rule();
    let sig = crate::algebra::Interpretation::signature(&add).clone();
    let src = SequencePrefix::generated(GeneratorRule::Odds, 12);
    let step = |t: &str, p: &[usize]| ReductionStep {
        term: OrderlyTerm::parse(&sig, t).expect("term"),
        positions: p.to_vec(),
    };
    let w = ReductionWitness {
        steps: vec![
            step("+(x0,x1)", &[0, 2]),
            step("+(x0,x1)", &[3, 4]),
            step("+(+(x0,x1),x2)", &[7, 8, 10]),
            step("x0", &[11]),
        ],
        output: vec![6, 16, 53, 23],
    };
    let accepted = check_reduction(&add, &src, &w);
    let fr = fr_prefix(
        &add,
        &SequencePrefix::new(vec![1, 3]),
        2,
        4,
        DEFAULT_REDUCTION_LIMIT,
    );
    let fr_ok = fr.as_ref().is_ok_and(|s| s.iter().copied().eq([1, 3, 4]));
    let passed = matches!(accepted, Ok(None)) && fr_ok;
    (
        passed,
        format!("witness check: {accepted:?}; FR of <1,3> at width 2: {fr:?}"),
    )
}

fn diagonal_windows() -> (bool, String) {
    let p = catalog::predecessor_rule();
    let mut problems = Vec::new();
    for w in 2..=12 {
        let window = rule_product(std::slice::from_ref(&p), w).expect("width >= 1");
        let alg = &window.algebra;
        let mut cur = diagonal_window(w);
        let mut steps = 0;
        while cur.iter().any(|&c| c != 0) {
            cur = crate::algebra::Interpretation::apply(alg, 0, std::slice::from_ref(&cur));
            steps += 1;
        }
        if steps != w - 1 {
            problems.push(format!("width {w}: {steps} steps"));
        }
        for depth in 0..w - 1 {
            let short = search_unary_rule(alg, diagonal_window(w), depth).expect("unary");
            if short.status() != RamseyStatus::Unknown {
                problems.push(format!("width {w}: depth {depth} gave {}", short.status()));
            }
        }
        match search_unary_rule(alg, diagonal_window(w), w - 1).expect("unary") {
            RuleSearchOutcome::Reached { word, .. } if word.len() == w - 1 => {}
            other => problems.push(format!("width {w}: depth {} gave {:?}", w - 1, other)),
        }
    }
    let detail = if problems.is_empty() {
        "windows of width 2..=12 need exactly w-1 steps; every shallower search stays Unknown (bounded evidence only)".into()
    } else {
        problems.join("; ")
    };
    (problems.is_empty(), detail)
}

/// The algebras with at most five elements used by the topology check.
pub fn topology_family() -> Vec<FiniteAlgebra> {
    let mut family = Vec::new();
    for n in 0..=4 {
        family.push(catalog::predecessor_trunc(n));
        family.push(catalog::dlimit_trunc(n));
    }
    for n in 1..=5 {
        family.push(catalog::zmod(n).expect("n >= 1"));
    }
    family.push(catalog::swap2());
    unary_family(3, 2, |a| family.push(a.clone()));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    let sigs = binary_signatures();
    for i in 0..2000 {
        let n = rng.gen_range(1..=5);
        family.push(random_algebra(&mut rng, &sigs[i % sigs.len()], n));
    }
    family
}

fn subalgebra_topology() -> (bool, String) {
    let opts = SubalgebraOptions::default();
    let family = topology_family();
    let mut problems = Vec::new();
    let mut lifts = 0usize;
    let mut covers = 0usize;
    for alg in &family {
        let basis = TopologyBasis::new(alg, opts).expect("small");
        let opens = basis.basic_opens();
        let moore = opens.contains(&ElementSet::new())
            && opens.contains(&alg.universe())
            && opens
                .iter()
                .all(|u| opens.iter().all(|v| opens.contains(&u.intersection(v))));
        if !moore {
            problems.push(format!(
                "basis of {:?} is not intersection-closed",
                alg.tables()
            ));
        }
        for a in 0..alg.size() {
            let generated = closure(alg, &ElementSet::singleton(a)).expect("in range");
            if basis.smallest_open(a).expect("in range") != &generated {
                problems.push(format!("smallest open of {a} in {:?}", alg.tables()));
            }
        }
        let status = decide_finite(alg).status();
        if clopen_ramsey_lift(alg, opts).expect("small").is_some() {
            lifts += 1;
            if status != RamseyStatus::Ramsey {
                problems.push(format!(
                    "clopen lift contradicts the verdict for {:?}",
                    alg.tables()
                ));
            }
        }
        if let Some(conclusion) = proper_cover_conclusion(alg, opts).expect("small") {
            covers += 1;
            if !conclusion {
                problems.push(format!("cover conclusion fails for {:?}", alg.tables()));
            }
        }
    }
    let detail = format!(
        "{} algebras, {lifts} clopen lifts, {covers} proper covers, {} problems",
        family.len(),
        problems.len()
    );
    let detail = match problems.first() {
        Some(p) => format!("{detail}; first: {p}"),
        None => detail,
    };
    (problems.is_empty(), detail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_enumeration_counts() {
        let sig = Signature::new([("g", 2)]).unwrap();
        let mut count = 0;
        all_algebras(&sig, 2, |_| count += 1);
        assert_eq!(count, 16);
        let mut count = 0;
        unary_family(2, 2, |_| count += 1);
        // empty signature: 2 algebras; one symbol: 1 + 4; two symbols: 1 + 16
        assert_eq!(count, 2 + 5 + 17);
    }

    #[test]
    fn permutations_in_order() {
        let mut p = vec![0, 1, 2];
        let mut all = vec![p.clone()];
        while next_permutation(&mut p) {
            all.push(p.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all[1], vec![0, 2, 1]);
        assert_eq!(all[5], vec![2, 1, 0]);
    }

    #[test]
    fn associativity_filter() {
        assert!(is_associative(&catalog::zmod(3).unwrap(), 0));
        assert!(!is_associative(&catalog::dlimit_trunc(3), 0));
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_binary_ramsey(1, 20, 4);
        let b = sample_binary_ramsey(1, 20, 4);
        assert_eq!(a, b);
        assert!(a.iter().all(is_ramsey));
    }
}
