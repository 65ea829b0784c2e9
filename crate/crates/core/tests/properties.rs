use std::collections::BTreeSet;

use proptest::prelude::*;
use ramsey_core::algebra::{
    closure, count_orderly_terms, enumerate_orderly_terms, enumerate_subalgebras, evaluate,
    fixed_points, idempotents, Element, ElementSet, FiniteAlgebra, Interpretation, OrderlyTerm,
    Signature, SubalgebraOptions,
};
use ramsey_core::constructions::{
    catalog, check_congruence, check_homomorphism, congruence_closure, diagonal_window,
    enumerate_congruences, isomorphism_search, one_point_extension, product, quotient,
    rule_product, CongruencePartition, OnePointExtensions, DEFAULT_EXTENSION_ENTRY_LIMIT,
    DEFAULT_ISO_LIMIT, DEFAULT_PRODUCT_LIMIT,
};
use ramsey_core::decision::{
    decide_finite, decide_finite_via_all_subalgebras, decide_unary_finite, is_ramsey,
    search_unary_rule, RamseyStatus,
};
use ramsey_core::reduction::{
    check_reduction, fr_prefix, homogeneity_check, ReductionStep, ReductionWitness, SequencePrefix,
    SubsetPredicate, DEFAULT_REDUCTION_LIMIT,
};
use ramsey_core::text::{parse_algebra, write_algebra};
use ramsey_core::topology::{clopen_ramsey_lift, fixed_point_density, Density, TopologyBasis};

fn signatures() -> Vec<Signature> {
    vec![
        Signature::new([("f", 1)]).unwrap(),
        Signature::new([("f", 1), ("g", 1)]).unwrap(),
        Signature::new([("g", 2)]).unwrap(),
        Signature::new([("g", 2), ("h", 2)]).unwrap(),
        Signature::new([("f", 1), ("g", 2)]).unwrap(),
    ]
}

fn algebra_over(sig: Signature, max_size: usize) -> impl Strategy<Value = FiniteAlgebra> {
    (1..=max_size).prop_flat_map(move |n| {
        let lens: Vec<usize> = sig
            .symbols()
            .iter()
            .map(|s| n.pow(s.arity as u32))
            .collect();
        let sig = sig.clone();
        lens.into_iter()
            .map(|len| proptest::collection::vec(0..n, len))
            .collect::<Vec<_>>()
            .prop_map(move |tables| FiniteAlgebra::new("p", sig.clone(), n, tables).unwrap())
    })
}

fn any_algebra(max_size: usize) -> impl Strategy<Value = FiniteAlgebra> {
    (0..signatures().len()).prop_flat_map(move |i| algebra_over(signatures()[i].clone(), max_size))
}

fn unary_algebra(max_size: usize) -> impl Strategy<Value = FiniteAlgebra> {
    (0..2usize).prop_flat_map(move |i| algebra_over(signatures()[i].clone(), max_size))
}

fn binary_algebra(max_size: usize) -> impl Strategy<Value = FiniteAlgebra> {
    algebra_over(signatures()[2].clone(), max_size)
}

fn subset_of(n: usize) -> impl Strategy<Value = ElementSet> {
    proptest::collection::vec(any::<bool>(), n).prop_map(|bits| {
        bits.iter()
            .enumerate()
            .filter(|b| *b.1)
            .map(|b| b.0)
            .collect()
    })
}

fn with_subsets(max_size: usize) -> impl Strategy<Value = (FiniteAlgebra, ElementSet, ElementSet)> {
    any_algebra(max_size).prop_flat_map(|a| {
        let n = a.size();
        (Just(a), subset_of(n), subset_of(n))
    })
}

fn with_permutation(max_size: usize) -> impl Strategy<Value = (FiniteAlgebra, Vec<Element>)> {
    any_algebra(max_size).prop_flat_map(|a| {
        let perm: Vec<Element> = (0..a.size()).collect();
        (Just(a), Just(perm).prop_shuffle())
    })
}

fn status(alg: &FiniteAlgebra) -> RamseyStatus {
    decide_finite(alg).status()
}

// every partition of {0..n-1}, as restricted growth strings
fn all_partitions(n: usize) -> Vec<CongruencePartition> {
    fn go(labels: &mut Vec<usize>, n: usize, out: &mut Vec<CongruencePartition>) {
        if labels.len() == n {
            out.push(CongruencePartition::from_labels(labels));
            return;
        }
        let next = labels.iter().max().map_or(0, |m| m + 1);
        for l in 0..=next {
            labels.push(l);
            go(labels, n, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

fn combinations(len: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for last in k - 1..len {
        for mut c in combinations(last, k - 1) {
            c.push(last);
            out.push(c);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closure_is_a_closure_operator((alg, s, t) in with_subsets(5)) {
        let cs = closure(&alg, &s).unwrap();
        prop_assert!(s.is_subset(&cs));
        prop_assert_eq!(closure(&alg, &cs).unwrap(), cs.clone());
        let bigger = s.union(&t);
        prop_assert!(cs.is_subset(&closure(&alg, &bigger).unwrap()));
    }

    #[test]
    fn subalgebras_form_a_moore_family(alg in any_algebra(5)) {
        let subs = enumerate_subalgebras(&alg, SubalgebraOptions::default()).unwrap();
        prop_assert!(subs.contains(&ElementSet::new()));
        prop_assert!(subs.contains(&alg.universe()));
        for u in &subs {
            prop_assert_eq!(&closure(&alg, u).unwrap(), u);
            for v in &subs {
                prop_assert!(subs.contains(&u.intersection(v)));
            }
        }
    }

    #[test]
    fn unary_terms_are_composites(alg in unary_algebra(5), word in proptest::collection::vec(0..2usize, 0..8), a in 0..5usize) {
        let k = alg.signature().len();
        let word: Vec<usize> = word.into_iter().map(|s| s % k).collect();
        let a = a % alg.size();
        let term = OrderlyTerm::from_word(alg.signature(), &word).unwrap();
        let mut expected = a;
        for &s in &word {
            expected = alg.value(s, &[expected]);
        }
        prop_assert_eq!(evaluate(&alg, &term, &[a]).unwrap(), expected);
    }

    #[test]
    fn term_values_stay_in_the_generated_subalgebra(alg in any_algebra(4), picks in proptest::collection::vec(0..4usize, 3)) {
        let args: Vec<Element> = picks.iter().map(|&p| p % alg.size()).collect();
        let generated = closure(&alg, &args.iter().copied().collect()).unwrap();
        for width in 1..=3 {
            for t in enumerate_orderly_terms(alg.signature(), width, 3).unwrap().filter(|t| t.width() == width) {
                let v = evaluate(&alg, &t, &args[..width]).unwrap();
                prop_assert!(generated.contains(v));
            }
        }
    }

    #[test]
    fn quotient_projections_are_epimorphisms(alg in any_algebra(5)) {
        for part in enumerate_congruences(&alg) {
            let (q, rho) = quotient(&alg, &part).unwrap();
            prop_assert!(check_homomorphism(&alg, &q, &rho).unwrap().is_epimorphism());
        }
    }

    #[test]
    fn product_projections_are_epimorphisms(a in binary_algebra(3), b in binary_algebra(3)) {
        let (p, index) = product(&[a.clone(), b.clone()], DEFAULT_PRODUCT_LIMIT).unwrap();
        for (i, factor) in [a, b].iter().enumerate() {
            let pi = index.projection(i).unwrap();
            prop_assert!(check_homomorphism(&p, factor, &pi).unwrap().is_epimorphism());
        }
    }

    #[test]
    fn congruence_closure_is_least(alg in any_algebra(5), raw in proptest::collection::vec((0..5usize, 0..5usize), 0..3)) {
        let n = alg.size();
        let pairs: Vec<(Element, Element)> = raw.into_iter().map(|(a, b)| (a % n, b % n)).collect();
        let least = congruence_closure(&alg, &pairs).unwrap();
        prop_assert!(check_congruence(&alg, &least).unwrap().is_none());
        prop_assert!(pairs.iter().all(|&(a, b)| least.related(a, b)));
        // oracle: every partition that is a congruence containing the pairs
        for part in all_partitions(n) {
            let contains = pairs.iter().all(|&(a, b)| part.related(a, b));
            if contains && check_congruence(&alg, &part).unwrap().is_none() {
                prop_assert!(least.refines(&part));
            }
        }
    }

    #[test]
    fn isomorphism_search_is_symmetric((a, perm) in with_permutation(4), b in any_algebra(4)) {
        let pa = a.permuted(&perm).unwrap();
        prop_assert!(isomorphism_search(&a, &pa, DEFAULT_ISO_LIMIT).unwrap().is_some());
        prop_assert!(isomorphism_search(&pa, &a, DEFAULT_ISO_LIMIT).unwrap().is_some());
        if a.signature() == b.signature() {
            let ab = isomorphism_search(&a, &b, DEFAULT_ISO_LIMIT).unwrap().is_some();
            let ba = isomorphism_search(&b, &a, DEFAULT_ISO_LIMIT).unwrap().is_some();
            prop_assert_eq!(ab, ba);
        }
    }

    #[test]
    fn decision_routes_agree(alg in any_algebra(4)) {
        let fast = decide_finite(&alg);
        let slow = decide_finite_via_all_subalgebras(&alg, SubalgebraOptions::default()).unwrap();
        prop_assert_eq!(fast.status(), slow.status());
        prop_assert!(fast.verify(&alg));
        prop_assert!(slow.verify(&alg));
        prop_assert_eq!(is_ramsey(&alg), fast.status() == RamseyStatus::Ramsey);
    }

    #[test]
    fn unary_route_agrees(alg in unary_algebra(6)) {
        let v = decide_unary_finite(&alg).unwrap();
        prop_assert!(v.verify(&alg));
        prop_assert_eq!(v.status(), status(&alg));
    }

    #[test]
    fn verdicts_are_isomorphism_invariant((alg, perm) in with_permutation(5)) {
        prop_assert_eq!(status(&alg), status(&alg.permuted(&perm).unwrap()));
    }

    #[test]
    fn ramsey_passes_to_quotients_and_subalgebras(alg in any_algebra(5)) {
        prop_assume!(is_ramsey(&alg));
        for part in enumerate_congruences(&alg) {
            let (q, _) = quotient(&alg, &part).unwrap();
            prop_assert_eq!(status(&q), RamseyStatus::Ramsey);
        }
        for u in enumerate_subalgebras(&alg, SubalgebraOptions::default()).unwrap() {
            if !u.is_empty() {
                let (sub, _) = alg.restrict(&u).unwrap();
                prop_assert_eq!(status(&sub), RamseyStatus::Ramsey);
            }
        }
    }

    #[test]
    fn ramsey_passes_to_products(a in binary_algebra(3), b in binary_algebra(3)) {
        prop_assume!(is_ramsey(&a) && is_ramsey(&b));
        let (p, _) = product(&[a, b], DEFAULT_PRODUCT_LIMIT).unwrap();
        prop_assert_eq!(status(&p), RamseyStatus::Ramsey);
    }

    #[test]
    fn ramsey_passes_to_one_point_extensions(alg in any_algebra(3), fills in proptest::collection::vec(any::<u64>(), 8)) {
        prop_assume!(is_ramsey(&alg));
        if let Ok(ext) = OnePointExtensions::new(&alg, DEFAULT_EXTENSION_ENTRY_LIMIT) {
            if ext.total() <= 4096 {
                ext.for_each(|e| assert!(is_ramsey(e)));
            }
        }
        let positions = ramsey_core::constructions::new_entry_positions(&alg);
        let n1 = alg.size() as u64 + 1;
        for seed in fills {
            let mut x = seed;
            let fill: Vec<Vec<Element>> = positions
                .iter()
                .map(|ps| ps.iter().map(|_| { let v = (x % n1) as Element; x = (x / n1) ^ x.rotate_left(17); v }).collect())
                .collect();
            let e = one_point_extension(&alg, &fill).unwrap();
            prop_assert!(is_ramsey(&e));
        }
    }

    #[test]
    fn rule_search_never_rejects_by_exhaustion(width in 2..10usize, depth in 0..12usize) {
        let window = rule_product(&[catalog::predecessor_rule()], width).unwrap();
        let outcome = search_unary_rule(&window.algebra, diagonal_window(width), depth).unwrap();
        prop_assert!(outcome.status() != RamseyStatus::NotRamsey);
        let expected = if depth + 1 >= width { RamseyStatus::Ramsey } else { RamseyStatus::Unknown };
        prop_assert_eq!(outcome.status(), expected);
    }

    #[test]
    fn identity_reductions_are_accepted(xs in proptest::collection::vec(0..50usize, 1..8)) {
        let add = catalog::nat_add_rule();
        let src = SequencePrefix::new(xs);
        prop_assert_eq!(check_reduction(&add, &src, &ReductionWitness::identity(&src)).unwrap(), None);
    }

    #[test]
    fn reductions_compose(xs in proptest::collection::vec(1..20usize, 6..9), cut1 in 1..3usize, cut2 in 1..3usize) {
        let add = catalog::nat_add_rule();
        let sig = add.signature().clone();
        let plus = OrderlyTerm::parse(&sig, "+(x0,x1)").unwrap();
        let src = SequencePrefix::new(xs);
        // pair up neighbours, skipping cut1 leading elements
        let steps: Vec<ReductionStep> = (cut1..src.len() - 1)
            .step_by(2)
            .map(|i| ReductionStep { term: plus.clone(), positions: vec![i, i + 1] })
            .collect();
        let first = ReductionWitness::evaluate(&add, &src, steps).unwrap();
        prop_assert_eq!(check_reduction(&add, &src, &first).unwrap(), None);
        let mid = SequencePrefix::new(first.output.clone());
        let second_steps: Vec<ReductionStep> = (0..mid.len())
            .filter(|i| i % cut2 == 0)
            .map(|i| ReductionStep { term: OrderlyTerm::var(), positions: vec![i] })
            .collect();
        let second = ReductionWitness::evaluate(&add, &mid, second_steps).unwrap();
        prop_assert_eq!(check_reduction(&add, &mid, &second).unwrap(), None);
        let composite = first.then(&second).unwrap();
        prop_assert_eq!(check_reduction(&add, &src, &composite).unwrap(), None);
    }

    #[test]
    fn fr_shrinks_under_reduction(xs in proptest::collection::vec(1..20usize, 4..7)) {
        let add = catalog::nat_add_rule();
        let sig = add.signature().clone();
        let plus = OrderlyTerm::parse(&sig, "+(x0,x1)").unwrap();
        let src = SequencePrefix::new(xs);
        let steps: Vec<ReductionStep> = (0..src.len() / 2)
            .map(|i| ReductionStep { term: plus.clone(), positions: vec![2 * i, 2 * i + 1] })
            .collect();
        let w = ReductionWitness::evaluate(&add, &src, steps).unwrap();
        let reduced = SequencePrefix::new(w.output);
        let fr_src = fr_prefix(&add, &src, 6, 5, DEFAULT_REDUCTION_LIMIT).unwrap();
        let fr_red = fr_prefix(&add, &reduced, 3, 2, DEFAULT_REDUCTION_LIMIT).unwrap();
        prop_assert!(fr_red.is_subset(&fr_src));
    }

    #[test]
    fn fr_matches_the_double_loop(xs in proptest::collection::vec(0..9usize, 1..=6), max_w in 1..4usize, max_s in 0..3usize) {
        let d = catalog::dlimit_rule();
        let src = SequencePrefix::new(xs.clone());
        let fast = fr_prefix(&d, &src, max_w, max_s, DEFAULT_REDUCTION_LIMIT).unwrap();
        let mut slow = BTreeSet::new();
        for t in enumerate_orderly_terms(d.signature(), max_w, max_s).unwrap() {
            for c in combinations(xs.len(), t.width()) {
                let args: Vec<Element> = c.iter().map(|&i| xs[i]).collect();
                slow.insert(evaluate(&d, &t, &args).unwrap());
            }
        }
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn fr_of_sums_lies_in_finite_sums(len in 1..7usize, max_w in 1..5usize) {
        let add = catalog::nat_add_rule();
        let src = SequencePrefix::generated(ramsey_core::reduction::GeneratorRule::Odds, len);
        let fr = fr_prefix(&add, &src, max_w, max_w, DEFAULT_REDUCTION_LIMIT).unwrap();
        let xs = src.elements();
        let sums: BTreeSet<Element> = (1u32..1 << len)
            .map(|mask| (0..len).filter(|i| mask >> i & 1 == 1).map(|i| xs[i]).sum())
            .collect();
        prop_assert!(fr.is_subset(&sums));
    }

    #[test]
    fn homogeneity_splits_fr(xs in proptest::collection::vec(0..12usize, 1..6), lo in 0..6usize, span in 0..6usize) {
        let d = catalog::dlimit_rule();
        let x = SubsetPredicate::Interval { lo, hi: lo + span };
        let report = homogeneity_check(&d, &SequencePrefix::new(xs), &x, 3, 2, DEFAULT_REDUCTION_LIMIT).unwrap();
        prop_assert!(report.in_x.is_disjoint(&report.out_x));
        let union: BTreeSet<Element> = report.in_x.union(&report.out_x).copied().collect();
        prop_assert_eq!(union, report.fr);
    }

    #[test]
    fn smallest_opens_are_generated_subalgebras(alg in any_algebra(5)) {
        let basis = TopologyBasis::new(&alg, SubalgebraOptions::default()).unwrap();
        for a in 0..alg.size() {
            prop_assert_eq!(basis.smallest_open(a).unwrap(), &closure(&alg, &ElementSet::singleton(a)).unwrap());
        }
        if clopen_ramsey_lift(&alg, SubalgebraOptions::default()).unwrap().is_some() {
            prop_assert_eq!(status(&alg), RamseyStatus::Ramsey);
        }
    }

    #[test]
    fn fixed_points_are_dense_iff_ramsey(alg in unary_algebra(5)) {
        let dense = fixed_point_density(&alg).unwrap() == Density::Dense;
        prop_assert_eq!(dense, decide_unary_finite(&alg).unwrap().status() == RamseyStatus::Ramsey);
        let fixed = fixed_points(&alg).unwrap();
        prop_assert_eq!(&fixed, &idempotents(&alg));
        let basis = TopologyBasis::new(&alg, SubalgebraOptions::default()).unwrap();
        for &s in &fixed {
            prop_assert_eq!(basis.smallest_open(s).unwrap().intersection(&fixed), ElementSet::singleton(s));
        }
    }

    #[test]
    fn algebra_text_round_trips(alg in any_algebra(5)) {
        let text = write_algebra(&alg);
        prop_assert_eq!(parse_algebra(&text).unwrap(), alg.clone());
        prop_assert_eq!(write_algebra(&parse_algebra(&text).unwrap()), text);
    }

    #[test]
    fn renders_are_deterministic(alg in any_algebra(5)) {
        let a = decide_finite(&alg).render(alg.signature());
        let b = decide_finite(&alg.clone()).render(alg.signature());
        prop_assert_eq!(a, b);
    }
}

// binary trees with m leaves, generated one by one
fn tree_shapes(m: usize) -> usize {
    fn shapes(m: usize) -> Vec<String> {
        if m == 1 {
            return vec!["x".into()];
        }
        let mut out = Vec::new();
        for left in 1..m {
            for l in shapes(left) {
                for r in shapes(m - left) {
                    out.push(format!("({l} {r})"));
                }
            }
        }
        out
    }
    let all = shapes(m);
    let distinct: BTreeSet<&String> = all.iter().collect();
    distinct.len()
}

#[test]
fn binary_term_counts_match_tree_enumeration() {
    let sig = Signature::new([("g", 2)]).unwrap();
    for m in 1..=8 {
        let counted: u128 = (0..m).map(|s| count_orderly_terms(&sig, m, s)).sum();
        let listed = enumerate_orderly_terms(&sig, m, m)
            .unwrap()
            .filter(|t| t.width() == m)
            .count();
        let oracle = tree_shapes(m);
        assert_eq!(counted as usize, oracle, "width {m}");
        assert_eq!(listed, oracle, "width {m}");
    }
}

#[test]
fn all_partitions_helper_counts_bell_numbers() {
    let bell = [1, 1, 2, 5, 15, 52];
    for (n, &b) in bell.iter().enumerate() {
        assert_eq!(all_partitions(n).len(), b);
    }
}
