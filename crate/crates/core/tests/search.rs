mod common;

use common::*;
use num_bigint::BigUint;
use proptest::prelude::*;
use rccs_core::search::{GrowthStrings, SEARCH_BUDGET};
use rccs_core::{
    enumerate_partitions, extend_with_rccs, find_rccs, fixtures, induced_event,
    sample_admissible_search, stirling2, Error, Family, Model, ProbabilitySpace, Rational,
    SearchQuery, TargetProfile,
};

fn query(
    a: &rccs_core::Event,
    b: &rccs_core::Event,
    eps: Rational,
    model: Model,
    lo: usize,
    hi: usize,
) -> SearchQuery {
    SearchQuery {
        a: a.clone(),
        b: b.clone(),
        epsilon: eps,
        model,
        sizes: lo..=hi,
    }
}

#[test]
fn partition_counts() {
    let u4 = fixtures::u4();
    assert_eq!(enumerate_partitions(&u4.space, 2).unwrap().count(), 7);
    assert_eq!(enumerate_partitions(&u4.space, 3).unwrap().count(), 6);
    let six = ProbabilitySpace::uniform((1..=6).map(|i| format!("w{i}"))).unwrap();
    assert_eq!(enumerate_partitions(&six, 3).unwrap().count(), 90);
}

#[test]
fn fork_partition_is_found() {
    let f8 = fixtures::f8();
    let r = find_rccs(
        &f8.space,
        &query(
            f8.event("A"),
            f8.event("B"),
            Rational::zero(),
            Model::GhrRccs,
            2,
            2,
        ),
    )
    .unwrap();
    assert_eq!(r.partitions_examined, 127);
    assert!(r.hits.iter().any(|h| h.partition == f8.cause_partition()));
    assert!(r.hits.iter().all(|h| h.report.verdict));
}

#[test]
fn independent_pair_has_no_system() {
    let u4 = fixtures::u4();
    let r = find_rccs(
        &u4.space,
        &query(
            u4.event("A"),
            u4.event("B"),
            Rational::zero(),
            Model::GhrRccs,
            2,
            4,
        ),
    )
    .unwrap();
    assert!(r.hits.is_empty());
    assert_eq!(r.partitions_examined, 14);
}

#[test]
fn constructed_gm_partition_is_found() {
    let s4 = fixtures::s4();
    let (a, b) = (s4.event("A"), s4.event("B"));
    let r = extend_with_rccs(&s4.space, a, b, &Rational::zero(), 3, Family::M).unwrap();
    let (ha, hb) = (induced_event(&r, a).unwrap(), induced_event(&r, b).unwrap());
    let report = find_rccs(
        r.target(),
        &query(&ha, &hb, Rational::zero(), Model::GmRccs, 3, 3),
    )
    .unwrap();
    assert!(report.hits.iter().any(|h| &h.partition == r.rccs()));
}

#[test]
fn budget_and_range_guards() {
    let big = ProbabilitySpace::uniform((1..=13).map(|i| format!("w{i}"))).unwrap();
    let e = big.event(["w1", "w2"]).unwrap();
    let f = big.event(["w2", "w3"]).unwrap();
    match find_rccs(&big, &query(&e, &f, Rational::zero(), Model::HrRccs, 2, 13)) {
        Err(Error::SearchBudgetExceeded { budget, required }) => {
            assert_eq!(budget, SEARCH_BUDGET);
            assert!(required.parse::<u64>().unwrap() > SEARCH_BUDGET);
        }
        other => panic!("{other:?}"),
    }
    let u4 = fixtures::u4();
    let (a, b) = (u4.event("A"), u4.event("B"));
    assert!(find_rccs(
        &u4.space,
        &query(a, b, Rational::zero(), Model::HrRccs, 1, 2)
    )
    .is_err());
    assert!(find_rccs(
        &u4.space,
        &query(a, b, Rational::zero(), Model::ConjunctiveFork, 2, 2)
    )
    .is_err());
}

#[test]
fn sampler_examples() {
    let half = |eps| TargetProfile::new(q(1, 2), q(1, 2), eps, q(1, 20), 2).unwrap();
    assert_eq!(
        sample_admissible_search(&half(q(-1, 4)), 100_000, 11, Family::Hr).unwrap(),
        None
    );
    assert!(
        sample_admissible_search(&half(Rational::zero()), 1_000, 11, Family::Hr)
            .unwrap()
            .is_some()
    );
    assert!(sample_admissible_search(&half(Rational::zero()), 0, 11, Family::Hr).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn stirling_recurrence(m in 1usize..20, n in 1usize..20) {
        prop_assert_eq!(
            stirling2(m, n),
            BigUint::from(n) * stirling2(m - 1, n) + stirling2(m - 1, n - 1)
        );
    }

    #[test]
    fn growth_strings_match_stirling(m in 1usize..9, n in 1usize..9) {
        let strings: Vec<_> = GrowthStrings::new(m, n).collect();
        prop_assert_eq!(BigUint::from(strings.len()), stirling2(m, n));
        prop_assert!(strings.windows(2).all(|w| w[0] < w[1]));
        for s in &strings {
            prop_assert_eq!(s.iter().max().map(|x| x + 1), Some(n));
            prop_assert_eq!(&canonical(s), s);
        }
    }

    #[test]
    fn searches_are_deterministic(raw in raw_space(6), model in prop::sample::select(vec![Model::HrRccs, Model::GhrRccs, Model::MRccs, Model::GmRccs])) {
        let s = raw.build();
        let qy = query(&s.a, &s.b, q(1, 20), model, 2, s.space.len());
        let x = find_rccs(&s.space, &qy).unwrap();
        let y = find_rccs(&s.space, &qy).unwrap();
        prop_assert_eq!(x.to_json(&s.space), y.to_json(&s.space));
        let eps = if matches!(model, Model::HrRccs | Model::MRccs) { Rational::zero() } else { q(1, 20) };
        if !x.hits.is_empty() {
            prop_assert!(s.space.deviation(&s.a, &s.b, &eps).unwrap().is_positive());
        }
    }

    #[test]
    fn sampler_is_deterministic(seed in any::<u64>()) {
        let p = TargetProfile::new(q(1, 2), q(3, 10), Rational::zero(), q(1, 50), 3).unwrap();
        prop_assert_eq!(
            sample_admissible_search(&p, 200, seed, Family::M).unwrap(),
            sample_admissible_search(&p, 200, seed, Family::M).unwrap()
        );
    }
}
