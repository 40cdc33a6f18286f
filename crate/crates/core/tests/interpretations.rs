mod common;

use common::strategies::system;
use common::{brute_coind, brute_gen, brute_ind, coaxioms_everywhere};
use gis_core::{InferenceSystem, JudgmentSet, Rule};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn mask_set(sys: &InferenceSystem, mask: u64) -> JudgmentSet {
    JudgmentSet::from_mask(sys.universe_size(), mask & ((1 << sys.universe_size()) - 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn kleene_terminates_within_bound(sys in system(10, 20, 4)) {
        let bound = sys.universe_size() + 1;
        prop_assert!(sys.ind_fixpoint(false).iterations <= bound);
        prop_assert!(sys.ind_fixpoint(true).iterations <= bound);
        prop_assert!(sys.coind_fixpoint().iterations <= bound);
        let trace = sys.gen_trace();
        prop_assert!(trace.bound.iterations <= bound);
        prop_assert!(trace.result.iterations <= bound);
    }

    #[test]
    fn interpretations_match_subset_enumeration(sys in system(10, 20, 4)) {
        prop_assert_eq!(sys.ind_interpretation(false), brute_ind(&sys, false));
        prop_assert_eq!(sys.ind_interpretation(true), brute_ind(&sys, true));
        prop_assert_eq!(sys.coind_interpretation(), brute_coind(&sys));
        prop_assert_eq!(sys.gen_interpretation(), brute_gen(&sys));
    }

    #[test]
    fn gen_is_sandwiched(sys in system(10, 20, 6)) {
        let gen = sys.gen_interpretation();
        prop_assert!(sys.ind_interpretation(false).is_subset(&gen));
        prop_assert!(gen.is_subset(&sys.coind_interpretation()));
        prop_assert!(gen.is_subset(&sys.ind_interpretation(true)));
    }

    #[test]
    fn special_cases(sys in system(8, 16, 4)) {
        prop_assert_eq!(sys.without_corules().gen_interpretation(), sys.ind_interpretation(false));
        prop_assert_eq!(coaxioms_everywhere(&sys).gen_interpretation(), sys.coind_interpretation());
    }

    #[test]
    fn step_is_monotone(sys in system(10, 20, 4), a in any::<u64>(), b in any::<u64>(), co in any::<bool>()) {
        let small = mask_set(&sys, a & b);
        let large = mask_set(&sys, a | b);
        prop_assert!(sys.apply_step(co, &small).is_subset(&sys.apply_step(co, &large)));
    }

    #[test]
    fn gen_is_a_fixed_point_of_the_restricted_system(sys in system(10, 20, 6)) {
        let trace = sys.gen_trace();
        let restricted = sys.restrict(&trace.bound.set);
        prop_assert_eq!(restricted.apply_step(false, &trace.result.set), trace.result.set);
    }

    #[test]
    fn lfp_closed_and_gfp_consistent(sys in system(10, 20, 0)) {
        prop_assert!(sys.is_closed(&sys.ind_interpretation(false)).ok());
        let coind = sys.coind_interpretation();
        let report = sys.is_consistent(&coind);
        prop_assert!(report.ok());
        prop_assert_eq!(report.witnesses.len(), coind.len());
        for (&j, &i) in &report.witnesses {
            let rule = &sys.rules()[i];
            prop_assert_eq!(rule.conclusion(), j);
            prop_assert!(rule.fires_on(&coind));
        }
    }

    #[test]
    fn check_reports_are_sorted(sys in system(10, 20, 0), mask in any::<u64>()) {
        let s = mask_set(&sys, mask);
        for report in [sys.is_closed(&s), sys.is_consistent(&s)] {
            prop_assert_eq!(report.ok(), report.failures.is_empty());
            let keys: Vec<_> = report.failures.iter().map(|f| (f.judgment, f.rule)).collect();
            let mut sorted = keys.clone();
            sorted.sort();
            prop_assert_eq!(keys, sorted);
        }
    }

    #[test]
    fn rule_order_and_duplicates_are_inert(
        sys in system(8, 16, 4),
        keep in subsequence((0..16).collect::<Vec<usize>>(), 0..=16),
        seed in any::<u64>(),
    ) {
        let mut rules: Vec<Rule> = sys.rules().to_vec();
        // a fixed pseudo-random permutation
        let n = rules.len();
        for i in (1..n).rev() {
            let k = (seed.wrapping_mul(6364136223846793005).wrapping_add(i as u64) >> 33) as usize % (i + 1);
            rules.swap(i, k);
        }
        for &k in keep.iter().filter(|&&k| k < n) {
            rules.push(sys.rules()[k].clone());
        }
        let mut corules = sys.corules().to_vec();
        corules.reverse();
        corules.extend(sys.corules().iter().cloned());
        let other = InferenceSystem::new(sys.universe_size(), rules, corules).unwrap();
        prop_assert_eq!(other.ind_interpretation(false), sys.ind_interpretation(false));
        prop_assert_eq!(other.ind_interpretation(true), sys.ind_interpretation(true));
        prop_assert_eq!(other.coind_interpretation(), sys.coind_interpretation());
        prop_assert_eq!(other.gen_interpretation(), sys.gen_interpretation());
    }

    #[test]
    fn bounded_coinduction_is_sound(sys in system(8, 16, 6), mask in any::<u64>()) {
        let spec = mask_set(&sys, mask);
        let report = sys.bounded_coinduction_check(&spec);
        let gen = sys.gen_interpretation();
        if report.ok() {
            prop_assert_eq!(report.within_gen, Some(true));
            prop_assert!(spec.is_subset(&gen));
        } else {
            prop_assert_eq!(report.within_gen, None);
        }
        // Gen itself always satisfies both obligations
        prop_assert!(sys.bounded_coinduction_check(&gen).ok());
    }
}

#[test]
fn abc_against_enumeration() {
    let sys = InferenceSystem::new(
        3,
        vec![Rule::axiom(0), Rule::new([0], 1), Rule::new([2], 2)],
        vec![],
    )
    .unwrap();
    assert_eq!(brute_ind(&sys, false).to_vec(), vec![0, 1]);
    assert_eq!(brute_coind(&sys).to_vec(), vec![0, 1, 2]);
    assert_eq!(sys.ind_interpretation(false), brute_ind(&sys, false));
    assert_eq!(sys.coind_interpretation(), brute_coind(&sys));
}

#[test]
fn corule_premises_outside_bound_never_fire() {
    // corule 1 <- 2, but 2 is underivable even with corules
    let sys = InferenceSystem::new(
        3,
        vec![Rule::new([1], 1), Rule::new([2], 2)],
        vec![Rule::new([2], 1)],
    )
    .unwrap();
    assert!(sys.ind_interpretation(true).is_empty());
    assert!(sys.gen_interpretation().is_empty());
    assert_eq!(sys.coind_interpretation().to_vec(), vec![1, 2]);
}
