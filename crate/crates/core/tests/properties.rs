mod common;

use common::*;
use icg_core::balancing::{lambda_op, lambda_sequence};
use icg_core::combinatorics::{enumerate_delta, is_bivalent, StructureParams};
use icg_core::search::{brute_force_min, local_descent_path};
use icg_core::{delta_inv, energy_from_hp, hp_eval, Prime, ProblemInstance, StructureFilter};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn hp_symmetry((s, a) in admissible(), p in prime()) {
        check_symmetry(p, s, &a)?;
    }

    #[test]
    fn balance_move_descends(d in unbalanced(), p in prime()) {
        check_balance(p, &d)?;
    }

    #[test]
    fn swap_move_descends(d in swap_configuration(), p in prime()) {
        check_swap(p, &d)?;
    }

    #[test]
    fn shift_move_descends(d in shift_configuration(), p in prime()) {
        check_shift(p, &d)?;
    }

    #[test]
    fn descent_never_increases((_s, a) in admissible(), p in prime()) {
        let p = Prime::new(p).unwrap();
        let mut prev = hp_eval(p, &a);
        for step in local_descent_path(&a) {
            let next = hp_eval(p, &step.result);
            prop_assert!(next < prev);
            prev = next;
        }
    }

    #[test]
    fn energy_is_positive_and_even((s, a) in admissible(), p in prime()) {
        let prime = Prime::new(p).unwrap();
        let e = energy_from_hp(prime, s, a.len(), &hp_eval(prime, &a)).unwrap();
        prop_assert!(e > 0.into());
        prop_assert!(&e % 2 == 0.into());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parallel_equals_serial((p, s, r, filter, top) in search_instance()) {
        check_parallel_identity(p, s, r, filter, top)?;
    }

    #[test]
    fn lambda_shrinks(v in prop::collection::vec(1u32..=3, 1..40)) {
        let seq = lambda_sequence(&v);
        prop_assert!(seq.levels.windows(2).all(|w| w[1].len() < w[0].len()));
        prop_assert!(lambda_op(seq.last()).is_err());
    }
}

#[test]
fn delta_bijection_up_to_12() {
    delta_bijection_exhaustive(12).unwrap();
}

#[test]
fn lambda_terminates_up_to_14() {
    lambda_termination_exhaustive(14).unwrap();
}

fn small_instances(s_max: u32, primes: &[u64]) -> Vec<ProblemInstance> {
    let mut out = Vec::new();
    for &p in primes {
        for s in 3..=s_max {
            for r in 2..=s {
                out.push(ProblemInstance::new(p, s, r).unwrap());
            }
        }
    }
    out
}

#[test]
fn minimizers_are_closed_under_reversal() {
    for inst in small_instances(12, &[2, 3, 5]) {
        let report = brute_force_min(&inst, StructureFilter::All).unwrap();
        for d in &report.minimizers {
            assert!(report.minimizers.contains(&d.reversed()), "{inst}: {d}");
        }
        let p = inst.prime();
        for d in &report.minimizers {
            assert_eq!(hp_eval(p, &delta_inv(d)), report.min_value);
        }
    }
}

#[test]
fn bivalent_filter_keeps_all_minimizers() {
    for inst in small_instances(14, &[3, 5]) {
        if count(&inst) > 100_000 {
            continue;
        }
        let all = brute_force_min(&inst, StructureFilter::All).unwrap();
        let biv = brute_force_min(&inst, StructureFilter::Biv).unwrap();
        assert_eq!(all.min_value, biv.min_value, "{inst}");
        assert_eq!(all.minimizers, biv.minimizers, "{inst}");
    }
}

fn count(inst: &ProblemInstance) -> u128 {
    icg_core::combinatorics::count_delta(inst, StructureFilter::All)
}

#[test]
fn minimizers_are_separable_and_second_degree() {
    for inst in small_instances(14, &[3, 5]) {
        let (s1, r1) = (inst.s() - 1, inst.r() - 1);
        if inst.r() < 3 || inst.r() >= inst.s() || s1 % r1 == 0 || inst.s() % r1 == 0 {
            continue;
        }
        let report = brute_force_min(&inst, StructureFilter::All).unwrap();
        let params = StructureParams::new(&inst).unwrap();
        for d in &report.minimizers {
            assert!(icg_core::combinatorics::membership(d, StructureFilter::SepStar), "{inst}: {d} {params:?}");
            let next = lambda_op(d.entries()).unwrap();
            assert!(is_bivalent(&next), "{inst}: {d}");
        }
    }
}

#[test]
fn every_vector_descends_to_a_fixed_point() {
    let inst = ProblemInstance::new(3, 12, 7).unwrap();
    let report = brute_force_min(&inst, StructureFilter::All).unwrap();
    for d in enumerate_delta(&inst, StructureFilter::All) {
        let path = local_descent_path(&delta_inv(&d));
        if let Some(last) = path.last() {
            assert!(local_descent_path(&last.result).is_empty());
        }
    }
    for d in &report.minimizers {
        assert!(local_descent_path(&delta_inv(d)).is_empty());
    }
}
