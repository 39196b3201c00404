#![allow(dead_code)]

use icg_core::combinatorics::{enumerate_delta, is_framed};
use icg_core::search::{balance_move, search, shift_block_move, swap_move, SearchOptions, SearchReport};
use icg_core::{delta, delta_inv, hp_eval, reverse_complement, DeltaVector, ExponentTuple, Prime, ProblemInstance, StructureFilter};
use proptest::prelude::*;

pub fn dv(v: &[u32]) -> DeltaVector {
    DeltaVector::new(v.to_vec()).unwrap()
}

pub fn reversed(v: &[u32]) -> Vec<u32> {
    v.iter().rev().copied().collect()
}

pub fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7])
}

/// An admissible tuple with `s <= 20`.
pub fn admissible() -> impl Strategy<Value = (u32, ExponentTuple)> {
    (2u32..=20).prop_flat_map(|s| {
        prop::collection::btree_set(1..s - 1, 0..=(s as usize - 2).min(12)).prop_map(move |inner| {
            let mut v = vec![0];
            v.extend(inner);
            v.push(s - 1);
            (s, ExponentTuple::new(v).unwrap())
        })
    })
}

pub fn check_symmetry(p: u64, s: u32, a: &ExponentTuple) -> Result<(), TestCaseError> {
    let p = Prime::new(p).unwrap();
    let b = reverse_complement(a, s).unwrap();
    prop_assert_eq!(hp_eval(p, a), hp_eval(p, &b));
    Ok(())
}

/// A delta vector with range at least two, `s <= 20`.
pub fn unbalanced() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=6, 2..=8)
        .prop_filter("range >= 2", |v| v.iter().max().unwrap() - v.iter().min().unwrap() >= 2)
        .prop_filter("s <= 20", |v| v.iter().sum::<u32>() <= 19)
}

fn lower(p: u64, a: &ExponentTuple, b: &ExponentTuple) -> bool {
    let p = Prime::new(p).unwrap();
    hp_eval(p, b) < hp_eval(p, a)
}

/// Every applicable index pair of a move strictly lowers `h_p`; returns how
/// many pairs applied.
fn all_pairs_descend<F>(p: u64, d: &[u32], range: usize, mv: F) -> Result<usize, TestCaseError>
where
    F: Fn(&ExponentTuple, usize, usize) -> icg_core::Result<ExponentTuple>,
{
    let a = delta_inv(&dv(d));
    let mut applied = 0;
    for u in 0..range {
        for v in 0..range {
            if let Ok(b) = mv(&a, u, v) {
                prop_assert!(lower(p, &a, &b), "{:?} ({}, {}) did not descend", d, u, v);
                applied += 1;
            }
        }
    }
    Ok(applied)
}

pub fn check_balance(p: u64, d: &[u32]) -> Result<(), TestCaseError> {
    let applied = all_pairs_descend(p, d, d.len(), balance_move)?;
    prop_assert!(applied > 0, "no balance move applies to {:?}", d);
    Ok(())
}

/// A framed bivalent vector containing `lo lo (lo hi)^k hi` with random
/// material around it, possibly reversed.
pub fn swap_configuration() -> impl Strategy<Value = Vec<u32>> {
    (
        1u32..=2,
        prop::collection::vec(any::<bool>(), 0..3),
        1usize..=2,
        prop::collection::vec(any::<bool>(), 0..3),
        any::<bool>(),
    )
        .prop_map(|(lo, left, k, right, flip)| {
            let hi = lo + 1;
            let pick = |b: bool| if b { hi } else { lo };
            let mut v = vec![lo];
            v.extend(left.into_iter().map(pick));
            v.extend([lo, lo]);
            for _ in 1..k {
                v.extend([hi, lo]);
            }
            v.extend([hi, hi]);
            v.extend(right.into_iter().map(pick));
            v.push(lo);
            if flip {
                v.reverse();
            }
            v
        })
        .prop_filter("s <= 20", |v| v.iter().sum::<u32>() <= 19)
}

pub fn check_swap(p: u64, d: &[u32]) -> Result<(), TestCaseError> {
    let applied = all_pairs_descend(p, d, d.len() - 1, swap_move)?;
    prop_assert!(applied > 0, "no swap applies to {:?}", d);
    Ok(())
}

/// A framed separable vector built from runs of one value separated by
/// single entries of the other, where two neighbouring runs differ by at
/// least two.
pub fn shift_configuration() -> impl Strategy<Value = Vec<u32>> {
    (
        any::<bool>(),
        prop::collection::vec(1u32..=3, 2..=5),
        any::<prop::sample::Index>(),
        0u32..=1,
        any::<bool>(),
    )
        .prop_map(|(runs_of_larger, mut lens, at, extra, flip)| {
            let i = at.index(lens.len() - 1);
            lens[i + 1] = lens[i] + 2 + extra;
            if flip {
                lens.reverse();
            }
            let (lo, hi) = (1, 2);
            let (k, m) = if runs_of_larger { (hi, lo) } else { (lo, hi) };
            let mut v = Vec::new();
            if runs_of_larger {
                v.push(m);
            }
            for (j, &len) in lens.iter().enumerate() {
                if j > 0 {
                    v.push(m);
                }
                v.extend(std::iter::repeat_n(k, len as usize));
            }
            if runs_of_larger {
                v.push(m);
            }
            v
        })
        .prop_filter("s <= 20", |v| v.iter().sum::<u32>() <= 19)
}

pub fn check_shift(p: u64, d: &[u32]) -> Result<(), TestCaseError> {
    let applied = all_pairs_descend(p, d, d.len(), shift_block_move)?;
    prop_assert!(applied > 0, "no shift applies to {:?}", d);
    Ok(())
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `delta` and `delta_inv` are inverse bijections between `A(s, r)` and
/// `D(s, r)` for every `2 <= r <= s <= s_max`. Returns the number of
/// vectors checked.
pub fn delta_bijection_exhaustive(s_max: u32) -> Result<u64, String> {
    let mut checked = 0;
    for s in 2..=s_max {
        for r in 2..=s {
            let inst = ProblemInstance::new(3, s, r).unwrap();
            let mut tuples = std::collections::BTreeSet::new();
            let mut count = 0;
            for d in enumerate_delta(&inst, StructureFilter::All) {
                let a = delta_inv(&d);
                if !a.is_admissible(s) || a.len() != r as usize {
                    return Err(format!("{d} maps outside A({s},{r})"));
                }
                if delta(&a, s).unwrap() != d {
                    return Err(format!("{d} does not round-trip"));
                }
                tuples.insert(a);
                count += 1;
            }
            let expected = binomial((s - 2) as u64, (r - 2) as u64);
            if count != expected || tuples.len() as u64 != expected {
                return Err(format!("A({s},{r}) has {expected} tuples, got {count} vectors and {} images", tuples.len()));
            }
            checked += count;
        }
    }
    Ok(checked)
}

/// The operator sequence stops, each level shorter than the one before,
/// for every delta vector with `s <= s_max`.
pub fn lambda_termination_exhaustive(s_max: u32) -> Result<u64, String> {
    let mut checked = 0;
    for s in 2..=s_max {
        for r in 2..=s {
            let inst = ProblemInstance::new(3, s, r).unwrap();
            for d in enumerate_delta(&inst, StructureFilter::All) {
                let seq = icg_core::balancing::lambda_sequence(d.entries());
                if seq.levels.windows(2).any(|w| w[1].len() >= w[0].len()) {
                    return Err(format!("{d}: levels do not shrink"));
                }
                if icg_core::balancing::lambda_op(seq.last()).is_ok() {
                    return Err(format!("{d}: sequence stopped early"));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Everything in a report except the timing.
pub fn fingerprint(r: &SearchReport) -> String {
    let ranked: Vec<String> = r
        .ranked
        .iter()
        .map(|x| {
            let vs: Vec<String> = x.vectors.iter().map(|d| d.to_string()).collect();
            format!("{}:{}", x.value, vs.join(";"))
        })
        .collect();
    format!(
        "{}|{}|{:?}|{}|{}|{}|{}",
        r.instance,
        r.filter,
        r.direction,
        r.min_value,
        r.candidates_examined,
        r.max_energy,
        ranked.join("|")
    )
}

pub fn search_instance() -> impl Strategy<Value = (u64, u32, u32, StructureFilter, usize)> {
    (
        prop::sample::select(vec![3u64, 5]),
        4u32..=14,
        prop::sample::select(StructureFilter::ALL.to_vec()),
        1usize..=3,
    )
        .prop_flat_map(|(p, s, filter, top)| (Just(p), Just(s), 2..=s, Just(filter), Just(top)))
}

pub fn check_parallel_identity(p: u64, s: u32, r: u32, filter: StructureFilter, top: usize) -> Result<(), TestCaseError> {
    let inst = ProblemInstance::new(p, s, r).unwrap();
    let run = |jobs| {
        search(
            &inst,
            &SearchOptions {
                filter,
                top,
                jobs,
                ..SearchOptions::default()
            },
        )
        .map(|r| fingerprint(&r))
        .map_err(|e| e.to_string())
    };
    prop_assert_eq!(run(Some(1)), run(None));
    Ok(())
}

pub fn framed_by(v: &[u32], x: u32) -> bool {
    is_framed(v, Some(x))
}
