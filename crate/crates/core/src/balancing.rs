//! The run-length operator `Λ` on bivalent separable vectors, its iterates,
//! and the bookkeeping built on them (degree of balance, reinterpretation of
//! a level as a delta vector, and the framing check on maximal tuples).
//!
//! For a bivalent separable `v` with values `m` and `k`, where `m` never
//! occurs twice in a row (ties broken by `m < k`), `Λ(v)` lists the lengths
//! of the maximal runs of `k`, in order.

use std::fmt;

use crate::combinatorics::{delta_inv, has_adjacent, is_bivalent, is_framed, runs, DeltaVector};
use crate::error::{Error, Result};
use crate::instance::ExponentTuple;

/// Why `Λ` is not defined on a vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Terminal {
    /// a single distinct value
    Monovalent,
    /// more than two values, or two values differing by two or more
    NotBivalent,
    /// both values occur twice in a row somewhere
    NotSeparable,
    /// the result would be the empty vector
    EmptyExcluded,
}

impl Terminal {
    pub fn name(self) -> &'static str {
        match self {
            Terminal::Monovalent => "monovalent",
            Terminal::NotBivalent => "not_bivalent",
            Terminal::NotSeparable => "not_separable",
            Terminal::EmptyExcluded => "empty_excluded",
        }
    }
}

impl fmt::Display for Terminal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One application of `Λ`, with the values it used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaStep {
    pub result: Vec<u32>,
    /// the isolated value `m`
    pub separator: u32,
    /// the value `k` whose runs are measured
    pub counted: u32,
    /// when both values are isolated, what choosing the larger value as
    /// separator would have produced
    pub tie_alternative: Option<Vec<u32>>,
}

fn run_lengths_of(v: &[u32], value: u32) -> Vec<u32> {
    runs(v).into_iter().filter(|r| r.value == value).map(|r| r.len).collect()
}

pub fn lambda_step(v: &[u32]) -> std::result::Result<LambdaStep, Terminal> {
    let (Some(&lo), Some(&hi)) = (v.iter().min(), v.iter().max()) else {
        return Err(Terminal::EmptyExcluded);
    };
    if lo == hi {
        return Err(Terminal::Monovalent);
    }
    if !is_bivalent(v) {
        return Err(Terminal::NotBivalent);
    }
    let lo_isolated = !has_adjacent(v, lo);
    let hi_isolated = !has_adjacent(v, hi);
    let (separator, counted) = match (lo_isolated, hi_isolated) {
        (false, false) => return Err(Terminal::NotSeparable),
        (true, _) => (lo, hi),
        (false, true) => (hi, lo),
    };
    let result = run_lengths_of(v, counted);
    if result.is_empty() {
        return Err(Terminal::EmptyExcluded);
    }
    let tie_alternative = (lo_isolated && hi_isolated).then(|| run_lengths_of(v, lo));
    Ok(LambdaStep {
        result,
        separator,
        counted,
        tie_alternative,
    })
}

pub fn lambda_op(v: &[u32]) -> std::result::Result<Vec<u32>, Terminal> {
    lambda_step(v).map(|step| step.result)
}

/// `Λ^0(d), ..., Λ^j(d)` where `Λ` is undefined on `Λ^j(d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSequence {
    pub levels: Vec<Vec<u32>>,
    pub terminal: Terminal,
}

impl LambdaSequence {
    /// Largest `i` for which `Λ^i` exists.
    pub fn degree(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn last(&self) -> &[u32] {
        self.levels.last().expect("a sequence has at least one level")
    }
}

pub fn lambda_sequence(d: &[u32]) -> LambdaSequence {
    let mut levels = vec![d.to_vec()];
    loop {
        match lambda_op(levels.last().expect("non-empty")) {
            Ok(next) => levels.push(next),
            Err(terminal) => return LambdaSequence { levels, terminal },
        }
    }
}

/// `Λ(d)` exists and is bivalent. Requires `d` bivalent and separable.
pub fn is_bivalent_second_degree(d: &[u32]) -> Result<bool> {
    match lambda_op(d) {
        Ok(next) => Ok(is_bivalent(&next)),
        Err(reason) => Err(Error::Undefined(format!("Λ is undefined on {d:?}: {reason}"))),
    }
}

pub fn balanced_degree(d: &[u32]) -> usize {
    lambda_sequence(d).degree()
}

/// A vector read as the delta vector of a tuple in `A(s', r')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reinterpretation {
    pub s: u32,
    pub r: u32,
    pub delta: DeltaVector,
    pub tuple: ExponentTuple,
}

pub fn reinterpret_as_admissible(v: &[u32]) -> Result<Reinterpretation> {
    let delta = DeltaVector::new(v.to_vec())?;
    let tuple = delta_inv(&delta);
    Ok(Reinterpretation {
        s: delta.s(),
        r: delta.r(),
        delta,
        tuple,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConjectureOutcome {
    /// the last level is unframed and every earlier level is framed
    Consistent,
    /// the last level is unframed and some earlier level is unframed too
    Counterexample,
    /// the last level is framed, so there is nothing to check
    NotApplicable,
}

impl ConjectureOutcome {
    pub fn name(self) -> &'static str {
        match self {
            Self::Consistent => "conjecture_consistent",
            Self::Counterexample => "counterexample",
            Self::NotApplicable => "not_applicable",
        }
    }
}

/// Framing of every level of a `Λ` sequence of an energy-maximal delta
/// vector, checked against: if the last level is unframed, all earlier
/// levels are framed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramingReport {
    pub sequence: LambdaSequence,
    pub framed: Vec<bool>,
    pub outcome: ConjectureOutcome,
    /// some level has a single entry and counts as framed only by the
    /// convention that a one-entry vector is framed
    pub single_entry_convention: bool,
}

/// The caller vouches that `d` belongs to an energy-maximal tuple.
pub fn check_framing_conjecture(d: &[u32]) -> FramingReport {
    let sequence = lambda_sequence(d);
    let framed: Vec<bool> = sequence.levels.iter().map(|l| is_framed(l, None)).collect();
    let single_entry_convention = sequence.levels.iter().any(|l| l.len() == 1);
    let (last, earlier) = framed.split_last().expect("at least one level");
    let outcome = if *last {
        ConjectureOutcome::NotApplicable
    } else if earlier.iter().all(|&f| f) {
        ConjectureOutcome::Consistent
    } else {
        ConjectureOutcome::Counterexample
    };
    FramingReport {
        sequence,
        framed,
        outcome,
        single_entry_convention,
    }
}
