//! Repeated application of the descent moves until none applies.

use std::fmt;

use super::moves::{balance_move, find_balance, find_shift, find_swap, shift_block_move, swap_move};
use crate::instance::ExponentTuple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    Balance,
    Swap,
    Shift,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Balance => "balance",
            MoveKind::Swap => "swap",
            MoveKind::Shift => "shift",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One applied move and the tuple it produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentStep {
    pub kind: MoveKind,
    pub u: usize,
    pub v: usize,
    pub result: ExponentTuple,
}

fn next_step(a: &ExponentTuple) -> Option<DescentStep> {
    let d: Vec<u32> = a.entries().windows(2).map(|w| w[1] - w[0]).collect();
    let step = |kind, (u, v), result| DescentStep { kind, u, v, result };
    if let Some(pair) = find_balance(&d) {
        return Some(step(MoveKind::Balance, pair, balance_move(a, pair.0, pair.1).ok()?));
    }
    if let Some(pair) = find_swap(&d) {
        return Some(step(MoveKind::Swap, pair, swap_move(a, pair.0, pair.1).ok()?));
    }
    let pair = find_shift(&d)?;
    Some(step(MoveKind::Shift, pair, shift_block_move(a, pair.0, pair.1).ok()?))
}

/// Every move taken from `a`: balance moves first, then swaps, then block
/// shifts, each at the leftmost qualifying indices.
pub fn local_descent_path(a: &ExponentTuple) -> Vec<DescentStep> {
    let mut path = Vec::new();
    let mut cur = a.clone();
    while let Some(step) = next_step(&cur) {
        cur = step.result.clone();
        path.push(step);
    }
    path
}

/// The tuple at which no move applies any more.
pub fn local_descent(a: &ExponentTuple) -> ExponentTuple {
    local_descent_path(a).pop().map_or_else(|| a.clone(), |s| s.result)
}
