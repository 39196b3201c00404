use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::instance::ProblemInstance;

/// Which value of a bivalent minimizer occurs in runs and which is isolated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Majority {
    /// `2g >= r-1`: the `[q]` entries are isolated and `[q+1]` entries form runs.
    Long,
    /// `2g <= r-2`: the `[q+1]` entries are isolated and `[q]` entries form runs.
    Short,
}

/// Routing of an instance to the structural result that describes its
/// minimizers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremCase {
    /// `(r-1) | (s-1)`: the unique minimizer is `(q, ..., q)`.
    Equidistant,
    /// `(r-1) | s`: `([q], [q+1], ..., [q+1])` and its reversal.
    SingleShortGap,
    /// `2g >= r-1`, `(r-g-2) | g`: runs of `[q+1]` of length `q2` between single `[q]`.
    PeriodicLongRuns,
    /// `2g >= r-1`, `(r-g-2)` does not divide `g`: characterized by a predicate.
    BalancedLongRuns,
    /// `2g <= r-2`, `(g+1) | (r-g-1)`: runs of `[q]` of length `q1` between single `[q+1]`.
    PeriodicShortRuns,
    /// `2g <= r-2`, `(g+1)` does not divide `(r-g-1)`: characterized by a predicate.
    BalancedShortRuns,
}

impl TheoremCase {
    pub fn name(self) -> &'static str {
        match self {
            Self::Equidistant => "equidistant",
            Self::SingleShortGap => "single-short-gap",
            Self::PeriodicLongRuns => "periodic-long-runs",
            Self::BalancedLongRuns => "balanced-long-runs",
            Self::PeriodicShortRuns => "periodic-short-runs",
            Self::BalancedShortRuns => "balanced-short-runs",
        }
    }

    /// Cases whose minimizers are given as explicit vectors.
    pub fn is_explicit(self) -> bool {
        !matches!(self, Self::BalancedLongRuns | Self::BalancedShortRuns)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureParams {
    /// `q = (s-1)/(r-1)`
    pub q: Ratio<u32>,
    /// `[q]`
    pub floor_q: u32,
    /// `[q+1] = [q] + 1`
    pub ceil_q: u32,
    /// least non-negative residue of `s-1` mod `r-1`; the number of `[q+1]`
    /// entries in a bivalent delta vector when `q` is not an integer
    pub g: u32,
    /// `(r-g-1)/(g+1)`
    pub q1: Ratio<u32>,
    /// `g/(r-g-2)`, when `r-g-2 > 0`
    pub q2: Option<Ratio<u32>>,
    /// least positive residue of `g` mod `(r-g-2)`
    pub e: Option<u32>,
    /// least positive residue of `(r-g-1)` mod `(g+1)`
    pub f: u32,
    /// number of `[q+1]`-blocks a minimizer has in its regime
    pub w_expected: u32,
    pub majority: Majority,
    pub case: TheoremCase,
}

fn least_positive_residue(x: u32, m: u32) -> u32 {
    match x % m {
        0 => m,
        r => r,
    }
}

impl StructureParams {
    pub fn new(inst: &ProblemInstance) -> Result<Self> {
        let (s, r) = (inst.s(), inst.r());
        if r < 3 {
            return Err(Error::InvalidInstance(format!("structure parameters need r >= 3, got {r}")));
        }
        let (s1, r1) = (s - 1, r - 1);
        let floor_q = s1 / r1;
        let g = s1 % r1;
        let q1 = Ratio::new(r - g - 1, g + 1);
        let long_blocks = r - g - 2; // r - 2 - g >= 0 since g <= r - 2
        let q2 = (long_blocks > 0).then(|| Ratio::new(g, long_blocks));
        let e = (long_blocks > 0).then(|| least_positive_residue(g, long_blocks));
        let f = least_positive_residue(r - g - 1, g + 1);
        let majority = if 2 * g >= r1 { Majority::Long } else { Majority::Short };
        let w_expected = match majority {
            Majority::Long => long_blocks,
            Majority::Short => g,
        };
        let case = if g == 0 {
            TheoremCase::Equidistant
        } else if s % r1 == 0 {
            TheoremCase::SingleShortGap
        } else {
            match majority {
                Majority::Long if g % long_blocks == 0 => TheoremCase::PeriodicLongRuns,
                Majority::Long => TheoremCase::BalancedLongRuns,
                Majority::Short if (r - g - 1) % (g + 1) == 0 => TheoremCase::PeriodicShortRuns,
                Majority::Short => TheoremCase::BalancedShortRuns,
            }
        };
        Ok(StructureParams {
            q: Ratio::new(s1, r1),
            floor_q,
            ceil_q: floor_q + 1,
            g,
            q1,
            q2,
            e,
            f,
            w_expected,
            majority,
            case,
        })
    }

    pub fn q_is_integer(&self) -> bool {
        self.g == 0
    }
}
