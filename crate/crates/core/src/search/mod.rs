//! Exact minimization of `h_p` over `A(s, r)` and its structured subsets,
//! the descent moves that lower `h_p`, and theorem verification.

mod descent;
mod engine;
mod moves;
mod verify;

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use crate::combinatorics::{DeltaVector, Shape, StructureFilter};
use crate::error::{Error, Result};
use crate::exact::PAdicRational;
use crate::hp::instance_energy;
use crate::instance::ProblemInstance;
use engine::{fits_u128, TopK, Walk, Word};

pub use descent::{local_descent, local_descent_path, DescentStep, MoveKind};
pub use engine::Direction;
pub use moves::{balance_move, shift_block_move, swap_move};
pub use verify::{verify_theorem, VerificationReport};

/// Optional leaf predicate applied before a candidate is ranked.
pub type Restrict<'a> = dyn Fn(&[u32]) -> bool + Sync + 'a;

/// Knobs for [`search`]. The defaults find every minimizer over `D(s, r)`
/// on the global thread pool.
#[derive(Clone, Copy)]
pub struct SearchOptions<'a> {
    pub filter: StructureFilter,
    pub direction: Direction,
    /// number of distinct best values to keep
    pub top: usize,
    /// worker threads; `None` uses the global pool, `Some(1)` runs inline
    pub jobs: Option<usize>,
    /// extra condition on candidates, applied after the filter
    pub restrict: Option<&'a Restrict<'a>>,
}

impl Default for SearchOptions<'_> {
    fn default() -> Self {
        SearchOptions {
            filter: StructureFilter::All,
            direction: Direction::Minimize,
            top: 1,
            jobs: None,
            restrict: None,
        }
    }
}

impl std::fmt::Debug for SearchOptions<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SearchOptions")
            .field("filter", &self.filter)
            .field("direction", &self.direction)
            .field("top", &self.top)
            .field("jobs", &self.jobs)
            .field("restrict", &self.restrict.is_some())
            .finish()
    }
}

/// One distinct value of `h_p` with all vectors attaining it, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranked {
    pub value: PAdicRational,
    pub vectors: Vec<DeltaVector>,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub instance: ProblemInstance,
    pub filter: StructureFilter,
    pub direction: Direction,
    /// best value of `h_p`: the minimum, or the maximum when maximizing
    pub min_value: PAdicRational,
    /// every vector attaining `min_value`, lexicographically sorted
    pub minimizers: Vec<DeltaVector>,
    /// best values first; `ranked[0]` repeats `min_value` and `minimizers`
    pub ranked: Vec<Ranked>,
    pub candidates_examined: u128,
    pub elapsed: Duration,
    /// energy of the graph for `min_value`
    pub max_energy: BigInt,
    /// results that make the filter safe for minimization
    pub justification: Vec<&'static str>,
}

const BIVALENCE: &str = "minimizers are bivalent: widening a shortest gap and narrowing a longest one lowers h_p when p >= 3";
const FRAMING: &str = "bivalent minimizers start and end with [q]: swapping the ends of an alternating stretch lowers h_p when p >= 3";
const SEPARATION: &str = "framed minimizers repeat at most one of their two values: otherwise a swap lowers h_p when p >= 3";

/// The chain of facts under which restricting to `filter` keeps every
/// minimizer.
pub fn filter_justification(filter: StructureFilter) -> Vec<&'static str> {
    match filter {
        StructureFilter::All => vec![],
        StructureFilter::Biv => vec![BIVALENCE],
        StructureFilter::BivStar => vec![BIVALENCE, FRAMING],
        StructureFilter::SepStar => vec![BIVALENCE, FRAMING, SEPARATION],
    }
}

/// Refuses structural filters for `p = 2`, where the facts behind them are
/// not established.
pub fn filter_sound(inst: &ProblemInstance, filter: StructureFilter) -> Result<()> {
    if filter != StructureFilter::All && inst.p() < 3 {
        return Err(Error::FilterRefused(filter.name()));
    }
    Ok(())
}

/// Every minimizer of `h_p` over the filtered subset of `D(s, r)`.
pub fn brute_force_min(inst: &ProblemInstance, filter: StructureFilter) -> Result<SearchReport> {
    search(
        inst,
        &SearchOptions {
            filter,
            ..SearchOptions::default()
        },
    )
}

pub fn search(inst: &ProblemInstance, opts: &SearchOptions<'_>) -> Result<SearchReport> {
    if opts.direction == Direction::Minimize {
        filter_sound(inst, opts.filter)?;
    }
    if opts.jobs == Some(0) {
        return Err(Error::InvalidInstance("jobs must be at least 1".into()));
    }
    let start = Instant::now();
    let shape = Shape::new(inst, opts.filter);
    let (ranked, examined) = if fits_u128(inst.p(), inst.s(), inst.r()) {
        run::<u128>(inst, &shape, opts)?
    } else {
        run::<BigUint>(inst, &shape, opts)?
    };
    let elapsed = start.elapsed();
    let top = inst.delta_sum();
    let ranked: Vec<Ranked> = ranked
        .into_iter()
        .map(|(value, mut vectors)| {
            vectors.sort();
            Ranked {
                value: PAdicRational::from_scaled(value, inst.p(), top),
                vectors: vectors.into_iter().map(DeltaVector::from_raw).collect(),
            }
        })
        .collect();
    let best = ranked.first().ok_or(Error::EmptyCandidateSet)?;
    Ok(SearchReport {
        instance: *inst,
        filter: opts.filter,
        direction: opts.direction,
        min_value: best.value.clone(),
        minimizers: best.vectors.clone(),
        max_energy: instance_energy(inst, &best.value)?,
        ranked,
        candidates_examined: examined,
        elapsed,
        justification: match opts.direction {
            Direction::Minimize => filter_justification(opts.filter),
            Direction::Maximize => vec![],
        },
    })
}

type Ranking = Vec<(BigUint, Vec<Vec<u32>>)>;

fn run<W: Word>(inst: &ProblemInstance, shape: &Shape, opts: &SearchOptions<'_>) -> Result<(Ranking, u128)> {
    let depth = 3.min(shape.len.saturating_sub(1));
    let units = shape.prefixes(depth);
    let work = |prefix: &Vec<u32>| {
        let mut walk = Walk::<W>::new(inst.p(), shape, opts.top, opts.direction, opts.restrict);
        walk.run(prefix);
        (walk.tracker, walk.examined)
    };
    let parts: Vec<(TopK<W>, u128)> = match opts.jobs {
        Some(1) => units.iter().map(work).collect(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidInstance(format!("cannot start {n} workers: {e}")))?
            .install(|| units.par_iter().map(work).collect()),
        None => units.par_iter().map(work).collect(),
    };
    let mut tracker = TopK::new(opts.top, opts.direction);
    let mut examined = 0;
    for (part, count) in parts {
        tracker = tracker.merge(part);
        examined += count;
    }
    let ranked = tracker
        .into_ranked()
        .into_iter()
        .map(|(w, v)| (w.to_big(), v))
        .collect();
    Ok((ranked, examined))
}
