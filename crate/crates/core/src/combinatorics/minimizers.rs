use super::{has_adjacent, runs, DeltaVector, Majority, StructureParams, TheoremCase};
use crate::error::Result;
use crate::instance::ProblemInstance;

/// What the structural results say about the minimizers of an instance:
/// either the complete list, or properties every minimizer has. A vector
/// satisfying the properties is not claimed to be a minimizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredictedMinimizers {
    Exact(Vec<DeltaVector>),
    Characterized(MinimizerPredicate),
}

/// The properties shared by all minimizers in the two non-periodic cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimizerPredicate {
    pub params: StructureParams,
}

impl MinimizerPredicate {
    /// Every violated property, worded for a report. Empty means the
    /// vector has all properties.
    pub fn violations(&self, d: &DeltaVector) -> Vec<String> {
        let p = &self.params;
        let v = d.entries();
        let (short, long) = (p.floor_q, p.ceil_q);
        let mut out = Vec::new();
        if let Some(x) = v.iter().find(|&&x| x != short && x != long) {
            out.push(format!("entry {x} is neither [q]={short} nor [q+1]={long}"));
            return out;
        }
        let n_long = v.iter().filter(|&&x| x == long).count() as u32;
        let n_short = v.len() as u32 - n_long;
        let (isolated, runs_of, mean, expected_runs, residue) = match p.majority {
            Majority::Long => {
                let q2 = p.q2.expect("long majority has r-g-2 > 0");
                (short, long, q2, n_short.saturating_sub(1), p.e.expect("r-g-2 > 0"))
            }
            Majority::Short => (long, short, p.q1, n_long + 1, p.f),
        };
        if n_long != p.g {
            out.push(format!("expected {} entries [q+1], found {n_long}", p.g));
        }
        if !(v[0] == short && v[v.len() - 1] == short) {
            out.push(format!("not framed by [q]={short}"));
        }
        if has_adjacent(v, isolated) {
            out.push(format!("neighbouring entries {isolated} occur"));
        }
        let lens: Vec<u32> = runs(v).iter().filter(|r| r.value == runs_of).map(|r| r.len).collect();
        let floor = mean.to_integer();
        if let Some(bad) = lens.iter().find(|&&l| l != floor && l != floor + 1) {
            out.push(format!("a {runs_of}-block has length {bad}, expected {floor} or {}", floor + 1));
        }
        let n_runs = lens.len() as u32;
        let n_long_runs = lens.iter().filter(|&&l| l == floor + 1).count() as u32;
        if n_runs != expected_runs {
            out.push(format!("expected {expected_runs} {runs_of}-blocks, found {n_runs}"));
        }
        if n_long_runs != residue {
            out.push(format!(
                "expected {residue} {runs_of}-blocks of length {}, found {n_long_runs}",
                floor + 1
            ));
        }
        out
    }

    pub fn holds(&self, d: &DeltaVector) -> bool {
        self.violations(d).is_empty()
    }
}

/// Requires `p >= 3` and `3 <= r < s`.
pub fn predicted_minimizers(inst: &ProblemInstance) -> Result<PredictedMinimizers> {
    inst.require_theorem_hypotheses()?;
    let params = StructureParams::new(inst)?;
    let n = inst.delta_len();
    let (short, long) = (params.floor_q, params.ceil_q);
    let g = params.g;
    let r = inst.r();
    let exact = |v: Vec<u32>| DeltaVector::from_raw(v);
    Ok(match params.case {
        TheoremCase::Equidistant => PredictedMinimizers::Exact(vec![exact(vec![short; n])]),
        TheoremCase::SingleShortGap => {
            let mut v = vec![long; n];
            v[0] = short;
            let d = exact(v);
            PredictedMinimizers::Exact(vec![d.clone(), d.reversed()])
        }
        TheoremCase::PeriodicLongRuns => {
            let q2 = params.q2.expect("long majority").to_integer() as usize;
            let mut v = vec![short];
            for _ in 0..r - g - 2 {
                v.extend(std::iter::repeat_n(long, q2));
                v.push(short);
            }
            PredictedMinimizers::Exact(vec![exact(v)])
        }
        TheoremCase::PeriodicShortRuns => {
            let q1 = params.q1.to_integer() as usize;
            let mut v: Vec<u32> = std::iter::repeat_n(short, q1).collect();
            for _ in 0..g {
                v.push(long);
                v.extend(std::iter::repeat_n(short, q1));
            }
            PredictedMinimizers::Exact(vec![exact(v)])
        }
        TheoremCase::BalancedLongRuns | TheoremCase::BalancedShortRuns => {
            PredictedMinimizers::Characterized(MinimizerPredicate { params })
        }
    })
}
