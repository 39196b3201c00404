//! Checks an instance's brute-force minimizers against the structural
//! predictions and closed forms.

use std::collections::BTreeSet;

use num_rational::BigRational;

use super::{brute_force_min, SearchReport};
use crate::combinatorics::{predicted_minimizers, DeltaVector, PredictedMinimizers, StructureFilter, StructureParams, TheoremCase};
use crate::error::Result;
use crate::hp::{min_hp_closed_form_div, min_hp_closed_form_divs};
use crate::instance::ProblemInstance;

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub case: TheoremCase,
    pub search: SearchReport,
    /// the closed-form minimum, for the two divisibility cases
    pub closed_form: Option<BigRational>,
    /// explicit minimizers and their reversals, for the explicit cases
    pub predicted: Option<Vec<DeltaVector>>,
    /// predicted but not found
    pub missing: Vec<DeltaVector>,
    /// found but not predicted
    pub unexpected: Vec<DeltaVector>,
    /// minimizers that fail the characterizing predicate, with reasons
    pub violations: Vec<(DeltaVector, Vec<String>)>,
}

impl VerificationReport {
    pub fn closed_form_matches(&self) -> Option<bool> {
        self.closed_form
            .as_ref()
            .map(|c| self.search.min_value.to_rational() == *c)
    }

    pub fn passed(&self) -> bool {
        self.closed_form_matches() != Some(false)
            && self.missing.is_empty()
            && self.unexpected.is_empty()
            && self.violations.is_empty()
    }

    /// Human-readable differences; empty when the check passed.
    pub fn diff(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.closed_form_matches() == Some(false) {
            out.push(format!(
                "minimum {} differs from closed form {}",
                self.search.min_value,
                self.closed_form.as_ref().expect("present")
            ));
        }
        out.extend(self.missing.iter().map(|d| format!("predicted minimizer {d} not found")));
        out.extend(self.unexpected.iter().map(|d| format!("minimizer {d} not predicted")));
        for (d, reasons) in &self.violations {
            out.extend(reasons.iter().map(|r| format!("minimizer {d}: {r}")));
        }
        out
    }
}

/// Brute-force search over `D(s, r)` compared with the prediction for the
/// instance's case. Needs `p >= 3` and `3 <= r < s`.
pub fn verify_theorem(inst: &ProblemInstance) -> Result<VerificationReport> {
    inst.require_theorem_hypotheses()?;
    let case = StructureParams::new(inst)?.case;
    let search = brute_force_min(inst, StructureFilter::All)?;
    let closed_form = match case {
        TheoremCase::Equidistant => Some(min_hp_closed_form_div(inst)?),
        TheoremCase::SingleShortGap => Some(min_hp_closed_form_divs(inst)?),
        _ => None,
    };
    let mut report = VerificationReport {
        case,
        closed_form,
        predicted: None,
        missing: Vec::new(),
        unexpected: Vec::new(),
        violations: Vec::new(),
        search,
    };
    match predicted_minimizers(inst)? {
        PredictedMinimizers::Exact(list) => {
            let predicted: BTreeSet<DeltaVector> = list.iter().flat_map(|d| [d.clone(), d.reversed()]).collect();
            let found: BTreeSet<DeltaVector> = report.search.minimizers.iter().cloned().collect();
            report.missing = predicted.difference(&found).cloned().collect();
            report.unexpected = found.difference(&predicted).cloned().collect();
            report.predicted = Some(predicted.into_iter().collect());
        }
        PredictedMinimizers::Characterized(pred) => {
            report.violations = report
                .search
                .minimizers
                .iter()
                .filter_map(|d| {
                    let v = pred.violations(d);
                    (!v.is_empty()).then(|| (d.clone(), v))
                })
                .collect();
        }
    }
    Ok(report)
}
