//! Fixtures shared by the benchmarks.

use icg_core::{DeltaVector, ProblemInstance};

/// Instances sized so that one iteration stays in the millisecond range.
pub fn search_instances() -> Vec<ProblemInstance> {
    [(3, 16, 11), (3, 22, 17), (5, 20, 9)]
        .into_iter()
        .map(|(p, s, r)| ProblemInstance::new(p, s, r).expect("valid fixture"))
        .collect()
}

/// The 34-entry minimizer of the `s = 44`, `r = 35` instance.
pub fn long_delta() -> DeltaVector {
    DeltaVector::new(vec![
        1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1,
    ])
    .expect("valid fixture")
}
