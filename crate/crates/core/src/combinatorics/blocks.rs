use num_rational::Ratio;

use super::{membership, DeltaVector, StructureFilter};
use crate::error::{Error, Result};

/// A maximal run of equal entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Run {
    pub value: u32,
    pub len: u32,
}

/// Run-length encoding of an arbitrary vector.
pub fn runs(v: &[u32]) -> Vec<Run> {
    let mut out: Vec<Run> = Vec::new();
    for &x in v {
        match out.last_mut() {
            Some(run) if run.value == x => run.len += 1,
            _ => out.push(Run { value: x, len: 1 }),
        }
    }
    out
}

/// Alternating `[q]`/`[q+1]` block structure of a bivalent `[q]`-framed
/// delta vector: block lengths `t_1, ..., t_{2w+1}` (odd positions are
/// `[q]`-blocks), their prefix sums `T_l`, and the spread statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub runs: Vec<Run>,
    pub prefix_sums: Vec<u32>,
    /// number of `[q+1]`-blocks
    pub w: u32,
    pub eta_max: u32,
    pub eta_min: u32,
    pub theta_max: Option<u32>,
    pub theta_min: Option<u32>,
    /// average `[q]`-block length `(r-g-1)/(w+1)`
    pub short_mean: Ratio<u32>,
    /// average `[q+1]`-block length `g/w`
    pub long_mean: Option<Ratio<u32>>,
}

impl BlockDecomposition {
    pub fn new(d: &DeltaVector) -> Result<Self> {
        if !membership(d, StructureFilter::BivStar) {
            return Err(Error::Undefined(format!(
                "block decomposition needs a bivalent [q]-framed vector, got {d}"
            )));
        }
        let runs = runs(d.entries());
        let prefix_sums = runs
            .iter()
            .scan(0, |acc, run| {
                *acc += run.len;
                Some(*acc)
            })
            .collect();
        let short: Vec<u32> = runs.iter().step_by(2).map(|r| r.len).collect();
        let long: Vec<u32> = runs.iter().skip(1).step_by(2).map(|r| r.len).collect();
        let w = long.len() as u32;
        let g: u32 = long.iter().sum();
        let shorts: u32 = short.iter().sum();
        Ok(BlockDecomposition {
            eta_max: *short.iter().max().expect("framed vector starts with a [q]-block"),
            eta_min: *short.iter().min().expect("framed vector starts with a [q]-block"),
            theta_max: long.iter().max().copied(),
            theta_min: long.iter().min().copied(),
            short_mean: Ratio::new(shorts, w + 1),
            long_mean: (w > 0).then(|| Ratio::new(g, w)),
            runs,
            prefix_sums,
            w,
        })
    }

    /// Lengths `t_1, t_3, ..., t_{2w+1}` of the `[q]`-blocks.
    pub fn short_blocks(&self) -> Vec<u32> {
        self.runs.iter().step_by(2).map(|r| r.len).collect()
    }

    /// Lengths `t_2, t_4, ..., t_{2w}` of the `[q+1]`-blocks.
    pub fn long_blocks(&self) -> Vec<u32> {
        self.runs.iter().skip(1).step_by(2).map(|r| r.len).collect()
    }

    /// `eta_max - eta_min`
    pub fn eta(&self) -> u32 {
        self.eta_max - self.eta_min
    }

    /// `theta_max - theta_min`, when there is a `[q+1]`-block.
    pub fn theta(&self) -> Option<u32> {
        Some(self.theta_max? - self.theta_min?)
    }

    pub fn reconstruct(&self) -> Vec<u32> {
        self.runs
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value, r.len as usize))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[u32]) -> DeltaVector {
        DeltaVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn run_length_encoding() {
        assert_eq!(runs(&[]), vec![]);
        assert_eq!(
            runs(&[1, 2, 2, 1, 2, 1]),
            vec![
                Run { value: 1, len: 1 },
                Run { value: 2, len: 2 },
                Run { value: 1, len: 1 },
                Run { value: 2, len: 1 },
                Run { value: 1, len: 1 },
            ]
        );
    }

    #[test]
    fn decomposition_small() {
        let b = BlockDecomposition::new(&dv(&[1, 2, 2, 1, 2, 1])).unwrap();
        assert_eq!(b.w, 2);
        assert_eq!(b.short_blocks(), vec![1, 1, 1]);
        assert_eq!(b.long_blocks(), vec![2, 1]);
        assert_eq!(b.prefix_sums, vec![1, 3, 4, 5, 6]);
        assert_eq!(b.reconstruct(), vec![1, 2, 2, 1, 2, 1]);
    }

    #[test]
    fn decomposition_of_minimizer_example() {
        let d = dv(&[1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 2, 1, 1, 2, 1, 1]);
        let b = BlockDecomposition::new(&d).unwrap();
        assert_eq!(b.short_blocks(), vec![2, 2, 2, 1, 2, 2]);
        assert_eq!((b.eta_max, b.eta_min), (2, 1));
        assert_eq!((b.theta_max, b.theta_min), (Some(1), Some(1)));
        assert_eq!(b.w, 5);
        assert_eq!(*b.prefix_sums.last().unwrap(), 16);
    }

    #[test]
    fn decomposition_of_second_degree_example() {
        let d = dv(&[1, 2, 1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 1]);
        let b = BlockDecomposition::new(&d).unwrap();
        assert_eq!(b.short_blocks(), vec![1, 2, 2, 2, 2, 2]);
        assert_eq!(b.short_blocks().iter().sum::<u32>(), 11);
        assert_eq!(b.long_blocks().iter().sum::<u32>(), 5);
    }

    #[test]
    fn rejects_unframed() {
        assert!(BlockDecomposition::new(&dv(&[2, 1, 1])).is_err());
        assert!(BlockDecomposition::new(&dv(&[1, 3, 1])).is_err());
    }

    #[test]
    fn constant_vector() {
        let b = BlockDecomposition::new(&dv(&[3, 3, 3])).unwrap();
        assert_eq!(b.w, 0);
        assert_eq!(b.theta(), None);
        assert_eq!(b.eta(), 0);
    }
}
