//! Delta vectors of admissible tuples and the structural predicates used to
//! narrow the search for minimizers: bivalence, framing, separability, block
//! decompositions and the explicit minimizer shapes.

mod blocks;
mod enumerate;
mod minimizers;
mod params;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::instance::{write_tuple, ExponentTuple, ProblemInstance};

pub use blocks::{runs, BlockDecomposition, Run};
pub use enumerate::{count_delta, enumerate_delta, enumerate_delta_from, DeltaIter};
pub(crate) use enumerate::Shape;

pub use minimizers::{predicted_minimizers, MinimizerPredicate, PredictedMinimizers};
pub use params::{Majority, StructureParams, TheoremCase};

/// Consecutive differences `(d_1, ..., d_{r-1})` of an admissible tuple. The
/// vector determines its own instance: `s = 1 + sum`, `r = len + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaVector(Vec<u32>);

impl DeltaVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidDelta("delta vector is empty".into()));
        }
        if let Some(pos) = entries.iter().position(|&x| x == 0) {
            return Err(Error::InvalidDelta(format!("entry {} is zero; entries must be positive", pos + 1)));
        }
        Ok(DeltaVector(entries))
    }

    /// Builds a vector and checks membership in `D(s, r)`.
    pub fn for_instance(entries: Vec<u32>, inst: &ProblemInstance) -> Result<Self> {
        let d = Self::new(entries)?;
        if d.len() != inst.delta_len() {
            return Err(Error::InvalidDelta(format!(
                "length {} differs from r-1 = {}",
                d.len(),
                inst.delta_len()
            )));
        }
        if d.sum() != inst.delta_sum() {
            return Err(Error::InvalidDelta(format!(
                "entries sum to {} but must sum to s-1 = {}",
                d.sum(),
                inst.delta_sum()
            )));
        }
        Ok(d)
    }

    pub(crate) fn from_raw(entries: Vec<u32>) -> Self {
        debug_assert!(!entries.is_empty() && entries.iter().all(|&x| x > 0));
        DeltaVector(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn s(&self) -> u32 {
        self.sum() + 1
    }

    pub fn r(&self) -> u32 {
        self.0.len() as u32 + 1
    }

    pub fn reversed(&self) -> DeltaVector {
        DeltaVector(self.0.iter().rev().copied().collect())
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl fmt::Display for DeltaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// `a -> (a_2 - a_1, ..., a_r - a_{r-1})` on admissible tuples.
pub fn delta(a: &ExponentTuple, s: u32) -> Result<DeltaVector> {
    a.check_admissible(s)?;
    if a.len() < 2 {
        return Err(Error::InvalidTuple("need at least two exponents".into()));
    }
    Ok(DeltaVector(a.entries().windows(2).map(|w| w[1] - w[0]).collect()))
}

/// Prefix sums `(0, d_1, d_1 + d_2, ..., s - 1)`.
pub fn delta_inv(d: &DeltaVector) -> ExponentTuple {
    let mut acc = 0;
    let mut out = Vec::with_capacity(d.len() + 1);
    out.push(0);
    for &x in d.entries() {
        acc += x;
        out.push(acc);
    }
    ExponentTuple::new(out).expect("prefix sums of positive entries are increasing")
}

pub fn range_of(v: &[u32]) -> u32 {
    let max = v.iter().max().copied().unwrap_or(0);
    let min = v.iter().min().copied().unwrap_or(0);
    max - min
}

/// Entries take only the values `m` and `m + 1` for some `m`.
pub fn is_bivalent(v: &[u32]) -> bool {
    range_of(v) <= 1
}

/// First and last entry agree (and equal `x` when given). A single entry is
/// its own first and last entry, so length-1 vectors are framed.
pub fn is_framed(v: &[u32], x: Option<u32>) -> bool {
    match (v.first(), v.last()) {
        (Some(a), Some(b)) => a == b && x.is_none_or(|x| *a == x),
        _ => false,
    }
}

pub(crate) fn has_adjacent(v: &[u32], value: u32) -> bool {
    v.windows(2).any(|w| w[0] == value && w[1] == value)
}

/// A bivalent vector with both values present is separable when one of the
/// values never occurs twice in a row.
pub fn is_separable(v: &[u32]) -> Result<bool> {
    if !is_bivalent(v) {
        return Err(Error::Undefined(format!("separability needs a bivalent vector, range is {}", range_of(v))));
    }
    let m = *v.iter().min().ok_or_else(|| Error::Undefined("empty vector".into()))?;
    if v.iter().all(|&x| x == m) {
        return Err(Error::Undefined("separability needs both values present".into()));
    }
    Ok(!has_adjacent(v, m) || !has_adjacent(v, m + 1))
}

/// The nested candidate sets `SepStar ⊆ BivStar ⊆ Biv ⊆ All = D(s, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureFilter {
    /// every delta vector
    All,
    /// range at most one
    Biv,
    /// bivalent and framed by `[q]`
    BivStar,
    /// `BivStar` with the minority value isolated
    SepStar,
}

impl StructureFilter {
    pub const ALL: [StructureFilter; 4] = [Self::All, Self::Biv, Self::BivStar, Self::SepStar];

    pub fn name(self) -> &'static str {
        match self {
            Self::All => "all",
            Self::Biv => "biv",
            Self::BivStar => "bivstar",
            Self::SepStar => "sepstar",
        }
    }
}

impl fmt::Display for StructureFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Self::All),
            "biv" => Ok(Self::Biv),
            "bivstar" => Ok(Self::BivStar),
            "sepstar" => Ok(Self::SepStar),
            other => Err(Error::InvalidInstance(format!("unknown filter {other:?}"))),
        }
    }
}

/// `floor((s-1)/(r-1))` and `g = (s-1) mod (r-1)` for the vector's own instance.
fn floor_and_residue(d: &DeltaVector) -> (u32, u32) {
    let n = d.len() as u32;
    let total = d.sum();
    (total / n, total % n)
}

/// Membership of `d` in the filtered subset of `D(s, r)` with `s, r` taken
/// from `d` itself.
pub fn membership(d: &DeltaVector, set: StructureFilter) -> bool {
    let v = d.entries();
    let (fq, g) = floor_and_residue(d);
    let r1 = v.len() as u32;
    match set {
        StructureFilter::All => true,
        StructureFilter::Biv => is_bivalent(v),
        StructureFilter::BivStar => is_bivalent(v) && is_framed(v, Some(fq)),
        StructureFilter::SepStar => {
            if !membership(d, StructureFilter::BivStar) {
                return false;
            }
            if 2 * g >= r1 {
                !has_adjacent(v, fq)
            } else {
                !has_adjacent(v, fq + 1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[u32]) -> DeltaVector {
        DeltaVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn delta_examples() {
        let a = ExponentTuple::new(vec![0, 1, 3, 6]).unwrap();
        assert_eq!(delta(&a, 7).unwrap(), dv(&[1, 2, 3]));
        let a = ExponentTuple::new(vec![0, 1, 2]).unwrap();
        assert_eq!(delta(&a, 3).unwrap(), dv(&[1, 1]));
        assert!(delta(&a, 4).is_err());
        assert_eq!(delta_inv(&dv(&[1, 2, 3])).entries(), &[0, 1, 3, 6]);
        assert_eq!(delta_inv(&dv(&[2, 2, 2])).entries(), &[0, 2, 4, 6]);
        assert_eq!(
            delta_inv(&dv(&[3, 2, 3, 2, 2, 3, 2, 3, 2, 3])).entries(),
            &[0, 3, 5, 8, 10, 12, 15, 17, 20, 22, 25]
        );
    }

    #[test]
    fn long_example_delta() {
        // (0,1,2,3,5,6,7,9,...,43): the printed delta vector rebuilt and re-differenced.
        let d = dv(&[
            1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1,
        ]);
        let a = delta_inv(&d);
        assert_eq!(&a.entries()[..8], &[0, 1, 2, 3, 5, 6, 7, 9]);
        assert_eq!(&a.entries()[a.len() - 4..], &[40, 41, 42, 43]);
        assert_eq!(delta(&a, 44).unwrap(), d);
    }

    #[test]
    fn rejects_bad_vectors() {
        assert!(DeltaVector::new(vec![]).is_err());
        assert!(DeltaVector::new(vec![1, 0]).is_err());
        let inst = ProblemInstance::new(3, 5, 3).unwrap();
        assert!(DeltaVector::for_instance(vec![1, 1], &inst).is_err());
        assert!(DeltaVector::for_instance(vec![1, 1, 2], &inst).is_err());
        assert!(DeltaVector::for_instance(vec![2, 2], &inst).is_ok());
    }

    #[test]
    fn predicates() {
        assert_eq!(range_of(&[1, 1, 1]), 0);
        assert!(is_bivalent(&[1, 1, 1]));
        assert_eq!(range_of(&[1, 2, 1, 2]), 1);
        let a2 = [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 6];
        assert_eq!(range_of(&a2), 5);
        assert!(!is_bivalent(&a2));

        assert!(is_framed(&[1, 2, 1], Some(1)));
        assert!(!is_framed(&[1, 2, 1], Some(2)));
        assert!(!is_framed(&[2, 1, 1], None));
        assert!(is_framed(&[1, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], Some(1)));
        assert!(is_framed(&[4], None));

        assert!(is_separable(&[1, 2, 1, 2, 1]).unwrap());
        assert!(is_separable(&[1, 1, 2, 1, 1]).unwrap());
        assert!(!is_separable(&[1, 1, 2, 2, 1]).unwrap());
        assert!(is_separable(&[1, 3, 1]).is_err());
        assert!(is_separable(&[2, 2]).is_err());
    }

    #[test]
    fn membership_examples() {
        let a4 = dv(&[1, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
        assert!(membership(&a4, StructureFilter::BivStar));
        assert!(!membership(&a4, StructureFilter::SepStar));
        let a5 = dv(&[1, 2, 1, 2, 1, 2, 1, 1, 1, 1, 1, 1, 2, 1, 2, 1]);
        assert!(membership(&a5, StructureFilter::SepStar));
        let shifted = dv(&[3, 2, 3, 2, 2, 3, 2, 3, 2, 3]);
        assert_eq!(shifted.s(), 26);
        assert_eq!(shifted.r(), 11);
        assert!(membership(&shifted, StructureFilter::Biv));
        assert!(!membership(&shifted, StructureFilter::BivStar));
        let a3 = dv(&[2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2]);
        assert!(membership(&a3, StructureFilter::Biv));
        assert!(!membership(&a3, StructureFilter::BivStar));
    }

    #[test]
    fn filter_names_round_trip() {
        for f in StructureFilter::ALL {
            assert_eq!(f.name().parse::<StructureFilter>().unwrap(), f);
        }
        assert!("bogus".parse::<StructureFilter>().is_err());
    }
}
