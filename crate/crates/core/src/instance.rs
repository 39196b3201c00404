use std::fmt;

use crate::error::{Error, Result};

/// A prime number, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The parameters `(p, s, r)`: graphs on `n = p^s` vertices with `r` divisors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProblemInstance {
    p: Prime,
    s: u32,
    r: u32,
}

impl ProblemInstance {
    pub fn new(p: u64, s: u32, r: u32) -> Result<Self> {
        let p = Prime::new(p)?;
        if s < 2 {
            return Err(Error::InvalidInstance(format!("s = {s} must be at least 2")));
        }
        if r < 2 || r > s {
            return Err(Error::InvalidInstance(format!(
                "r = {r} must satisfy 2 <= r <= s = {s}"
            )));
        }
        Ok(ProblemInstance { p, s, r })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn p(&self) -> u64 {
        self.p.get()
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Length of the delta vectors, `r - 1`.
    pub fn delta_len(&self) -> usize {
        (self.r - 1) as usize
    }

    /// Sum of every delta vector, `s - 1`.
    pub fn delta_sum(&self) -> u32 {
        self.s - 1
    }

    /// Checks `p >= 3` and `3 <= r < s`, the standing hypotheses of the
    /// structural minimizer results.
    pub fn require_theorem_hypotheses(&self) -> Result<()> {
        if self.p() < 3 {
            return Err(Error::OutsideHypotheses(format!("p = {} but p >= 3 is required", self.p())));
        }
        if self.r < 3 || self.r >= self.s {
            return Err(Error::OutsideHypotheses(format!(
                "need 3 <= r < s, got r = {}, s = {}",
                self.r, self.s
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ProblemInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} s={} r={}", self.p, self.s, self.r)
    }
}

/// A strictly increasing tuple of non-negative exponents `(a_1, ..., a_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentTuple(Vec<u32>);

impl ExponentTuple {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidTuple("tuple is empty".into()));
        }
        if let Some(w) = entries.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidTuple(format!(
                "entries must be strictly increasing, found {} followed by {}",
                w[0], w[1]
            )));
        }
        Ok(ExponentTuple(entries))
    }

    /// Builds a tuple and checks that it lies in `A(s, r)` for `s`.
    pub fn admissible(entries: Vec<u32>, s: u32) -> Result<Self> {
        let t = Self::new(entries)?;
        t.check_admissible(s)?;
        Ok(t)
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

    pub fn first(&self) -> u32 {
        self.0[0]
    }

    pub fn last(&self) -> u32 {
        *self.0.last().expect("tuple is non-empty")
    }

    pub fn is_admissible(&self, s: u32) -> bool {
        s >= 1 && self.first() == 0 && self.last() == s - 1
    }

    pub fn check_admissible(&self, s: u32) -> Result<()> {
        if self.is_admissible(s) {
            Ok(())
        } else {
            Err(Error::NotAdmissible {
                tuple: self.0.clone(),
                s,
            })
        }
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

pub(crate) fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[u32]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}
