//! Spectra of gcd graphs `ICG(n, D)` from Ramanujan sums, used as an
//! independent check of the energy formula.
//!
//! The eigenvalue at `j` is `sum_{d in D} c(j, n/d)`, and it depends on `j`
//! only through `gcd(j, n)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};

type FactorCache = HashMap<u64, Vec<(u64, u32)>>;

fn factor_cache() -> &'static RwLock<FactorCache> {
    static CACHE: OnceLock<RwLock<FactorCache>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Prime factorization by trial division, memoized.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    if let Some(f) = factor_cache().read().expect("cache lock").get(&n) {
        return f.clone();
    }
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    factor_cache().write().expect("cache lock").insert(n, out.clone());
    out
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn totient(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Sorted divisors of `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// `c(j, m)`, the sum of the `j`-th powers of the primitive `m`-th roots of
/// unity.
pub fn ramanujan_sum(j: u64, m: u64) -> i64 {
    assert!(m >= 1, "modulus must be positive");
    let t = m / j.gcd(&m);
    mobius(t) * (totient(m) / totient(t)) as i64
}

/// Proper divisors of `n` selecting the edges of `ICG(n, D)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorSet {
    n: u64,
    divisors: BTreeSet<u64>,
}

impl DivisorSet {
    pub fn new(n: u64, divisors: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInstance(format!("n must be at least 2, got {n}")));
        }
        let divisors: BTreeSet<u64> = divisors.into_iter().collect();
        if divisors.is_empty() {
            return Err(Error::InvalidInstance("divisor set is empty".into()));
        }
        for &d in &divisors {
            if d == 0 || !n.is_multiple_of(d) {
                return Err(Error::InvalidInstance(format!("{d} does not divide {n}")));
            }
            if d == n {
                return Err(Error::InvalidInstance(format!("{n} itself is not allowed (no loops)")));
            }
        }
        Ok(DivisorSet { n, divisors })
    }

    /// `{p^a : a in exps}` for `n = p^s`.
    pub fn from_exponents(p: u64, s: u32, exps: &[u32]) -> Result<Self> {
        let n = p.checked_pow(s).ok_or_else(|| Error::InvalidInstance(format!("{p}^{s} overflows")))?;
        DivisorSet::new(n, exps.iter().map(|&a| p.pow(a)))
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn divisors(&self) -> impl Iterator<Item = u64> + '_ {
        self.divisors.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }
}

impl fmt::Display for DivisorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.divisors.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    /// `λ_0, ..., λ_{n-1}`
    pub eigenvalues: Vec<i64>,
    pub energy: BigInt,
}

impl Spectrum {
    /// Distinct eigenvalues with multiplicities.
    pub fn multiplicities(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for &l in &self.eigenvalues {
            *out.entry(l).or_insert(0) += 1;
        }
        out
    }

    pub fn degree(&self) -> i64 {
        self.eigenvalues[0]
    }
}

pub fn icg_spectrum(ds: &DivisorSet) -> Spectrum {
    let n = ds.n;
    let mut by_gcd: HashMap<u64, i64> = HashMap::new();
    let eigenvalues: Vec<i64> = (0..n)
        .map(|j| {
            let g = j.gcd(&n);
            *by_gcd
                .entry(g)
                .or_insert_with(|| ds.divisors().map(|d| ramanujan_sum(j, n / d)).sum())
        })
        .collect();
    let energy = eigenvalues.iter().map(|l| BigInt::from(l.unsigned_abs())).sum();
    Spectrum { eigenvalues, energy }
}

pub fn energy_spectral(ds: &DivisorSet) -> BigInt {
    icg_spectrum(ds).energy
}

/// Eigenvalues of the adjacency matrix by a floating-point discrete Fourier
/// transform of its first row. Approximate; only for `n <= 64`.
pub fn approx_eigenvalues(ds: &DivisorSet) -> Result<Vec<f64>> {
    let n = ds.n;
    if n > 64 {
        return Err(Error::GuardExceeded(format!("approximate spectrum is limited to n <= 64, got {n}")));
    }
    let row: Vec<bool> = (0..n).map(|k| k != 0 && ds.divisors.contains(&k.gcd(&n))).collect();
    Ok((0..n)
        .map(|j| {
            row.iter()
                .enumerate()
                .filter(|(_, &adj)| adj)
                .map(|(k, _)| (std::f64::consts::TAU * (j as f64) * (k as f64) / n as f64).cos())
                .sum()
        })
        .collect())
}

/// Whether the exact spectrum agrees with [`approx_eigenvalues`] within `tol`.
pub fn approx_agrees(ds: &DivisorSet, tol: f64) -> Result<bool> {
    let approx = approx_eigenvalues(ds)?;
    let exact = icg_spectrum(ds).eigenvalues;
    Ok(exact.iter().zip(&approx).all(|(&e, &a)| (e as f64 - a).abs() <= tol))
}

pub const DEFAULT_DIVISOR_GUARD: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremes {
    pub e_min: BigInt,
    pub min_sets: Vec<DivisorSet>,
    pub e_max: BigInt,
    pub max_sets: Vec<DivisorSet>,
    pub subsets_examined: u64,
}

/// Smallest and largest energy over all nonempty sets of proper divisors of
/// `n`, with every set attaining them. Refuses when `n` has more than
/// `guard` proper divisors.
pub fn extremal_energies(n: u64, guard: usize) -> Result<Extremes> {
    if n < 2 {
        return Err(Error::InvalidInstance(format!("n must be at least 2, got {n}")));
    }
    let proper: Vec<u64> = divisors(n).into_iter().filter(|&d| d < n).collect();
    if proper.len() > guard {
        return Err(Error::GuardExceeded(format!(
            "{n} has {} proper divisors, more than the limit {guard}",
            proper.len()
        )));
    }
    let mut best: Option<Extremes> = None;
    for mask in 1u64..(1 << proper.len()) {
        let ds = DivisorSet::new(n, (0..proper.len()).filter(|i| mask >> i & 1 == 1).map(|i| proper[i]))?;
        let e = energy_spectral(&ds);
        let ext = best.get_or_insert_with(|| Extremes {
            e_min: e.clone(),
            min_sets: Vec::new(),
            e_max: e.clone(),
            max_sets: Vec::new(),
            subsets_examined: 0,
        });
        ext.subsets_examined += 1;
        if e < ext.e_min {
            ext.e_min = e.clone();
            ext.min_sets.clear();
        }
        if e == ext.e_min {
            ext.min_sets.push(ds.clone());
        }
        if e > ext.e_max {
            ext.e_max = e.clone();
            ext.max_sets.clear();
        }
        if e == ext.e_max {
            ext.max_sets.push(ds);
        }
    }
    let mut ext = best.expect("n >= 2 has the divisor 1");
    ext.min_sets.sort();
    ext.max_sets.sort();
    Ok(ext)
}

#[cfg(test)]
mod tests {
    use super::*;

    // direct sum of cos(2 pi j k / m) over k coprime to m
    fn ramanujan_direct(j: u64, m: u64) -> i64 {
        let s: f64 = (1..=m)
            .filter(|k| k.gcd(&m) == 1)
            .map(|k| (std::f64::consts::TAU * (j * k) as f64 / m as f64).cos())
            .sum();
        s.round() as i64
    }

    #[test]
    fn number_theory() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(totient(9), 6);
        assert_eq!(totient(1), 1);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn ramanujan_sums() {
        assert_eq!(ramanujan_sum(0, 9), 6);
        assert_eq!(ramanujan_sum(1, 9), 0);
        assert_eq!(ramanujan_sum(2, 4), -2);
        for m in 1..=40 {
            for j in 0..=2 * m {
                assert_eq!(ramanujan_sum(j, m), ramanujan_direct(j, m), "c({j},{m})");
            }
        }
    }

    #[test]
    fn small_spectra() {
        let s = icg_spectrum(&DivisorSet::new(3, [1]).unwrap());
        assert_eq!(s.eigenvalues, vec![2, -1, -1]);
        assert_eq!(s.energy, BigInt::from(4));
        let s = icg_spectrum(&DivisorSet::new(4, [1]).unwrap());
        assert_eq!(s.eigenvalues, vec![2, 0, -2, 0]);
        let s = icg_spectrum(&DivisorSet::new(9, [1, 3]).unwrap());
        assert_eq!(s.multiplicities(), BTreeMap::from([(-1, 8), (8, 1)]));
        assert_eq!(s.energy, BigInt::from(16));
        assert_eq!(energy_spectral(&DivisorSet::new(27, [1, 3, 9]).unwrap()), BigInt::from(52));
    }

    #[test]
    fn spectrum_invariants() {
        for n in 2..=200u64 {
            let proper: Vec<u64> = divisors(n).into_iter().filter(|&d| d < n).collect();
            for mask in 1u64..(1 << proper.len()).min(64) {
                let ds = DivisorSet::new(n, (0..proper.len()).filter(|i| mask >> i & 1 == 1).map(|i| proper[i])).unwrap();
                let s = icg_spectrum(&ds);
                assert_eq!(s.eigenvalues.iter().sum::<i64>(), 0, "{n} {ds}");
                let degree: u64 = ds.divisors().map(|d| totient(n / d)).sum();
                assert_eq!(s.degree(), degree as i64);
                if n <= 64 {
                    assert!(approx_agrees(&ds, 1e-6).unwrap(), "{n} {ds}");
                }
            }
        }
    }

    #[test]
    fn validation() {
        assert!(DivisorSet::new(12, [5]).is_err());
        assert!(DivisorSet::new(12, [12]).is_err());
        assert!(DivisorSet::new(12, []).is_err());
        assert!(DivisorSet::new(1, [1]).is_err());
        assert!(approx_eigenvalues(&DivisorSet::new(81, [1]).unwrap()).is_err());
    }

    #[test]
    fn extremes() {
        let ext = extremal_energies(9, DEFAULT_DIVISOR_GUARD).unwrap();
        assert_eq!(ext.min_sets, vec![DivisorSet::new(9, [1]).unwrap(), DivisorSet::new(9, [3]).unwrap()]);
        let ext = extremal_energies(4, DEFAULT_DIVISOR_GUARD).unwrap();
        assert_eq!(ext.subsets_examined, 3);
        let ext = extremal_energies(7, DEFAULT_DIVISOR_GUARD).unwrap();
        assert_eq!((ext.e_min.clone(), ext.e_max.clone()), (BigInt::from(12), BigInt::from(12)));
        assert!(matches!(extremal_energies(720720, DEFAULT_DIVISOR_GUARD), Err(Error::GuardExceeded(_))));
    }
}
