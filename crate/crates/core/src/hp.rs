//! Evaluation of `h_p(a) = sum_{k<i} p^-(a_i - a_k)`, the energy formula for
//! prime-power orders, the reverse-complement symmetry and the closed-form
//! minima for the two divisible cases.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rational_pow, PAdicRational};
use crate::instance::{ExponentTuple, Prime, ProblemInstance};

/// `h_p(a)` as an exact value with denominator dividing `p^(a_r - a_1)`.
pub fn hp_eval(p: Prime, a: &ExponentTuple) -> PAdicRational {
    let span = a.last() - a.first();
    let numerator = hp_scaled_big(p.get(), a.entries(), a.last());
    PAdicRational::from_scaled(numerator, p.get(), span)
}

/// `p^(top - a_1) * h_p(a)` computed with prefix sums of powers:
/// the pairs ending at `a_i` contribute `p^(top - a_i) * sum_{k<i} p^(a_k - a_1)`.
pub(crate) fn hp_scaled_big(p: u64, a: &[u32], top: u32) -> BigUint {
    let base = a[0];
    let pb = BigUint::from(p);
    let pow = |e: u32| num_traits::pow(pb.clone(), e as usize);
    let mut prefix = BigUint::zero();
    let mut total = BigUint::zero();
    for (i, &x) in a.iter().enumerate() {
        if i > 0 {
            total += &prefix * pow(top - x);
        }
        prefix += pow(x - base);
    }
    total
}

/// Maps `(a_1, ..., a_r)` to `(s-1-a_r, ..., s-1-a_1)`; `h_p` is invariant
/// under this map on admissible tuples.
pub fn reverse_complement(a: &ExponentTuple, s: u32) -> Result<ExponentTuple> {
    a.check_admissible(s)?;
    let top = s - 1;
    let entries = a.entries().iter().rev().map(|&x| top - x).collect();
    ExponentTuple::new(entries)
}

/// Energy `2(p-1)p^(s-1)(r - (p-1) h)` of the gcd graph on `p^s` vertices
/// whose divisor set has `r` elements and `h_p` value `hp`.
pub fn energy_from_hp(p: Prime, s: u32, r: usize, hp: &PAdicRational) -> Result<BigInt> {
    if s == 0 || hp.denom_exp() > s - 1 {
        return Err(Error::InconsistentValue {
            denom_exp: hp.denom_exp(),
            max: s.saturating_sub(1),
        });
    }
    let p_big = BigInt::from(p.get());
    let pm1 = BigInt::from(p.get() - 1);
    let scale = num_traits::pow(p_big, (s - 1) as usize);
    let scaled_hp = hp
        .scaled_integer(s - 1)
        .expect("denominator checked against p^(s-1)");
    let inner = BigInt::from(r) * &scale - &pm1 * scaled_hp;
    Ok(BigInt::from(2u32) * pm1 * inner)
}

/// [`energy_from_hp`] for an instance's `p`, `s` and `r`.
pub fn instance_energy(inst: &ProblemInstance, hp: &PAdicRational) -> Result<BigInt> {
    energy_from_hp(inst.prime(), inst.s(), inst.r() as usize, hp)
}

// The formulas also hold for r = s, where A(s, s) is a single tuple.
fn require_closed_form_hypotheses(inst: &ProblemInstance) -> Result<()> {
    if inst.p() < 3 || inst.r() < 3 {
        return Err(Error::OutsideHypotheses(format!(
            "closed forms need p >= 3 and r >= 3, got p = {}, r = {}",
            inst.p(),
            inst.r()
        )));
    }
    Ok(())
}

/// Closed-form minimum of `h_p` over `A(s, r)` when `(r-1) | (s-1)`.
pub fn min_hp_closed_form_div(inst: &ProblemInstance) -> Result<BigRational> {
    require_closed_form_hypotheses(inst)?;
    let (s1, r1) = (inst.s() - 1, inst.r() - 1);
    if s1 % r1 != 0 {
        return Err(Error::OutsideHypotheses(format!("(r-1) = {r1} does not divide (s-1) = {s1}")));
    }
    let q = s1 / r1;
    let p = inst.p();
    let one = BigRational::one();
    let big_p = rational_pow(p, q) - &one;
    let tail = &one - rational_pow(p, q * r1).recip();
    let r1 = BigRational::from_integer(BigInt::from(r1));
    Ok((r1 - tail / &big_p) / big_p)
}

/// Closed-form minimum of `h_p` over `A(s, r)` when `(r-1) | s`.
pub fn min_hp_closed_form_divs(inst: &ProblemInstance) -> Result<BigRational> {
    require_closed_form_hypotheses(inst)?;
    let (s, r1) = (inst.s(), inst.r() - 1);
    if s % r1 != 0 || (s - 1) % r1 == 0 {
        return Err(Error::OutsideHypotheses(format!(
            "need (r-1) = {r1} to divide s = {s} but not s-1"
        )));
    }
    let c = (s - 1).div_ceil(r1);
    let p = inst.p();
    let one = BigRational::one();
    let big_p = rational_pow(p, c) - &one;
    let tail = &one - rational_pow(p, c * r1).recip();
    let factor = BigRational::from_integer(BigInt::from(p - 1)) - big_p.recip();
    let r1 = BigRational::from_integer(BigInt::from(r1));
    Ok((r1 + factor * tail) / big_p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::to_decimal;

    fn p3() -> Prime {
        Prime::new(3).unwrap()
    }

    fn tuple(v: &[u32]) -> ExponentTuple {
        ExponentTuple::new(v.to_vec()).unwrap()
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    // Schoolbook double loop over pairs, independent of the prefix-sum path.
    fn naive(p: u64, a: &[u32]) -> BigRational {
        let mut acc = BigRational::zero();
        for k in 0..a.len() {
            for i in k + 1..a.len() {
                acc += rational_pow(p, a[i] - a[k]).recip();
            }
        }
        acc
    }

    #[test]
    fn small_values() {
        assert_eq!(hp_eval(p3(), &tuple(&[0])).to_rational(), BigRational::zero());
        assert_eq!(hp_eval(p3(), &tuple(&[0, 2])).to_rational(), ratio(1, 9));
        let v = hp_eval(p3(), &tuple(&[0, 1, 2]));
        assert_eq!(v.to_rational(), ratio(7, 9));
        assert_eq!(v.denom_exp(), 2);
        assert_eq!(naive(3, &[0, 1, 2]), ratio(7, 9));
    }

    #[test]
    fn agrees_with_naive_on_unshifted_tuples() {
        for a in [vec![2, 3, 7], vec![1, 4, 5, 9, 10], vec![5], vec![0, 1, 3, 6, 10, 15]] {
            for p in [2u64, 3, 5, 7] {
                let got = hp_eval(Prime::new(p).unwrap(), &tuple(&a));
                assert_eq!(got.to_rational(), naive(p, &a), "p={p} a={a:?}");
                assert!(got.denom_exp() <= a.last().unwrap() - a[0]);
            }
        }
    }

    #[test]
    fn reverse_complement_examples() {
        assert_eq!(reverse_complement(&tuple(&[0, 1, 3]), 4).unwrap(), tuple(&[0, 2, 3]));
        assert_eq!(reverse_complement(&tuple(&[0, 1, 2]), 3).unwrap(), tuple(&[0, 1, 2]));
        assert!(reverse_complement(&tuple(&[0, 1, 2]), 4).is_err());
    }

    #[test]
    fn energies() {
        let p = p3();
        assert_eq!(energy_from_hp(p, 1, 1, &PAdicRational::zero(3)).unwrap(), BigInt::from(4));
        let h = hp_eval(p, &tuple(&[0, 1]));
        assert_eq!(energy_from_hp(p, 2, 2, &h).unwrap(), BigInt::from(16));
        let h = hp_eval(p, &tuple(&[0, 1, 2]));
        assert_eq!(energy_from_hp(p, 3, 3, &h).unwrap(), BigInt::from(52));
        // h = 1/9 needs p^(s-1) >= 9.
        let h = hp_eval(p, &tuple(&[0, 2]));
        assert!(energy_from_hp(p, 2, 2, &h).is_err());
    }

    #[test]
    fn closed_form_div() {
        let inst = ProblemInstance::new(3, 3, 3).unwrap();
        assert_eq!(min_hp_closed_form_div(&inst).unwrap(), ratio(7, 9));
        let inst = ProblemInstance::new(5, 4, 4).unwrap();
        let expected = naive(5, &[0, 1, 2, 3]);
        assert_eq!(min_hp_closed_form_div(&inst).unwrap(), expected);
        let inst = ProblemInstance::new(3, 4, 3).unwrap();
        assert!(min_hp_closed_form_div(&inst).is_err());
        let inst = ProblemInstance::new(2, 5, 3).unwrap();
        assert!(min_hp_closed_form_div(&inst).is_err());
    }

    #[test]
    fn closed_form_divs() {
        let inst = ProblemInstance::new(3, 4, 3).unwrap();
        let v = min_hp_closed_form_divs(&inst).unwrap();
        assert_eq!(v, ratio(13, 27));
        assert_eq!(v, naive(3, &[0, 1, 3]));
        assert_eq!(to_decimal(&v, 5), "0.48148");
        let inst = ProblemInstance::new(5, 4, 3).unwrap();
        let v = min_hp_closed_form_divs(&inst).unwrap();
        assert_eq!(v, naive(5, &[0, 1, 3]));
        assert_eq!(v, naive(5, &[0, 2, 3]));
        let inst = ProblemInstance::new(3, 5, 3).unwrap();
        assert!(min_hp_closed_form_divs(&inst).is_err());
    }
}
