//! Exact values of the form `N / p^e` and decimal rendering of rationals.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// An exact rational `numerator / prime^denom_exp`, kept normalized so that
/// `prime` does not divide the numerator (and `denom_exp == 0` for zero).
#[derive(Debug, Clone, Eq)]
pub struct PAdicRational {
    numerator: BigInt,
    prime: u64,
    denom_exp: u32,
}

impl PAdicRational {
    pub fn new(numerator: BigInt, prime: u64, denom_exp: u32) -> Self {
        let mut value = PAdicRational {
            numerator,
            prime,
            denom_exp,
        };
        value.normalize();
        value
    }

    pub fn zero(prime: u64) -> Self {
        PAdicRational {
            numerator: BigInt::zero(),
            prime,
            denom_exp: 0,
        }
    }

    /// Builds `scaled / prime^exp` from a non-negative scaled integer.
    pub fn from_scaled(scaled: BigUint, prime: u64, exp: u32) -> Self {
        Self::new(BigInt::from_biguint(Sign::Plus, scaled), prime, exp)
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.denom_exp = 0;
            return;
        }
        let p = BigInt::from(self.prime);
        while self.denom_exp > 0 {
            let (q, r) = self.numerator.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            self.numerator = q;
            self.denom_exp -= 1;
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn denom_exp(&self) -> u32 {
        self.denom_exp
    }

    pub fn denominator(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.prime), self.denom_exp as usize)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.numerator.clone(), self.denominator())
    }

    /// `self * prime^k` as an integer, if it is one.
    pub fn scaled_integer(&self, k: u32) -> Option<BigInt> {
        if k < self.denom_exp {
            return None;
        }
        Some(&self.numerator * num_traits::pow(BigInt::from(self.prime), (k - self.denom_exp) as usize))
    }

    /// Exact comparison against a general rational by cross-multiplication.
    pub fn cmp_rational(&self, other: &BigRational) -> Ordering {
        let lhs = &self.numerator * other.denom();
        let rhs = other.numer() * self.denominator();
        // BigRational keeps a positive denominator.
        lhs.cmp(&rhs)
    }

    pub fn to_decimal(&self, digits: u32) -> String {
        to_decimal(&self.to_rational(), digits)
    }
}

impl PartialEq for PAdicRational {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl Hash for PAdicRational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.numerator.hash(state);
        self.denom_exp.hash(state);
        if self.denom_exp > 0 {
            self.prime.hash(state);
        }
    }
}

impl PartialOrd for PAdicRational {
    /// Values over different primes are only compared when both are integers
    /// (the only case where the representations can coincide).
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.prime == other.prime {
            let e = self.denom_exp.max(other.denom_exp);
            let lhs = self.scaled_integer(e)?;
            let rhs = other.scaled_integer(e)?;
            return Some(lhs.cmp(&rhs));
        }
        Some(self.to_rational().cmp(&other.to_rational()))
    }
}

impl fmt::Display for PAdicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom_exp == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}^{}", self.numerator, self.prime, self.denom_exp)
        }
    }
}

/// Renders `x` with exactly `digits` fractional digits, rounding half to even.
pub fn to_decimal(x: &BigRational, digits: u32) -> String {
    let negative = x.is_negative();
    let abs = x.abs();
    let scale = num_traits::pow(BigInt::from(10u32), digits as usize);
    let scaled = abs.numer() * &scale;
    let den = abs.denom();
    let (mut q, r) = scaled.div_rem(den);
    let twice = &r * 2u32;
    match twice.cmp(den) {
        Ordering::Greater => q += 1u32,
        Ordering::Equal if q.is_odd() => q += 1u32,
        _ => {}
    }
    let mut digits_str = q.to_str_radix(10);
    let width = digits as usize + 1;
    if digits_str.len() < width {
        digits_str = format!("{}{}", "0".repeat(width - digits_str.len()), digits_str);
    }
    let split = digits_str.len() - digits as usize;
    let mut out = String::new();
    if negative && !q.is_zero() {
        out.push('-');
    }
    out.push_str(&digits_str[..split]);
    if digits > 0 {
        out.push('.');
        out.push_str(&digits_str[split..]);
    }
    out
}

/// `base^exp` as a `BigRational`.
pub(crate) fn rational_pow(base: u64, exp: u32) -> BigRational {
    BigRational::from_integer(num_traits::pow(BigInt::from(base), exp as usize))
}
