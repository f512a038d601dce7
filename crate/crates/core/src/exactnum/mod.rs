//! Exact integers and rationals, factorization, multiplicative order and
//! primitive prime divisors.
//!
//! Nothing in this module touches floating point except [`approx_f64`], which
//! only feeds human-readable output.

mod factor;
mod mont;
mod order;
mod prime;
mod zsigmondy;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serializer;

pub use factor::{factorize, factorize_u64, Factorization};
pub use order::{mult_order, mult_order_u64};
pub use prime::{is_prime, is_prime_u64, prime_power};
pub use zsigmondy::{
    cyclotomic_value, primitive_prime_divisors, select_r, smallest_primitive_prime, PrimitivePrimeWitness,
};

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

pub fn int(v: impl Into<BigInt>) -> ExactInt {
    v.into()
}

pub fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRat {
    BigRational::new(num.into(), den.into())
}

pub fn rat_int(v: impl Into<BigInt>) -> ExactRat {
    BigRational::from_integer(v.into())
}

/// `q^k` for `k >= 0`.
pub fn pow(q: u64, k: u32) -> ExactInt {
    num_traits::pow(BigInt::from(q), k as usize)
}

/// `q^k` as a rational, `k` may be negative.
pub fn pow_rat(q: u64, k: i64) -> ExactRat {
    let base = pow(q, k.unsigned_abs() as u32);
    if k >= 0 {
        rat_int(base)
    } else {
        rat(1, base)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn factorial(n: u32) -> ExactInt {
    (1..=n as u64).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn approx_f64(x: &ExactRat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn ser_decimal<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn ser_rational<S: Serializer>(v: &ExactRat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rat(v))
}

/// `num/den` in lowest terms; integers print without a denominator.
pub fn format_rat(v: &ExactRat) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Binary digits used when enclosing a square root.
const SQRT_BITS: u32 = 96;

/// A closed interval `[lo, hi]` of rationals containing a real quantity that
/// may be irrational (powers of `q` with half-integer exponents).
///
/// Collapses to a point whenever the quantity is rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: ExactRat,
    pub hi: ExactRat,
}

impl Enclosure {
    pub fn exact(v: ExactRat) -> Self {
        Enclosure { lo: v.clone(), hi: v }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Square root of a non-negative rational.
    pub fn sqrt(x: &ExactRat) -> Self {
        assert!(!x.is_negative(), "square root of a negative number");
        let (n, d) = (x.numer().magnitude(), x.denom().magnitude());
        let (rn, rd) = (n.sqrt(), d.sqrt());
        if &rn * &rn == *n && &rd * &rd == *d {
            return Enclosure::exact(rat(big(rn), big(rd)));
        }
        // sqrt(n/d) = sqrt(n d) / d; scale by 2^SQRT_BITS before the integer root.
        let scaled: BigUint = (n * d) << (2 * SQRT_BITS);
        let root = scaled.sqrt();
        let den = big(d.clone()) << SQRT_BITS;
        Enclosure {
            lo: rat(big(root.clone()), den.clone()),
            hi: rat(big(root + 1u32), den),
        }
    }

    /// `q^(half / 2)` for any integer `half`.
    pub fn pow_half(q: u64, half: i64) -> Self {
        let whole = half.div_euclid(2);
        let base = pow_rat(q, whole);
        if half.rem_euclid(2) == 0 {
            return Enclosure::exact(base);
        }
        Enclosure::sqrt(&rat_int(q)).scale(&base)
    }

    /// Multiplies by a non-negative rational.
    pub fn scale(&self, k: &ExactRat) -> Self {
        assert!(!k.is_negative());
        Enclosure {
            lo: &self.lo * k,
            hi: &self.hi * k,
        }
    }

    /// Product of two enclosures of non-negative quantities.
    pub fn mul(&self, other: &Self) -> Self {
        assert!(!self.lo.is_negative() && !other.lo.is_negative());
        Enclosure {
            lo: &self.lo * &other.lo,
            hi: &self.hi * &other.hi,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Enclosure {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn add_exact(&self, v: &ExactRat) -> Self {
        Enclosure {
            lo: &self.lo + v,
            hi: &self.hi + v,
        }
    }

    /// Reciprocal of a positive quantity.
    pub fn recip(&self) -> Self {
        assert!(self.lo.is_positive());
        Enclosure {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        }
    }

    /// Certain ordering against a rational, `None` when the interval straddles it.
    pub fn cmp_rat(&self, v: &ExactRat) -> Option<Ordering> {
        if &self.hi < v {
            Some(Ordering::Less)
        } else if &self.lo > v {
            Some(Ordering::Greater)
        } else if self.is_exact() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn midpoint_f64(&self) -> f64 {
        (approx_f64(&self.lo) + approx_f64(&self.hi)) / 2.0
    }
}

fn big(v: BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, v)
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", format_rat(&self.lo))
        } else {
            write!(f, "[{}, {}]", format_rat(&self.lo), format_rat(&self.hi))
        }
    }
}

/// Zero as a rational; saves a turbofish at call sites.
pub fn zero() -> ExactRat {
    ExactRat::zero()
}
