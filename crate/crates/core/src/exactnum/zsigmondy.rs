//! Primitive prime divisors of `q^e - 1`.
//!
//! A prime `r` is primitive for `(q, e)` when `q` has multiplicative order
//! exactly `e` modulo `r`. Every such prime divides the cyclotomic value
//! `Phi_e(q)`, so only that (much smaller) number is factored. A prime factor
//! of `Phi_e(q)` can still fail to be primitive when it divides `e`; the
//! order test below removes those.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::factor::{factorize, factorize_u64};
use super::prime::is_prime;
use crate::error::{Error, Result};
use crate::grouporders::{primitive_exponent, GroupSpec};

/// `q` together with `e` and the chosen primitive prime `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitivePrimeWitness {
    pub q: u64,
    pub e: u32,
    #[serde(serialize_with = "crate::exactnum::ser_decimal")]
    pub r: BigUint,
    /// Multiplicative order of `q` modulo `r`; equal to `e` by construction.
    pub ord: u32,
}

impl PrimitivePrimeWitness {
    /// Re-checks every defining property from scratch.
    pub fn verify(&self) -> bool {
        let q = BigUint::from(self.q);
        let e = self.e;
        is_prime(&self.r) && self.ord == e && has_order_exactly(&q, e, &self.r) && (&self.r % e).is_one()
    }
}

fn mobius(n: u32) -> i32 {
    let f = factorize_u64(n as u64);
    if f.iter().any(|(_, k)| k > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Phi_e(q) = prod_{d | e} (q^d - 1)^{mu(e/d)}`.
pub fn cyclotomic_value(q: u64, e: u32) -> BigUint {
    assert!(q >= 2 && e >= 1);
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for d in (1..=e).filter(|d| e.is_multiple_of(*d)) {
        let term = q.pow(d) - 1u32;
        match mobius(e / d) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    quot
}

/// `q^e = 1 (mod r)` and `q^(e/l) != 1 (mod r)` for every prime `l | e`.
fn has_order_exactly(q: &BigUint, e: u32, r: &BigUint) -> bool {
    if !q.modpow(&BigUint::from(e), r).is_one() {
        return false;
    }
    factorize_u64(e as u64).primes().all(|l| {
        let l = u32::try_from(l).expect("prime factor of a u32");
        !q.modpow(&BigUint::from(e / l), r).is_one()
    })
}

type PrimeCache = Mutex<HashMap<(u64, u32), BTreeSet<BigUint>>>;

fn cache() -> &'static PrimeCache {
    static CACHE: OnceLock<PrimeCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// All primes `r` dividing `q^e - 1` but no `q^i - 1` with `0 < i < e`.
///
/// Empty exactly when `(q, e) = (2, 6)` or `e = 2` and `q + 1` is a power of two.
pub fn primitive_prime_divisors(q: u64, e: u32) -> BTreeSet<BigUint> {
    assert!(q >= 2 && e >= 1, "need q >= 2 and e >= 1");
    if let Some(hit) = cache().lock().unwrap().get(&(q, e)) {
        return hit.clone();
    }
    let q_big = BigUint::from(q);
    let phi = cyclotomic_value(q, e);
    let found: BTreeSet<BigUint> = factorize(&phi)
        .primes()
        .filter(|r| has_order_exactly(&q_big, e, r))
        .cloned()
        .collect();
    cache().lock().unwrap().insert((q, e), found.clone());
    found
}

/// Witness for the smallest primitive prime divisor of `q^e - 1`.
pub fn smallest_primitive_prime(q: u64, e: u32) -> Result<PrimitivePrimeWitness> {
    let r = primitive_prime_divisors(q, e)
        .into_iter()
        .next()
        .ok_or(Error::NoPrimitivePrime { q, e })?;
    Ok(PrimitivePrimeWitness { q, e, r, ord: e })
}

/// The prime `r` attached to a group: smallest primitive divisor of `q^e - 1`
/// with `e` read off the exponent table.
pub fn select_r(spec: &GroupSpec) -> Result<PrimitivePrimeWitness> {
    let e = primitive_exponent(spec);
    smallest_primitive_prime(spec.q, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u64]) -> BTreeSet<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic_value(2, 1), BigUint::from(1u32));
        assert_eq!(cyclotomic_value(2, 6), BigUint::from(3u32));
        assert_eq!(cyclotomic_value(3, 4), BigUint::from(10u32));
        assert_eq!(cyclotomic_value(2, 12), BigUint::from(13u32));
        assert_eq!(cyclotomic_value(10, 3), BigUint::from(111u32));
    }

    #[test]
    fn exceptions_are_empty() {
        assert!(primitive_prime_divisors(2, 6).is_empty());
        assert!(primitive_prime_divisors(3, 2).is_empty());
        assert!(primitive_prime_divisors(7, 2).is_empty());
        assert!(primitive_prime_divisors(31, 2).is_empty());
        assert!(!primitive_prime_divisors(5, 2).is_empty());
    }

    #[test]
    fn known_divisors() {
        assert_eq!(primitive_prime_divisors(2, 14), set(&[43]));
        assert_eq!(primitive_prime_divisors(2, 4), set(&[5]));
        assert_eq!(primitive_prime_divisors(2, 12), set(&[13]));
        // Phi_6(3) = 7; Phi_3(4) = 21 but 3 | 4 - 1.
        assert_eq!(primitive_prime_divisors(3, 6), set(&[7]));
        assert_eq!(primitive_prime_divisors(4, 3), set(&[7]));
    }

    #[test]
    fn witness_checks_out() {
        let w = smallest_primitive_prime(3, 8).unwrap();
        assert_eq!(w.r, BigUint::from(41u32));
        assert!(w.verify());
        let bad = PrimitivePrimeWitness {
            r: BigUint::from(5u32),
            ..w
        };
        assert!(!bad.verify());
    }
}
