use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::factor::factorize;
use super::prime::is_prime;
use crate::error::{Error, Result};

/// Least `k >= 1` with `q^k = 1 (mod r)`, for a prime `r` not dividing `q`.
///
/// Works down from `r - 1`, stripping each prime factor while the power
/// stays in the kernel, so the result always divides `r - 1`.
pub fn mult_order(q: &BigUint, r: &BigUint) -> Result<BigUint> {
    if !is_prime(r) {
        return Err(Error::NotPrime(r.to_string()));
    }
    if (q % r).is_zero() {
        return Err(Error::NotCoprime {
            q: q.to_string(),
            r: r.to_string(),
        });
    }
    let group_order = r - 1u32;
    let mut k = group_order.clone();
    for (p, _) in factorize(&group_order).iter() {
        while k.is_multiple_of(p) && q.modpow(&(&k / p), r).is_one() {
            k /= p;
        }
    }
    Ok(k)
}

pub fn mult_order_u64(q: u64, r: u64) -> Result<u64> {
    let k = mult_order(&BigUint::from(q), &BigUint::from(r))?;
    Ok(u64::try_from(k).expect("order divides r - 1 < 2^64"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(q: u64, r: u64) -> u64 {
        let mut x = q % r;
        let mut k = 1;
        while x != 1 {
            x = x * (q % r) % r;
            k += 1;
        }
        k
    }

    #[test]
    fn known_orders() {
        assert_eq!(mult_order_u64(2, 43).unwrap(), 14);
        assert_eq!(mult_order_u64(3, 41).unwrap(), 8);
        assert_eq!(mult_order_u64(9, 2).unwrap(), 1);
        assert_eq!(mult_order_u64(2, 13).unwrap(), 12);
    }

    #[test]
    fn matches_brute_force() {
        for r in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 97, 101, 257] {
            for q in 2..60u64 {
                if q % r != 0 {
                    assert_eq!(mult_order_u64(q, r).unwrap(), brute(q, r), "q={q} r={r}");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(matches!(mult_order_u64(6, 3), Err(Error::NotCoprime { .. })));
        assert!(matches!(mult_order_u64(2, 15), Err(Error::NotPrime(_))));
    }
}
