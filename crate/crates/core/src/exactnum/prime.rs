//! Primality testing.
//!
//! Below 2^64 the Miller-Rabin test with the first twelve prime bases is a
//! proof. Up to 3.317e24 the first thirteen prime bases are proven
//! sufficient (Sorenson-Webster). Above that the strong test is paired with
//! a strong Lucas test (Baillie-PSW), which has no known counterexample.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Primes below this bound are produced by the sieve and used for trial division.
pub(crate) const SIEVE_LIMIT: u32 = 1 << 16;

const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

pub(crate) fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve(SIEVE_LIMIT))
}

fn sieve(limit: u32) -> Vec<u32> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u32);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

pub(crate) fn mulmod64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn powmod64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod64(acc, base, m);
        }
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime_u64(n: u64, base: u64) -> bool {
    let base = base % n;
    if base == 0 {
        return true;
    }
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    let mut x = powmod64(base, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mulmod64(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    MR_BASES[..12].iter().all(|&a| strong_probable_prime_u64(n, a))
}

fn strong_probable_prime(n: &BigUint, base: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = base.modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Jacobi symbol (a/n) for odd positive n.
pub(crate) fn jacobi(a: &BigInt, n: &BigUint) -> i32 {
    debug_assert!(n.is_odd());
    let n_int = BigInt::from_biguint(Sign::Plus, n.clone());
    let mut a = a.mod_floor(&n_int).to_biguint().expect("non-negative after mod_floor");
    let mut n = n.clone();
    let mut result = 1;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        a >>= tz;
        let n_mod_8 = (&n % 8u32).to_u32().unwrap();
        if tz % 2 == 1 && (n_mod_8 == 3 || n_mod_8 == 5) {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u32() == Some(3) && (&n % 4u32).to_u32() == Some(3) {
            result = -result;
        }
        a %= &n;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

fn half_mod(x: BigInt, n: &BigInt) -> BigInt {
    let x = if x.is_odd() { x + n } else { x };
    (x >> 1u32).mod_floor(n)
}

/// Strong Lucas probable-prime test with Selfridge parameters.
fn strong_lucas(n: &BigUint) -> bool {
    let root = n.sqrt();
    if &root * &root == *n {
        return false;
    }
    // Selfridge method A: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    let mut d_abs: i64 = 5;
    let mut sign: i64 = 1;
    let d = loop {
        let d = BigInt::from(sign * d_abs);
        match jacobi(&d, n) {
            -1 => break d,
            0 if BigInt::from(d_abs) != BigInt::from_biguint(Sign::Plus, n.clone()) => {
                return false;
            }
            _ => {}
        }
        d_abs += 2;
        sign = -sign;
    };
    let n_int = BigInt::from_biguint(Sign::Plus, n.clone());
    let q_param: BigInt = (BigInt::one() - &d) / 4;
    let p_param = BigInt::one();

    let n_plus_1 = n + 1u32;
    let s = n_plus_1.trailing_zeros().unwrap_or(0);
    let k = &n_plus_1 >> s;

    // U_0 = 0, V_0 = 2, Q^0 = 1; walk the bits of k from the top.
    let mut u = BigInt::zero();
    let mut v = BigInt::from(2);
    let mut qk = BigInt::one();
    let bits = k.bits();
    for i in (0..bits).rev() {
        // doubling
        u = (&u * &v).mod_floor(&n_int);
        v = (&v * &v - BigInt::from(2) * &qk).mod_floor(&n_int);
        qk = (&qk * &qk).mod_floor(&n_int);
        if k.bit(i) {
            let u_next = half_mod(&p_param * &u + &v, &n_int);
            let v_next = half_mod(&d * &u + &p_param * &v, &n_int);
            u = u_next;
            v = v_next;
            qk = (&qk * &q_param).mod_floor(&n_int);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - BigInt::from(2) * &qk).mod_floor(&n_int);
        qk = (&qk * &qk).mod_floor(&n_int);
        if v.is_zero() {
            return true;
        }
    }
    false
}

/// Primality test used everywhere in the crate.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    for &p in small_primes().iter().take(200) {
        if (n % p).is_zero() {
            return false;
        }
    }
    if !MR_BASES.iter().all(|&a| strong_probable_prime(n, &BigUint::from(a))) {
        return false;
    }
    // 3.317044064679887385961981e24
    let proven_limit: BigUint = "3317044064679887385961981".parse().unwrap();
    if *n < proven_limit {
        return true;
    }
    strong_lucas(n)
}

/// Returns `Some((p, a))` when `n = p^a` with `p` prime and `a >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..).find(|d| n.is_multiple_of(*d) || d * d > n).unwrap();
    let p = if n.is_multiple_of(p) { p } else { n };
    let mut m = n;
    let mut a = 0;
    while m.is_multiple_of(p) {
        m /= p;
        a += 1;
    }
    (m == 1).then_some((p, a))
}
