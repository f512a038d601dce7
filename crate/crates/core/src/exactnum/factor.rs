//! Integer factorization: trial division, Brent's variant of Pollard rho, and
//! Lenstra's elliptic curve method on Montgomery curves.
//!
//! Inputs at desk scale stay below ~2^200, and every number this crate
//! factors has at most one cofactor beyond the reach of rho, which ECM
//! handles in well under a second.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::mont::{with_ring, Ring, RingFn};
use super::prime::{is_prime, mulmod64, small_primes};

/// Exact prime factorization of a positive integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    value: BigUint,
    primes: BTreeMap<BigUint, u32>,
}

impl Factorization {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// Primes in increasing order with their exponents.
    pub fn iter(&self) -> impl Iterator<Item = (&BigUint, u32)> {
        self.primes.iter().map(|(p, &k)| (p, k))
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.primes.keys()
    }

    pub fn exponent(&self, p: &BigUint) -> u32 {
        self.primes.get(p).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    /// Multiplies the prime powers back together.
    pub fn recompose(&self) -> BigUint {
        self.primes.iter().fold(BigUint::one(), |acc, (p, &k)| acc * p.pow(k))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primes.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .primes
            .iter()
            .map(|(p, &k)| if k == 1 { p.to_string() } else { format!("{p}^{k}") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Factors `n >= 1`. `n = 1` yields the empty factorization.
///
/// # Panics
///
/// Panics if `n` is zero.
pub fn factorize(n: &BigUint) -> Factorization {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut primes = BTreeMap::new();
    let mut rest = n.clone();

    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let p_big = BigUint::from(p);
        if &p_big * &p_big > rest {
            break;
        }
        let mut k = 0;
        loop {
            let (quot, rem) = rest.div_rem(&p_big);
            if !rem.is_zero() {
                break;
            }
            rest = quot;
            k += 1;
        }
        if k > 0 {
            primes.insert(p_big, k);
        }
    }

    if !rest.is_one() {
        split_into(&rest, &mut primes);
    }
    Factorization {
        value: n.clone(),
        primes,
    }
}

pub fn factorize_u64(n: u64) -> Factorization {
    factorize(&BigUint::from(n))
}

fn split_into(n: &BigUint, out: &mut BTreeMap<BigUint, u32>) {
    if n.is_one() {
        return;
    }
    if is_prime(n) {
        *out.entry(n.clone()).or_insert(0) += 1;
        return;
    }
    if let Some((root, k)) = perfect_power(n) {
        let mut sub = BTreeMap::new();
        split_into(&root, &mut sub);
        for (p, e) in sub {
            *out.entry(p).or_insert(0) += e * k;
        }
        return;
    }
    let d = find_factor(n);
    debug_assert!(!d.is_one() && &d != n);
    let other = n / &d;
    split_into(&d, out);
    split_into(&other, out);
}

fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    let max_k = n.bits() as u32;
    for k in (2..=max_k).rev() {
        let root = n.nth_root(k);
        if root > BigUint::one() && root.pow(k) == *n {
            return Some((root, k));
        }
    }
    None
}

/// Returns a nontrivial divisor of the composite, non-power `n`.
fn find_factor(n: &BigUint) -> BigUint {
    if let Some(small) = n.to_u64() {
        if let Some(d) = rho_u64(small) {
            return BigUint::from(d);
        }
    }
    if n.is_even() {
        return BigUint::from(2u32);
    }
    with_ring(n, Split)
}

struct Split;

impl RingFn<BigUint> for Split {
    fn call<R: Ring>(self, ring: &R) -> BigUint {
        if let Some(d) = rho(ring, 1 << 16) {
            return d;
        }
        if let Some(d) = ecm(ring) {
            return d;
        }
        // Not reached for inputs of the sizes this crate produces; uncapped
        // rho always terminates on a composite.
        loop {
            if let Some(d) = rho(ring, u64::MAX) {
                return d;
            }
        }
    }
}

fn rho_u64(n: u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    for c in 1..64u64 {
        let f = |x: u64| (mulmod64(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut q = 1u64;
        let mut ys = y;
        let mut r = 1u64;
        let m = 128u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mulmod64(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Some(g);
        }
    }
    None
}

/// Brent's cycle finding with batched gcds, giving up after about `max_iter` steps.
fn rho<R: Ring>(ring: &R, max_iter: u64) -> Option<BigUint> {
    let n = ring.modulus();
    for c in 1..8u32 {
        let c = ring.elem(&BigUint::from(c));
        let f = |x: &R::E| ring.add(&ring.sqr(x), &c);
        let mut y = ring.elem(&BigUint::from(2u32));
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut q = ring.elem(&BigUint::one());
        let mut g = BigUint::one();
        let mut r: u64 = 1;
        let m: u64 = 256;
        let mut iters: u64 = 0;
        while g.is_one() && iters <= max_iter {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = ring.mul(&q, &ring.sub(&x, &y));
                }
                g = ring.raw(&q).gcd(n);
                k += m;
            }
            iters += r;
            r *= 2;
        }
        if g.is_one() {
            return None;
        }
        if g == *n {
            // The batch overshot; replay it one step at a time.
            loop {
                ys = f(&ys);
                g = ring.raw(&ring.sub(&x, &ys)).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return Some(g);
        }
    }
    None
}

/// Projective point on the x-line of a Montgomery curve.
#[derive(Clone)]
struct Point<E> {
    x: E,
    z: E,
}

/// Montgomery curve `By^2 = x^3 + Ax^2 + x`, with `(A + 2)/4 = a24 / c24`.
struct Curve<'r, R: Ring> {
    ring: &'r R,
    a24: R::E,
    c24: R::E,
}

impl<R: Ring> Curve<'_, R> {
    fn double(&self, p: &Point<R::E>) -> Point<R::E> {
        let r = self.ring;
        let s = r.sqr(&r.add(&p.x, &p.z));
        let d = r.sqr(&r.sub(&p.x, &p.z));
        let t = r.sub(&s, &d);
        let x = r.mul(&r.mul(&self.c24, &s), &d);
        let z = r.mul(&t, &r.add(&r.mul(&self.c24, &d), &r.mul(&self.a24, &t)));
        Point { x, z }
    }

    /// `p + q` given `diff = p - q`.
    fn diff_add(&self, p: &Point<R::E>, q: &Point<R::E>, diff: &Point<R::E>) -> Point<R::E> {
        let r = self.ring;
        let u = r.mul(&r.sub(&p.x, &p.z), &r.add(&q.x, &q.z));
        let v = r.mul(&r.add(&p.x, &p.z), &r.sub(&q.x, &q.z));
        let sum = r.add(&u, &v);
        let dif = r.sub(&u, &v);
        Point {
            x: r.mul(&diff.z, &r.sqr(&sum)),
            z: r.mul(&diff.x, &r.sqr(&dif)),
        }
    }

    fn ladder(&self, p: &Point<R::E>, k: u64) -> Point<R::E> {
        debug_assert!(k >= 1);
        if k == 1 {
            return p.clone();
        }
        let mut r0 = p.clone();
        let mut r1 = self.double(p);
        let bits = 64 - k.leading_zeros();
        for i in (0..bits - 1).rev() {
            if (k >> i) & 1 == 1 {
                r0 = self.diff_add(&r1, &r0, p);
                r1 = self.double(&r1);
            } else {
                r1 = self.diff_add(&r1, &r0, p);
                r0 = self.double(&r0);
            }
        }
        r0
    }
}

fn nontrivial(g: BigUint, n: &BigUint) -> Option<BigUint> {
    (!g.is_one() && g != *n && !g.is_zero()).then_some(g)
}

/// Prime table shared by every curve at one smoothness level.
struct EcmLevel {
    b1: u64,
    b2: u64,
    primes: Vec<u64>,
    is_prime: Vec<bool>,
}

impl EcmLevel {
    fn new(b1: u64, b2: u64) -> Self {
        let limit = b2 as usize;
        let mut is_prime = vec![true; limit + 1];
        is_prime[0] = false;
        if limit >= 1 {
            is_prime[1] = false;
        }
        let mut i = 2;
        while i * i <= limit {
            if is_prime[i] {
                let mut m = i * i;
                while m <= limit {
                    is_prime[m] = false;
                    m += i;
                }
            }
            i += 1;
        }
        let primes = (2..=b1 as usize).filter(|&p| is_prime[p]).map(|p| p as u64).collect();
        EcmLevel {
            b1,
            b2,
            primes,
            is_prime,
        }
    }

    fn prime_in_stage2(&self, m: u64) -> bool {
        m > self.b1 && m <= self.b2 && self.is_prime[m as usize]
    }
}

/// Smoothness bounds and curve counts, sized for factors up to ~25 digits.
const ECM_SCHEDULE: [(u64, u32); 4] = [(2_000, 25), (11_000, 90), (50_000, 300), (250_000, 700)];

fn ecm<R: Ring>(ring: &R) -> Option<BigUint> {
    let mut sigma: u64 = 6;
    for &(b1, curves) in &ECM_SCHEDULE {
        let level = EcmLevel::new(b1, 50 * b1);
        for _ in 0..curves {
            if let Some(d) = ecm_one_curve(ring, sigma, &level) {
                return Some(d);
            }
            sigma += 1;
        }
    }
    None
}

fn ecm_one_curve<R: Ring>(ring: &R, sigma: u64, level: &EcmLevel) -> Option<BigUint> {
    let n = ring.modulus();
    // Suyama's parametrization, computed once in plain integers.
    let three = BigUint::from(3u32);
    let s = BigUint::from(sigma) % n;
    let u = (&s * &s + n - 5u32) % n;
    let v = (&s * 4u32) % n;
    let u3 = u.modpow(&three, n);
    let v3 = v.modpow(&three, n);
    let v_minus_u = if v >= u { &v - &u } else { n - (&u - &v) };
    let a24 = (v_minus_u.modpow(&three, n) * ((&u * 3u32 + &v) % n)) % n;
    let c24 = (&u3 * &v * 16u32) % n;
    if let Some(d) = nontrivial(c24.gcd(n), n) {
        return Some(d);
    }
    let curve = Curve {
        ring,
        a24: ring.elem(&a24),
        c24: ring.elem(&c24),
    };
    let mut pt = Point {
        x: ring.elem(&u3),
        z: ring.elem(&v3),
    };

    let b1 = level.b1;
    for &p in &level.primes {
        let mut pe = p;
        while pe <= b1 / p {
            pe *= p;
        }
        pt = curve.ladder(&pt, pe);
    }
    let g = ring.raw(&pt.z).gcd(n);
    if !g.is_one() {
        return nontrivial(g, n);
    }

    // Stage 2: each prime in (b1, b2] is k D +- j with j odd, j < D/2, gcd(j, D) = 1,
    // and [kD]P = [j]P on the curve mod p exactly when x_k z_j - x_j z_k = 0 mod p.
    const D: u64 = 2310;
    let p2 = curve.double(&pt);
    let mut babies: Vec<(u64, Point<R::E>)> = vec![(1, pt.clone())];
    let mut prev = pt.clone();
    let mut cur = curve.diff_add(&p2, &pt, &pt);
    let mut j = 3;
    while j < D / 2 {
        if j.gcd(&D) == 1 {
            babies.push((j, cur.clone()));
        }
        let next = curve.diff_add(&cur, &p2, &prev);
        prev = cur;
        cur = next;
        j += 2;
    }

    let step = curve.ladder(&pt, D);
    let mut k = (b1 / D).max(1);
    let mut giant_prev = curve.ladder(&pt, if k == 1 { 1 } else { (k - 1) * D });
    let mut giant = curve.ladder(&pt, k * D);
    let mut acc = ring.elem(&BigUint::one());
    let mut count = 0u32;
    while k * D <= level.b2 + D {
        let centre = k * D;
        for (j, bp) in &babies {
            if level.prime_in_stage2(centre - j) || level.prime_in_stage2(centre + j) {
                let term = ring.sub(&ring.mul(&giant.x, &bp.z), &ring.mul(&bp.x, &giant.z));
                acc = ring.mul(&acc, &term);
                count += 1;
                if count.is_multiple_of(512) {
                    if let Some(d) = nontrivial(ring.raw(&acc).gcd(n), n) {
                        return Some(d);
                    }
                }
            }
        }
        // [(k+1)D] = [kD] + [D], with difference [(k-1)D]; from k = 1 the
        // "previous" point would be the identity, so double instead.
        let next = if k == 1 {
            curve.double(&giant)
        } else {
            curve.diff_add(&giant, &step, &giant_prev)
        };
        giant_prev = giant;
        giant = next;
        k += 1;
    }
    nontrivial(ring.raw(&acc).gcd(n), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(f: &Factorization) -> Vec<(u64, u32)> {
        f.iter().map(|(p, k)| (p.to_u64().unwrap(), k)).collect()
    }

    #[test]
    fn one_is_empty_product() {
        let f = factorize_u64(1);
        assert!(f.is_empty());
        assert_eq!(f.recompose(), BigUint::one());
    }

    #[test]
    fn worked_values() {
        assert_eq!(map(&factorize_u64(6560)), vec![(2, 5), (5, 1), (41, 1)]);
        assert_eq!(map(&factorize_u64(16383)), vec![(3, 1), (43, 1), (127, 1)]);
        assert_eq!(map(&factorize_u64(4095)), vec![(3, 2), (5, 1), (7, 1), (13, 1)]);
    }

    #[test]
    fn semiprime_beyond_trial_division() {
        let p = 1_000_000_007u64;
        let q = 998_244_353u64;
        let f = factorize(&(BigUint::from(p) * q));
        assert_eq!(map(&f), vec![(q, 1), (p, 1)]);
    }

    fn next_prime(mut n: u64) -> u64 {
        while !super::super::prime::is_prime_u64(n) {
            n += 1;
        }
        n
    }

    #[test]
    fn ecm_splits_two_forty_bit_primes() {
        let p = next_prime(1 << 40);
        let q = next_prime(3 << 40);
        let n = BigUint::from(p) * q;
        let level = EcmLevel::new(2_000, 100_000);
        let ring = super::super::mont::Mont::<2>::new(&n);
        let d = (6..400)
            .find_map(|sigma| ecm_one_curve(&ring, sigma, &level))
            .expect("ECM finds a 40-bit factor");
        assert!(d == BigUint::from(p) || d == BigUint::from(q));
        assert_eq!(map(&factorize(&n)), vec![(p, 1), (q, 1)]);
    }

    #[test]
    fn prime_powers_and_mixed() {
        let n = BigUint::from(1_000_003u64).pow(3) * 12u32;
        let f = factorize(&n);
        assert_eq!(map(&f), vec![(2, 2), (3, 1), (1_000_003, 3)]);
        assert_eq!(f.recompose(), n);
    }

    #[test]
    fn display() {
        assert_eq!(factorize_u64(6560).to_string(), "2^5 * 5 * 41");
        assert_eq!(factorize_u64(1).to_string(), "1");
    }
}
