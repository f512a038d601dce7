//! Residue arithmetic modulo an odd `n` for the factoring inner loops.
//!
//! [`Mont`] keeps residues in Montgomery form in `N` 64-bit limbs; it is
//! several times faster than `BigUint` division for the 65..256-bit
//! cofactors that reach rho and ECM. [`BigRing`] is the unbounded fallback.
//!
//! Callers only ever take `gcd(raw, n)` of a stored value, and Montgomery
//! form multiplies by `R`, a unit modulo `n`, so no conversion back is needed.

use num_bigint::BigUint;
use num_traits::Zero;

pub(crate) trait Ring {
    type E: Clone;

    fn modulus(&self) -> &BigUint;
    fn elem(&self, x: &BigUint) -> Self::E;
    /// Stored representation; shares every prime factor of `n` with the value.
    fn raw(&self, x: &Self::E) -> BigUint;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;

    fn sqr(&self, a: &Self::E) -> Self::E {
        self.mul(a, a)
    }
}

pub(crate) struct BigRing {
    n: BigUint,
}

impl BigRing {
    pub(crate) fn new(n: &BigUint) -> Self {
        BigRing { n: n.clone() }
    }
}

impl Ring for BigRing {
    type E = BigUint;

    fn modulus(&self) -> &BigUint {
        &self.n
    }

    fn elem(&self, x: &BigUint) -> BigUint {
        x % &self.n
    }

    fn raw(&self, x: &BigUint) -> BigUint {
        x.clone()
    }

    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= self.n {
            s - &self.n
        } else {
            s
        }
    }

    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            &self.n - (b - a)
        }
    }

    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % &self.n
    }
}

pub(crate) struct Mont<const N: usize> {
    n_big: BigUint,
    n: [u64; N],
    /// `-n^{-1} mod 2^64`.
    ninv: u64,
    r2: [u64; N],
}

fn to_limbs<const N: usize>(x: &BigUint) -> [u64; N] {
    let mut out = [0u64; N];
    for (slot, d) in out.iter_mut().zip(x.iter_u64_digits()) {
        *slot = d;
    }
    out
}

fn from_limbs(x: &[u64]) -> BigUint {
    let mut bytes = Vec::with_capacity(x.len() * 8);
    for limb in x {
        bytes.extend_from_slice(&limb.to_le_bytes());
    }
    BigUint::from_bytes_le(&bytes)
}

fn geq<const N: usize>(a: &[u64; N], b: &[u64; N]) -> bool {
    for i in (0..N).rev() {
        if a[i] != b[i] {
            return a[i] > b[i];
        }
    }
    true
}

/// `a - b` in place, returning the borrow.
fn sub_in_place<const N: usize>(a: &mut [u64; N], b: &[u64; N]) -> bool {
    let mut borrow = false;
    for i in 0..N {
        let (d1, b1) = a[i].overflowing_sub(b[i]);
        let (d2, b2) = d1.overflowing_sub(borrow as u64);
        a[i] = d2;
        borrow = b1 || b2;
    }
    borrow
}

impl<const N: usize> Mont<N> {
    /// Requires `n` odd and `n < 2^(64 N)`.
    pub(crate) fn new(n: &BigUint) -> Self {
        assert!(n.bit(0), "Montgomery arithmetic needs an odd modulus");
        assert!(n.bits() <= 64 * N as u64);
        let limbs = to_limbs::<N>(n);
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(limbs[0].wrapping_mul(inv)));
        }
        let r2 = (BigUint::from(1u32) << (128 * N)) % n;
        Mont {
            n_big: n.clone(),
            n: limbs,
            ninv: inv.wrapping_neg(),
            r2: to_limbs(&r2),
        }
    }

    fn redc_mul(&self, a: &[u64; N], b: &[u64; N]) -> [u64; N] {
        let mut t = [0u64; N];
        let mut t_hi: u64 = 0;
        for &bi in b.iter() {
            let mut carry: u64 = 0;
            for j in 0..N {
                let s = t[j] as u128 + a[j] as u128 * bi as u128 + carry as u128;
                t[j] = s as u64;
                carry = (s >> 64) as u64;
            }
            let s = t_hi as u128 + carry as u128;
            t_hi = s as u64;
            let t_top = (s >> 64) as u64;

            let m = t[0].wrapping_mul(self.ninv);
            let s = t[0] as u128 + m as u128 * self.n[0] as u128;
            let mut carry = (s >> 64) as u64;
            for j in 1..N {
                let s = t[j] as u128 + m as u128 * self.n[j] as u128 + carry as u128;
                t[j - 1] = s as u64;
                carry = (s >> 64) as u64;
            }
            let s = t_hi as u128 + carry as u128;
            t[N - 1] = s as u64;
            t_hi = t_top + (s >> 64) as u64;
        }
        if t_hi != 0 || geq(&t, &self.n) {
            sub_in_place(&mut t, &self.n);
        }
        t
    }
}

impl<const N: usize> Ring for Mont<N> {
    type E = [u64; N];

    fn modulus(&self) -> &BigUint {
        &self.n_big
    }

    fn elem(&self, x: &BigUint) -> [u64; N] {
        let reduced = to_limbs::<N>(&(x % &self.n_big));
        self.redc_mul(&reduced, &self.r2)
    }

    fn raw(&self, x: &[u64; N]) -> BigUint {
        from_limbs(x)
    }

    fn add(&self, a: &[u64; N], b: &[u64; N]) -> [u64; N] {
        let mut out = [0u64; N];
        let mut carry = false;
        for i in 0..N {
            let (s1, c1) = a[i].overflowing_add(b[i]);
            let (s2, c2) = s1.overflowing_add(carry as u64);
            out[i] = s2;
            carry = c1 || c2;
        }
        if carry || geq(&out, &self.n) {
            sub_in_place(&mut out, &self.n);
        }
        out
    }

    fn sub(&self, a: &[u64; N], b: &[u64; N]) -> [u64; N] {
        let mut out = *a;
        if sub_in_place(&mut out, b) {
            let mut carry = false;
            for (o, &m) in out.iter_mut().zip(&self.n) {
                let (s1, c1) = o.overflowing_add(m);
                let (s2, c2) = s1.overflowing_add(carry as u64);
                *o = s2;
                carry = c1 || c2;
            }
        }
        out
    }

    fn mul(&self, a: &[u64; N], b: &[u64; N]) -> [u64; N] {
        self.redc_mul(a, b)
    }
}

/// Runs `f` with the narrowest ring that holds `n` (odd).
pub(crate) fn with_ring<T>(n: &BigUint, f: impl RingFn<T>) -> T {
    debug_assert!(!n.is_zero());
    match n.bits() {
        0..=128 => f.call(&Mont::<2>::new(n)),
        129..=192 => f.call(&Mont::<3>::new(n)),
        193..=256 => f.call(&Mont::<4>::new(n)),
        _ => f.call(&BigRing::new(n)),
    }
}

/// A computation generic over the ring; a trait because closures cannot be generic.
pub(crate) trait RingFn<T> {
    fn call<R: Ring>(self, ring: &R) -> T;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check<R: Ring>(ring: &R, a: u128, b: u128) {
        let n = ring.modulus().clone();
        let (ab, bb) = (BigUint::from(a), BigUint::from(b));
        let (ea, eb) = (ring.elem(&ab), ring.elem(&bb));
        // Compare through a second multiplication by a known unit so the
        // Montgomery factor cancels: x = y iff x * 1 = y * 1 in the ring.
        let one = ring.elem(&BigUint::from(1u32));
        let want_mul = ring.elem(&((&ab * &bb) % &n));
        assert_eq!(
            ring.raw(&ring.mul(&ring.mul(&ea, &eb), &one)),
            ring.raw(&ring.mul(&want_mul, &one))
        );
        let want_add = ring.elem(&((&ab + &bb) % &n));
        assert_eq!(ring.raw(&ring.add(&ea, &eb)), ring.raw(&want_add));
        let want_sub = ring.elem(&((&ab + &n - (&bb % &n)) % &n));
        assert_eq!(ring.raw(&ring.sub(&ea, &eb)), ring.raw(&want_sub));
    }

    #[test]
    fn montgomery_agrees_with_bigint() {
        let n2: BigUint = "340282366920938463463374607431768211297".parse().unwrap(); // 2^128 - 159
        let n3 = (BigUint::from(1u32) << 190u32) - 1u32;
        let n4 = (BigUint::from(1u32) << 255u32) - 19u32;
        let pairs = [
            (3u128, 5u128),
            (u128::MAX, u128::MAX - 7),
            (1 << 100, 12345678901234567890),
        ];
        for (a, b) in pairs {
            check(&Mont::<2>::new(&n2), a, b);
            check(&Mont::<3>::new(&n3), a, b);
            check(&Mont::<4>::new(&n4), a, b);
            check(&BigRing::new(&n4), a, b);
        }
    }
}
