//! Maximal subgroups of `G` whose order is divisible by `r`.
//!
//! Geometric candidates carry a class count `c_M`, an upper bound on their
//! involutions and a lower bound on `|N_M(<x>)|`. Subgroups in the class `S`
//! are handled through class caps: the aggregate cap `C_S`, the socle rows
//! whose arithmetic conditions can be searched exhaustively, and the explicit
//! rows for the small-dimensional groups.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactnum::{
    factorial, factorize_u64, gcd, is_prime_u64, pow, pow_rat, prime_power, rat, rat_int, ExactInt, ExactRat,
    PrimitivePrimeWitness,
};
use crate::grouporders::{center_constants, similarity_index, Family, GroupSpec};
use crate::involutions::{aut_i2_upper, sym_involutions_plus1, RootSystemDatum, RootType};

/// Aschbacher class of a candidate. `S` is never used for geometric rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Source {
    C1,
    C2,
    C3,
    C6,
    C8,
    S,
}

impl Source {
    /// The index `i` of the sum `Sigma_i` this class feeds; `S` feeds `Sigma_0`.
    pub fn sigma(self) -> u8 {
        match self {
            Source::C1 => 1,
            Source::C2 => 2,
            Source::C3 => 3,
            Source::C6 => 6,
            Source::C8 => 8,
            Source::S => 0,
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Lower bound for `|N_M(<x>)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalizerBound {
    /// `N_M(<x>) = N_G(<x>)`; `M` is the unique conjugate containing `x`.
    Full,
    AtLeast(ExactRat),
}

/// One geometric maximal subgroup type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupCandidate {
    pub source: Source,
    #[serde(rename = "type")]
    pub type_label: String,
    pub params: BTreeMap<&'static str, i64>,
    pub condition: &'static str,
    pub c_m: u64,
    #[serde(serialize_with = "crate::exactnum::ser_rational")]
    pub i2_upper: ExactRat,
    #[serde(serialize_with = "ser_normalizer")]
    pub normalizer_lower: NormalizerBound,
    /// Root datum and field when `i2_upper` is exactly the automorphism-group
    /// involution bound of the socle.
    #[serde(skip)]
    pub aut_datum: Option<(RootSystemDatum, u64)>,
}

fn ser_normalizer<S: serde::Serializer>(v: &NormalizerBound, s: S) -> Result<S::Ok, S::Error> {
    match v {
        NormalizerBound::Full => s.serialize_str("|N_G(<x>)|"),
        NormalizerBound::AtLeast(x) => crate::exactnum::ser_rational(x, s),
    }
}

/// An almost simple candidate described by its socle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleCandidate {
    pub socle: String,
    pub condition: &'static str,
    /// Upper bound for the number of `G`-classes.
    #[serde(serialize_with = "crate::exactnum::ser_rational")]
    pub cap: ExactRat,
    #[serde(serialize_with = "ser_opt_rational")]
    pub i2_upper: Option<ExactRat>,
    /// Alternating socles use the stronger normalizer floor `r(r-1)/2`.
    pub alternating: bool,
}

fn ser_opt_rational<S: serde::Serializer>(v: &Option<ExactRat>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => crate::exactnum::ser_rational(x, s),
        None => s.serialize_none(),
    }
}

fn ri(v: ExactInt) -> ExactRat {
    rat_int(v)
}

/// `q^(num/den)`, asserting that the exponent is an integer.
fn qexp(q: u64, num: i64, den: i64) -> ExactRat {
    assert_eq!(num % den, 0, "non-integral exponent {num}/{den}");
    pow_rat(q, num / den)
}

fn gcd2(q: u64) -> u64 {
    gcd(2, q - 1)
}

fn a_z(spec: &GroupSpec) -> (u64, u64) {
    center_constants(spec).unwrap_or((1, 1))
}

/// `a_-` and `z_-` for `Omega^-_n(q)` when `G` itself is linear.
fn a_minus(n: u32, q: u64) -> u64 {
    GroupSpec::new(Family::OmegaMinus, n, q).ok().map_or(1, |s| a_z(&s).0)
}

fn prime_divisors(n: u32) -> Vec<u32> {
    factorize_u64(n as u64)
        .primes()
        .map(|p| u32::try_from(p).expect("prime factor of a u32"))
        .collect()
}

fn log2_exact(n: u32) -> Option<u32> {
    n.is_power_of_two().then(|| n.trailing_zeros())
}

/// `|N_G(<x>)|` for `x` of order `r`.
pub fn normalizer_order(spec: &GroupSpec) -> ExactInt {
    let GroupSpec { family, n, q, .. } = *spec;
    let n64 = n as u64;
    let (num, den): (ExactInt, u64) = match family {
        Family::Linear => (n64 * (pow(q, n) - 1), (q - 1) * gcd(n64, q - 1)),
        Family::Symplectic => (n64 * (pow(q, n / 2) + 1), gcd2(q)),
        Family::OmegaPlus => {
            let (a, _) = a_z(spec);
            ((n64 - 2) * (pow(q, n / 2 - 1) + 1) * (q + 1), a * gcd2(q).pow(2))
        }
        Family::OmegaMinus => {
            let (a, _) = a_z(spec);
            (n64 * (pow(q, n / 2) + 1), a * gcd2(q))
        }
        Family::OmegaOdd => ((n64 - 1) * (pow(q, (n - 1) / 2) + 1), 2),
        Family::Unitary if n % 2 == 1 => (n64 * (pow(q, n) + 1), (q + 1) * gcd(n64, q + 1)),
        Family::Unitary => ((n64 - 1) * (pow(q, n - 1) + 1), gcd(n64, q + 1)),
    };
    debug_assert!((&num % den).is_zero(), "normalizer order of {spec} is not integral");
    num / den
}

struct Row {
    source: Source,
    label: String,
    params: Vec<(&'static str, i64)>,
    condition: &'static str,
    c_m: u64,
    i2: ExactRat,
    norm: NormalizerBound,
    aut: Option<(RootSystemDatum, u64)>,
}

impl Row {
    fn new(source: Source, label: String, condition: &'static str, c_m: u64, i2: ExactRat) -> Self {
        Row {
            source,
            label,
            params: Vec::new(),
            condition,
            c_m,
            i2,
            norm: NormalizerBound::Full,
            aut: None,
        }
    }

    fn param(mut self, k: &'static str, v: impl Into<i64>) -> Self {
        self.params.push((k, v.into()));
        self
    }

    fn norm(mut self, v: ExactRat) -> Self {
        self.norm = NormalizerBound::AtLeast(v);
        self
    }

    fn aut(mut self, kind: RootType, s: u64) -> Self {
        self.aut = Some((RootSystemDatum::new(kind), s));
        self
    }

    fn build(self) -> SubgroupCandidate {
        SubgroupCandidate {
            source: self.source,
            type_label: self.label,
            params: self.params.into_iter().collect(),
            condition: self.condition,
            c_m: self.c_m,
            i2_upper: self.i2,
            normalizer_lower: self.norm,
            aut_datum: self.aut,
        }
    }
}

/// How the `O_1(q) wr S_n` involution count is bounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WreathBound {
    /// `2^(n-1) n!`, the order of the base-by-top quotient.
    Order,
    /// `2^(n-1) (i_2(S_n) + 1)`.
    Involutions,
}

/// Geometric maximal subgroups of `spec` that can contain an element of
/// order `r`, with their bounds.
pub fn geometric_candidates(spec: &GroupSpec, witness: &PrimitivePrimeWitness) -> Vec<SubgroupCandidate> {
    geometric_candidates_with(spec, witness, WreathBound::Order)
}

pub fn geometric_candidates_with(
    spec: &GroupSpec,
    witness: &PrimitivePrimeWitness,
    wreath: WreathBound,
) -> Vec<SubgroupCandidate> {
    let GroupSpec { family, n, q, p, a } = *spec;
    let (ni, qi) = (n as i64, q);
    let r = witness.r.clone();
    let r_is = |v: i64| v > 0 && r == num_bigint::BigUint::from(v as u64);
    let q_odd = q % 2 == 1;
    let m = n / 2;
    let (a_eps, z_eps) = a_z(spec);
    let wreath_i2 = |k: u32| -> ExactRat {
        let top = match wreath {
            WreathBound::Order => factorial(k),
            WreathBound::Involutions => sym_involutions_plus1(k),
        };
        ri(pow(2, k - 1) * top)
    };
    let mut rows: Vec<Row> = Vec::new();

    match family {
        Family::Linear => {
            for t in prime_divisors(n) {
                let k = n / t;
                let ti = t as i64;
                let i2 = if k == 1 {
                    // GL_1(q^n).n with n an odd prime has no involutions.
                    ExactRat::zero()
                } else {
                    rat(2 * (pow(q, 2 * t) - 1), q - 1) * qexp(qi, ni * ni + ni * ti - 4 * ti * ti, 2 * ti)
                };
                rows.push(
                    Row::new(Source::C3, format!("GL_{k}(q^{t}).{t}"), "n = kt, t prime", 1, i2)
                        .param("k", k)
                        .param("t", t),
                );
            }
            if let Some(k) = log2_exact(n) {
                if q_odd && r_is((1i64 << k) + 1) {
                    let c = gcd(q - 1, n as u64);
                    rows.push(
                        Row::new(
                            Source::C6,
                            format!("2^{}.Sp_{}(2)", 2 * k, 2 * k),
                            "n = 2^k, r = 2^k + 1, q odd",
                            c,
                            ri(pow(2, k * (2 * k + 3))),
                        )
                        .param("k", k)
                        .norm(ri(BigInt::from(r.clone()))),
                    );
                }
            }
            if n % 2 == 0 {
                let c = gcd(q - 1, m as u64);
                rows.push(
                    Row::new(
                        Source::C8,
                        format!("PSp_{n}(q)"),
                        "n even",
                        c,
                        ri(2 * (q + 1) * pow(q, (n * n + 2 * n - 4) / 4)),
                    )
                    .norm(rat(n as u64 * (pow(q, m) + 1), gcd2(q)))
                    .aut(RootType::C(m), q),
                );
                if q_odd {
                    let c = gcd(q - 1, n as u64) / 2;
                    rows.push(
                        Row::new(
                            Source::C8,
                            format!("PSO^-_{n}(q)"),
                            "n even, q odd",
                            c,
                            ri(2 * (q + 1) * pow(q, (n * n - 4) / 4)),
                        )
                        .norm(rat(n as u64 * (pow(q, m) + 1), 2 * a_minus(n, q)))
                        .aut(RootType::D(m), q),
                    );
                }
            }
            if n % 2 == 1 && a % 2 == 0 {
                let s = p.pow(a / 2);
                let lcm = num_integer::lcm(s + 1, (q - 1) / gcd(q - 1, n as u64));
                rows.push(
                    Row::new(
                        Source::C8,
                        format!("PSU_{n}(q^(1/2))"),
                        "n odd, q square",
                        (q - 1) / lcm,
                        ri(2 * (s + 1) * pow(s, (n * n + n - 4) / 2)),
                    )
                    .norm(rat(n as u64 * (pow(s, n) + 1), (s + 1) * gcd(n as u64, s + 1)))
                    .aut(RootType::A(n - 1), s),
                );
            }
        }
        Family::Symplectic => {
            for t in prime_divisors(n).into_iter().filter(|t| (n / t) % 2 == 0) {
                let k = n / t;
                let ti = t as i64;
                rows.push(
                    Row::new(
                        Source::C3,
                        format!("Sp_{k}(q^{t}).{t}"),
                        "n = kt, k even, t prime",
                        1,
                        ri(2 * (pow(q, t) + 1)) * qexp(qi, ni * ni + 2 * ni * ti - 4 * ti * ti, 4 * ti),
                    )
                    .param("k", k)
                    .param("t", t),
                );
            }
            if m % 2 == 1 && q_odd {
                rows.push(Row::new(
                    Source::C3,
                    format!("GU_{m}(q).2"),
                    "n/2 odd, q odd",
                    1,
                    ri(BigInt::from(q + 1).pow(2u32)) * qexp(qi, ni * ni + 2 * ni - 16, 8),
                ));
            }
            if let Some(k) = log2_exact(n) {
                if q_odd && a == 1 && r_is(ni + 1) {
                    rows.push(
                        Row::new(
                            Source::C6,
                            format!("2^{}.O^-_{}(2)", 2 * k, 2 * k),
                            "n = 2^k, q = p odd, r = n + 1",
                            2,
                            ri(pow(2, 2 * k * k + k + 1)),
                        )
                        .param("k", k)
                        .norm(ri(BigInt::from(r.clone()))),
                    );
                }
            }
            if !q_odd {
                rows.push(
                    Row::new(
                        Source::C8,
                        format!("PSO^-_{n}(q)"),
                        "q even",
                        1,
                        ri(2 * (q + 1) * pow(q, (n * n - 4) / 4)),
                    )
                    .norm(rat(n as u64 * (pow(q, m) + 1), 2u32))
                    .aut(RootType::D(m), q),
                );
            }
        }
        Family::OmegaPlus => {
            let n_m1: ExactInt = (n as u64 - 2) * (pow(q, m - 1) + 1);
            rows.push(Row::new(
                Source::C1,
                format!("O^-_{}(q) x O^-_2(q)", n - 2),
                "always",
                1,
                ri(BigInt::from(q + 1).pow(2u32) * 2u32 * pow(q, (n * n - 4 * n) / 4)),
            ));
            if q_odd {
                rows.push(
                    Row::new(
                        Source::C1,
                        format!("O_{}(q) x O_1(q)", n - 1),
                        "q odd",
                        2,
                        rat(4 * (q + 1) * pow(q, (n * n - 2 * n - 4) / 4), z_eps),
                    )
                    .norm(rat(n_m1.clone(), a_eps)),
                );
            } else {
                rows.push(
                    Row::new(
                        Source::C1,
                        format!("O_{}(q)", n - 1),
                        "q even",
                        1,
                        ri(2 * (q + 1) * pow(q, (n * n - 2 * n - 4) / 4)),
                    )
                    .norm(rat(n_m1.clone(), 2u32))
                    .aut(RootType::C(m - 1), q),
                );
            }
            if q_odd && a == 1 && r_is(ni - 1) {
                rows.push(
                    Row::new(
                        Source::C2,
                        format!("O_1(q) wr S_{n}"),
                        "q = p odd, r = n - 1",
                        4,
                        wreath_i2(n),
                    )
                    .norm(ri(BigInt::from(r.clone()))),
                );
            }
            if m % 2 == 1 && q_odd {
                rows.push(
                    Row::new(
                        Source::C3,
                        format!("O_{m}(q^2).2"),
                        "n/2 odd, q odd",
                        2,
                        ri(rat(4 * (q + 1), z_eps).to_integer()) * qexp(qi, ni * ni - 20, 8),
                    )
                    .norm(rat(n_m1, 4 * a_eps)),
                );
            }
            if m % 2 == 0 {
                rows.push(Row::new(
                    Source::C3,
                    format!("GU_{m}(q).2"),
                    "n/2 even",
                    2,
                    rat(BigInt::from(q + 1).pow(2u32) * 2u32, z_eps) * qexp(qi, ni * ni + 2 * ni - 16, 8),
                ));
            }
            if let Some(k) = log2_exact(n) {
                if q_odd && a == 1 && r_is(ni - 1) {
                    rows.push(
                        Row::new(
                            Source::C6,
                            format!("2^{}.O^+_{}(2)", 2 * k, 2 * k),
                            "n = 2^k, q = p odd, r = n - 1",
                            8,
                            ri(pow(2, k * (2 * k + 1))),
                        )
                        .param("k", k)
                        .norm(ri(BigInt::from(r.clone()))),
                    );
                }
            }
        }
        Family::OmegaMinus => {
            for t in prime_divisors(n).into_iter().filter(|t| n / t >= 4 && (n / t) % 2 == 0) {
                let k = n / t;
                let ti = t as i64;
                rows.push(
                    Row::new(
                        Source::C3,
                        format!("O^-_{k}(q^{t}).{t}"),
                        "n = kt, t prime, k >= 4",
                        1,
                        ri(2 * (pow(q, t) + 1)) * qexp(qi, ni * ni - 4 * ti * ti, 4 * ti),
                    )
                    .param("k", k)
                    .param("t", t),
                );
            }
            if m % 2 == 1 {
                rows.push(Row::new(
                    Source::C3,
                    format!("GU_{m}(q).2"),
                    "n/2 odd",
                    1,
                    rat(BigInt::from(q + 1).pow(2u32) * 2u32, z_eps) * qexp(qi, ni * ni + 2 * ni - 16, 8),
                ));
            }
        }
        Family::OmegaOdd => {
            rows.push(Row::new(
                Source::C1,
                format!("O^-_{}(q) x O_1(q)", n - 1),
                "always",
                1,
                ri(4 * (q + 1) * pow(q, (n * n - 2 * n - 3) / 4)),
            ));
            if a == 1 && r_is(ni) {
                rows.push(
                    Row::new(Source::C2, format!("O_1(q) wr S_{n}"), "q = p, r = n", 2, wreath_i2(n))
                        .norm(ri(BigInt::from(r.clone()))),
                );
            }
        }
        Family::Unitary if n % 2 == 1 => {
            for t in prime_divisors(n).into_iter().filter(|&t| t >= 3) {
                let k = n / t;
                let ti = t as i64;
                rows.push(
                    Row::new(
                        Source::C3,
                        format!("GU_{k}(q^{t}).{t}"),
                        "n = kt, t prime, t >= 3",
                        1,
                        rat((pow(q, t) + 1u32).pow(2u32) * 2u32, q + 1)
                            * qexp(qi, ni * ni + ni * ti - 4 * ti * ti, 2 * ti),
                    )
                    .param("k", k)
                    .param("t", t),
                );
            }
        }
        Family::Unitary => {
            rows.push(Row::new(
                Source::C1,
                format!("GU_{}(q) x GU_1(q)", n - 1),
                "always",
                1,
                ri(2 * (q + 1) * pow(q, (n * n - n - 4) / 2)),
            ));
        }
    }
    rows.into_iter().map(Row::build).collect()
}

/// `C_S`: the cap on `G`-classes of `S`-subgroups with non-alternating socle.
pub fn sclass_cap(spec: &GroupSpec) -> Result<ExactRat> {
    let n = spec.n as i64;
    let e_g = rat_int(similarity_index(spec));
    let (factor, min_n) = match spec.family {
        Family::Linear | Family::Symplectic | Family::OmegaMinus => (rat(4 * n * n + 21 * n - 4, 4), 7),
        Family::OmegaPlus => (rat(n + 36, 4), 10),
        Family::OmegaOdd => (rat_int(n * n + 6 * n + 4), 9),
        Family::Unitary => (rat_int(3), 7),
    };
    if n < min_n {
        return Err(Error::OutOfScope(format!("{spec}: class cap needs n >= {min_n}")));
    }
    Ok(factor * e_g)
}

/// Is `s` a prime power in characteristic different from `p`?
fn cross_char_field(s: u64, p: u64) -> bool {
    matches!(prime_power(s), Some((ell, _)) if ell != p)
}

/// Exhaustive search of the cross-characteristic socle rows.
///
/// Returns whether any row is consistent with `spec` and `r`, together
/// with the matching rows and their class caps (already multiplied by `e_G`).
pub fn sclass_feasible(spec: &GroupSpec, witness: &PrimitivePrimeWitness) -> (bool, Vec<SocleCandidate>) {
    let GroupSpec { family, n, p, .. } = *spec;
    let n64 = n as u64;
    let e_g = rat_int(similarity_index(spec));
    let r_is = |v: u64| witness.r == num_bigint::BigUint::from(v);
    let mut out = Vec::new();
    let mut push = |socle: String, condition: &'static str, cap: ExactRat| {
        out.push(SocleCandidate {
            socle,
            condition,
            cap: cap * &e_g,
            i2_upper: None,
            alternating: false,
        });
    };
    let s_max = 2 * n64 + 1;
    // Every row has s^(d-1) <= n + 1, which bounds d.
    let d_max = |s: u64| {
        let mut d = 1;
        while (s as u128).pow(d) <= (n64 + 1) as u128 {
            d += 1;
        }
        d
    };
    let psl2 = |s: u64| cross_char_field(s, p);

    // Linear-type rows shared by PSL, PSp and POmega^-.
    let linear_rows = |push: &mut dyn FnMut(String, &'static str, ExactRat), shift: u64, r_target: u64| {
        if !r_is(r_target) {
            return;
        }
        for s in 2..=s_max {
            if !cross_char_field(s, p) {
                continue;
            }
            for d in 2..=d_max(s) {
                let sd = (s as u128).pow(d);
                let big = |v: u128| v == (n64 + shift) as u128;
                if d >= 3 && is_prime_u64(d as u64) && big((sd - 1) / (s as u128 - 1)) {
                    push(
                        format!("PSL_{d}({s})"),
                        "d >= 3 prime, n = (s^d-1)/(s-1) - shift",
                        rat_int(s - 1),
                    );
                }
                if is_prime_u64(d as u64) && (sd + 1) % (s as u128 + 1) == 0 && big((sd + 1) / (s as u128 + 1)) {
                    push(
                        format!("PSU_{d}({s})"),
                        "d prime, n = (s^d+1)/(s+1) - shift",
                        rat_int(s + 1),
                    );
                }
            }
        }
    };

    match family {
        Family::Linear | Family::Symplectic | Family::OmegaMinus => {
            linear_rows(&mut push, 1, n64 + 1);
            if r_is(n64 + 1) {
                for s in (3..=s_max).step_by(2).filter(|&s| s != 3 && cross_char_field(s, p)) {
                    let mut d = 2u32;
                    while (s as u128).pow(d) <= (2 * n64 + 1) as u128 {
                        if ((s as u128).pow(d) - 1) / 2 == n64 as u128 {
                            push(
                                format!("PSp_{}({s})", 2 * d),
                                "s != 3 odd, d = 2^b, n = (s^d-1)/2",
                                rat_int(4),
                            );
                        }
                        d *= 2;
                    }
                }
                if let Some(b) = log2_exact(n) {
                    if b.is_power_of_two() && psl2(n64) {
                        push(format!("PSL_2({n})"), "n = 2^b, b = 2^b'", rat_int(1));
                    }
                }
                if psl2(n64 + 1) {
                    push(format!("PSL_2({})", n + 1), "r = n + 1", rat(n as i64, 4));
                }
            }
            if (r_is(n64 + 1) || r_is(2 * n64 + 1)) && psl2(2 * n64 + 1) {
                push(format!("PSL_2({})", 2 * n + 1), "r = n + 1 or 2n + 1", rat_int(2));
            }
        }
        Family::OmegaPlus => {
            if r_is(n64 - 1) {
                for d in (3..20u32).filter(|&d| is_prime_u64(d as u64)) {
                    if 3 != p && 3u128.pow(d).div_ceil(2) == n64 as u128 && n % 2 == 1 {
                        push(
                            format!("PSp_{}(3)", 2 * d),
                            "n = (3^d+1)/2 odd, d >= 3 prime",
                            rat_int(4),
                        );
                    }
                }
                if psl2(n64 - 1) {
                    push(format!("PSL_2({})", n - 1), "r = n - 1", rat(n as i64 - 4, 4));
                }
                if let Some(b) = log2_exact(n) {
                    if is_prime_u64(b as u64) && psl2(n64) {
                        push(format!("PSL_2({n})"), "n = 2^b, b prime", rat_int(1));
                    }
                }
                if psl2(2 * n64 - 1) {
                    push(format!("PSL_2({})", 2 * n - 1), "r = n - 1", rat_int(2));
                }
            }
        }
        Family::OmegaOdd => {
            linear_rows(&mut push, 0, n64);
            if r_is(n64) {
                for s in (5..=s_max).step_by(2).filter(|&s| cross_char_field(s, p)) {
                    let mut d = 2u32;
                    while (s as u128).pow(d) <= (2 * n64) as u128 {
                        if (s as u128).pow(d).div_ceil(2) == n64 as u128 {
                            push(
                                format!("PSp_{}({s})", 2 * d),
                                "s != 3 odd, d = 2^b, n = (s^d+1)/2",
                                rat_int(4),
                            );
                        }
                        d *= 2;
                    }
                }
                if p != 3 {
                    for d in (3..20u32).filter(|&d| is_prime_u64(d as u64)) {
                        if (3u128.pow(d) - 1) / 2 == n64 as u128 {
                            push(format!("PSp_{}(3)", 2 * d), "d odd prime, n = (3^d-1)/2", rat_int(4));
                        }
                    }
                }
                if psl2(n64 - 1) {
                    push(format!("PSL_2({})", n - 1), "r = n", rat(n as i64 - 3, 2));
                }
                if let Some(b) = log2_exact(n) {
                    if b.is_power_of_two() && psl2(n64) {
                        push(format!("PSL_2({n})"), "n = 2^b, b = 2^b'", rat_int(1));
                    }
                }
                if psl2(n64 + 1) {
                    push(format!("PSL_2({})", n + 1), "r = n", rat(n as i64 + 1, 2));
                }
                if psl2(2 * n64 + 1) {
                    push(format!("PSL_2({})", 2 * n + 1), "r = n", rat_int(2));
                }
            }
            if (r_is(n64) || r_is(2 * n64 - 1)) && psl2(2 * n64 - 1) {
                push(format!("PSL_2({})", 2 * n - 1), "r = n or 2n - 1", rat_int(2));
            }
        }
        Family::Unitary => {
            let s = if n % 2 == 1 { 2 * n64 + 1 } else { 2 * n64 - 1 };
            if r_is(s) && psl2(s) {
                push(
                    format!("PSL_2({s})"),
                    "r = 2n + 1 (n odd) or 2n - 1 (n even)",
                    rat_int(2),
                );
            }
        }
    }
    (!out.is_empty(), out)
}

/// Number of `G`-classes of `S`-subgroups with socle `A_{n+1}` or `A_{n+2}`.
pub fn alternating_socle_classes(spec: &GroupSpec) -> u64 {
    match spec.family {
        Family::Linear | Family::Unitary => 0,
        _ => similarity_index(spec),
    }
}

/// Is `spec` one of the small-dimensional groups treated case by case?
pub fn in_small_n_list(spec: &GroupSpec) -> bool {
    let GroupSpec { family, n, q, .. } = *spec;
    match family {
        Family::Linear => n == 8,
        Family::Symplectic => n == 8 || n == 10 || (n == 12 && q == 2),
        Family::OmegaPlus => (n == 8 && q != 2) || n == 10 || n == 12 || (q == 2 && matches!(n, 14 | 16 | 18)),
        Family::OmegaMinus => matches!(n, 8 | 10 | 12),
        Family::OmegaOdd => n == 9 || n == 11,
        Family::Unitary => false,
    }
}

fn aut_i2(kind: RootType, s: u64) -> ExactRat {
    ri(aut_i2_upper(&RootSystemDatum::new(kind), s))
}

/// `S`-subgroups of the small-dimensional groups, with class caps and
/// involution bounds.
///
/// Involutions in a Lie-type socle are bounded by its automorphism group;
/// `Sz(8)` by `|Aut Sz(8)|`, `M_12` by `|Aut M_12|` and `A_m` by
/// `i_2(S_m) + 1`. The `POmega+_12` rows carry the sharper explicit values.
pub fn small_n_sclass(spec: &GroupSpec, witness: &PrimitivePrimeWitness) -> Result<Vec<SocleCandidate>> {
    if !in_small_n_list(spec) {
        return Err(Error::OutOfScope(format!(
            "{spec} is not one of the small-dimensional cases"
        )));
    }
    let GroupSpec { family, n, q, a, .. } = *spec;
    let r_is = |v: u64| witness.r == num_bigint::BigUint::from(v);
    let e_g = similarity_index(spec);
    let q_is_p_or = |k: u32| a == 1 || a == k;
    let alt = |m: u32| ri(sym_involutions_plus1(m));
    let mut rows: Vec<(String, &'static str, ExactRat, ExactRat)> = Vec::new();
    let mut add = |socle: &str, cond: &'static str, cap: ExactRat, i2: ExactRat| {
        rows.push((socle.to_string(), cond, cap, i2));
    };
    match (family, n) {
        (Family::Symplectic, 8) => {
            if q_is_p_or(2) && (q >= 9 || q == 2) && r_is(17) {
                add(
                    "PSL_2(17)",
                    "q = p or p^2, q >= 9 or q = 2, r = 17",
                    rat_int(2),
                    aut_i2(RootType::A(1), 17),
                );
            }
        }
        (Family::Symplectic, 10) => {
            if q_is_p_or(2) && q % 2 == 1 && r_is(11) {
                add(
                    "PSL_2(11)",
                    "q = p or p^2, q odd, r = 11",
                    rat_int(6),
                    aut_i2(RootType::A(1), 11),
                );
            }
            if a == 1 && q % 2 == 1 && r_is(11) {
                add("PSU_5(2)", "q = p odd, r = 11", rat_int(2), aut_i2(RootType::A(4), 2));
            }
        }
        (Family::Symplectic, 12) => {
            add("PSL_2(25)", "always", rat_int(1), aut_i2(RootType::A(1), 25));
            add("A_14", "always", rat_int(1), alt(14));
        }
        (Family::OmegaPlus, 8) => {
            if q % 2 == 1 {
                add("POmega_7(q)", "q odd", rat_int(4), aut_i2(RootType::B(3), q));
            } else {
                add("PSp_6(q)", "q even", rat_int(2), aut_i2(RootType::C(3), q));
            }
            if q % 3 == 2 {
                add(
                    "PSU_3(q)",
                    "q = 2 mod 3",
                    rat_int(gcd2(q).pow(2)),
                    aut_i2(RootType::A(2), q),
                );
            }
            if a == 1 && q % 2 == 1 && r_is(7) {
                add(
                    "POmega+_8(2)",
                    "q = p odd, r = 7",
                    rat_int(4),
                    aut_i2(RootType::D(4), 2),
                );
            }
            if q == 5 {
                add("Sz(8)", "q = 5", rat_int(8), rat_int(29120 * 3));
                add("A_10", "q = 5", rat_int(12), alt(10));
            }
        }
        (Family::OmegaPlus, 12) => {
            if a == 1 && q >= 19 && r_is(11) {
                add("PSL_2(11)", "q = p >= 19, r = 11", rat_int(8), rat_int(55));
            }
            if a == 1 && q >= 5 && r_is(11) {
                add("M_12", "q = p >= 5, r = 11", rat_int(8), rat_int(190080));
            }
            if a == 1 && q % 2 == 1 && r_is(11) {
                add("A_13", "q = p odd, r = 11", rat_int(4), rat_int(272415));
            }
        }
        (Family::OmegaPlus, 14) => {
            add("PSL_2(13)", "q = 2", rat_int(2 * e_g), aut_i2(RootType::A(1), 13));
            add("G_2(3)", "q = 2", rat_int(e_g), aut_i2(RootType::G2, 3));
            add("A_16", "q = 2", rat_int(e_g), alt(16));
        }
        (Family::OmegaMinus, 10) => {
            let c = rat_int(gcd(q + 1, 4));
            if a == 1 && q >= 11 && r_is(11) {
                add(
                    "PSL_2(11)",
                    "q = p >= 11, r = 11",
                    c.clone(),
                    aut_i2(RootType::A(1), 11),
                );
            }
            if q != 2 && r_is(11) {
                add("A_11", "q != 2, r = 11", c, alt(11));
            }
            if q == 2 {
                add("A_12", "q = 2", rat_int(1), alt(12));
            }
        }
        (Family::OmegaMinus, 12) => {
            if q_is_p_or(3) && q >= 8 && r_is(13) {
                add(
                    "PSL_2(13)",
                    "q = p or p^3, q >= 8, r = 13",
                    rat_int(6),
                    aut_i2(RootType::A(1), 13),
                );
            }
            if a == 1 && r_is(13) {
                add(
                    "PSL_3(3)",
                    "q = p, r = 13",
                    rat_int(2 * gcd(q + 1, 2)),
                    aut_i2(RootType::A(2), 3),
                );
            }
            if q != 7 && r_is(13) {
                add("A_13", "q != 7, r = 13", rat_int(gcd(q + 1, 2)), alt(13));
            }
        }
        (Family::OmegaOdd, 9) => {
            if q_is_p_or(2) && r_is(17) {
                add(
                    "PSL_2(17)",
                    "q = p or p^2, r = 17",
                    rat_int(2),
                    aut_i2(RootType::A(1), 17),
                );
            }
        }
        (Family::OmegaOdd, 11) if a == 1 && r_is(11) => {
            add("A_12", "q = p, r = 11", rat_int(2), alt(12));
        }
        _ => {}
    }
    Ok(rows
        .into_iter()
        .map(|(socle, condition, cap, i2)| SocleCandidate {
            alternating: socle.starts_with("A_"),
            socle,
            condition,
            cap,
            i2_upper: Some(i2),
        })
        .collect())
}

/// Everything the catalog knows about one group, for export.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    pub witness: PrimitivePrimeWitness,
    #[serde(serialize_with = "crate::exactnum::ser_decimal")]
    pub normalizer_order: ExactInt,
    pub geometric: Vec<SubgroupCandidate>,
    pub sclass_feasible: bool,
    pub socles: Vec<SocleCandidate>,
    #[serde(serialize_with = "ser_opt_rational")]
    pub sclass_cap: Option<ExactRat>,
    pub alternating_classes: u64,
}

pub fn catalog_entry(spec: &GroupSpec, witness: &PrimitivePrimeWitness) -> CatalogEntry {
    let (feasible, mut socles) = sclass_feasible(spec, witness);
    if let Ok(extra) = small_n_sclass(spec, witness) {
        socles.extend(extra);
    }
    CatalogEntry {
        spec: *spec,
        witness: witness.clone(),
        normalizer_order: normalizer_order(spec),
        geometric: geometric_candidates(spec, witness),
        sclass_feasible: feasible,
        socles,
        sclass_cap: sclass_cap(spec).ok(),
        alternating_classes: alternating_socle_classes(spec),
    }
}

/// The candidate list as a JSON array.
pub fn export_json(candidates: &[SubgroupCandidate]) -> String {
    serde_json::to_string_pretty(candidates).expect("candidates serialize")
}

/// SHA-256 of the canonical (compact) JSON of a catalog entry, hex encoded.
pub fn checksum(entry: &CatalogEntry) -> String {
    let bytes = serde_json::to_vec(entry).expect("catalog serializes");
    Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
}
