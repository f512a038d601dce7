//! Counting involutions: lower bounds for the simple group, upper bounds for
//! automorphism groups and subgroups, and the exact data for `PSp_4(2^a)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{factorize_u64, pow, prime_power, rat, ExactInt, ExactRat};
use crate::grouporders::{form_group_order, Family, FormKind, GroupSpec, OrthSign};

/// Floor-divided lower bound `I_2(G) <= i_2(G)`.
pub fn i2_lower_bound(spec: &GroupSpec) -> ExactInt {
    let (n, q) = (spec.n, spec.q);
    match spec.family {
        Family::Linear | Family::Unitary => pow(q, n * n / 2) / 8,
        Family::Symplectic => pow(q, n * n / 4 + n / 2) / 2,
        Family::OmegaPlus | Family::OmegaMinus => pow(q, n * n / 4 - 1) / 8,
        Family::OmegaOdd => pow(q, (n * n - 1) / 4) / 2,
    }
}

/// `I_2(G)` as an exact rational, without rounding the leading coefficient.
pub fn i2_lower_bound_rat(spec: &GroupSpec) -> ExactRat {
    let (n, q) = (spec.n, spec.q);
    let (k, den) = match spec.family {
        Family::Linear | Family::Unitary => (n * n / 2, 8),
        Family::Symplectic => (n * n / 4 + n / 2, 2),
        Family::OmegaPlus | Family::OmegaMinus => (n * n / 4 - 1, 8),
        Family::OmegaOdd => ((n * n - 1) / 4, 2),
    };
    rat(pow(q, k), den)
}

/// One involution class `y^G` with the bound used for its size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionClassRecord {
    /// Representative, e.g. `j_4`, `s`, `u_5`.
    pub label: String,
    pub condition: &'static str,
    /// Order of the group the class size is measured in.
    #[serde(serialize_with = "crate::exactnum::ser_decimal")]
    pub ambient_order: ExactInt,
    /// Upper bound for the centralizer order that was divided out.
    #[serde(serialize_with = "crate::exactnum::ser_decimal")]
    pub centralizer_bound: ExactInt,
    #[serde(serialize_with = "crate::exactnum::ser_decimal")]
    pub class_size_lower: ExactInt,
}

fn order(kind: FormKind, n: u32, q: u64) -> ExactInt {
    if n == 0 {
        return BigInt::one();
    }
    form_group_order(kind, n, q).expect("dimension checked by caller")
}

fn o(sign: i64, n: u32, q: u64) -> ExactInt {
    let s = match (n % 2, sign) {
        (1, _) => OrthSign::Odd,
        (_, 1) => OrthSign::Plus,
        _ => OrthSign::Minus,
    };
    order(FormKind::O(s), n, q)
}

/// `q^k mod 4` as a sign: `+1` when it is 1, `-1` when it is 3.
fn sign_mod4(q: u64, k: u32) -> i64 {
    if q % 4 == 1 || k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Size of one involution class, from the representative chosen for each
/// family and congruence case.
///
/// For orthogonal groups the centralizer `X` is given inside the full
/// isometry group and the class is measured in `Omega`. With `q` even the
/// whole of `|X|` is divided out, which can only make the quotient smaller.
/// With `q` odd every listed `X` meets both the determinant and the spinor
/// norm surjectively, so `|X cap Omega| = |X| / 4` exactly and that value is
/// used; dividing by all of `|X|` would undercut the `I_2` bound for the odd
/// dimensional family.
pub fn involution_class_size_lower(spec: &GroupSpec) -> Result<InvolutionClassRecord> {
    let GroupSpec { family, n, q, .. } = *spec;
    let q_even = q % 2 == 0;
    let m = n / 2;
    let gl = |k: u32, eps: i64| {
        if eps == 1 {
            order(FormKind::GL, k, q)
        } else {
            order(FormKind::GU, k, q)
        }
    };
    let sp = |k: u32| order(FormKind::Sp, k, q);
    let record = |label: String, condition, ambient: ExactInt, cent: ExactInt| {
        let class = &ambient / &cent;
        InvolutionClassRecord {
            label,
            condition,
            ambient_order: ambient,
            centralizer_bound: cent,
            class_size_lower: class,
        }
    };

    Ok(match family {
        Family::Linear | Family::Unitary => {
            let eps = family.sign().unwrap();
            let ambient = gl(n, eps);
            let q_mod4_eps = (q as i64 - eps).rem_euclid(4) == 0;
            if n % 2 == 0 && q_even {
                let cent = pow(q, n * n / 4) * gl(m, eps);
                record(format!("j_{m}"), "n even, q even", ambient, cent)
            } else if n % 2 == 0 && q_mod4_eps {
                let cent = gl(m, eps).pow(2) * 2;
                record("s".into(), "n even, q = eps mod 4", ambient, cent)
            } else if n % 2 == 0 {
                let cent = order(FormKind::GL, m, q * q) * 2;
                record("t".into(), "n even, q = -eps mod 4", ambient, cent)
            } else if q_even {
                let k = (n - 1) / 2;
                let cent = pow(q, (n * n + 2 * n - 7) / 4) * gl(k, eps) * gl(1, eps);
                record(format!("j_{k}"), "n odd, q even", ambient, cent)
            } else {
                let k = (n - 1) / 2;
                let cent = gl(k, eps) * gl(k + 1, eps);
                record(format!("u_{k}"), "n odd, q odd", ambient, cent)
            }
        }
        Family::Symplectic => {
            let ambient = sp(n);
            if q_even && m % 2 == 0 {
                let cent = pow(q, (m * m + 3 * m - 2) / 2) * sp(m - 2);
                record(format!("c_{m}"), "n/2 even, q even", ambient, cent)
            } else if q_even {
                let cent = pow(q, m * (m + 1) / 2) * sp(m - 1);
                record(format!("b_{m}"), "n/2 odd, q even", ambient, cent)
            } else if q % 4 == 1 {
                let cent = order(FormKind::GL, m, q) * 2;
                record("s".into(), "q = 1 mod 4", ambient, cent)
            } else {
                let cent = order(FormKind::GU, m, q) * 2;
                record("t".into(), "q = 3 mod 4", ambient, cent)
            }
        }
        Family::OmegaPlus | Family::OmegaMinus => {
            let eps = family.sign().unwrap();
            let sign = if eps == 1 { OrthSign::Plus } else { OrthSign::Minus };
            let ambient = order(FormKind::Omega(sign), n, q);
            let index = |x: ExactInt| if q_even { x } else { x / 4 };
            if q_even && m % 2 == 0 {
                let cent = pow(q, (m * m + m - 2) / 2) * sp(m - 2);
                record(format!("c_{m}"), "n/2 even, q even", ambient, index(cent))
            } else if q_even {
                let cent = pow(q, (m * m + 3 * m - 10) / 2) * sp(m - 3) * sp(2);
                record(format!("c_{}", m - 1), "n/2 odd, q even", ambient, index(cent))
            } else if eps == 1 && m % 2 == 0 {
                let e = sign_mod4(q, n / 4);
                let cent = o(e, m, q).pow(2) * 2;
                record(format!("u_{m}"), "n/2 even, q^(n/4) = eps' mod 4", ambient, index(cent))
            } else if eps == 1 {
                let cent = o(1, m - 1, q) * o(1, m + 1, q);
                record(format!("u_{}", m - 1), "n/2 odd, q odd", ambient, index(cent))
            } else if m % 2 == 0 {
                let cent = o(1, m, q) * o(-1, m, q) * 2;
                record(format!("u_{m}"), "n/2 even, q odd", ambient, index(cent))
            } else {
                // q^((n-2)/4) = e' mod 4 selects u_{n/2 - e'}: u_{n/2-1} for
                // e' = +1 and u_{n/2+1} for e' = -1.
                let e = sign_mod4(q, (n - 2) / 4);
                let k = if e == 1 { m - 1 } else { m + 1 };
                let cent = o(e, m - 1, q) * o(-e, m + 1, q);
                record(
                    format!("u_{k}"),
                    "n/2 odd, q^((n-2)/4) = eps' mod 4",
                    ambient,
                    index(cent),
                )
            }
        }
        Family::OmegaOdd => {
            let h = (n + 1) / 4;
            let e = sign_mod4(q, h);
            let ambient = order(FormKind::Omega(OrthSign::Odd), n, q);
            let cent = o(e, 2 * h, q) * o(0, n - 2 * h, q) / 4;
            record(
                format!("u_{}", (n - 1) / 2),
                "q^floor((n+1)/4) = eps' mod 4",
                ambient,
                cent,
            )
        }
    })
}

/// Root system type of a simple algebraic group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RootType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    G2,
}

/// Dimension, number of positive roots, and `N_2 = dim - N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RootSystemDatum {
    pub kind: RootType,
    pub dim: u32,
    pub positive_roots: u32,
    pub n2: u32,
}

impl RootSystemDatum {
    pub fn new(kind: RootType) -> Self {
        let (dim, positive_roots) = match kind {
            RootType::A(l) => ((l + 1) * (l + 1) - 1, l * (l + 1) / 2),
            RootType::B(m) | RootType::C(m) => (2 * m * m + m, m * m),
            RootType::D(m) => (2 * m * m - m, m * m - m),
            RootType::G2 => (14, 6),
        };
        RootSystemDatum {
            kind,
            dim,
            positive_roots,
            n2: dim - positive_roots,
        }
    }

    /// Root datum of the natural group of a family in dimension `n`.
    pub fn for_family(family: Family, n: u32) -> Self {
        Self::new(match family {
            Family::Linear | Family::Unitary => RootType::A(n - 1),
            Family::Symplectic => RootType::C(n / 2),
            Family::OmegaPlus | Family::OmegaMinus => RootType::D(n / 2),
            Family::OmegaOdd => RootType::B(n / 2),
        })
    }
}

/// Upper bound `2 (s^N2 + s^(N2-1))` for the involutions in `Aut` of a group
/// of this type over `F_s`.
pub fn aut_i2_upper(datum: &RootSystemDatum, s: u64) -> ExactInt {
    2 * (pow(s, datum.n2) + pow(s, datum.n2 - 1))
}

/// `i_2(S_n) + 1`, the number of elements of order at most 2 in `S_n`.
pub fn sym_involutions_plus1(n: u32) -> ExactInt {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::one());
    for k in 2..=n {
        let next = &cur + (k - 1) * &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// One maximal subgroup type in `PSp_4(q)`, `q = 2^a`, with its counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Psp4Row {
    pub name: String,
    /// Number of `G`-classes of subgroups of this type.
    pub classes: u64,
    #[serde(serialize_with = "crate::exactnum::ser_decimal")]
    pub index: ExactInt,
    #[serde(serialize_with = "crate::exactnum::ser_decimal")]
    pub i2: ExactInt,
    #[serde(serialize_with = "crate::exactnum::ser_decimal")]
    pub i5_upper: ExactInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Psp4Counts {
    pub q: u64,
    pub a: u32,
    #[serde(serialize_with = "crate::exactnum::ser_decimal")]
    pub i2_g: ExactInt,
    #[serde(serialize_with = "crate::exactnum::ser_decimal")]
    pub i5_g_lower: ExactInt,
    pub rows: Vec<Psp4Row>,
}

/// Exact involution counts and order-5 bounds for `PSp_4(2^a)`, `a >= 2`.
///
/// Subfield subgroups `Sp_4(q^(1/t))` get one row per prime `t | a`; there
/// are fewer than `a` such classes in total, so each row carries the whole
/// budget `a - 1` and the bound uses the largest row. The Suzuki subgroup
/// only exists for odd `a`.
pub fn psp4_counts(q: u64) -> Result<Psp4Counts> {
    let (p, a) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if p != 2 || a < 2 {
        return Err(Error::InvalidGroup(format!("PSp_4({q}): need q = 2^a with a >= 2")));
    }
    let qi = |k: u32| pow(q, k);
    let big = |v: u64| BigInt::from(v);
    let qb = big(q);
    let sl2_wreath_i2: ExactInt = qi(4) + qi(3) - &qb - 1;
    let sl2_wreath_i5: ExactInt = 4 * &qb * (qi(3) + 2 * qi(2) + 2 * &qb + 1);
    let sl2_q2_i2: ExactInt = 2 * qi(2) * (qi(2) + 1);

    let mut rows = vec![
        Psp4Row {
            name: "[q^3]:GL_2(q)".into(),
            classes: 2,
            index: (&qb + 1) * (qi(2) + 1),
            i2: (&qb - 1) * (qi(3) + 2 * qi(2) + &qb + 1),
            i5_upper: 2 * qi(3) * (&qb + 1) * (2 * &qb + 5),
        },
        Psp4Row {
            name: "Sp_2(q) wr S_2".into(),
            classes: 1,
            index: qi(2) * (qi(2) + 1) / 2,
            i2: sl2_wreath_i2.clone(),
            i5_upper: sl2_wreath_i5.clone(),
        },
        Psp4Row {
            name: "Sp_2(q^2).2".into(),
            classes: 1,
            index: qi(2) * (qi(2) - 1) / 2,
            i2: sl2_q2_i2.clone(),
            i5_upper: sl2_q2_i2.clone(),
        },
    ];
    for t in factorize_u64(a as u64).primes() {
        let t = u32::try_from(t).expect("prime factor of a u32");
        let s = 1u64 << (a / t);
        let si = |k: u32| pow(s, k);
        rows.push(Psp4Row {
            name: format!("Sp_4(q^(1/{t}))"),
            classes: (a - 1) as u64,
            index: qi(4) * (qi(2) - 1) * (qi(4) - 1) / (si(4) * (si(2) - 1) * (si(4) - 1)),
            i2: (si(2) + 1) * (si(4) - 1),
            i5_upper: si(3) * (si(1) + 1) * (si(2) + 1) * (si(2) + si(1) + 4),
        });
    }
    rows.push(Psp4Row {
        name: "SO_4^+(q)".into(),
        classes: 1,
        index: qi(2) * (qi(2) + 1) / 2,
        i2: sl2_wreath_i2,
        i5_upper: sl2_wreath_i5,
    });
    rows.push(Psp4Row {
        name: "SO_4^-(q)".into(),
        classes: 1,
        index: qi(2) * (qi(2) - 1) / 2,
        i2: sl2_q2_i2.clone(),
        i5_upper: sl2_q2_i2,
    });
    if a % 2 == 1 {
        // sqrt(2q) = 2^((a+1)/2) is an integer for odd a.
        let root_2q = big(1u64 << a.div_ceil(2));
        rows.push(Psp4Row {
            name: "Sz(q)".into(),
            classes: 1,
            index: qi(2) * (&qb + 1) * (qi(2) - 1),
            i2: (&qb - 1) * (qi(2) + 1),
            i5_upper: qi(2) * (&qb + root_2q + 1) * (&qb - 1),
        });
    }
    debug_assert!(rows.iter().all(|r| !r.index.is_zero()));
    Ok(Psp4Counts {
        q,
        a,
        i2_g: (qi(2) + 1) * (qi(4) - 1),
        i5_g_lower: qi(3) * (&qb - 1) * (qi(2) + 1) * (qi(2) - &qb + 4),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: Family, n: u32, q: u64) -> GroupSpec {
        GroupSpec::new(f, n, q).unwrap()
    }

    #[test]
    fn uniform_lower_bound_values() {
        assert_eq!(i2_lower_bound(&spec(Family::Linear, 8, 2)), pow(2, 29));
        assert_eq!(i2_lower_bound(&spec(Family::OmegaMinus, 14, 2)), pow(2, 45));
        assert_eq!(i2_lower_bound(&spec(Family::Symplectic, 4, 4)), BigInt::from(2048));
        // 3^40 / 2 is not an integer; the bound rounds down.
        assert_eq!(i2_lower_bound(&spec(Family::OmegaOdd, 13, 3)), (pow(3, 42) - 1) / 2);
        assert_eq!(i2_lower_bound_rat(&spec(Family::OmegaOdd, 13, 3)), rat(pow(3, 42), 2));
    }

    #[test]
    fn class_psl8_2_is_j4() {
        let rec = involution_class_size_lower(&spec(Family::Linear, 8, 2)).unwrap();
        assert_eq!(rec.label, "j_4");
        let want = order(FormKind::GL, 8, 2) / (pow(2, 16) * order(FormKind::GL, 4, 2));
        assert_eq!(rec.class_size_lower, want);
    }

    #[test]
    fn class_omega_plus_12_2_is_c6() {
        let rec = involution_class_size_lower(&spec(Family::OmegaPlus, 12, 2)).unwrap();
        assert_eq!(rec.label, "c_6");
        assert_eq!(rec.centralizer_bound, pow(2, 20) * BigInt::from(720));
    }

    #[test]
    fn class_sp_q1mod4_is_s() {
        let rec = involution_class_size_lower(&spec(Family::Symplectic, 8, 5)).unwrap();
        assert_eq!(rec.label, "s");
        assert_eq!(rec.centralizer_bound, order(FormKind::GL, 4, 5) * 2);
    }

    #[test]
    fn omega_minus_n2_odd_branches() {
        // q = 5: 5^k = 1 mod 4 always, so u_{n/2-1}.
        let rec = involution_class_size_lower(&spec(Family::OmegaMinus, 10, 5)).unwrap();
        assert_eq!(rec.label, "u_4");
        // q = 3, (n-2)/4 = 2: 9 = 1 mod 4.
        let rec = involution_class_size_lower(&spec(Family::OmegaMinus, 10, 3)).unwrap();
        assert_eq!(rec.label, "u_4");
        // q = 3, (n-2)/4 = 3: 27 = 3 mod 4, so u_{n/2+1}.
        let rec = involution_class_size_lower(&spec(Family::OmegaMinus, 14, 3)).unwrap();
        assert_eq!(rec.label, "u_8");
    }

    #[test]
    fn root_data() {
        let b3 = RootSystemDatum::new(RootType::B(3));
        assert_eq!((b3.dim, b3.positive_roots, b3.n2), (21, 9, 12));
        let a1 = RootSystemDatum::new(RootType::A(1));
        assert_eq!(a1.n2, 2);
        assert_eq!(aut_i2_upper(&a1, 4), BigInt::from(2 * (16 + 4)));
        let d = RootSystemDatum::new(RootType::D(6));
        assert_eq!(d.n2, 36);
        assert_eq!(aut_i2_upper(&d, 3), 2 * (pow(3, 36) + pow(3, 35)));
    }

    #[test]
    fn telephone_numbers() {
        let t: Vec<_> = (0..=6).map(sym_involutions_plus1).collect();
        let want = [1, 1, 2, 4, 10, 26, 76];
        assert!(t.iter().zip(want).all(|(a, b)| *a == BigInt::from(b)));
        assert_eq!(sym_involutions_plus1(12), BigInt::from(140152));
        assert_eq!(sym_involutions_plus1(12) * 2048, BigInt::from(16384 * 17519));
    }

    #[test]
    fn psp4_q4() {
        let c = psp4_counts(4).unwrap();
        assert_eq!(c.i2_g, BigInt::from(4335));
        assert_eq!(c.i5_g_lower, BigInt::from(52224));
        let wreath = c.rows.iter().find(|r| r.name.contains("wr")).unwrap();
        assert_eq!(wreath.i2, BigInt::from(256 + 64 - 4 - 1));
        // a = 2 is even: no Suzuki subgroup, one subfield row (t = 2).
        assert!(c.rows.iter().all(|r| r.name != "Sz(q)"));
        assert_eq!(c.rows.iter().filter(|r| r.name.starts_with("Sp_4")).count(), 1);
        assert!(psp4_counts(2).is_err());
        assert!(psp4_counts(9).is_err());
    }
}
