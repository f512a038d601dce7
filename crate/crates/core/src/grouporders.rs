//! Classical group families, their orders, and the small structural constants
//! (exponent `e`, similarity index `e_G`, `a_eps`, `z_eps`) used by the bounds.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{gcd, pow, prime_power, ExactInt};

/// The six families of simple classical groups handled here.
///
/// `Linear` and `Unitary` are the two signs of `PSL^eps`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    #[serde(rename = "psl")]
    Linear,
    #[serde(rename = "psu")]
    Unitary,
    #[serde(rename = "psp")]
    Symplectic,
    #[serde(rename = "omega+")]
    OmegaPlus,
    #[serde(rename = "omega-")]
    OmegaMinus,
    #[serde(rename = "omega-odd")]
    OmegaOdd,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Linear,
        Family::Unitary,
        Family::Symplectic,
        Family::OmegaPlus,
        Family::OmegaMinus,
        Family::OmegaOdd,
    ];

    /// The command-line spelling.
    pub fn flag(self) -> &'static str {
        match self {
            Family::Linear => "psl",
            Family::Unitary => "psu",
            Family::Symplectic => "psp",
            Family::OmegaPlus => "omega+",
            Family::OmegaMinus => "omega-",
            Family::OmegaOdd => "omega-odd",
        }
    }

    /// Sign `eps` for the families that carry one (`PSL^eps`, `POmega^eps`).
    pub fn sign(self) -> Option<i64> {
        match self {
            Family::Linear | Family::OmegaPlus => Some(1),
            Family::Unitary | Family::OmegaMinus => Some(-1),
            _ => None,
        }
    }

    pub fn is_orthogonal(self) -> bool {
        matches!(self, Family::OmegaPlus | Family::OmegaMinus | Family::OmegaOdd)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.flag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown family `{s}`")))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.flag())
    }
}

/// A simple classical group `family_n(q)` with `q = p^a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GroupSpec {
    pub family: Family,
    pub n: u32,
    pub q: u64,
    pub p: u64,
    pub a: u32,
}

impl GroupSpec {
    /// Validates the field size, the dimension parity and simplicity.
    pub fn new(family: Family, n: u32, q: u64) -> Result<Self> {
        let (p, a) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let spec = GroupSpec { family, n, q, p, a };
        let bad = |why: &str| Err(Error::InvalidGroup(format!("{spec}: {why}")));
        match family {
            Family::Linear => {
                if n < 2 {
                    return bad("dimension must be at least 2");
                }
                if n == 2 && q <= 3 {
                    return bad("not simple");
                }
            }
            Family::Unitary => {
                if n < 3 {
                    return bad("dimension must be at least 3");
                }
                if n == 3 && q == 2 {
                    return bad("not simple");
                }
            }
            Family::Symplectic => {
                if n < 4 || n % 2 == 1 {
                    return bad("dimension must be even and at least 4");
                }
                if n == 4 && q == 2 {
                    return bad("not simple");
                }
            }
            Family::OmegaPlus | Family::OmegaMinus => {
                if n < 8 || n % 2 == 1 {
                    return bad("dimension must be even and at least 8");
                }
            }
            Family::OmegaOdd => {
                if n < 7 || n.is_multiple_of(2) {
                    return bad("dimension must be odd and at least 7");
                }
                if q.is_multiple_of(2) {
                    return bad("q must be odd");
                }
            }
        }
        Ok(spec)
    }

    /// `delta = 2` for unitary groups, 1 otherwise.
    pub fn delta(&self) -> u32 {
        if self.family == Family::Unitary {
            2
        } else {
            1
        }
    }

    pub fn q_odd(&self) -> bool {
        self.q % 2 == 1
    }

    /// `n >= 8` and not `POmega+_8(2)`.
    pub fn in_main_scope(&self) -> bool {
        self.n >= 8 && !(self.family == Family::OmegaPlus && self.n == 8 && self.q == 2)
    }

    pub fn require_main_scope(&self) -> Result<()> {
        if self.in_main_scope() {
            Ok(())
        } else {
            Err(Error::OutOfScope(format!(
                "{self} (need dimension at least 8, excluding POmega+_8(2))"
            )))
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, q) = (self.n, self.q);
        match self.family {
            Family::Linear => write!(f, "PSL_{n}({q})"),
            Family::Unitary => write!(f, "PSU_{n}({q})"),
            Family::Symplectic => write!(f, "PSp_{n}({q})"),
            Family::OmegaPlus => write!(f, "POmega+_{n}({q})"),
            Family::OmegaMinus => write!(f, "POmega-_{n}({q})"),
            Family::OmegaOdd => write!(f, "POmega_{n}({q})"),
        }
    }
}

/// Which flavour of orthogonal group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrthSign {
    Plus,
    Minus,
    /// Odd dimension, `q` odd.
    Odd,
}

/// Linear, isometry and derived groups whose orders are needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    GL,
    GU,
    Sp,
    O(OrthSign),
    SO(OrthSign),
    Omega(OrthSign),
}

fn prod(range: std::ops::RangeInclusive<u32>, f: impl Fn(u32) -> ExactInt) -> ExactInt {
    range.map(f).fold(BigInt::one(), |acc, x| acc * x)
}

fn sign_value(s: OrthSign) -> i64 {
    match s {
        OrthSign::Plus => 1,
        OrthSign::Minus => -1,
        OrthSign::Odd => 0,
    }
}

/// Order of a classical matrix group of dimension `n` over `F_q`
/// (over `F_{q^2}` for `GU`).
pub fn form_group_order(kind: FormKind, n: u32, q: u64) -> Result<ExactInt> {
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let qi = |k: u32| pow(q, k);
    let parity = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidGroup(format!(
                "{what} needs a different dimension parity (n = {n})"
            )))
        }
    };
    Ok(match kind {
        FormKind::GL => qi(n * (n.saturating_sub(1)) / 2) * prod(1..=n, |i| qi(i) - 1),
        FormKind::GU => {
            qi(n * (n.saturating_sub(1)) / 2) * prod(1..=n, |i| if i % 2 == 0 { qi(i) - 1 } else { qi(i) + 1 })
        }
        FormKind::Sp => {
            parity(n.is_multiple_of(2), "Sp")?;
            let m = n / 2;
            qi(m * m) * prod(1..=m, |i| qi(2 * i) - 1)
        }
        FormKind::O(s) => match s {
            OrthSign::Odd => {
                parity(n % 2 == 1, "O")?;
                if q.is_multiple_of(2) {
                    return Err(Error::InvalidGroup("odd-dimensional O needs q odd".into()));
                }
                let m = n / 2;
                2 * qi(m * m) * prod(1..=m, |i| qi(2 * i) - 1)
            }
            _ => {
                parity(n.is_multiple_of(2) && n >= 2, "O")?;
                let m = n / 2;
                2 * qi(m * (m - 1)) * (qi(m) - sign_value(s)) * prod(1..=m - 1, |i| qi(2 * i) - 1)
            }
        },
        FormKind::SO(s) => form_group_order(FormKind::O(s), n, q)? / gcd(2, q - 1),
        FormKind::Omega(s) => {
            let o = form_group_order(FormKind::O(s), n, q)?;
            if q.is_multiple_of(2) {
                o / 2
            } else {
                o / 4
            }
        }
    })
}

/// Order of the simple group.
pub fn simple_order(spec: &GroupSpec) -> ExactInt {
    let GroupSpec { family, n, q, .. } = *spec;
    let order = |k| form_group_order(k, n, q).expect("validated spec");
    match family {
        Family::Linear => order(FormKind::GL) / ((q - 1) * gcd(n as u64, q - 1)),
        Family::Unitary => order(FormKind::GU) / ((q + 1) * gcd(n as u64, q + 1)),
        Family::Symplectic => order(FormKind::Sp) / gcd(2, q - 1),
        Family::OmegaPlus | Family::OmegaMinus => {
            let sign = if family == Family::OmegaPlus {
                OrthSign::Plus
            } else {
                OrthSign::Minus
            };
            let (_, z) = center_constants(spec).expect("orthogonal");
            order(FormKind::Omega(sign)) / z
        }
        Family::OmegaOdd => order(FormKind::Omega(OrthSign::Odd)),
    }
}

/// The exponent `e` with `r` a primitive prime divisor of `q^e - 1`.
pub fn primitive_exponent(spec: &GroupSpec) -> u32 {
    let n = spec.n;
    match spec.family {
        Family::Linear | Family::Symplectic | Family::OmegaMinus => n,
        Family::OmegaPlus => n - 2,
        Family::OmegaOdd => n - 1,
        Family::Unitary if n % 2 == 1 => 2 * n,
        Family::Unitary => 2 * n - 2,
    }
}

/// `(a_eps, z_eps)`: the index of `POmega` in `PSO` and the order of the
/// centre of `Omega`, for even-dimensional orthogonal groups.
///
/// Both equal 2 exactly when `q` is odd and `q^(n/2) = eps (mod 4)`, i.e.
/// when `-1` lies in `Omega`.
pub fn center_constants(spec: &GroupSpec) -> Result<(u64, u64)> {
    let eps = match spec.family {
        Family::OmegaPlus => 1,
        Family::OmegaMinus => 3,
        _ => {
            return Err(Error::InvalidGroup(format!(
                "{spec}: a_eps and z_eps are defined for even-dimensional orthogonal groups"
            )))
        }
    };
    if spec.q.is_multiple_of(2) {
        return Ok((1, 1));
    }
    // q^(n/2) mod 4 is q mod 4 raised to n/2, and q mod 4 is 1 or 3.
    let q4 = spec.q % 4;
    let power = if q4 == 1 || (spec.n / 2).is_multiple_of(2) {
        1
    } else {
        3
    };
    Ok(if power == eps { (2, 2) } else { (1, 1) })
}

/// `e_G`: the index of `G` in the projective similarity group of its type.
pub fn similarity_index(spec: &GroupSpec) -> u64 {
    let (n, q) = (spec.n as u64, spec.q);
    match spec.family {
        Family::Linear => gcd(n, q - 1),
        Family::Unitary => gcd(n, q + 1),
        Family::Symplectic => gcd(2, q - 1),
        Family::OmegaPlus | Family::OmegaMinus => {
            let (a, _) = center_constants(spec).expect("orthogonal");
            a * gcd(2, q - 1).pow(2)
        }
        Family::OmegaOdd => 2,
    }
}

/// The constants bundled for reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Constants {
    pub delta: u32,
    pub e: u32,
    pub e_g: u64,
    pub a_eps: u64,
    pub z_eps: u64,
}

pub fn constants(spec: &GroupSpec) -> Constants {
    let (a_eps, z_eps) = center_constants(spec).unwrap_or((1, 1));
    Constants {
        delta: spec.delta(),
        e: primitive_exponent(spec),
        e_g: similarity_index(spec),
        a_eps,
        z_eps,
    }
}

/// Is `v` divisible by `d`? Small helper for invariant checks.
pub fn divides(d: &ExactInt, v: &ExactInt) -> bool {
    v.is_multiple_of(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: Family, n: u32, q: u64) -> GroupSpec {
        GroupSpec::new(f, n, q).unwrap()
    }

    #[test]
    fn matrix_group_orders() {
        assert_eq!(form_group_order(FormKind::Sp, 4, 2).unwrap(), BigInt::from(720));
        assert_eq!(form_group_order(FormKind::GL, 1, 7).unwrap(), BigInt::from(6));
        assert_eq!(form_group_order(FormKind::GU, 2, 2).unwrap(), BigInt::from(18));
        assert_eq!(form_group_order(FormKind::GL, 2, 2).unwrap(), BigInt::from(6));
        assert!(form_group_order(FormKind::Sp, 5, 2).is_err());
        assert!(form_group_order(FormKind::GL, 3, 6).is_err());
    }

    #[test]
    fn simple_orders_against_known_values() {
        let cases: [(Family, u32, u64, u128); 10] = [
            (Family::Linear, 2, 7, 168),
            (Family::Linear, 2, 9, 360),
            (Family::Linear, 3, 4, 20160),
            (Family::Symplectic, 4, 3, 25920),
            (Family::Unitary, 3, 3, 6048),
            (Family::Unitary, 4, 2, 25920),
            (Family::OmegaPlus, 8, 2, 174182400),
            (Family::OmegaPlus, 8, 3, 4952179814400),
            (Family::OmegaMinus, 8, 3, 10151968619520),
            (Family::OmegaOdd, 7, 3, 4585351680),
        ];
        for (f, n, q, want) in cases {
            assert_eq!(simple_order(&spec(f, n, q)), BigInt::from(want), "{f} {n} {q}");
        }
    }

    #[test]
    fn rejects_invalid_specs() {
        assert!(matches!(
            GroupSpec::new(Family::Linear, 8, 6),
            Err(Error::NotPrimePower(6))
        ));
        assert!(GroupSpec::new(Family::Linear, 2, 2).is_err());
        assert!(GroupSpec::new(Family::Symplectic, 9, 2).is_err());
        assert!(GroupSpec::new(Family::OmegaOdd, 9, 4).is_err());
        assert!(GroupSpec::new(Family::OmegaPlus, 9, 3).is_err());
        assert!(!spec(Family::OmegaPlus, 8, 2).in_main_scope());
        assert!(spec(Family::OmegaPlus, 8, 3).in_main_scope());
        assert!(!spec(Family::Linear, 7, 2).in_main_scope());
    }

    #[test]
    fn exponent_table() {
        assert_eq!(primitive_exponent(&spec(Family::OmegaPlus, 16, 2)), 14);
        assert_eq!(primitive_exponent(&spec(Family::Unitary, 9, 2)), 18);
        assert_eq!(primitive_exponent(&spec(Family::Unitary, 8, 2)), 14);
        assert_eq!(primitive_exponent(&spec(Family::Symplectic, 8, 3)), 8);
        assert_eq!(primitive_exponent(&spec(Family::OmegaOdd, 13, 3)), 12);
    }

    #[test]
    fn structural_constants() {
        assert_eq!(similarity_index(&spec(Family::Linear, 8, 3)), 2);
        assert_eq!(similarity_index(&spec(Family::Symplectic, 10, 2)), 1);
        assert_eq!(center_constants(&spec(Family::OmegaPlus, 12, 3)).unwrap(), (2, 2));
        assert_eq!(similarity_index(&spec(Family::OmegaPlus, 12, 3)), 8);
        assert_eq!(center_constants(&spec(Family::OmegaMinus, 10, 3)).unwrap(), (2, 2));
        assert_eq!(center_constants(&spec(Family::OmegaMinus, 8, 3)).unwrap(), (1, 1));
        assert_eq!(center_constants(&spec(Family::OmegaPlus, 10, 4)).unwrap(), (1, 1));
        assert!(center_constants(&spec(Family::Linear, 8, 3)).is_err());
    }

    #[test]
    fn family_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.flag().parse::<Family>().unwrap(), f);
        }
        assert!("gl".parse::<Family>().is_err());
    }
}
