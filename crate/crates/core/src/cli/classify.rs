//! Which argument covers a given finite simple group.
//!
//! A static lookup: the only computation is the choice of `e` and `r` for
//! classical groups of dimension at least 8.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{prime_power, select_r};
use crate::grouporders::{Family, GroupSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupName {
    Alternating(u32),
    Sporadic(&'static str),
    Exceptional { kind: &'static str, q: u64 },
    Classical(GroupSpec),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    Alternating,
    Sporadic,
    Exceptional,
    /// Small classical groups known to be `(2,3)`-generated.
    SmallClassical,
    /// Small classical groups that are `(2,5)`- or `(2,7)`-generated instead.
    SmallClassicalException,
    /// `PSp_4(2^a)`, `a > 1`, and `PSp_4(3^a)`: `(2,5)`-generated.
    Symplectic4,
    /// Dimension at least 8: `(2,r)`-generated with `r` a primitive prime divisor.
    PrimitivePrime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coverage {
    pub group: String,
    pub case: Case,
    /// The prime `p` with `G` `(2,p)`-generated.
    pub p: String,
    /// `q^e - 1` has `p` as a primitive prime divisor (large classical groups only).
    pub e: Option<u32>,
}

const SPORADIC: [&str; 26] = [
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "HS", "McL", "Suz", "He", "Ru", "Co1", "Co2", "Co3",
    "Fi22", "Fi23", "Fi24'", "ON", "Ly", "HN", "Th", "B", "M",
];

const EXCEPTIONAL: [&str; 11] = ["2B2", "Sz", "2G2", "2F4", "3D4", "G2", "F4", "2E6", "E6", "E7", "E8"];

/// Classical prefixes, longest first so that `POmega+` wins over `POmega`.
const CLASSICAL: [(&str, Family); 21] = [
    ("pomega+", Family::OmegaPlus),
    ("pomega-", Family::OmegaMinus),
    ("pomega", Family::OmegaOdd),
    ("omega+", Family::OmegaPlus),
    ("omega-", Family::OmegaMinus),
    ("omega", Family::OmegaOdd),
    ("pω+", Family::OmegaPlus),
    ("pω-", Family::OmegaMinus),
    ("pω", Family::OmegaOdd),
    ("ω+", Family::OmegaPlus),
    ("ω-", Family::OmegaMinus),
    ("ω", Family::OmegaOdd),
    ("o+", Family::OmegaPlus),
    ("o-", Family::OmegaMinus),
    ("o", Family::OmegaOdd),
    ("psl", Family::Linear),
    ("psu", Family::Unitary),
    ("psp", Family::Symplectic),
    ("l", Family::Linear),
    ("u", Family::Unitary),
    ("s", Family::Symplectic),
];

/// Splits `"3(4)"` into `(3, 4)`.
fn dim_and_field(rest: &str) -> Option<(u32, u64)> {
    let (n, q) = rest.strip_suffix(')')?.split_once('(')?;
    Some((n.parse().ok()?, q.parse().ok()?))
}

fn field(rest: &str) -> Option<u64> {
    rest.strip_prefix('(')?.strip_suffix(')')?.parse().ok()
}

pub fn parse_group_name(name: &str) -> Result<GroupName> {
    let compact: String = name.chars().filter(|c| !c.is_whitespace() && *c != '_').collect();
    let unknown = || Error::UnknownName(name.to_string());
    if let Some(s) = SPORADIC.iter().find(|s| s.eq_ignore_ascii_case(&compact)) {
        return Ok(GroupName::Sporadic(s));
    }
    if compact.eq_ignore_ascii_case("Fi24") {
        return Ok(GroupName::Sporadic("Fi24'"));
    }
    for kind in EXCEPTIONAL {
        if let Some(rest) = compact.strip_prefix(kind) {
            let q = field(rest).ok_or_else(unknown)?;
            prime_power(q).ok_or(Error::NotPrimePower(q))?;
            let kind = if kind == "2B2" { "Sz" } else { kind };
            if kind == "Sz" && !(q >= 8 && q.is_power_of_two() && q.trailing_zeros() % 2 == 1) {
                return Err(Error::InvalidGroup(format!("Sz({q}) needs q = 2^(2m+1) >= 8")));
            }
            return Ok(GroupName::Exceptional { kind, q });
        }
    }
    for prefix in ["Alt", "A"] {
        if let Some(n) = compact.strip_prefix(prefix).and_then(|r| r.parse::<u32>().ok()) {
            if n < 5 {
                return Err(Error::InvalidGroup(format!("A_{n} is not simple")));
            }
            return Ok(GroupName::Alternating(n));
        }
    }
    let lower = compact.to_lowercase();
    for (prefix, family) in CLASSICAL {
        if let Some(rest) = lower.strip_prefix(prefix) {
            if let Some((n, q)) = dim_and_field(rest) {
                return Ok(GroupName::Classical(GroupSpec::new(family, n, q)?));
            }
        }
    }
    Err(unknown())
}

fn small_exception(spec: &GroupSpec) -> Option<u64> {
    match (spec.family, spec.n, spec.q) {
        (Family::Linear, 2, 9) | (Family::Linear, 4, 2) => Some(5),
        (Family::Linear, 3, 4) => Some(7),
        (Family::Unitary, 4, 2) | (Family::Unitary, 5, 2) => Some(5),
        (Family::Unitary, 3, 3) | (Family::Unitary, 3, 5) | (Family::Unitary, 4, 3) => Some(7),
        (Family::OmegaPlus, 8, 2) => Some(5),
        _ => None,
    }
}

fn small_classical(spec: &GroupSpec) -> bool {
    match spec.family {
        Family::Linear | Family::Unitary => spec.n <= 7,
        Family::Symplectic => spec.n <= 6,
        Family::OmegaOdd => spec.n == 7,
        Family::OmegaPlus | Family::OmegaMinus => false,
    }
}

pub fn classify(name: &str) -> Result<Coverage> {
    let parsed = parse_group_name(name)?;
    let record = |group: String, case, p: u64| Coverage {
        group,
        case,
        p: p.to_string(),
        e: None,
    };
    Ok(match parsed {
        GroupName::Alternating(n) => {
            let p = if (6..=8).contains(&n) { 5 } else { 3 };
            record(format!("A_{n}"), Case::Alternating, p)
        }
        GroupName::Sporadic(s) => {
            let p = match s {
                "M11" => 11,
                "M22" | "McL" => 5,
                "M23" => 23,
                _ => 3,
            };
            record(s.to_string(), Case::Sporadic, p)
        }
        GroupName::Exceptional { kind, q } => {
            let p = if kind == "Sz" { 5 } else { 3 };
            record(format!("{kind}({q})"), Case::Exceptional, p)
        }
        GroupName::Classical(spec) => {
            if let Some(p) = small_exception(&spec) {
                record(spec.to_string(), Case::SmallClassicalException, p)
            } else if spec.family == Family::Symplectic && spec.n == 4 && (spec.p == 2 || spec.p == 3) {
                record(spec.to_string(), Case::Symplectic4, 5)
            } else if small_classical(&spec) {
                record(spec.to_string(), Case::SmallClassical, 3)
            } else {
                let w = select_r(&spec)?;
                Coverage {
                    group: spec.to_string(),
                    case: Case::PrimitivePrime,
                    p: w.r.to_string(),
                    e: Some(w.e),
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        let c = classify("PSL3(4)").unwrap();
        assert_eq!((c.case, c.p.as_str()), (Case::SmallClassicalException, "7"));
        let c = classify("PSp4(9)").unwrap();
        assert_eq!((c.case, c.p.as_str()), (Case::Symplectic4, "5"));
        let c = classify("PSU8(2)").unwrap();
        assert_eq!((c.case, c.e, c.p.as_str()), (Case::PrimitivePrime, Some(14), "43"));
        assert_eq!(classify("M23").unwrap().p, "23");
        assert_eq!(classify("A7").unwrap().p, "5");
        assert_eq!(classify("Sz(32)").unwrap().p, "5");
        assert_eq!(classify("E8(2)").unwrap().case, Case::Exceptional);
        assert_eq!(classify("POmega+8(2)").unwrap().p, "5");
        assert_eq!(classify("L_7(3)").unwrap().case, Case::SmallClassical);
        assert_eq!(classify("Omega7(5)").unwrap().case, Case::SmallClassical);
    }

    #[test]
    fn rejects() {
        assert!(matches!(classify("Foo(3)"), Err(Error::UnknownName(_))));
        assert!(classify("PSL3(6)").is_err());
        assert!(classify("Sz(4)").is_err());
        assert!(classify("A4").is_err());
    }
}
