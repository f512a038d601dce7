//! Exact upper bounds for `Q_2(G, x)` and `Q_{2,p}(G)`.
//!
//! A bound is a sum over maximal subgroups `M` containing `x`:
//! `c_M * |N_G(<x>)| / |N_M(<x>)| * i_2(M) / i_2(G)`, each factor replaced by
//! the catalog's bound. Totals are exact rationals; the verdict compares the
//! total with 1 exactly. An inconclusive verdict only says that this
//! bounding method fails for the group, not that the group fails to be
//! generated.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::catalog::{
    alternating_socle_classes, geometric_candidates_with, in_small_n_list, normalizer_order, sclass_cap,
    sclass_feasible, small_n_sclass, NormalizerBound, Source, WreathBound,
};
use crate::error::{Error, Result};
use crate::exactnum::{
    approx_f64, factorial, format_rat, gcd, pow, pow_rat, rat, rat_int, select_r, Enclosure, ExactInt, ExactRat,
    PrimitivePrimeWitness,
};
use crate::grouporders::{Family, GroupSpec};
use crate::involutions::{i2_lower_bound_rat, involution_class_size_lower, psp4_counts};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The total is strictly below 1.
    Certified,
    /// The total is at least 1: this method cannot decide the group.
    Inconclusive,
}

impl Verdict {
    pub fn from_total(total: &ExactRat) -> Self {
        if *total < ExactRat::one() {
            Verdict::Certified
        } else {
            Verdict::Inconclusive
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Certified => "certified",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Which lower bound for `i_2(G)` sits in the denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Denominator {
    /// The uniform bound `I_2(G)`.
    I2LowerBound,
    /// The size of one explicit involution class.
    ClassSize,
}

/// Which evaluator produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Generic,
    SmallN,
}

fn ser_rat<S: Serializer>(v: &ExactRat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rat(v))
}

/// One summand of the bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundTerm {
    pub sigma: u8,
    pub source: Source,
    pub label: String,
    /// `c_M`, or the class cap for `S`-subgroups (which may be fractional).
    #[serde(serialize_with = "ser_rat")]
    pub multiplicity: ExactRat,
    /// `|N_G(<x>)|` over the normalizer floor: conjugates of `M` containing `x`.
    #[serde(serialize_with = "ser_rat")]
    pub count_factor: ExactRat,
    /// `i_2(M)` bound over the `i_2(G)` lower bound.
    #[serde(serialize_with = "ser_rat")]
    pub involution_ratio: ExactRat,
    #[serde(serialize_with = "ser_rat")]
    pub contribution: ExactRat,
}

impl BoundTerm {
    fn new(
        sigma: u8,
        source: Source,
        label: String,
        multiplicity: ExactRat,
        count_factor: ExactRat,
        involution_ratio: ExactRat,
    ) -> Self {
        let contribution = &multiplicity * &count_factor * &involution_ratio;
        BoundTerm {
            sigma,
            source,
            label,
            multiplicity,
            count_factor,
            involution_ratio,
            contribution,
        }
    }
}

fn ser_sigmas<S: Serializer>(v: &BTreeMap<u8, ExactRat>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut m = s.serialize_map(Some(v.len()))?;
    for (k, x) in v {
        m.serialize_entry(&format!("sigma_{k}"), &format_rat(x))?;
    }
    m.end()
}

/// The assembled bound for one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub spec: GroupSpec,
    pub witness: PrimitivePrimeWitness,
    pub method: Method,
    pub denominator: Denominator,
    #[serde(serialize_with = "ser_rat")]
    pub i2_denominator: ExactRat,
    pub terms: Vec<BoundTerm>,
    /// Totals per sum index; every index that can occur is present, zeros included.
    #[serde(serialize_with = "ser_sigmas")]
    pub sigmas: BTreeMap<u8, ExactRat>,
    #[serde(serialize_with = "ser_rat")]
    pub total: ExactRat,
    /// Decimal rendering of `total`. Not authoritative.
    pub total_approx: String,
    pub verdict: Verdict,
}

impl BoundReport {
    fn assemble(
        spec: GroupSpec,
        witness: PrimitivePrimeWitness,
        method: Method,
        denominator: Denominator,
        i2_denominator: ExactRat,
        terms: Vec<BoundTerm>,
    ) -> Self {
        let mut sigmas: BTreeMap<u8, ExactRat> =
            [1, 2, 3, 6, 8, 0].into_iter().map(|k| (k, ExactRat::zero())).collect();
        for t in &terms {
            *sigmas.get_mut(&t.sigma).expect("known sum index") += &t.contribution;
        }
        let total: ExactRat = sigmas.values().sum();
        BoundReport {
            spec,
            witness,
            method,
            denominator,
            i2_denominator,
            terms,
            sigmas,
            total_approx: format!("{:.6e}", approx_f64(&total)),
            verdict: Verdict::from_total(&total),
            total,
        }
    }

    pub fn sigma(&self, k: u8) -> &ExactRat {
        &self.sigmas[&k]
    }

    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One CSV row per term, with a header.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "group",
            "r",
            "sigma",
            "source",
            "label",
            "multiplicity",
            "count_factor",
            "involution_ratio",
            "contribution",
            "contribution_approx",
        ])
        .expect("in-memory write");
        for t in &self.terms {
            w.write_record([
                self.spec.to_string(),
                self.witness.r.to_string(),
                t.sigma.to_string(),
                t.source.to_string(),
                t.label.clone(),
                format_rat(&t.multiplicity),
                format_rat(&t.count_factor),
                format_rat(&t.involution_ratio),
                format_rat(&t.contribution),
                format!("{:.6e}", approx_f64(&t.contribution)),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

/// Switches for the generic evaluator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundOptions {
    /// Drop the non-alternating `S` term when no socle row is consistent with `r`.
    pub drop_infeasible_sigma0: bool,
    /// Only count alternating socles `A_{n+1}`, `A_{n+2}` when `r <= n + 2`,
    /// i.e. when `r` can divide their order at all.
    pub prune_alternating: bool,
    /// For the small-dimensional evaluator: retry with the class-size
    /// denominator when the uniform one does not certify.
    pub class_size_fallback: bool,
    /// Denominator of the generic evaluator.
    pub denominator: Denominator,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions {
            drop_infeasible_sigma0: true,
            prune_alternating: true,
            class_size_fallback: true,
            denominator: Denominator::I2LowerBound,
        }
    }
}

fn denominator_value(spec: &GroupSpec, which: Denominator) -> Result<ExactRat> {
    Ok(match which {
        Denominator::I2LowerBound => i2_lower_bound_rat(spec),
        Denominator::ClassSize => rat_int(involution_class_size_lower(spec)?.class_size_lower),
    })
}

fn geometric_terms(
    spec: &GroupSpec,
    witness: &PrimitivePrimeWitness,
    wreath: WreathBound,
    n_g: &ExactInt,
    i2_g: &ExactRat,
) -> Vec<BoundTerm> {
    geometric_candidates_with(spec, witness, wreath)
        .into_iter()
        .filter(|c| !c.i2_upper.is_zero())
        .map(|c| {
            let count = match &c.normalizer_lower {
                NormalizerBound::Full => ExactRat::one(),
                NormalizerBound::AtLeast(nm) => rat_int(n_g.clone()) / nm,
            };
            BoundTerm::new(
                c.source.sigma(),
                c.source,
                c.type_label,
                rat_int(c.c_m),
                count,
                &c.i2_upper / i2_g,
            )
        })
        .collect()
}

fn r_int(w: &PrimitivePrimeWitness) -> ExactInt {
    BigInt::from(w.r.clone())
}

fn alternating_floor(w: &PrimitivePrimeWitness) -> ExactInt {
    let r = r_int(w);
    &r * (&r - 1) / 2
}

/// The generic evaluator with default options.
pub fn q2_bound(spec: &GroupSpec) -> Result<BoundReport> {
    q2_bound_with(spec, &BoundOptions::default())
}

/// The generic evaluator: geometric rows, plus `S`-subgroups bounded by
/// `C_S` classes with `i_2(M) < q^(2n+4)`, plus alternating socles with
/// `i_2(M) < (n+2)!`.
pub fn q2_bound_with(spec: &GroupSpec, opts: &BoundOptions) -> Result<BoundReport> {
    spec.require_main_scope()?;
    let witness = select_r(spec)?;
    let n_g = normalizer_order(spec);
    let i2_g = denominator_value(spec, opts.denominator)?;
    let mut terms = geometric_terms(spec, &witness, WreathBound::Order, &n_g, &i2_g);

    let n_g_rat = rat_int(n_g.clone());
    let cap = sclass_cap(spec)?;
    let (feasible, _) = sclass_feasible(spec, &witness);
    if feasible || !opts.drop_infeasible_sigma0 {
        let i2_m = pow_rat(spec.q, 2 * spec.n as i64 + 4);
        terms.push(BoundTerm::new(
            0,
            Source::S,
            "non-alternating socle".into(),
            cap,
            &n_g_rat / rat_int(r_int(&witness)),
            i2_m / &i2_g,
        ));
    }
    let alt = alternating_socle_classes(spec);
    let r_fits = witness.r <= (spec.n + 2).into();
    if alt > 0 && (r_fits || !opts.prune_alternating) {
        terms.push(BoundTerm::new(
            0,
            Source::S,
            format!("A_{} or A_{}", spec.n + 1, spec.n + 2),
            rat_int(alt),
            &n_g_rat / rat_int(alternating_floor(&witness)),
            rat_int(factorial(spec.n + 2)) / &i2_g,
        ));
    }
    Ok(BoundReport::assemble(
        *spec,
        witness,
        Method::Generic,
        opts.denominator,
        i2_g,
        terms,
    ))
}

/// The small-dimensional evaluator for the groups of [`in_small_n_list`].
///
/// Wreath products are bounded through `i_2(S_n) + 1`, `S`-subgroups come
/// from the explicit socle rows. If the uniform denominator does not
/// certify, the bound is recomputed with an explicit class size.
pub fn q2_bound_small_n(spec: &GroupSpec) -> Result<BoundReport> {
    q2_bound_small_n_with(spec, &BoundOptions::default())
}

pub fn q2_bound_small_n_with(spec: &GroupSpec, opts: &BoundOptions) -> Result<BoundReport> {
    if !in_small_n_list(spec) {
        return Err(Error::OutOfScope(format!(
            "{spec} is not one of the small-dimensional cases"
        )));
    }
    let report = small_n_with_denominator(spec, Denominator::I2LowerBound)?;
    if report.is_certified() || !opts.class_size_fallback {
        return Ok(report);
    }
    small_n_with_denominator(spec, Denominator::ClassSize)
}

fn small_n_with_denominator(spec: &GroupSpec, which: Denominator) -> Result<BoundReport> {
    let witness = select_r(spec)?;
    let n_g = normalizer_order(spec);
    let i2_g = denominator_value(spec, which)?;
    let mut terms = geometric_terms(spec, &witness, WreathBound::Involutions, &n_g, &i2_g);
    let n_g_rat = rat_int(n_g);
    for row in small_n_sclass(spec, &witness)? {
        let floor = if row.alternating {
            alternating_floor(&witness)
        } else {
            r_int(&witness)
        };
        let i2_m = row.i2_upper.expect("explicit rows carry an involution bound");
        terms.push(BoundTerm::new(
            0,
            Source::S,
            row.socle,
            row.cap,
            &n_g_rat / rat_int(floor),
            i2_m / &i2_g,
        ));
    }
    Ok(BoundReport::assemble(
        *spec,
        witness,
        Method::SmallN,
        which,
        i2_g,
        terms,
    ))
}

/// Smallest dimension from which every group of the family is expected to
/// certify, either generically or through the small-dimensional evaluator.
pub fn certification_threshold(family: Family) -> u32 {
    match family {
        Family::Linear => 9,
        Family::Symplectic => 12,
        Family::OmegaPlus | Family::OmegaMinus => 14,
        Family::OmegaOdd => 13,
        Family::Unitary => 8,
    }
}

pub fn expected_certified(spec: &GroupSpec) -> bool {
    spec.n >= certification_threshold(spec.family)
}

/// The small-dimensional evaluator for listed groups, the generic one otherwise.
pub fn evaluate(spec: &GroupSpec, opts: &BoundOptions) -> Result<BoundReport> {
    if in_small_n_list(spec) {
        q2_bound_small_n_with(spec, opts)
    } else {
        q2_bound_with(spec, opts)
    }
}

fn check_omega_minus_closed_form(n: u32, q: u64) -> Result<()> {
    if n % 2 == 1 || n < 14 {
        return Err(Error::InvalidGroup(format!(
            "closed forms need n even and n >= 14, got {n}"
        )));
    }
    if crate::exactnum::prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    Ok(())
}

/// `8n(q^2+1)/q^(n^2/8+1) + 16(q+1)^2/q^(n^2/8-n/4+1)`, an over-estimate of
/// the `C_3` sum for `POmega^-_n(q)`.
///
/// `n^2/8` is a half-integer when `n = 2 mod 4`, hence the enclosure.
pub fn closed_form_sigma3_omegaminus(n: u32, q: u64) -> Result<Enclosure> {
    check_omega_minus_closed_form(n, q)?;
    let m = (n / 2) as i64;
    let first = Enclosure::pow_half(q, -(m * m + 2)).scale(&rat_int(8 * n as u64 * (q * q + 1)));
    let second = pow_rat(q, -(m * (m - 1) / 2 + 1)) * rat_int(16 * (q + 1) * (q + 1));
    Ok(first.add_exact(&second))
}

/// `8(2,q-1)(n^2+21n/4-1)(q^(n/2)+1)/q^(n^2/4-2n-5)
///  + 16(2,q-1)(n+2)!(q^(n/2)+1)/(n q^(n^2/4-1))`, an over-estimate of the
/// `S` sum for `POmega^-_n(q)`.
pub fn closed_form_sigma0_omegaminus(n: u32, q: u64) -> Result<Enclosure> {
    check_omega_minus_closed_form(n, q)?;
    let (ni, d) = (n as i64, gcd(2, q - 1));
    let qn2 = rat_int(pow(q, n / 2) + 1u32);
    let classes = rat(4 * ni * ni + 21 * ni - 4, 4);
    let first = rat_int(8 * d) * classes * &qn2 * pow_rat(q, -(ni * ni / 4 - 2 * ni - 5));
    let second = rat_int(16 * d) * rat_int(factorial(n + 2)) * &qn2 * pow_rat(q, -(ni * ni / 4 - 1)) / rat_int(ni);
    Ok(Enclosure::exact(first + second))
}

/// The four closed forms bounding the sums for `POmega+_12(q)`, keyed by
/// sum index. Valid for odd `q`.
pub fn omega_plus12_closed_forms(q: u64) -> BTreeMap<u8, ExactRat> {
    let qr = rat_int(q);
    let q1 = &qr + rat_int(1);
    let q5 = pow_rat(q, 5) + rat_int(1);
    let d3 = rat_int(gcd(2, q - 1).pow(3));
    BTreeMap::from([
        (
            1,
            rat_int(16) * &q1 * &q1 * pow_rat(q, -11) + rat_int(64) * &q1 * &q1 / (d3 * pow_rat(q, 6)),
        ),
        (2, rat_int(65536 * 17519) * &q1 * &q5 * pow_rat(q, -35)),
        (3, rat_int(32) * &q1 * &q1 * pow_rat(q, -16)),
        (0, rat_int(8 * 5 * 11 * 3593) * &q5 * &q1 * pow_rat(q, -35)),
    ])
}

/// Data of the `PSL_3(4)` computation with `p = 7`: three classes of
/// `PSL_2(7)` of index 120.
pub const PSL34_SUBGROUPS: u64 = 3 * 120;
pub const PSL34_I2: (u64, u64) = (21, 315);
pub const PSL34_I7: (u64, u64) = (48, 5760);

/// `Q_{2,7}(PSL_3(4))` bounded by its only maximal subgroups of order divisible by 7.
pub fn q2p_bound_psl34() -> ExactRat {
    rat_int(PSL34_SUBGROUPS) * rat(PSL34_I2.0, PSL34_I2.1) * rat(PSL34_I7.0, PSL34_I7.1)
}

/// One maximal subgroup type in the `PSp_4(2^a)` sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Psp4Term {
    pub name: String,
    #[serde(serialize_with = "ser_rat")]
    pub contribution: ExactRat,
}

/// `Q_{2,5}(PSp_4(q))` for `q = 2^a`, assembled term by term and compared
/// with the single closed-form over-estimate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Psp4Bound {
    pub q: u64,
    pub terms: Vec<Psp4Term>,
    #[serde(serialize_with = "ser_rat")]
    pub assembled: ExactRat,
    #[serde(serialize_with = "ser_enclosure")]
    pub displayed: Enclosure,
    /// `displayed - assembled`; zero when the two agree.
    #[serde(serialize_with = "ser_enclosure")]
    pub gap: Enclosure,
    pub verdict: Verdict,
}

fn ser_enclosure<S: Serializer>(v: &Enclosure, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// The bound `sum |G:M| * classes * i_2(M) i_5(M) / (i_2(G) i_5(G))`.
///
/// Subfield subgroups `Sp_4(q^(1/t))` contribute at most `a - 1` classes in
/// total; the largest per-class term over the primes `t | a` is used.
pub fn q25_bound_psp4(q: u64) -> Result<Psp4Bound> {
    let counts = psp4_counts(q)?;
    let den = rat_int(&counts.i2_g * &counts.i5_g_lower);
    let mut terms: Vec<Psp4Term> = Vec::new();
    let mut subfield: Option<Psp4Term> = None;
    for row in &counts.rows {
        let value = rat_int(row.classes * &row.index * &row.i2 * &row.i5_upper) / &den;
        let term = Psp4Term {
            name: row.name.clone(),
            contribution: value,
        };
        if row.name.starts_with("Sp_4(q^(1/") {
            if subfield.as_ref().is_none_or(|s| s.contribution < term.contribution) {
                subfield = Some(term);
            }
        } else {
            terms.push(term);
        }
    }
    let subfield = subfield.expect("a >= 2 has a prime divisor");
    terms.insert(3, subfield);
    let assembled: ExactRat = terms.iter().map(|t| &t.contribution).sum();
    let displayed = psp4_displayed(q, counts.a);
    let gap = Enclosure {
        lo: &displayed.lo - &assembled,
        hi: &displayed.hi - &assembled,
    };
    Ok(Psp4Bound {
        q,
        terms,
        verdict: Verdict::from_total(&assembled),
        assembled,
        displayed,
        gap,
    })
}

/// The one-line closed form: every subfield class bounded by the `t = 2`
/// term with `2 log_2 q` classes, and the `Sz(q)` term always present.
fn psp4_displayed(q: u64, a: u32) -> Enclosure {
    let r = |v: ExactInt| rat_int(v);
    let qr = rat_int(q);
    let qp = |k: u32| r(pow(q, k));
    let polys = [
        rat_int(4u32)
            * qp(3)
            * (&qr - rat_int(1))
            * (&qr + rat_int(1))
            * (&qr + rat_int(1))
            * (rat_int(2 * q + 5))
            * (qp(2) + rat_int(1))
            * (qp(3) + rat_int(2u32) * qp(2) + &qr + rat_int(1)),
        rat_int(2u32)
            * qp(3)
            * (qp(2) + rat_int(1))
            * (qp(3) + rat_int(2u32) * qp(2) + rat_int(2u32) * &qr + rat_int(1))
            * (qp(4) + qp(3) - &qr - rat_int(1)),
        rat_int(2u32) * qp(6) * (qp(2) - rat_int(1)) * (qp(2) + rat_int(1)) * (qp(2) + rat_int(1)),
    ];
    let mut sum = Enclosure::exact(ExactRat::zero());
    for p in &polys {
        sum = sum.add_exact(p);
    }
    // 2 log_2(q) q^(7/2) (q^(1/2)+1)(q+1)(q+q^(1/2)+4)(q^2-1)(q^4-1)
    let s = Enclosure::sqrt(&qr);
    let subfield = Enclosure::pow_half(q, 7)
        .mul(&s.add_exact(&ExactRat::one()))
        .mul(&s.add_exact(&(&qr + rat_int(4))))
        .scale(&(rat_int(2 * a) * (&qr + rat_int(1)) * (qp(2) - rat_int(1)) * (qp(4) - rat_int(1))));
    sum = sum.add(&subfield);
    sum = sum.add_exact(&polys[1]).add_exact(&polys[2]);
    // q^4 (q-1)^2 (q+1)(q+sqrt(2q)+1)(q^2-1)(q^2+1)
    let sz = Enclosure::sqrt(&(rat_int(2u32) * &qr))
        .add_exact(&(&qr + rat_int(1)))
        .scale(
            &(qp(4)
                * (&qr - rat_int(1))
                * (&qr - rat_int(1))
                * (&qr + rat_int(1))
                * (qp(2) - rat_int(1))
                * (qp(2) + rat_int(1))),
        );
    sum = sum.add(&sz);
    let den = qp(3)
        * (&qr - rat_int(1))
        * (qp(2) + rat_int(1))
        * (qp(2) + rat_int(1))
        * (qp(2) - &qr + rat_int(4))
        * (qp(4) - rat_int(1));
    sum.scale(&den.recip())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: Family, n: u32, q: u64) -> GroupSpec {
        GroupSpec::new(f, n, q).unwrap()
    }

    #[test]
    fn psl34_is_one_fifth() {
        assert_eq!(rat(PSL34_I2.0, PSL34_I2.1), rat(1, 15));
        assert_eq!(q2p_bound_psl34(), rat(1, 5));
    }

    #[test]
    fn contributions_are_products() {
        let r = q2_bound(&spec(Family::Linear, 10, 3)).unwrap();
        for t in &r.terms {
            assert_eq!(t.contribution, &t.multiplicity * &t.count_factor * &t.involution_ratio);
            assert!(t.contribution > ExactRat::zero());
        }
        assert_eq!(r.total, r.sigmas.values().sum::<ExactRat>());
    }

    #[test]
    fn omega_minus_16_2_certified() {
        let r = q2_bound(&spec(Family::OmegaMinus, 16, 2)).unwrap();
        assert!(r.is_certified());
        assert!(r.sigma(1).is_zero() && r.sigma(2).is_zero());
    }

    #[test]
    fn omega_minus_14_2_drops_sclass() {
        let r = q2_bound(&spec(Family::OmegaMinus, 14, 2)).unwrap();
        assert_eq!(r.witness.r, 43u32.into());
        assert!(r.sigma(0).is_zero());
        assert!(r.is_certified());
        let opts = BoundOptions {
            drop_infeasible_sigma0: false,
            ..Default::default()
        };
        assert!(!q2_bound_with(&spec(Family::OmegaMinus, 14, 2), &opts)
            .unwrap()
            .sigma(0)
            .is_zero());
    }

    #[test]
    fn psp12_2_needs_small_n() {
        let s = spec(Family::Symplectic, 12, 2);
        assert_eq!(q2_bound(&s).unwrap().verdict, Verdict::Inconclusive);
        let r = q2_bound_small_n(&s).unwrap();
        assert!(r.is_certified());
    }

    #[test]
    fn omega_plus12_2_uses_class_size() {
        let s = spec(Family::OmegaPlus, 12, 2);
        let r = q2_bound_small_n(&s).unwrap();
        assert_eq!(r.denominator, Denominator::ClassSize);
        assert!(r.is_certified());
        let strict = BoundOptions {
            class_size_fallback: false,
            ..Default::default()
        };
        assert!(!q2_bound_small_n_with(&s, &strict).unwrap().is_certified());
    }

    #[test]
    fn omega_plus12_sums_below_displays() {
        for q in [3u64, 5, 7, 9] {
            let r = q2_bound_small_n(&spec(Family::OmegaPlus, 12, q)).unwrap();
            assert_eq!(r.denominator, Denominator::I2LowerBound);
            for (k, bound) in omega_plus12_closed_forms(q) {
                assert!(r.sigma(k) <= &bound, "q = {q}, sigma_{k}");
            }
            assert!(r.is_certified());
        }
    }

    #[test]
    fn closed_forms_dominate() {
        for n in [14u32, 16, 18, 22] {
            for q in [2u64, 3, 4, 9] {
                let r = q2_bound_with(
                    &spec(Family::OmegaMinus, n, q),
                    &BoundOptions {
                        drop_infeasible_sigma0: false,
                        prune_alternating: false,
                        ..Default::default()
                    },
                )
                .unwrap();
                assert!(r.sigma(3) <= &closed_form_sigma3_omegaminus(n, q).unwrap().lo);
                assert!(r.sigma(0) <= &closed_form_sigma0_omegaminus(n, q).unwrap().lo);
            }
        }
        assert!(closed_form_sigma3_omegaminus(13, 2).is_err());
    }

    #[test]
    fn psp4_q8_certified_q4_not() {
        let b = q25_bound_psp4(8).unwrap();
        assert_eq!(b.verdict, Verdict::Certified);
        assert!(b.assembled <= b.displayed.lo);
        assert_eq!(q25_bound_psp4(4).unwrap().verdict, Verdict::Inconclusive);
        assert!(q25_bound_psp4(9).is_err());
        assert!(q25_bound_psp4(32).unwrap().assembled < b.assembled);
    }

    #[test]
    fn report_formats() {
        let r = q2_bound(&spec(Family::Unitary, 8, 2)).unwrap();
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert!(json["sigmas"]["sigma_0"].is_string());
        let csv = r.to_csv();
        assert_eq!(csv.lines().count(), r.terms.len() + 1);
    }
}
