use gencert::bounds::{closed_form_sigma0_omegaminus, closed_form_sigma3_omegaminus, q2_bound, BoundReport};
use gencert::catalog::{sclass_cap, sclass_feasible};
use gencert::exactnum::{mult_order, pow_rat, prime_power, rat, rat_int, select_r, Enclosure, ExactRat};
use gencert::grouporders::{primitive_exponent, Family, GroupSpec};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;

const QS: [u64; 11] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25];

fn spec_strategy() -> impl Strategy<Value = GroupSpec> {
    (0..Family::ALL.len(), 8u32..=24, prop::sample::select(QS.to_vec())).prop_filter_map(
        "not a simple group in scope",
        |(f, n, q)| {
            let spec = GroupSpec::new(Family::ALL[f], n, q).ok()?;
            spec.in_main_scope().then_some(spec)
        },
    )
}

fn sum_of_sigmas(r: &BoundReport) -> ExactRat {
    r.sigmas.values().fold(ExactRat::zero(), |a, b| a + b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn report_is_assembled_from_its_terms(spec in spec_strategy()) {
        let r = q2_bound(&spec);
        prop_assume!(r.is_ok(), "below the generic evaluator's range");
        let r = r.unwrap();
        let mut total = ExactRat::zero();
        for t in &r.terms {
            prop_assert_eq!(&t.contribution, &(&t.multiplicity * &t.count_factor * &t.involution_ratio));
            prop_assert!(t.contribution >= ExactRat::zero());
            total += &t.contribution;
        }
        prop_assert_eq!(&total, &r.total);
        prop_assert_eq!(&sum_of_sigmas(&r), &r.total);
        prop_assert_eq!(r.is_certified(), r.total < rat_int(1));
    }

    #[test]
    fn witness_is_a_primitive_prime(spec in spec_strategy()) {
        let w = select_r(&spec).unwrap();
        prop_assert!(w.verify());
        prop_assert_eq!(w.e, primitive_exponent(&spec));
        prop_assert!(w.e >= 6);
        let order = mult_order(&BigUint::from(spec.q), &w.r).unwrap();
        prop_assert!(((&w.r - 1u32) % order).is_zero());
    }

    #[test]
    fn feasible_socles_fit_under_the_cap(spec in spec_strategy()) {
        let w = select_r(&spec).unwrap();
        let (_, socles) = sclass_feasible(&spec, &w);
        if let Ok(cap) = sclass_cap(&spec) {
            let listed = socles.iter().fold(ExactRat::zero(), |a, s| a + &s.cap);
            prop_assert!(listed <= cap);
        }
    }

    #[test]
    fn omega_minus_closed_forms_dominate(n in (7u32..=15).prop_map(|k| 2 * k), q in prop::sample::select(QS.to_vec())) {
        let r = q2_bound(&GroupSpec::new(Family::OmegaMinus, n, q).unwrap()).unwrap();
        let s3 = closed_form_sigma3_omegaminus(n, q).unwrap();
        let s0 = closed_form_sigma0_omegaminus(n, q).unwrap();
        prop_assert!(r.sigma(3) <= &s3.lo);
        prop_assert!(r.sigma(0) <= &s0.lo);
    }

    #[test]
    fn half_powers_are_enclosed(q in 2u64..200, half in -40i64..40) {
        prop_assume!(prime_power(q).is_some());
        let e = Enclosure::pow_half(q, half);
        prop_assert!(e.lo <= e.hi);
        prop_assert!(e.lo > ExactRat::zero());
        // (q^(half/2))^2 = q^half
        let square = pow_rat(q, half);
        prop_assert!(&e.lo * &e.lo <= square && square <= &e.hi * &e.hi);
        if half % 2 == 0 {
            prop_assert!(e.is_exact());
        }
    }

    #[test]
    fn enclosure_arithmetic_keeps_containment(a in 1i64..500, b in 1i64..500, c in 1i64..50) {
        let (x, y) = (rat(a, c), rat(b, c));
        let (ex, ey) = (Enclosure::sqrt(&x), Enclosure::sqrt(&y));
        // sqrt(x) sqrt(y) = sqrt(xy), sqrt(x) + sqrt(y) squared = x + y + 2 sqrt(xy)
        let prod = ex.mul(&ey);
        let xy = &x * &y;
        prop_assert!(&prod.lo * &prod.lo <= xy && xy <= &prod.hi * &prod.hi);
        let sum = ex.add(&ey);
        prop_assert!(sum.lo <= sum.hi);
        let inv = ex.recip();
        let one = ExactRat::one();
        prop_assert!(&inv.lo * &ex.lo <= one && one <= &inv.hi * &ex.hi);
    }
}

/// The generic total is not monotone in `q` for fixed `n`: `r` changes with
/// `q`, and some rows only exist over square fields.
#[test]
fn totals_are_not_monotone_in_q() {
    let total = |f, n, q| q2_bound(&GroupSpec::new(f, n, q).unwrap()).unwrap().total;
    assert!(total(Family::Linear, 9, 4) > total(Family::Linear, 9, 3));
    assert!(total(Family::OmegaPlus, 14, 16) > total(Family::OmegaPlus, 14, 13));
}
