//! `POmega+_12(q)`: the small-dimensional evaluator sum by sum, against the
//! four closed forms, and the switch to the class-size denominator at `q = 2`.

use gencert::bounds::{omega_plus12_closed_forms, q2_bound_small_n};
use gencert::exactnum::approx_f64;
use gencert::grouporders::{Family, GroupSpec};

fn main() -> gencert::Result<()> {
    for q in [2u64, 3, 5, 7, 9] {
        let r = q2_bound_small_n(&GroupSpec::new(Family::OmegaPlus, 12, q)?)?;
        println!(
            "q = {q}: r = {}, denominator {:?}, total {:.4e}, {}",
            r.witness.r,
            r.denominator,
            approx_f64(&r.total),
            r.verdict
        );
        if q % 2 == 1 {
            for (k, form) in omega_plus12_closed_forms(q) {
                println!(
                    "    sigma_{k}: {:.4e} <= {:.4e}",
                    approx_f64(r.sigma(k)),
                    approx_f64(&form)
                );
            }
        }
    }
    Ok(())
}
