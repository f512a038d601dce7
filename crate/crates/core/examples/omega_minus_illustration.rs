//! `POmega^-_n(q)`, `n >= 14`: the two closed forms against the exact sums.

use gencert::bounds::{closed_form_sigma0_omegaminus, closed_form_sigma3_omegaminus, q2_bound};
use gencert::catalog::sclass_feasible;
use gencert::exactnum::{approx_f64, select_r};
use gencert::grouporders::{Family, GroupSpec};

fn main() -> gencert::Result<()> {
    println!(
        "{:>3} {:>3} {:>12} {:>12} {:>12}",
        "n", "q", "C3 form", "S form", "exact"
    );
    for n in (14..=22).step_by(2) {
        for q in [2u64, 3, 4, 5] {
            let s3 = closed_form_sigma3_omegaminus(n, q)?;
            let s0 = closed_form_sigma0_omegaminus(n, q)?;
            let exact = q2_bound(&GroupSpec::new(Family::OmegaMinus, n, q)?)?;
            println!(
                "{n:>3} {q:>3} {:>12.3e} {:>12.3e} {:>12.3e}",
                s3.midpoint_f64(),
                s0.midpoint_f64(),
                approx_f64(&exact.total)
            );
        }
    }
    // n = 14, q = 2: the S-term form alone exceeds 1, but r rules out every socle.
    let spec = GroupSpec::new(Family::OmegaMinus, 14, 2)?;
    let w = select_r(&spec)?;
    let (feasible, _) = sclass_feasible(&spec, &w);
    println!("{spec}: r = {}, S-subgroups possible: {feasible}", w.r);
    Ok(())
}
