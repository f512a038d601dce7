//! `Q_{2,5}(PSp_4(2^a))` assembled subgroup by subgroup, next to the
//! one-line closed form that over-estimates it.

use gencert::bounds::q25_bound_psp4;
use gencert::exactnum::approx_f64;

fn main() -> gencert::Result<()> {
    for a in 2..=10u32 {
        let b = q25_bound_psp4(1 << a)?;
        println!(
            "q = {:>5}: assembled {:.4e}, closed form {:.4e}, gap {:.3e}, {}",
            b.q,
            approx_f64(&b.assembled),
            b.displayed.midpoint_f64(),
            b.gap.midpoint_f64(),
            b.verdict
        );
    }
    let b = q25_bound_psp4(8)?;
    for t in &b.terms {
        println!("  {:<16} {}", t.name, t.contribution);
    }
    Ok(())
}
