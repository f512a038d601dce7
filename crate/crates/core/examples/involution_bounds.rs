//! Involution counts: the uniform lower bound, an explicit class size, the
//! automorphism-group upper bound and involutions in symmetric groups.

use gencert::exactnum::{approx_f64, rat_int};
use gencert::grouporders::{Family, GroupSpec};
use gencert::involutions::{
    aut_i2_upper, i2_lower_bound_rat, involution_class_size_lower, sym_involutions_plus1, RootSystemDatum, RootType,
};

fn main() -> gencert::Result<()> {
    for (family, n, q) in [
        (Family::Linear, 9, 2),
        (Family::Symplectic, 12, 3),
        (Family::OmegaPlus, 12, 2),
        (Family::OmegaOdd, 13, 5),
    ] {
        let spec = GroupSpec::new(family, n, q)?;
        let lower = i2_lower_bound_rat(&spec);
        let class = involution_class_size_lower(&spec)?;
        let size = rat_int(class.class_size_lower);
        println!(
            "{spec:<16} I_2 ~ {:.4e}   |{}^G| >= {:.4e}   ratio {:.3}",
            approx_f64(&lower),
            class.label,
            approx_f64(&size),
            approx_f64(&(&size / &lower)),
        );
    }
    for (kind, s) in [(RootType::A(1), 11u64), (RootType::C(3), 2), (RootType::G2, 3)] {
        let d = RootSystemDatum::new(kind);
        println!("{kind:?} over {s}: i_2(Aut) < {}", aut_i2_upper(&d, s));
    }
    for m in [4u32, 8, 12, 13] {
        println!("i_2(S_{m}) + 1 = {}", sym_involutions_plus1(m));
    }
    Ok(())
}
