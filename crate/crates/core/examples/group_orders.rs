//! Orders of the simple classical groups and their structural constants.

use gencert::grouporders::{constants, simple_order, Family, GroupSpec};

fn main() -> gencert::Result<()> {
    for (family, n, q) in [
        (Family::Linear, 3, 4),
        (Family::Symplectic, 4, 3),
        (Family::Unitary, 4, 2),
        (Family::OmegaPlus, 8, 2),
        (Family::OmegaOdd, 7, 3),
        (Family::OmegaMinus, 10, 3),
    ] {
        let spec = GroupSpec::new(family, n, q)?;
        let c = constants(&spec);
        println!("{spec:<16} |G| = {:<30} {c:?}", simple_order(&spec).to_string());
    }
    Ok(())
}
