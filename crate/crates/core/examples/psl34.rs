//! `Q_{2,7}(PSL_3(4))` from its three classes of `PSL_2(7)`.

use gencert::bounds::{q2p_bound_psl34, PSL34_I2, PSL34_I7, PSL34_SUBGROUPS};

fn main() {
    println!(
        "{} subgroups * {}/{} * {}/{} = {}",
        PSL34_SUBGROUPS,
        PSL34_I2.0,
        PSL34_I2.1,
        PSL34_I7.0,
        PSL34_I7.1,
        q2p_bound_psl34()
    );
}
