//! Primitive prime divisors of `q^e - 1` and the prime `r` chosen for a group.
//!
//! Run with `cargo run --example zsigmondy`.

use gencert::exactnum::{cyclotomic_value, primitive_prime_divisors, select_r};
use gencert::grouporders::{Family, GroupSpec};

fn main() -> gencert::Result<()> {
    for (q, e) in [(2u64, 6u32), (2, 14), (3, 12), (5, 10), (7, 10), (25, 16)] {
        let ppd = primitive_prime_divisors(q, e);
        let list: Vec<String> = ppd.iter().map(ToString::to_string).collect();
        println!(
            "Phi_{e}({q}) = {:<24} primitive primes: {}",
            cyclotomic_value(q, e).to_string(),
            list.join(", ")
        );
    }
    // No primitive prime: 2^6 - 1, and e = 2 whenever q + 1 is a power of two.
    assert!(primitive_prime_divisors(2, 6).is_empty());
    assert!(primitive_prime_divisors(7, 2).is_empty());

    for (family, n, q) in [
        (Family::OmegaMinus, 14, 2),
        (Family::Unitary, 8, 2),
        (Family::OmegaPlus, 12, 7),
    ] {
        let spec = GroupSpec::new(family, n, q)?;
        let w = select_r(&spec)?;
        println!("{spec}: e = {}, r = {} (ord_r(q) = {})", w.e, w.r, w.ord);
    }
    Ok(())
}
