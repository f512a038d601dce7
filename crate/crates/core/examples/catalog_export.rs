//! Maximal subgroups that can contain an element of order `r`, exported as
//! JSON with a checksum.
//!
//! `cargo run --example catalog_export -- psl 8 3`

use gencert::catalog::{catalog_entry, checksum};
use gencert::exactnum::select_r;
use gencert::grouporders::{Family, GroupSpec};

fn main() -> gencert::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (family, n, q) = match args.as_slice() {
        [f, n, q] => (
            f.parse::<Family>()?,
            n.parse().map_err(|_| gencert::Error::Input(n.clone()))?,
            q.parse().map_err(|_| gencert::Error::Input(q.clone()))?,
        ),
        _ => (Family::Linear, 8, 3),
    };
    let spec = GroupSpec::new(family, n, q)?;
    let entry = catalog_entry(&spec, &select_r(&spec)?);
    println!("{}", serde_json::to_string_pretty(&entry).expect("serializes"));
    eprintln!("sha256 {}", checksum(&entry));
    Ok(())
}
