//! Which argument covers a finite simple group, by name.
//!
//! `cargo run --example classify -- PSU8(2) A7 M23`

use gencert::cli::classify::classify;

fn main() {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = [
            "PSL3(4)",
            "PSp4(9)",
            "PSU8(2)",
            "POmega+8(2)",
            "A7",
            "M23",
            "Sz(8)",
            "E8(2)",
            "PSL9(2)",
        ]
        .map(String::from)
        .to_vec();
    }
    for name in names {
        match classify(&name) {
            Ok(c) => println!(
                "{:<14} {:?}: (2,{}){}",
                c.group,
                c.case,
                c.p,
                c.e.map(|e| format!(", e = {e}")).unwrap_or_default()
            ),
            Err(e) => println!("{name:<14} {e}"),
        }
    }
}
