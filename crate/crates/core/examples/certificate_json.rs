//! A JSON certificate and a CSV breakdown for one group; evaluating twice
//! gives identical bytes.

use gencert::bounds::q2_bound;
use gencert::cli::Certificate;
use gencert::grouporders::{Family, GroupSpec};

fn main() -> gencert::Result<()> {
    let spec = GroupSpec::new(Family::Unitary, 9, 2)?;
    let report = q2_bound(&spec)?;
    let json = Certificate::new(&report).to_json();
    assert_eq!(json, Certificate::new(&q2_bound(&spec)?).to_json());
    println!("{json}");
    print!("{}", report.to_csv());
    Ok(())
}
