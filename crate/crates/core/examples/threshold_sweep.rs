//! Every family from its threshold dimension up, over all `q <= 25`, in parallel.

use gencert::bounds::{certification_threshold, evaluate, BoundOptions, Method};
use gencert::exactnum::prime_power;
use gencert::grouporders::{Family, GroupSpec};
use rayon::prelude::*;

fn main() {
    let start = std::time::Instant::now();
    let qs: Vec<u64> = (2..=25).filter(|&q| prime_power(q).is_some()).collect();
    let specs: Vec<GroupSpec> = Family::ALL
        .into_iter()
        .flat_map(|f| (certification_threshold(f)..=24).map(move |n| (f, n)))
        .flat_map(|(f, n)| qs.iter().filter_map(move |&q| GroupSpec::new(f, n, q).ok()))
        .collect();
    let results: Vec<_> = specs
        .par_iter()
        .map(|s| (*s, evaluate(s, &BoundOptions::default())))
        .collect();
    let mut small_n = 0;
    for (spec, r) in &results {
        match r {
            Ok(r) if r.is_certified() => small_n += usize::from(r.method == Method::SmallN),
            Ok(r) => println!("{spec}: {}", r.verdict),
            Err(e) => println!("{spec}: error {e}"),
        }
    }
    let ok = results
        .iter()
        .filter(|(_, r)| matches!(r, Ok(r) if r.is_certified()))
        .count();
    println!(
        "{ok}/{} certified ({small_n} by the small-dimensional evaluator) in {:?}",
        results.len(),
        start.elapsed()
    );
}
