//! Exact chi^i values and the resulting verdict for a few standard data.
//!
//! Run with `cargo run --example chi_identities`.

use hamcheck::{full_report, FixedPointData};

fn main() -> hamcheck::Result<()> {
    let cases = [
        ("rotation of the sphere", 1, vec![vec![1], vec![-1]]),
        ("projective plane", 2, vec![vec![1, 2], vec![-1, 1], vec![-2, -1]]),
        ("two points in dimension 6", 3, vec![vec![-3, 1, 2], vec![-1, -2, 3]]),
        ("a lone fixed point", 1, vec![vec![1]]),
    ];
    for (label, n, points) in cases {
        let data = FixedPointData::new(n, points)?;
        let report = full_report(&data);
        let chi: Vec<String> = report.chi.iter().map(|c| c.to_string()).collect();
        println!("{label}");
        println!("  chi = [{}], N = {:?}, {}", chi.join(", "), report.histogram, report.verdict);
        for f in &report.failures {
            println!("  failure: {f}");
        }
    }
    Ok(())
}
