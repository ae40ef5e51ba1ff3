//! Every criterion on one datum, with witnesses, followed by the summary.
//!
//! Run with `cargo run --example criteria_tour -- '[[-2,1,3],[-1,-3,2]]'`;
//! with no argument a dimension-6 example is used.

use hamcheck::{evaluate_all, FixedPointData};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let points: Vec<Vec<i64>> = match std::env::args().nth(1) {
        Some(arg) => serde_json::from_str(&arg)?,
        None => vec![vec![-3, 1, 2], vec![-1, -2, 3]],
    };
    let n = points[0].len();
    let data = FixedPointData::new(n, points)?;
    let ev = evaluate_all(&data);
    for c in &ev.criteria {
        print!("{:<20} {:<12}", c.name, c.implication());
        if let Some(d) = &c.detail {
            print!(" {d}");
        }
        if let Some(w) = c.witness() {
            print!(" witness: {w}");
        }
        println!();
    }
    println!("{}", ev.summary);
    Ok(())
}
