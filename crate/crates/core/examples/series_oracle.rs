//! Compares the exact chi^i with their truncated power series.
//!
//! Run with `cargo run --example series_oracle`.

use hamcheck::chi::{decisive_order, series_cross_check};
use hamcheck::FixedPointData;

fn main() -> hamcheck::Result<()> {
    let data = FixedPointData::new(3, vec![vec![-3, 1, 2], vec![-1, -2, 3], vec![1, 1, 1]])?;
    let order = decisive_order(&data);
    println!("decisive order {order}");
    for row in series_cross_check(&data, order) {
        println!("chi^{} ~ {}  [{}]", row.degree, row.series, if row.agrees { "agrees" } else { "DIFFERS" });
    }
    Ok(())
}
