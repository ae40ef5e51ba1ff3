//! Primitive weights and the occurrence ladder, including a datum that breaks it.
//!
//! Run with `cargo run --example primitive_ladder`.

use hamcheck::criteria::{pairing_ladder, primitive_weights};
use hamcheck::{build_tables, FixedPointData};

fn main() -> hamcheck::Result<()> {
    for (n, points) in [
        (2, vec![vec![1, 2], vec![-1, 1], vec![-2, -1]]),
        (3, vec![vec![-3, 1, 2], vec![-1, -2, 3]]),
        (2, vec![vec![1, 2], vec![1, -2]]),
    ] {
        let data = FixedPointData::new(n, points)?;
        let tables = build_tables(&data);
        println!("{:?}", data.points().iter().map(|p| p.weights()).collect::<Vec<_>>());
        println!("  A = {:?}", tables.abs_weights());
        for w in primitive_weights(&tables) {
            let r = pairing_ladder(&data, &tables, w)?;
            match r.witness() {
                Some(wit) => println!("  w = {w}: broken, {wit}"),
                None => println!("  w = {w}: holds"),
            }
        }
    }
    Ok(())
}
