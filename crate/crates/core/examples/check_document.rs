//! Reads a JSON document and prints the same text report as `hamcheck check`.
//!
//! Run with `cargo run --example check_document -- crates/core/data/cp2.json`.

use hamcheck::cli::render_text;
use hamcheck::{evaluate_all, FixedPointData};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).ok_or("usage: check_document FILE")?;
    let data = FixedPointData::parse(&std::fs::read_to_string(path)?)?;
    let ev = evaluate_all(&data);
    print!("{}", render_text(&data, &ev));
    std::process::exit(ev.summary.exit_code());
}
