//! Exhaustive search for two-point data in dimension 6 that could come from a
//! non-Hamiltonian action.
//!
//! Run with `cargo run --release --example two_point_search -- 6` (max weight).

use hamcheck::{enumerate, Mode, SearchSpec};

fn main() -> hamcheck::Result<()> {
    let max_weight = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let spec = SearchSpec::new(3, 2, max_weight).with_mode(Mode::NonHamiltonianCandidates);
    let result = enumerate(&spec)?;
    for s in &result.survivors {
        let pts: Vec<_> = s.data.points().iter().map(|p| p.weights()).collect();
        println!("{pts:?}  {}", s.evaluation.summary.label());
    }
    let st = result.stats;
    println!(
        "enumerated {}, pruned {}, rejected {}, survivors {}",
        st.enumerated, st.pruned, st.rejected, st.survivors
    );
    Ok(())
}
