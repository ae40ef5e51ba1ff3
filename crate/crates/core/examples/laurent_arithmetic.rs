//! Exact polynomial arithmetic and the normal form of `1/prod(1 - t^x)`.
//!
//! Run with `cargo run --example laurent_arithmetic`.

use hamcheck::laurent::{normalize_contribution, series_expand};
use hamcheck::LaurentPoly;

fn main() -> hamcheck::Result<()> {
    let p = LaurentPoly::from_dense(&[1, -1]);
    let q = LaurentPoly::from_dense(&[1, 1, 1]);
    println!("({p}) * ({q}) = {}", &p * &q);

    // (1 - t)^60 has coefficients far beyond 64 bits.
    let mut big = LaurentPoly::one();
    for _ in 0..60 {
        big = &big * &p;
    }
    println!("middle coefficient of (1 - t)^60: {}", big.coeff(30));

    let exps = [2, -3];
    let n = normalize_contribution(&exps)?;
    println!(
        "1/((1 - t^2)(1 - t^-3)) = {}t^{} / prod(1 - t^a) over {:?}",
        if n.sign.to_i64() < 0 { "-" } else { "" },
        n.shift,
        n.denom.factors()
    );
    let series = series_expand(n.sign, n.shift, &LaurentPoly::one(), &n.denom, 12);
    println!("  series to t^12: {series}");
    Ok(())
}
