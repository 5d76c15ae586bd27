//! Truncated series solution of the characteristic equation for `F(x) = x`.

use fixsing::{build_basis, characteristic_series_solve, Load, LoadKind};

fn main() -> fixsing::Result<()> {
    let beta = 0.5;
    let basis = build_basis(beta, 20)?;
    let f = Load::new(LoadKind::Uniform, 1.0).cosine_coeffs(2000);
    println!("beta = {beta}");
    println!("{:>4} {:>12} {:>12}", "m0", "phi(0.25)", "phi(0.5)");
    for m0 in [5, 10, 15, 20] {
        let sol = characteristic_series_solve(&basis, &f, m0)?;
        println!(
            "{m0:>4} {:>12.6} {:>12.6}",
            sol.evaluate(0.25),
            sol.evaluate(0.5)
        );
    }
    let sol = characteristic_series_solve(&basis, &f, 20)?;
    println!("C = {:.12}", sol.constant_c);
    Ok(())
}
