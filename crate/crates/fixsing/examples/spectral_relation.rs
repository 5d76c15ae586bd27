//! The dominant operator maps each basis function onto a shifted cosine:
//! `S[φ_j](x) = N_{j+1} - cos((j+1)πx)`.

use fixsing::{apply_s, build_basis, PvRule};
use std::f64::consts::PI;

fn main() -> fixsing::Result<()> {
    let beta = 0.3;
    let basis = build_basis(beta, 6)?;
    let rule = PvRule::new(512)?;
    println!("beta = {beta}, rho1 = {:.6}", basis.rho1());
    for j in 0..=6 {
        let phi = |x: f64| basis.phi(j, x);
        let mut worst = 0.0f64;
        for k in 1..12 {
            let x = k as f64 / 12.0;
            let want = basis.n_coeff(j + 1) - ((j + 1) as f64 * PI * x).cos();
            worst = worst.max((apply_s(&phi, beta, x, &rule)? - want).abs());
        }
        println!(
            "j = {j}: N_(j+1) = {:+.10}, max error {worst:.2e}",
            basis.n_coeff(j + 1)
        );
    }
    Ok(())
}
