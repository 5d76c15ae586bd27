//! Plane strain: the endpoint exponent γ₀ against the moduli ratio, then the
//! dominant equation solved for a few ratios.

use fixsing::{gamma0_root, plane_strain_kernel, solve, PlaneStrainParams, SolveConfig};

fn main() -> fixsing::Result<()> {
    println!("{:>10} {:>12} {:>12}", "lambda", "gamma0", "beta_eff");
    for k in -4..=4 {
        let lambda = 10f64.powi(k);
        let mut p = PlaneStrainParams::from_lambda(lambda, 0.3, 0.3)?;
        let g = gamma0_root(&mut p, 1e-14)?;
        println!(
            "{lambda:>10.0e} {g:>12.8} {:>12.8}",
            p.beta_eff.unwrap_or(f64::NAN)
        );
    }
    let f = |x: f64| x;
    for lambda in [0.3, 0.5, 2.0, 100.0] {
        let mut p = PlaneStrainParams::from_lambda(lambda, 0.3, 0.3)?;
        gamma0_root(&mut p, 1e-14)?;
        let kernel = plane_strain_kernel(&p, false)?;
        let sol = solve(&kernel, &f, &SolveConfig::new(10, 200, 210))?;
        println!("lambda = {lambda:>5}: phi(0.5) = {:.6}", sol.evaluate(0.5));
    }
    Ok(())
}
