//! Closed-form inverse of the dominant operator, checked by applying the operator back.

use fixsing::regimes::{solvability_functional, solvability_residual};
use fixsing::{apply_s, classify, inverse_characteristic, PvRule};

fn main() -> fixsing::Result<()> {
    let rule = PvRule::new(512)?;
    let xs = [0.1, 0.3, 0.5, 0.7, 0.9];
    for beta in [0.5, -0.5, 2.0, -3.0, 1.0, -1.0] {
        let regime = classify(beta)?;
        // Make the load solvable: subtract the multiple of h that cancels ∫V g.
        let g = |x: f64| x * (1.0 - x) * (1.0 + x);
        let h = |x: f64| x * x * (1.0 - x);
        let vh = solvability_functional(&regime, &h, 512);
        let c = if vh.abs() > 0.0 {
            solvability_functional(&regime, &g, 512) / vh
        } else {
            0.0
        };
        let f = move |x: f64| g(x) - c * h(x);
        let phi = |t: f64| {
            if t > 0.0 && t < 1.0 {
                inverse_characteristic(&regime, &f, t, 512).unwrap_or(f64::NAN)
            } else {
                0.0
            }
        };
        let mut worst = 0.0f64;
        for &x in &xs {
            worst = worst.max((apply_s(&phi, beta, x, &rule)? - f(x)).abs());
        }
        println!(
            "beta = {beta:>5}: {:?}, solvability residual {:.1e}, max |S[S^-1 f] - f| = {worst:.2e}",
            regime.kind,
            solvability_residual(&regime, &f, 512)
        );
    }
    Ok(())
}
