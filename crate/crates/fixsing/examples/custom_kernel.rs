//! Any regular kernel can be attached to the dominant operator.
//! Here `K(x, ξ) = κ (x + ξ)` with a quadratic load.

use fixsing::{full_residual, solve, KernelSpec, Load, LoadKind, SolveConfig};

fn main() -> fixsing::Result<()> {
    let kappa = 0.4;
    let kernel = KernelSpec::new(0.6, move |x: f64, xi: f64| kappa * (x + xi));
    let load = Load::new(LoadKind::Quadratic, 3.0);
    let f = |x: f64| load.eval(x);
    let sol = solve(&kernel, &f, &SolveConfig::new(12, 200, 210))?;
    println!("C = {:.8}", sol.constant_c);
    for x in [0.1, 0.25, 0.5, 0.75, 0.9] {
        println!("phi({x}) = {:.8}", sol.evaluate(x));
    }
    let xs = [0.2, 0.4, 0.6, 0.8];
    let res = full_residual(&sol, &kernel, &f, &xs)?;
    for (x, r) in xs.iter().zip(res) {
        println!("residual at {x}: {r:.2e}");
    }
    Ok(())
}
