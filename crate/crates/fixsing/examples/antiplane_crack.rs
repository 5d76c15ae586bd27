//! Antiplane crack across a strip: Galerkin solution for several truncation sizes.

use fixsing::{antiplane_kernel, solve, AntiplaneParams, Load, LoadKind, SolveConfig};

fn main() -> fixsing::Result<()> {
    let params = AntiplaneParams::new(0.5)?;
    let kernel = antiplane_kernel(&params);
    let load = Load::new(LoadKind::Uniform, 1.0);
    let f = |x: f64| load.eval(x);
    println!("lambda = 0.5, beta = {:.6}", params.beta);
    for n in [5, 10, 15, 20] {
        let sol = solve(&kernel, &f, &SolveConfig::new(n, 200, 210))?;
        println!(
            "N = {n:>2}: phi(0.5) = {:.6}, C = {:.6}",
            sol.evaluate(0.5),
            sol.constant_c
        );
    }
    let sol = solve(&kernel, &f, &SolveConfig::new(17, 200, 210))?;
    for (k, v) in &sol.residual_report {
        println!("  {k} = {v:.3e}");
    }
    Ok(())
}
