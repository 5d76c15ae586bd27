//! Cauchy-kernel solver on a Chebyshev-U basis, used when β = 0.

use fixsing::{antiplane_kernel, cauchy_frame_kernel, cauchy_solve, AntiplaneParams};

fn main() -> fixsing::Result<()> {
    let f = |x: f64| x;
    // No regular kernel: the exact solution is sqrt(x(1-x)) with C = 1/2.
    let sol = cauchy_solve(|_, _| 0.0, &f, 8, 200, 210)?;
    let exact = |x: f64| (x * (1.0 - x)).sqrt();
    println!(
        "K = 0: phi(0.3) = {:.10} (exact {:.10}), C = {:.10}",
        sol.evaluate(0.3),
        exact(0.3),
        sol.constant_c
    );

    // Antiplane with equal moduli has β = 0 and routes here.
    let kernel = antiplane_kernel(&AntiplaneParams::new(1.0)?);
    let sol = cauchy_solve(cauchy_frame_kernel(&kernel)?, &f, 10, 200, 210)?;
    println!(
        "lambda = 1: phi(0.5) = {:.8}, C = {:.8}",
        sol.evaluate(0.5),
        sol.constant_c
    );
    Ok(())
}
