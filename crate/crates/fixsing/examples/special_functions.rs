//! Special-function building blocks: Pochhammer symbols, Chebyshev polynomials,
//! terminating ₃F₂ sums and Jacobi-weighted Chebyshev integrals.

use fixsing::specfun::{
    chebyshev_t, chebyshev_u, gamma, hyp3f2_terminating, jacobi_chebyshev_integral_t,
    jacobi_chebyshev_integral_u, pochhammer,
};

fn main() -> fixsing::Result<()> {
    println!("(0.5)_4 = {}", pochhammer(0.5, 4));
    println!("Gamma(4.5) = {:.15}", gamma(4.5));
    println!(
        "T_5(0.3) = {:.15}, U_5(0.3) = {:.15}",
        chebyshev_t(5, 0.3),
        chebyshev_u(5, 0.3)
    );
    for j in 0..4 {
        println!(
            "3F2 sum j = {j}: {:.15}",
            hyp3f2_terminating(j, 2.0 / 3.0, 1.0 / 3.0)?
        );
    }
    for (a1, a2) in [(-0.5, -0.5), (1.0 / 3.0, -0.2), (1.5, 1.5)] {
        println!(
            "alpha = ({a1:.3}, {a2:.3}): int T_3 = {:.12}, int U_3 = {:.12}",
            jacobi_chebyshev_integral_t(a1, a2, 3)?,
            jacobi_chebyshev_integral_u(a1, a2, 3)?
        );
    }
    Ok(())
}
