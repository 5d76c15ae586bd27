//! The classical equation with a Cauchy kernel,
//!
//! `(1/π) ∫₀¹ [1/(ξ-x) + K(x,ξ)] φ(ξ) dξ = C - F(x)`,
//!
//! solved by expanding `φ = √(x(1-x)) Σ b_j U_j(2x-1)` and using
//! `∫₀¹ √(ξ(1-ξ)) U_j(2ξ-1)/(ξ-x) dξ = -(π/2) T_{j+1}(2x-1)`.
//! It covers β = 0, where the spectral basis of the fixed-singularity operator
//! is not available, and serves as an independent reference there.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;

use crate::complete::{condition_estimate, KernelSpec, CONDITION_LIMIT};
use crate::error::{domain, Error, Result};
use crate::kernels::cot_gap;
use crate::specfun::chebyshev_u;

/// Coefficients of `√(x(1-x)) Σ b_j U_j(2x-1)` and the constant `C`.
#[derive(Debug, Clone, PartialEq)]
pub struct CauchySolution {
    pub b: Vec<f64>,
    pub constant_c: f64,
}

impl CauchySolution {
    pub fn evaluate(&self, x: f64) -> f64 {
        if x <= 0.0 || x >= 1.0 {
            return 0.0;
        }
        let t = 2.0 * x - 1.0;
        let s: f64 = self
            .b
            .iter()
            .enumerate()
            .map(|(j, b)| b * chebyshev_u(j, t))
            .sum();
        (x * (1.0 - x)).sqrt() * s
    }
}

fn cheb_nodes(t: usize) -> Vec<(f64, f64)> {
    (1..=t)
        .map(|m| {
            let th = (2 * m - 1) as f64 * PI / (2 * t) as f64;
            (th, 0.5 * (1.0 + th.cos()))
        })
        .collect()
}

/// `Ŝ⁻¹[F](x) = -(√(x(1-x))/π) PV∫₀¹ F(ξ) / (√(ξ(1-ξ)) (ξ-x)) dξ`.
///
/// Under `ξ = (1 + cos θ)/2` the weight disappears and `PV∫ dθ/(ξ-x) = 0`,
/// so the difference quotient is integrated by the midpoint rule in θ.
pub fn cauchy_inverse(f: &dyn Fn(f64) -> f64, x: f64, nodes: usize) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return domain(format!("x must lie in (0,1), got {x}"));
    }
    let fx = f(x);
    let mut s = 0.0;
    for (_, xi) in cheb_nodes(nodes) {
        let d = xi - x;
        if d != 0.0 {
            s += (f(xi) - fx) / d;
        }
    }
    s *= PI / nodes as f64;
    Ok(-(x * (1.0 - x)).sqrt() / PI * s)
}

/// Solves the truncated system for `b_0..b_{N-1}` from rows `n = 1..N`,
/// then `C = f_0 + Σ_j k_{0j} b_j`.
///
/// `k` is the regular kernel in the convention above (inside the `1/π`).
pub fn cauchy_solve<K>(
    k: K,
    f: &dyn Fn(f64) -> f64,
    n: usize,
    t1: usize,
    t2: usize,
) -> Result<CauchySolution>
where
    K: Fn(f64, f64) -> f64 + Sync,
{
    if n == 0 || t1 <= n || t2 < n {
        return domain(format!(
            "need 0 < N < t1 and N <= t2, got N={n}, t1={t1}, t2={t2}"
        ));
    }
    let xs = cheb_nodes(t1);
    let xis = cheb_nodes(t2);
    let fc: Vec<f64> = (0..=n)
        .map(|q| {
            xs.iter()
                .map(|&(th, x)| f(x) * (q as f64 * th).cos())
                .sum::<f64>()
                / t1 as f64
        })
        .collect();
    // weights sin ψ sin((j+1)ψ) per ξ-node
    let wj: Vec<Vec<f64>> = xis
        .iter()
        .map(|&(ps, _)| {
            (0..n)
                .map(|j| ps.sin() * ((j + 1) as f64 * ps).sin())
                .collect()
        })
        .collect();
    let inner: Vec<Vec<f64>> = xs
        .par_iter()
        .map(|&(_, x)| {
            let mut acc = vec![0.0; n];
            for (&(_, xi), w) in xis.iter().zip(&wj) {
                let kv = k(x, xi);
                for (a, v) in acc.iter_mut().zip(w) {
                    *a += kv * v;
                }
            }
            acc
        })
        .collect();
    let scale = 1.0 / (4.0 * t1 as f64 * t2 as f64);
    let km = DMatrix::from_fn(n + 1, n, |q, j| {
        xs.iter()
            .zip(&inner)
            .map(|(&(th, _), row)| (q as f64 * th).cos() * row[j])
            .sum::<f64>()
            * scale
    });
    let mut a = DMatrix::zeros(n, n);
    let mut rhs = DVector::zeros(n);
    for q in 1..=n {
        for j in 0..n {
            a[(q - 1, j)] = km[(q, j)];
        }
        a[(q - 1, q - 1)] -= 0.25;
        rhs[q - 1] = -fc[q];
    }
    let cond = condition_estimate(&a);
    if cond.is_nan() || cond > CONDITION_LIMIT {
        return Err(Error::Singular {
            cond,
            limit: CONDITION_LIMIT,
        });
    }
    let sol = a.lu().solve(&rhs).ok_or(Error::Singular {
        cond: f64::INFINITY,
        limit: CONDITION_LIMIT,
    })?;
    let b: Vec<f64> = sol.iter().cloned().collect();
    let constant_c = fc[0] + (0..n).map(|j| km[(0, j)] * b[j]).sum::<f64>();
    Ok(CauchySolution { b, constant_c })
}

/// Regular kernel of the Cauchy form equivalent to a β = 0 Hilbert-form problem:
/// `S + K = (1/π)[1/(ξ-x) + π(K - (1/(π(ξ-x)) - (1/2)cot(π(ξ-x)/2)))]`.
pub fn cauchy_frame_kernel(kernel: &KernelSpec) -> Result<impl Fn(f64, f64) -> f64 + Sync + '_> {
    if kernel.beta() != 0.0 {
        return domain(format!(
            "only a beta = 0 kernel has a Cauchy form with a regular remainder, got beta = {}",
            kernel.beta()
        ));
    }
    Ok(move |x: f64, xi: f64| PI * (kernel.eval(x, xi) - cot_gap(xi - x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_constant() {
        for x in [0.05, 0.5, 0.93] {
            assert!(cauchy_inverse(&|_| 1.0, x, 64).unwrap().abs() < 1e-14);
        }
        assert!(cauchy_inverse(&|t| t, 1.0, 64).is_err());
    }

    #[test]
    fn characteristic_solution_is_exact() {
        let s = cauchy_solve(|_, _| 0.0, &|x| x, 6, 40, 41).unwrap();
        assert!((s.b[0] - 1.0).abs() < 1e-13);
        assert!(s.b[1..].iter().all(|v| v.abs() < 1e-13));
        assert!((s.constant_c - 0.5).abs() < 1e-14);
        for x in [0.2, 0.5, 0.9] {
            assert!((s.evaluate(x) - (x * (1.0 - x)).sqrt()).abs() < 1e-13);
        }
    }

    #[test]
    fn frame_kernel_requires_zero_beta() {
        assert!(cauchy_frame_kernel(&KernelSpec::zero(0.3)).is_err());
        let k = KernelSpec::new(0.0, |x, xi| cot_gap(xi - x));
        let f = cauchy_frame_kernel(&k).unwrap();
        assert!(f(0.3, 0.6).abs() < 1e-15);
    }
}
