//! Galerkin solver for the complete equation
//!
//! `∫₀¹ [S(x,ξ) + K(x,ξ)] φ(ξ) dξ = C - F(x)`, `0 < x < 1`,
//!
//! with `0 < |β| < 1`. The unknown is expanded as `φ = Σ b_j φ_j`; since
//! `S[φ_j] = N_{j+1} - cos((j+1)πx)`, projecting onto `cos(nπx)` gives for
//! `n >= 1` the rows `-(1/2) b_{n-1} + Σ_j k_{nj} b_j = -f_n`, and the `n = 0`
//! row yields the constant `C`. The double integrals `k_{nj}` are computed with
//! the interior midpoint rule, which never samples the singular corners.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::oracle::{self, Profile, PvRule};
use crate::quad::{midpoints, TanhSinh};
use crate::regimes::{classify, weight_pair};
use crate::spectral::{build_basis, SpectralBasis};

/// Condition estimate above which a truncated system is rejected.
pub const CONDITION_LIMIT: f64 = 1e12;

/// Basis size above which the solver warns about growing instability.
pub const INSTABILITY_WARN: usize = 25;

/// Places where the regular kernel is only defined as a limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularZone {
    /// `ξ = x`, removable.
    Diagonal,
    /// `x = ξ = 0`.
    CornerZero,
    /// `x = ξ = 1`.
    CornerOne,
}

pub type RegularFn = dyn Fn(f64, f64) -> f64 + Send + Sync;

/// A regular kernel `K(x, ξ)` together with the β of its dominant part.
#[derive(Clone)]
pub struct KernelSpec {
    beta: f64,
    regular: Arc<RegularFn>,
    zones: Vec<SingularZone>,
}

impl fmt::Debug for KernelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KernelSpec")
            .field("beta", &self.beta)
            .field("zones", &self.zones)
            .finish()
    }
}

impl KernelSpec {
    pub fn new<F>(beta: f64, regular: F) -> Self
    where
        F: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            beta,
            regular: Arc::new(regular),
            zones: vec![SingularZone::Diagonal],
        }
    }

    /// `K ≡ 0`: the characteristic equation.
    pub fn zero(beta: f64) -> Self {
        Self {
            beta,
            regular: Arc::new(|_, _| 0.0),
            zones: Vec::new(),
        }
    }

    pub fn with_zones(mut self, zones: Vec<SingularZone>) -> Self {
        self.zones = zones;
        self
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn zones(&self) -> &[SingularZone] {
        &self.zones
    }

    #[inline]
    pub fn eval(&self, x: f64, xi: f64) -> f64 {
        (self.regular)(x, xi)
    }
}

/// How the truncation order `N` is counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Truncation {
    /// `N` counts the projected equations `n = 0..N-1`, the first of which
    /// determines `C`; this leaves `N - 1` basis coefficients.
    #[default]
    Equations,
    /// `N` basis coefficients, determined by rows `n = 1..N`.
    Coefficients,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SolveConfig {
    /// Truncation order.
    pub n: usize,
    /// Midpoint nodes in `x`.
    pub t1: usize,
    /// Midpoint nodes in `ξ`.
    pub t2: usize,
    /// Tolerance forwarded to kernel sub-series.
    pub series_tol: f64,
    /// Nodes of the principal-value rule used for diagnostics.
    pub pv_nodes: usize,
    pub truncation: Truncation,
    /// Compute the oracle-based residuals after solving.
    pub diagnostics: bool,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            n: 17,
            t1: 200,
            t2: 210,
            series_tol: 1e-15,
            pv_nodes: 512,
            truncation: Truncation::Equations,
            diagnostics: true,
        }
    }
}

impl SolveConfig {
    pub fn new(n: usize, t1: usize, t2: usize) -> Self {
        Self {
            n,
            t1,
            t2,
            ..Self::default()
        }
    }

    pub fn with_truncation(mut self, truncation: Truncation) -> Self {
        self.truncation = truncation;
        self
    }

    pub fn without_diagnostics(mut self) -> Self {
        self.diagnostics = false;
        self
    }

    /// Number of basis coefficients `b_j`.
    pub fn basis_size(&self) -> usize {
        match self.truncation {
            Truncation::Equations => self.n.saturating_sub(1),
            Truncation::Coefficients => self.n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.basis_size() == 0 {
            return domain(format!(
                "truncation order {} leaves no basis functions",
                self.n
            ));
        }
        if self.t1 <= self.basis_size() || self.t2 < self.basis_size() {
            return domain(format!(
                "node counts ({}, {}) must exceed the number of projected rows {}",
                self.t1,
                self.t2,
                self.basis_size()
            ));
        }
        if self.pv_nodes < 16 {
            return domain("pv_nodes must be at least 16");
        }
        Ok(())
    }
}

/// `f_n = (1/t₁) Σ_m F(x_m) cos(nπx_m)` on the midpoints `x_m = (2m-1)/(2t₁)`.
pub fn fourier_load_coeffs(f: &dyn Fn(f64) -> f64, t1: usize, n_max: usize) -> Result<Vec<f64>> {
    if n_max >= t1 {
        return domain(format!(
            "n_max = {n_max} must be below t1 = {t1} to avoid aliasing"
        ));
    }
    let xs = midpoints(t1);
    let fx: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    Ok((0..=n_max)
        .map(|n| {
            let k = std::f64::consts::PI * n as f64;
            xs.iter()
                .zip(&fx)
                .map(|(&x, &v)| v * (k * x).cos())
                .sum::<f64>()
                / t1 as f64
        })
        .collect())
}

/// `k_{nj}` for `n = 0..rows`, `j = 0..cols` by the double midpoint rule.
fn assemble(
    kernel: &KernelSpec,
    basis: &SpectralBasis,
    t1: usize,
    t2: usize,
    rows: usize,
    cols: usize,
) -> DMatrix<f64> {
    let xs = midpoints(t1);
    let xis = midpoints(t2);
    let phis: Vec<Vec<f64>> = xis
        .iter()
        .map(|&xi| basis.phis_pair(xi, 1.0 - xi, cols))
        .collect();
    // inner[m][j] = Σ_l K(x_m, ξ_l) φ_j(ξ_l)
    let inner: Vec<Vec<f64>> = xs
        .par_iter()
        .map(|&x| {
            let mut acc = vec![0.0; cols];
            for (&xi, p) in xis.iter().zip(&phis) {
                let k = kernel.eval(x, xi);
                for (a, v) in acc.iter_mut().zip(p) {
                    *a += k * v;
                }
            }
            acc
        })
        .collect();
    let scale = 1.0 / (t1 as f64 * t2 as f64);
    DMatrix::from_fn(rows, cols, |n, j| {
        let k = std::f64::consts::PI * n as f64;
        xs.iter()
            .zip(&inner)
            .map(|(&x, row)| (k * x).cos() * row[j])
            .sum::<f64>()
            * scale
    })
}

/// The square matrix `k_{nj}`, `0 <= n, j <= n_max`.
pub fn kernel_matrix(
    kernel: &KernelSpec,
    basis: &SpectralBasis,
    config: &SolveConfig,
    n_max: usize,
) -> Result<DMatrix<f64>> {
    if basis.max_degree() < n_max {
        return domain(format!(
            "basis degree {} is below n_max = {n_max}",
            basis.max_degree()
        ));
    }
    if n_max >= config.t1 {
        return domain(format!("n_max = {n_max} must be below t1 = {}", config.t1));
    }
    Ok(assemble(
        kernel,
        basis,
        config.t1,
        config.t2,
        n_max + 1,
        n_max + 1,
    ))
}

/// Solution of the truncated complete equation.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub basis: SpectralBasis,
    pub b: Vec<f64>,
    pub constant_c: f64,
    pub config: SolveConfig,
    pub residual_report: BTreeMap<String, f64>,
}

impl Solution {
    /// `Σ_j b_j φ_j(x)`.
    pub fn evaluate(&self, x: f64) -> f64 {
        evaluate_coeffs(&self.basis, &self.b, x)
    }
}

impl Profile for Solution {
    fn value(&self, x: f64) -> f64 {
        self.evaluate(x)
    }

    fn constant(&self) -> f64 {
        self.constant_c
    }
}

fn evaluate_coeffs(basis: &SpectralBasis, b: &[f64], x: f64) -> f64 {
    let p = basis.phis_pair(x, 1.0 - x, b.len());
    b.iter().zip(p).map(|(c, v)| c * v).sum()
}

/// Free-function form of [`Solution::evaluate`].
pub fn evaluate(solution: &Solution, x: f64) -> f64 {
    solution.evaluate(x)
}

/// Ratio of extreme singular values.
pub fn condition_estimate(a: &DMatrix<f64>) -> f64 {
    let sv = a.clone().svd(false, false).singular_values;
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// Solves the complete equation for `0 < |β| < 1`.
pub fn solve(
    kernel: &KernelSpec,
    f: &dyn Fn(f64) -> f64,
    config: &SolveConfig,
) -> Result<Solution> {
    config.validate()?;
    let nb = config.basis_size();
    if nb > INSTABILITY_WARN {
        log::warn!("{nb} basis functions: the truncated system is known to become unstable");
    }
    let basis = build_basis(kernel.beta(), nb)?;
    let fc = fourier_load_coeffs(f, config.t1, nb)?;
    let k = assemble(kernel, &basis, config.t1, config.t2, nb + 1, nb);

    let mut a = DMatrix::zeros(nb, nb);
    let mut rhs = DVector::zeros(nb);
    for n in 1..=nb {
        for j in 0..nb {
            a[(n - 1, j)] = k[(n, j)];
        }
        a[(n - 1, n - 1)] -= 0.5;
        rhs[n - 1] = -fc[n];
    }
    let cond = condition_estimate(&a);
    if cond.is_nan() || cond > CONDITION_LIMIT {
        return Err(Error::Singular {
            cond,
            limit: CONDITION_LIMIT,
        });
    }
    let sol = a.clone().lu().solve(&rhs).ok_or(Error::Singular {
        cond: f64::INFINITY,
        limit: CONDITION_LIMIT,
    })?;
    let b: Vec<f64> = sol.iter().cloned().collect();

    let nn = basis.n_coeffs(nb);
    let constant_c = fc[0] + (0..nb).map(|j| (nn[j + 1] + k[(0, j)]) * b[j]).sum::<f64>();

    let mut report = BTreeMap::new();
    report.insert("condition".to_string(), cond);
    report.insert("linear_residual".to_string(), (&a * &sol - &rhs).amax());
    // C recomputed from the cosine moments of F + K[φ] weighted by 2N_n
    let g = |n: usize| fc[n] + (0..nb).map(|j| k[(n, j)] * b[j]).sum::<f64>();
    let c_weighted = g(0) + (1..=nb).map(|n| 2.0 * nn[n] * g(n)).sum::<f64>();
    report.insert("n0_identity".to_string(), (constant_c - c_weighted).abs());

    let mut solution = Solution {
        basis,
        b,
        constant_c,
        config: *config,
        residual_report: report,
    };
    if config.diagnostics {
        let rule = PvRule::new(config.pv_nodes)?;
        let xs = [0.1, 0.3, 0.5, 0.7, 0.9];
        let res = oracle::full_residual_with(&solution, kernel, f, &xs, &rule)?;
        let worst = res.iter().fold(0.0f64, |m, r| m.max(r.abs()));
        let c_reg = regularization_constant(&solution, kernel, f, config.pv_nodes / 2)?;
        solution
            .residual_report
            .insert("equation_residual_max".to_string(), worst);
        solution.residual_report.insert(
            "regularization_constant_gap".to_string(),
            (c_reg - constant_c).abs(),
        );
    }
    Ok(solution)
}

/// `C = (sin πρ₁ / 2) ∫₀¹ V(x) [F(x) + K[φ](x)] dx`, the constant that makes the
/// right-hand side solvable for the computed `φ`.
pub fn regularization_constant(
    solution: &Solution,
    kernel: &KernelSpec,
    f: &dyn Fn(f64) -> f64,
    nodes: usize,
) -> Result<f64> {
    let regime = classify(kernel.beta())?;
    let rho = solution.basis.rho1();
    let rule = TanhSinh::new(nodes.div_ceil(2).max(8));
    let phi = |x: f64| solution.evaluate(x);
    let mut s = 0.0;
    for (lo, hi) in [(0.0, 0.5), (0.5, 1.0)] {
        for n in rule.unit_nodes(lo, hi) {
            let kphi = oracle::apply_k(kernel, &phi, n.x, nodes);
            s += n.w * weight_pair(&regime, n.x, n.xbar) * (f(n.x) + kphi);
        }
    }
    Ok(0.5 * (std::f64::consts::PI * rho).sin() * s)
}
