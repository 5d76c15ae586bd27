//! Regular kernels of the two crack problems.
//!
//! Both problems are posed in the Hilbert-kernel form `S[φ] + K[φ] = C - F`.
//! The regular part `K` is the difference between the physical kernel
//! (rational fixed singularities plus, for antiplane strain, an image series)
//! and the trigonometric dominant kernel `S`. The differences
//! `1/(πu) - (1/2)cot(πu/2)` are evaluated by their Taylor series near `u = 0`
//! to avoid losing digits to cancellation.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::complete::{KernelSpec, SingularZone};
use crate::error::{Error, Result};

/// Radius below which the rational-minus-cotangent difference switches to Taylor form.
const TAYLOR_RADIUS: f64 = 1e-4;

/// `1/(πu) - (1/2) cot(πu/2)`, smooth through `u = 0`.
pub fn cot_gap(u: f64) -> f64 {
    if u.abs() < TAYLOR_RADIUS {
        PI * u / 12.0 + PI.powi(3) * u.powi(3) / 720.0
    } else {
        1.0 / (PI * u) - 0.5 / (FRAC_PI_2 * u).tan()
    }
}

/// `(1/π)[1/s + 1/(s-2)] - (1/2) cot(πs/2)` for `s = x + ξ ∈ [0, 2]`.
fn sum_gap(s: f64) -> f64 {
    if s < 1.0 {
        cot_gap(s) + 1.0 / (PI * (s - 2.0))
    } else {
        cot_gap(s - 2.0) + 1.0 / (PI * s)
    }
}

/// `D(y) = Σ_{j≥1} β^{2j} / (y + 2j)`, stopped once the geometric tail bound
/// `β^{2(J+1)} / ((y + 2J + 2)(1 - β²))` drops below `tol`.
pub fn antiplane_d(y: f64, beta: f64, tol: f64) -> f64 {
    let b2 = beta * beta;
    if b2 == 0.0 {
        return 0.0;
    }
    let mut p = b2;
    let mut s = 0.0;
    let mut j = 1.0;
    loop {
        s += p / (y + 2.0 * j);
        let tail = p * b2 / ((y + 2.0 * j + 2.0) * (1.0 - b2));
        if tail < tol || j > 1e6 {
            return s;
        }
        j += 1.0;
        p *= b2;
    }
}

/// Antiplane problem: a crack along the interface-normal segment of two
/// bonded half-planes with shear moduli `G₁`, `G₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntiplaneParams {
    /// `G₁ / G₂`.
    pub lambda: f64,
    /// `(λ - 1) / (λ + 1)`.
    pub beta: f64,
    pub series_tol: f64,
}

impl AntiplaneParams {
    pub fn new(lambda: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::Domain(format!(
                "lambda must be positive, got {lambda}"
            )));
        }
        Ok(Self {
            lambda,
            beta: (lambda - 1.0) / (lambda + 1.0),
            series_tol: 1e-15,
        })
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.series_tol = tol;
        self
    }
}

/// Regular part of the antiplane kernel at `(x, ξ)`.
pub fn antiplane_regular(x: f64, xi: f64, beta: f64, tol: f64) -> f64 {
    let d = |y: f64| antiplane_d(y, beta, tol);
    let u = x - xi;
    let r = beta * (d(x + xi) - d(2.0 - x - xi))
        + beta * beta * (d(2.0 - x + xi) - d(2.0 + x - xi) + 2.0 * u / (4.0 - u * u));
    cot_gap(xi - x) + beta * sum_gap(x + xi) + r / PI
}

pub fn antiplane_kernel(params: &AntiplaneParams) -> KernelSpec {
    let (beta, tol) = (params.beta, params.series_tol);
    KernelSpec::new(beta, move |x, xi| antiplane_regular(x, xi, beta, tol))
}

/// Plane-strain material constants and the derived exponent data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneStrainParams {
    pub g1: f64,
    pub g2: f64,
    pub nu1: f64,
    pub nu2: f64,
    pub mu0: f64,
    pub nu0: f64,
    pub delta0: f64,
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
    /// Root of `Λ` in (0,1); set by [`gamma0_root`].
    pub gamma0: Option<f64>,
    /// `-cos(πγ₀)`; set by [`gamma0_root`].
    pub beta_eff: Option<f64>,
}

/// Fills `μ₀, ν₀, δ₀, b₁, b₂, b₃` from the moduli and Poisson ratios.
pub fn plane_strain_coeffs(g1: f64, g2: f64, nu1: f64, nu2: f64) -> Result<PlaneStrainParams> {
    if !(g1 > 0.0 && g2 > 0.0) {
        return Err(Error::Domain(format!(
            "shear moduli must be positive, got ({g1}, {g2})"
        )));
    }
    for nu in [nu1, nu2] {
        if !(nu > 0.0 && nu <= 0.5) {
            return Err(Error::Domain(format!(
                "Poisson ratio must lie in (0, 1/2], got {nu}"
            )));
        }
    }
    let mu0 = g1 * (1.0 - nu2) / (g2 * (1.0 - nu1));
    let nu0 = nu1 / (1.0 - nu1) - mu0 * nu2 / (1.0 - nu2);
    let delta0 = (3.0 + mu0 - nu0) * (1.0 + 3.0 * mu0 + nu0);
    if delta0 == 0.0 {
        return Err(Error::Degenerate("delta0 vanishes".into()));
    }
    let p = nu0 + mu0 - 1.0;
    let q = 1.0 - mu0 * mu0;
    let r = nu0 * (nu0 - 2.0);
    Ok(PlaneStrainParams {
        g1,
        g2,
        nu1,
        nu2,
        mu0,
        nu0,
        delta0,
        b1: (p * p - 4.0 * q) / delta0,
        b2: 4.0 * (r - 3.0 * q) / delta0,
        b3: (-4.0 * r + 3.0 * p * p) / delta0,
        gamma0: None,
        beta_eff: None,
    })
}

impl PlaneStrainParams {
    /// Moduli ratio `λ = G₁/G₂` with `G₂ = 1`.
    pub fn from_lambda(lambda: f64, nu1: f64, nu2: f64) -> Result<Self> {
        plane_strain_coeffs(lambda, 1.0, nu1, nu2)
    }

    fn quad_coeff(&self) -> f64 {
        let (m, n) = (self.mu0, self.nu0);
        m * m - 3.0 - 2.0 * m * (n - 1.0) + n * (n - 2.0)
    }
}

/// `Λ(γ) = δ₀ cos πγ - 2[μ₀² - 3 - 2μ₀(ν₀-1) + ν₀(ν₀-2)] γ² - 4(1-μ₀²) + (ν₀+μ₀-1)²`.
pub fn lambda_fn(gamma: f64, params: &PlaneStrainParams) -> f64 {
    let p = params.nu0 + params.mu0 - 1.0;
    params.delta0 * (PI * gamma).cos()
        - 2.0 * params.quad_coeff() * gamma * gamma
        - 4.0 * (1.0 - params.mu0 * params.mu0)
        + p * p
}

fn lambda_slope(gamma: f64, params: &PlaneStrainParams) -> f64 {
    -PI * params.delta0 * (PI * gamma).sin() - 4.0 * params.quad_coeff() * gamma
}

/// Root γ₀ of `Λ` in (0,1), bracketed by a 1000-point sign scan and refined by bisection plus Newton.
/// Stores γ₀ and `β_eff = -cos πγ₀` into `params`.
pub fn gamma0_root(params: &mut PlaneStrainParams, tol: f64) -> Result<f64> {
    const SCAN: usize = 1000;
    let f = |g: f64| lambda_fn(g, params);
    let mut brackets = Vec::new();
    let mut prev = (0.0, f(0.0));
    for k in 1..=SCAN {
        let g = k as f64 / SCAN as f64;
        let v = f(g);
        if v == 0.0 && k < SCAN {
            brackets.push((g, g));
        } else if prev.1 * v < 0.0 {
            brackets.push((prev.0, g));
        }
        prev = (g, v);
    }
    let &(mut a, mut b) = brackets.first().ok_or(Error::NoBracket)?;
    if brackets.len() > 1 {
        log::warn!(
            "exponent equation changes sign {} times on (0,1); using the first root",
            brackets.len()
        );
    }
    let mut fa = f(a);
    while b - a > tol.max(1e-16) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            a = m;
            b = m;
            break;
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    let (lo, hi) = (a, b);
    let mut g = 0.5 * (a + b);
    for _ in 0..4 {
        let d = lambda_slope(g, params);
        if d == 0.0 {
            break;
        }
        let next = g - f(g) / d;
        if !(next >= lo - tol && next <= hi + tol) {
            break;
        }
        g = next;
    }
    params.gamma0 = Some(g);
    // -cos πγ₀ written so that γ₀ = 1/2 gives exactly 0
    params.beta_eff = Some((PI * (g - 0.5)).sin());
    Ok(g)
}

/// Rational fixed-singularity part `(b₁ξ² + b₂ξx + b₃x²)/(ξ+x)³ + (same about (1,1))/(ξ+x-2)³`.
pub fn plane_strain_rational(x: f64, xi: f64, p: &PlaneStrainParams) -> f64 {
    let s = x + xi;
    let (u, v) = (xi - 1.0, x - 1.0);
    (p.b1 * xi * xi + p.b2 * xi * x + p.b3 * x * x) / (s * s * s)
        + (p.b1 * u * u + p.b2 * u * v + p.b3 * v * v) / (s - 2.0).powi(3)
}

/// Regular kernel of the dominant plane-strain equation.
///
/// The full equation carries one more regular kernel whose closed form is not
/// available; asking for it (`include_k0 = true`) is an error.
pub fn plane_strain_kernel(params: &PlaneStrainParams, include_k0: bool) -> Result<KernelSpec> {
    if include_k0 {
        return Err(Error::Unsupported(
            "the plane-strain kernel K0 has no closed form; only the dominant equation is solved"
                .into(),
        ));
    }
    let beta = params
        .beta_eff
        .ok_or_else(|| Error::Domain("run gamma0_root before building the kernel".into()))?;
    let p = *params;
    let k = move |x: f64, xi: f64| {
        let s = x + xi;
        let cot = if s <= 1.0 {
            1.0 / (FRAC_PI_2 * s).tan()
        } else {
            -1.0 / (FRAC_PI_2 * (2.0 - s)).tan()
        };
        cot_gap(xi - x) + plane_strain_rational(x, xi, &p) / PI - 0.5 * beta * cot
    };
    Ok(KernelSpec::new(beta, k).with_zones(vec![
        SingularZone::Diagonal,
        SingularZone::CornerZero,
        SingularZone::CornerOne,
    ]))
}
