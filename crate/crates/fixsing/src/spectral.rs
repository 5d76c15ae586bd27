//! Spectral basis for the characteristic operator when `0 < |β| < 1`.
//!
//! The functions
//!
//! `φ_j(x) = cos^{2ρ₁}(πx/2) sin^{2-2ρ₁}(πx/2) q_j^{(ρ₁)} + cos^{2-2ρ₁}(πx/2) sin^{2ρ₁}(πx/2) q_j^{(1-ρ₁)}`
//!
//! with polynomials `q_j^{(α)}` in `sin²(πx/2)` satisfy
//! `S[φ_j](x) = N_{j+1} - cos((j+1)πx)`, so the operator is diagonal on them
//! up to a constant. That turns both the characteristic and the complete
//! equation into small algebraic systems.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::pv;
use crate::regimes::{classify, RegimeKind};
use crate::specfun::{chebyshev_t, hyp3f2_terminating, pochhammer};

/// Degree above which the coefficient tables lose too many digits to cancellation.
pub const DEGREE_WARN: usize = 30;

/// Highest even index for which `N_j` is taken from the finite alternating sum.
/// The sum cancels badly (about 1e-10 absolute error at j = 10), so beyond this
/// the moment recurrence, which is accurate to roundoff, takes over.
const N_SUM_MAX: usize = 4;

/// Which exponent a `q_j^{(α)}` table belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alpha {
    /// `α = ρ₁`.
    Rho,
    /// `α = 1 - ρ₁`.
    Complement,
}

/// Coefficients `c_{jν}^{(α)}`, `0 <= ν <= j <= max_degree`, as rows indexed by `j`.
pub fn coefficient_table(alpha: f64, max_degree: usize) -> Vec<Vec<f64>> {
    let scale = 1.0 / (2.0 * (PI * alpha).sin());
    (0..=max_degree)
        .map(|j| {
            (0..=j)
                .map(|nu| {
                    let mut s = 0.0;
                    for m in nu + 1..=j + 1 {
                        let k = m - 1 - nu;
                        s += pochhammer(-(j as f64) - 1.0, m)
                            * pochhammer(j as f64 + 1.0, m)
                            * pochhammer(alpha, k)
                            / (pochhammer(0.5, m) * pochhammer(1.0, m) * pochhammer(1.0, k));
                    }
                    s * scale
                })
                .collect()
        })
        .collect()
}

fn horner(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * t + a)
}

/// Coefficient tables and evaluators for a fixed ρ₁.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralBasis {
    beta: Option<f64>,
    rho1: f64,
    max_degree: usize,
    c_rho: Vec<Vec<f64>>,
    c_comp: Vec<Vec<f64>>,
}

/// Basis for `0 < |β| < 1` up to degree `max_degree`.
pub fn build_basis(beta: f64, max_degree: usize) -> Result<SpectralBasis> {
    let r = classify(beta)?;
    if r.kind != RegimeKind::InsideUnit {
        return domain(format!("spectral basis needs 0 < |beta| < 1, got {beta}"));
    }
    let mut b = SpectralBasis::from_rho(r.rho1.unwrap_or(0.75), max_degree)?;
    b.beta = Some(beta);
    Ok(b)
}

impl SpectralBasis {
    /// Basis for an explicit ρ₁ ∈ (0, 1). `ρ₁ = 3/4` gives the β → 0 limit.
    pub fn from_rho(rho1: f64, max_degree: usize) -> Result<Self> {
        if !(rho1 > 0.0 && rho1 < 1.0) {
            return domain(format!("rho1 must lie in (0,1), got {rho1}"));
        }
        if max_degree > DEGREE_WARN {
            log::warn!(
                "basis degree {max_degree} exceeds {DEGREE_WARN}; coefficients lose accuracy"
            );
        }
        Ok(Self {
            beta: None,
            rho1,
            max_degree,
            c_rho: coefficient_table(rho1, max_degree),
            c_comp: coefficient_table(1.0 - rho1, max_degree),
        })
    }

    /// β the basis was built for (`None` when constructed from ρ₁).
    pub fn beta(&self) -> Option<f64> {
        self.beta
    }

    pub fn rho1(&self) -> f64 {
        self.rho1
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `c_{jν}^{(α)}`.
    pub fn coeff(&self, j: usize, nu: usize, alpha: Alpha) -> f64 {
        match alpha {
            Alpha::Rho => self.c_rho[j][nu],
            Alpha::Complement => self.c_comp[j][nu],
        }
    }

    /// `φ_j(x)`; exactly 0 at both ends.
    pub fn phi(&self, j: usize, x: f64) -> f64 {
        self.phi_pair(j, x, 1.0 - x)
    }

    /// `φ_j` from the pair `(x, 1 - x)`, accurate near `x = 1`.
    pub fn phi_pair(&self, j: usize, x: f64, xbar: f64) -> f64 {
        if x <= 0.0 || xbar <= 0.0 {
            return 0.0;
        }
        let (s, c) = pv::half_sin_cos(x, xbar);
        let (wa, wb) = self.envelopes(s, c);
        let t = s * s;
        wa * horner(&self.c_rho[j], t) + wb * horner(&self.c_comp[j], t)
    }

    /// `φ_0(x), ..., φ_{count-1}(x)` in one pass.
    pub fn phis_pair(&self, x: f64, xbar: f64, count: usize) -> Vec<f64> {
        if x <= 0.0 || xbar <= 0.0 {
            return vec![0.0; count];
        }
        let (s, c) = pv::half_sin_cos(x, xbar);
        let (wa, wb) = self.envelopes(s, c);
        let t = s * s;
        (0..count)
            .map(|j| wa * horner(&self.c_rho[j], t) + wb * horner(&self.c_comp[j], t))
            .collect()
    }

    fn envelopes(&self, s: f64, c: f64) -> (f64, f64) {
        let r = self.rho1;
        (
            c.powf(2.0 * r) * s.powf(2.0 - 2.0 * r),
            c.powf(2.0 - 2.0 * r) * s.powf(2.0 * r),
        )
    }

    /// `N_j`: 0 for odd `j`, `N_0 = 1`.
    pub fn n_coeff(&self, j: usize) -> f64 {
        if j % 2 == 1 {
            0.0
        } else if j <= N_SUM_MAX {
            hyp3f2_terminating(j, self.rho1, 1.0).unwrap_or(f64::NAN)
        } else {
            self.n_coeffs(j)[j]
        }
    }

    /// `N_0, ..., N_{n_max}` from the finite sums (low indices) and the moment
    /// recurrence `(n+1) g_{n+1} + 2(2ρ₁-1) g_n + (1-n) g_{n-1} = 0` (high indices).
    pub fn n_coeffs(&self, n_max: usize) -> Vec<f64> {
        let r = self.rho1;
        let mut g = vec![0.0; n_max + 2];
        g[0] = 1.0;
        g[1] = 1.0 - 2.0 * r;
        for n in 1..=n_max {
            let nf = n as f64;
            g[n + 1] = -(2.0 * (2.0 * r - 1.0) * g[n] + (1.0 - nf) * g[n - 1]) / (nf + 1.0);
        }
        (0..=n_max)
            .map(|j| {
                if j % 2 == 1 {
                    0.0
                } else if j <= N_SUM_MAX {
                    hyp3f2_terminating(j, r, 1.0).unwrap_or(f64::NAN)
                } else {
                    g[j]
                }
            })
            .collect()
    }

    /// `M_j = (2 / sin πρ₁) N_j`, the cosine moments of the solvability weight.
    pub fn m_coeff(&self, j: usize) -> f64 {
        2.0 / (PI * self.rho1).sin() * self.n_coeff(j)
    }
}

/// Truncated series solution of the characteristic equation `S[φ] = C - F`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSolution {
    pub basis: SpectralBasis,
    /// `2 f_{j+1}`, `j = 0..=m0`.
    pub coefficients: Vec<f64>,
    pub constant_c: f64,
    pub m0: usize,
}

impl SeriesSolution {
    pub fn evaluate(&self, x: f64) -> f64 {
        let p = self.basis.phis_pair(x, 1.0 - x, self.coefficients.len());
        self.coefficients.iter().zip(p).map(|(c, v)| c * v).sum()
    }
}

/// The constant `C = f₀ + 2 Σ_{n≥1} N_n f_n` that makes `C - F` solvable,
/// using every supplied cosine coefficient.
pub fn series_constant(basis: &SpectralBasis, fourier_coeffs: &[f64]) -> f64 {
    if fourier_coeffs.is_empty() {
        return 0.0;
    }
    let n = basis.n_coeffs(fourier_coeffs.len() - 1);
    fourier_coeffs[0]
        + 2.0
            * fourier_coeffs
                .iter()
                .zip(&n)
                .skip(1)
                .map(|(f, nn)| f * nn)
                .sum::<f64>()
}

/// `φ ≈ 2 Σ_{j=0}^{m0} f_{j+1} φ_j` from cosine coefficients `f_j = ∫₀¹ F cos(πjx)`.
///
/// The constant uses all supplied coefficients, so passing more than `m0 + 2`
/// of them sharpens `C` without changing the profile.
pub fn characteristic_series_solve(
    basis: &SpectralBasis,
    fourier_coeffs: &[f64],
    m0: usize,
) -> Result<SeriesSolution> {
    if fourier_coeffs.len() < m0 + 2 {
        return domain(format!(
            "need {} cosine coefficients, got {}",
            m0 + 2,
            fourier_coeffs.len()
        ));
    }
    if m0 > basis.max_degree {
        return domain(format!(
            "m0 = {m0} exceeds the basis degree {}",
            basis.max_degree
        ));
    }
    Ok(SeriesSolution {
        basis: basis.clone(),
        coefficients: (0..=m0).map(|j| 2.0 * fourier_coeffs[j + 1]).collect(),
        constant_c: series_constant(basis, fourier_coeffs),
        m0,
    })
}

/// Closed form of
/// `J_j^{(α)}(ζ) = (1/π) PV∫_{-1}^{1} (1-η)^{α-1} (1+η)^{-α} T_j(η) / (η - ζ) dη`:
/// `cot(πα) (1-ζ)^{α-1} (1+ζ)^{-α} T_j(ζ) - q_{j-1}^{(α)}`, with `q` a polynomial in `(1-ζ)/2`.
pub fn j_integral(alpha: f64, j: usize, zeta: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return domain(format!("alpha must lie in (0,1), got {alpha}"));
    }
    if !(zeta > -1.0 && zeta < 1.0) {
        return domain(format!("zeta must lie in (-1,1), got {zeta}"));
    }
    let lead = (1.0 - zeta).powf(alpha - 1.0) * (1.0 + zeta).powf(-alpha) * chebyshev_t(j, zeta)
        / (PI * alpha).tan();
    let q = if j == 0 {
        0.0
    } else {
        let table = coefficient_table(alpha, j - 1);
        horner(&table[j - 1], 0.5 * (1.0 - zeta))
    };
    Ok(lead - q)
}
