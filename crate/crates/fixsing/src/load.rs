//! Polynomial crack-face loads with exact cosine coefficients.
//!
//! A load density `p(x)` enters the equations through its primitive
//! `F(x) = ∫₀ˣ p`, so a uniform pressure gives `F = P x`.

use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LoadKind {
    /// `p = P`, `F = P x`.
    Uniform,
    /// `p = P x`, `F = P x²/2`.
    Linear,
    /// `p = P x²`, `F = P x³/3`.
    Quadratic,
}

impl std::str::FromStr for LoadKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Self::Uniform),
            "linear" => Ok(Self::Linear),
            "quadratic" => Ok(Self::Quadratic),
            other => Err(format!(
                "unknown load '{other}' (expected uniform, linear or quadratic)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Load {
    pub kind: LoadKind,
    pub amplitude: f64,
}

impl Load {
    pub fn new(kind: LoadKind, amplitude: f64) -> Self {
        Self { kind, amplitude }
    }

    /// `F(x)`.
    pub fn eval(&self, x: f64) -> f64 {
        self.amplitude
            * match self.kind {
                LoadKind::Uniform => x,
                LoadKind::Linear => 0.5 * x * x,
                LoadKind::Quadratic => x * x * x / 3.0,
            }
    }

    /// `f_j = ∫₀¹ F(x) cos(πjx) dx` in closed form.
    pub fn cosine_coeff(&self, j: usize) -> f64 {
        let p = self.amplitude;
        if j == 0 {
            return p * match self.kind {
                LoadKind::Uniform => 0.5,
                LoadKind::Linear => 1.0 / 6.0,
                LoadKind::Quadratic => 1.0 / 12.0,
            };
        }
        let sign = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
        let k2 = (PI * j as f64).powi(2);
        p * match self.kind {
            LoadKind::Uniform => (sign - 1.0) / k2,
            LoadKind::Linear => sign / k2,
            LoadKind::Quadratic => sign / k2 - 2.0 * (sign - 1.0) / (k2 * k2),
        }
    }

    /// `f_0, ..., f_{n_max}`.
    pub fn cosine_coeffs(&self, n_max: usize) -> Vec<f64> {
        (0..=n_max).map(|j| self.cosine_coeff(j)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::TanhSinh;

    #[test]
    fn coefficients_match_quadrature() {
        let rule = TanhSinh::new(200);
        for kind in [LoadKind::Uniform, LoadKind::Linear, LoadKind::Quadratic] {
            let load = Load::new(kind, 1.7);
            for j in 0..8 {
                let q = rule.integrate(0.0, 1.0, |x| load.eval(x) * (PI * j as f64 * x).cos());
                assert!((q - load.cosine_coeff(j)).abs() < 1e-13, "{kind:?} j={j}");
            }
        }
    }

    #[test]
    fn parses_selectors() {
        assert_eq!("linear".parse::<LoadKind>().unwrap(), LoadKind::Linear);
        assert!("cubic".parse::<LoadKind>().is_err());
    }
}
