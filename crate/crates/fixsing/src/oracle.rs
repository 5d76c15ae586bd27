//! Brute-force application of the operators, used to check every closed form
//! and solver end to end.

use crate::complete::KernelSpec;
use crate::error::{domain, Result};
use crate::pv::{self, Split};
use crate::quad::TanhSinh;

/// How the principal value is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PvScheme {
    /// Subtract `φ(x)` and add back the analytic integral of the Cauchy
    /// factor; the remainder is integrated by tanh-sinh on `[0,x]` and `[x,1]`.
    #[default]
    SubtractSingularity,
    /// Same subtraction on the midpoint grid `(2l-1)/(2n)`, i.e. the
    /// Gauss-Chebyshev rule in `ζ = cos πξ`.
    CosineMap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PvRule {
    nodes: usize,
    scheme: PvScheme,
}

impl Default for PvRule {
    fn default() -> Self {
        Self {
            nodes: 512,
            scheme: PvScheme::SubtractSingularity,
        }
    }
}

impl PvRule {
    pub fn new(nodes: usize) -> Result<Self> {
        if nodes < 16 {
            return domain(format!("a PV rule needs at least 16 nodes, got {nodes}"));
        }
        Ok(Self {
            nodes,
            scheme: PvScheme::SubtractSingularity,
        })
    }

    pub fn with_scheme(mut self, scheme: PvScheme) -> Self {
        self.scheme = scheme;
        self
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn scheme(&self) -> PvScheme {
        self.scheme
    }

    pub(crate) fn split(&self) -> Split {
        match self.scheme {
            PvScheme::SubtractSingularity => Split::tanh_sinh(self.nodes),
            PvScheme::CosineMap => Split::Midpoint(self.nodes),
        }
    }
}

/// Anything that can be checked against the full equation: a profile `φ`
/// and the constant `C` of its right-hand side.
pub trait Profile {
    fn value(&self, x: f64) -> f64;
    fn constant(&self) -> f64;
}

impl Profile for crate::spectral::SeriesSolution {
    fn value(&self, x: f64) -> f64 {
        self.evaluate(x)
    }

    fn constant(&self) -> f64 {
        self.constant_c
    }
}

fn check_interior(x: f64) -> Result<()> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        domain(format!("x must lie in (0,1), got {x}"))
    }
}

/// `S[φ](x) = PV∫₀¹ [(1/2)cot(π(ξ-x)/2) + (β/2)cot(π(ξ+x)/2)] φ(ξ) dξ`.
pub fn apply_s(phi: &dyn Fn(f64) -> f64, beta: f64, x: f64, rule: &PvRule) -> Result<f64> {
    check_interior(x)?;
    let split = rule.split();
    let xbar = 1.0 - x;
    let mut v = pv::hilbert_part(phi, x, xbar, &split);
    if beta != 0.0 {
        v += beta * pv::fixed_part(phi, x, xbar, &split);
    }
    Ok(v)
}

/// `∫₀¹ K(x, ξ) φ(ξ) dξ`, split at `ξ = x` so that kinks on the diagonal and
/// corner growth are resolved by the endpoint clustering of tanh-sinh.
pub fn apply_k(kernel: &KernelSpec, phi: &dyn Fn(f64) -> f64, x: f64, nodes: usize) -> f64 {
    let rule = TanhSinh::new(nodes.div_ceil(2).max(8));
    let pieces: &[(f64, f64)] = if x > 0.0 && x < 1.0 {
        &[(0.0, x), (x, 1.0)]
    } else {
        &[(0.0, 1.0)]
    };
    let mut s = 0.0;
    for &(a, b) in pieces {
        for n in rule.unit_nodes(a, b) {
            s += n.w * kernel.eval(x, n.x) * phi(n.x);
        }
    }
    s
}

/// `S[φ](x) + K[φ](x) + F(x) - C` at each point, with the default 512-node rule.
pub fn full_residual(
    solution: &dyn Profile,
    kernel: &KernelSpec,
    f: &dyn Fn(f64) -> f64,
    xs: &[f64],
) -> Result<Vec<f64>> {
    full_residual_with(solution, kernel, f, xs, &PvRule::default())
}

/// [`full_residual`] with an explicit rule.
pub fn full_residual_with(
    solution: &dyn Profile,
    kernel: &KernelSpec,
    f: &dyn Fn(f64) -> f64,
    xs: &[f64],
    rule: &PvRule,
) -> Result<Vec<f64>> {
    let phi = |x: f64| solution.value(x);
    xs.iter()
        .map(|&x| {
            let s = apply_s(&phi, kernel.beta(), x, rule)?;
            let k = apply_k(kernel, &phi, x, rule.nodes());
            Ok(s + k + f(x) - solution.constant())
        })
        .collect()
}
