//! Quadrature rules shared by the solvers and the oracle.
//!
//! The tanh-sinh rule is the workhorse: it tolerates algebraic and logarithmic
//! singularities at the ends of the integration interval, which is exactly
//! what the solutions of the fixed-singularity equations look like. Nodes carry
//! their distances to both ends so that integrands can be evaluated without
//! the cancellation hidden in `1 - x` when `x` is within a few ulps of 1.

use std::f64::consts::FRAC_PI_2;

/// Half-width of the tanh-sinh parameter range. Nodes beyond this sit closer
/// than ~1e-300 to an endpoint and contribute nothing.
const T_MAX: f64 = 6.2;

/// A quadrature node on a subinterval `[a, b]` of `[0, 1]`.
#[derive(Debug, Clone, Copy)]
pub struct Node {
    /// Abscissa.
    pub x: f64,
    /// `1 - x`, computed without cancellation near `x = 1`.
    pub xbar: f64,
    /// Distance from the left end `a`.
    pub lo: f64,
    /// Distance from the right end `b`.
    pub hi: f64,
    /// Weight, already scaled by `b - a`.
    pub w: f64,
}

/// Tanh-sinh (double exponential) rule with a fixed number of nodes.
#[derive(Debug, Clone)]
pub struct TanhSinh {
    // (d, 1 - d, weight) on the unit interval
    base: Vec<(f64, f64, f64)>,
}

impl TanhSinh {
    /// Builds a rule with `n` nodes on the unit interval (at least 8).
    pub fn new(n: usize) -> Self {
        let n = n.max(8);
        let h = 2.0 * T_MAX / (n as f64 - 1.0);
        let mut base = Vec::with_capacity(n);
        for k in 0..n {
            let t = -T_MAX + k as f64 * h;
            let u = FRAC_PI_2 * t.sinh();
            let e = (-2.0 * u.abs()).exp();
            let small = e / (1.0 + e);
            let big = 1.0 / (1.0 + e);
            if small < f64::MIN_POSITIVE {
                continue;
            }
            let w = h * 0.25 * std::f64::consts::PI * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
            if w == 0.0 {
                continue;
            }
            let (d, dbar) = if u >= 0.0 { (big, small) } else { (small, big) };
            base.push((d, dbar, w));
        }
        Self { base }
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// Nodes mapped onto `[a, b]` with `0 <= a < b <= 1`.
    pub fn unit_nodes(&self, a: f64, b: f64) -> impl Iterator<Item = Node> + '_ {
        let len = b - a;
        self.base.iter().map(move |&(d, dbar, w)| {
            let lo = len * d;
            let hi = len * dbar;
            let x = if d <= 0.5 { a + lo } else { b - hi };
            let xbar = if x > 0.5 { (1.0 - b) + hi } else { 1.0 - x };
            Node {
                x,
                xbar,
                lo,
                hi,
                w: w * len,
            }
        })
    }

    /// Integral of `f` over `[a, b]`; any finite interval is accepted.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let len = b - a;
        let mut s = 0.0;
        for &(d, dbar, w) in &self.base {
            let x = if d <= 0.5 {
                a + len * d
            } else {
                b - len * dbar
            };
            s += w * f(x);
        }
        s * len
    }
}

/// Interior midpoints `(2m - 1) / (2t)`, `m = 1..=t`.
pub fn midpoints(t: usize) -> Vec<f64> {
    (1..=t)
        .map(|m| (2 * m - 1) as f64 / (2 * t) as f64)
        .collect()
}
