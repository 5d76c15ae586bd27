//! Principal-value building blocks on the unit interval.
//!
//! Everything here works on node pairs `(x, 1 - x)` so that the trigonometric
//! factors keep full relative accuracy at both ends of `[0, 1]`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::quad::{midpoints, Node, TanhSinh};

/// `sin(πx/2)` and `cos(πx/2)` from the pair `(x, 1 - x)`.
#[inline]
pub(crate) fn half_sin_cos(x: f64, xbar: f64) -> (f64, f64) {
    ((FRAC_PI_2 * x).sin(), (FRAC_PI_2 * xbar).sin())
}

/// `sin πx` from the pair.
#[inline]
pub(crate) fn sin_pi(x: f64, xbar: f64) -> f64 {
    (PI * x.min(xbar)).sin()
}

/// `ln tan(πx/2)` from the pair.
#[inline]
pub(crate) fn ln_tan_half(x: f64, xbar: f64) -> f64 {
    let (s, c) = half_sin_cos(x, xbar);
    s.ln() - c.ln()
}

/// `cos πξ - cos πx` given both pairs and the signed difference `d = ξ - x`.
#[inline]
pub(crate) fn cos_diff(xi: f64, xibar: f64, x: f64, xbar: f64, d: f64) -> f64 {
    let sum = xi + x;
    let s = if sum <= 1.0 { sum } else { xibar + xbar };
    -2.0 * (FRAC_PI_2 * s).sin() * (FRAC_PI_2 * d).sin()
}

/// `cot(π(ξ + x)/2)` given both pairs.
#[inline]
pub(crate) fn cot_sum(xi: f64, xibar: f64, x: f64, xbar: f64) -> f64 {
    let sum = xi + x;
    if sum <= 1.0 {
        1.0 / (FRAC_PI_2 * sum).tan()
    } else {
        -1.0 / (FRAC_PI_2 * (xibar + xbar)).tan()
    }
}

/// A node together with its signed offset from the evaluation point.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SplitNode {
    pub node: Node,
    pub d: f64,
}

/// Quadrature nodes for an integrand whose only interior difficulty is at `x`.
pub(crate) enum Split {
    TanhSinh(TanhSinh),
    Midpoint(usize),
}

impl Split {
    pub fn tanh_sinh(total: usize) -> Self {
        Split::TanhSinh(TanhSinh::new(total.div_ceil(2)))
    }

    pub fn nodes(&self, x: f64) -> Vec<SplitNode> {
        match self {
            Split::TanhSinh(rule) => {
                let mut out = Vec::with_capacity(2 * rule.len());
                out.extend(
                    rule.unit_nodes(0.0, x)
                        .map(|node| SplitNode { node, d: -node.hi }),
                );
                out.extend(
                    rule.unit_nodes(x, 1.0)
                        .map(|node| SplitNode { node, d: node.lo }),
                );
                // nodes within a subnormal distance of x or of an end carry no weight
                out.retain(|sn| {
                    sn.d.abs() >= f64::MIN_POSITIVE && sn.node.x > 0.0 && sn.node.xbar > 0.0
                });
                out
            }
            Split::Midpoint(n) => {
                let w = 1.0 / *n as f64;
                // a node within rounding of x gets d = 0 so that callers use the limit
                midpoints(*n)
                    .into_iter()
                    .map(|t| {
                        let d = if (t - x).abs() <= 1e-9 * w {
                            0.0
                        } else {
                            t - x
                        };
                        SplitNode {
                            node: Node {
                                x: t,
                                xbar: 1.0 - t,
                                lo: t,
                                hi: 1.0 - t,
                                w,
                            },
                            d,
                        }
                    })
                    .collect()
            }
        }
    }
}

/// `∫₀¹ (1/2) cot(π(ξ-x)/2) φ(ξ) dξ` by singularity subtraction.
pub(crate) fn hilbert_part(phi: &dyn Fn(f64) -> f64, x: f64, xbar: f64, split: &Split) -> f64 {
    let px = phi(x);
    let mut s = 0.0;
    for sn in split.nodes(x) {
        if sn.d == 0.0 {
            // limit of the subtracted integrand: φ'(x)/π, by a central difference
            let h = 0.25 * sn.node.w;
            s += sn.node.w * (phi(x + h) - phi(x - h)) / (2.0 * h * PI);
            continue;
        }
        let c = 0.5 / (FRAC_PI_2 * sn.d).tan();
        s += sn.node.w * c * (phi(sn.node.x) - px);
    }
    let (sx, cx) = half_sin_cos(x, xbar);
    s + px * (cx.ln() - sx.ln()) / PI
}

/// `∫₀¹ (1/2) cot(π(ξ+x)/2) φ(ξ) dξ`, regular for interior `x`.
pub(crate) fn fixed_part(phi: &dyn Fn(f64) -> f64, x: f64, xbar: f64, split: &Split) -> f64 {
    split
        .nodes(x)
        .into_iter()
        .map(|sn| sn.node.w * 0.5 * cot_sum(sn.node.x, sn.node.xbar, x, xbar) * phi(sn.node.x))
        .sum()
}
