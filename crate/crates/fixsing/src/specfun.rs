//! Special-function primitives: Pochhammer symbols, Chebyshev polynomials,
//! terminating unit-argument ₃F₂ sums, and the Jacobi-weighted Chebyshev
//! integrals `∫(1-ζ)^α₁ (1+ζ)^α₂ T_j(ζ) dζ` and the `U_j` analogue.

use std::f64::consts::PI;

use crate::error::{domain, Result};

/// Rising factorial `(a)_m = a (a+1) ... (a+m-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: f64, m: usize) -> f64 {
    (0..m).fold(1.0, |p, k| p * (a + k as f64))
}

/// Chebyshev polynomial of the first kind by three-term recurrence.
pub fn chebyshev_t(n: usize, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => x,
        _ => {
            let (mut t0, mut t1) = (1.0, x);
            for _ in 1..n {
                let t2 = 2.0 * x * t1 - t0;
                t0 = t1;
                t1 = t2;
            }
            t1
        }
    }
}

/// Chebyshev polynomial of the second kind by three-term recurrence.
pub fn chebyshev_u(n: usize, x: f64) -> f64 {
    let (mut u0, mut u1) = (1.0, 2.0 * x);
    if n == 0 {
        return u0;
    }
    for _ in 1..n {
        let u2 = 2.0 * x * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    u1
}

/// Terminating ₃F₂(-n, p, a; q₁, q₂; 1), summed left to right.
///
/// Fails when a denominator Pochhammer symbol vanishes inside the summation range.
pub fn terminating_3f2(n: usize, p: f64, a: f64, q1: f64, q2: f64) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    for m in 0..n {
        let mf = m as f64;
        let den = (q1 + mf) * (q2 + mf) * (mf + 1.0);
        if den == 0.0 {
            return domain(format!("vanishing denominator in 3F2 at m = {m}"));
        }
        term *= (mf - n as f64) * (p + mf) * (a + mf) / den;
        sum += term;
    }
    Ok(sum)
}

/// `Σ_{m=0}^{j} (-j)_m (j)_m (a)_m / ((1/2)_m (b)_m m!)`.
pub fn hyp3f2_terminating(j: usize, a: f64, b: f64) -> Result<f64> {
    terminating_3f2(j, j as f64, a, 0.5, b)
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function (Lanczos approximation with reflection below 1/2).
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut s = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * s
}

fn jacobi_prefactor(alpha1: f64, alpha2: f64) -> Result<f64> {
    if !(alpha1 > -1.0 && alpha2 > -1.0) {
        return domain(format!(
            "Jacobi exponents must exceed -1, got ({alpha1}, {alpha2})"
        ));
    }
    Ok(
        2f64.powf(alpha1 + alpha2 + 1.0) * gamma(alpha1 + 1.0) * gamma(alpha2 + 1.0)
            / gamma(alpha1 + alpha2 + 2.0),
    )
}

/// `∫_{-1}^{1} (1-ζ)^α₁ (1+ζ)^α₂ T_j(ζ) dζ` in closed form.
pub fn jacobi_chebyshev_integral_t(alpha1: f64, alpha2: f64, j: usize) -> Result<f64> {
    let pre = jacobi_prefactor(alpha1, alpha2)?;
    let f = terminating_3f2(j, j as f64, alpha1 + 1.0, 0.5, alpha1 + alpha2 + 2.0)?;
    Ok(pre * f)
}

/// `∫_{-1}^{1} (1-ζ)^α₁ (1+ζ)^α₂ U_j(ζ) dζ` in closed form.
pub fn jacobi_chebyshev_integral_u(alpha1: f64, alpha2: f64, j: usize) -> Result<f64> {
    let pre = jacobi_prefactor(alpha1, alpha2)?;
    let f = terminating_3f2(j, j as f64 + 2.0, alpha1 + 1.0, 1.5, alpha1 + alpha2 + 2.0)?;
    Ok(pre * (j as f64 + 1.0) * f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(0.5, 0), 1.0);
        assert_eq!(pochhammer(-1.0, 1), -1.0);
        assert_eq!(pochhammer(0.5, 2), 0.75);
    }

    #[test]
    fn chebyshev_examples() {
        assert_eq!(chebyshev_t(0, 0.3), 1.0);
        assert!((chebyshev_t(2, 0.5) + 0.5).abs() < 1e-15);
        assert!((chebyshev_t(5, 0.7f64.cos()) - 3.5f64.cos()).abs() < 1e-14);
        assert_eq!(chebyshev_u(0, 0.9), 1.0);
        assert_eq!(chebyshev_u(1, 0.25), 0.5);
        let th = 1.0f64;
        assert!((chebyshev_u(3, th.cos()) - (4.0 * th).sin() / th.sin()).abs() < 1e-14);
    }

    #[test]
    fn hyp_examples() {
        assert_eq!(hyp3f2_terminating(0, 0.3, 0.7).unwrap(), 1.0);
        assert!(hyp3f2_terminating(1, 1.0, 2.0).unwrap().abs() < 1e-15);
        assert!(terminating_3f2(3, 1.0, 1.0, 0.5, -1.0).is_err());
    }

    #[test]
    fn gamma_values() {
        assert!((gamma(0.5) - PI.sqrt()).abs() < 1e-14);
        assert!((gamma(5.0) - 24.0).abs() < 1e-12);
        assert!((gamma(1.0 / 3.0) - 2.678_938_534_707_747_6).abs() < 1e-13);
        assert!((gamma(0.1) - 9.513_507_698_668_732).abs() < 1e-12);
    }

    #[test]
    fn jacobi_examples() {
        assert!((jacobi_chebyshev_integral_t(0.0, 0.0, 0).unwrap() - 2.0).abs() < 1e-14);
        assert!(jacobi_chebyshev_integral_t(-0.5, -0.5, 2).unwrap().abs() < 1e-14);
        assert!(jacobi_chebyshev_integral_u(0.5, 0.5, 1).unwrap().abs() < 1e-14);
        assert!((jacobi_chebyshev_integral_u(0.0, 0.0, 0).unwrap() - 2.0).abs() < 1e-14);
        assert!(jacobi_chebyshev_integral_t(-1.0, 0.0, 1).is_err());
    }
}
