use std::f64::consts::PI;

use num_complex::Complex64;

use super::bernoulli::em_coefficients;
use crate::error::{Error, Result};

const STIRLING_TERMS: usize = 16;
const HALF_LN_TAU: f64 = 0.918_938_533_204_672_8;

/// Principal branch of `log Gamma(s)`: analytic on `C \ (-inf, 0]`, real on
/// the positive axis.
///
/// Stirling series after shifting `s -> s + k` until `|s + k|` is large; the
/// shift is undone by subtracting `sum log(s + j)`, which keeps the branch
/// continuous. On the negative real axis the value is the limit from above.
pub fn log_gamma(s: Complex64) -> Result<Complex64> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::InvalidArgument(format!("non-finite argument {s}")));
    }
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() {
        return Err(Error::Pole { re: s.re, im: 0.0 });
    }
    let mut z = s;
    let mut shift = Complex64::new(0.0, 0.0);
    while !stirling_ok(z) {
        shift += log_upper(z);
        z += 1.0;
    }
    let out = stirling(z) - shift;
    if !(out.re.is_finite() && out.im.is_finite()) {
        return Err(Error::NonFinite("log_gamma"));
    }
    Ok(out)
}

/// `log` with the negative real axis mapped to `+i pi`.
fn log_upper(z: Complex64) -> Complex64 {
    if z.im == 0.0 && z.re < 0.0 {
        Complex64::new((-z.re).ln(), PI)
    } else {
        z.ln()
    }
}

fn stirling_ok(z: Complex64) -> bool {
    let r = z.norm();
    // stay well inside |arg z| < pi
    r >= 18.0 && (z.re >= 0.0 || z.im.abs() >= z.re.abs())
}

fn stirling(z: Complex64) -> Complex64 {
    let coeffs = em_coefficients();
    let lz = z.ln();
    let mut acc = (z - 0.5) * lz - z + HALF_LN_TAU;
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut p = inv;
    for k in 1..=STIRLING_TERMS {
        // B_{2k} / (2k (2k-1)) = coeffs[k] * (2k-2)!
        let b_ratio = coeffs[k] * factorial((2 * k - 2) as u32);
        acc += b_ratio * p;
        p *= inv2;
    }
    acc
}

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn wrap(x: f64) -> f64 {
        let y = x.rem_euclid(2.0 * PI);
        if y > PI {
            y - 2.0 * PI
        } else {
            y
        }
    }

    #[test]
    fn known_values() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-14);
        assert!(log_gamma(c(2.0, 0.0)).unwrap().norm() < 1e-14);
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((half.re - 0.5 * PI.ln()).abs() < 1e-14 && half.im.abs() < 1e-15);
        assert!((half.re - 0.5723649).abs() < 1e-7);
        // Gamma(11) = 10!
        let g11 = log_gamma(c(11.0, 0.0)).unwrap();
        assert!((g11.re - 3_628_800f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn recursion() {
        for &s in &[
            c(0.5, 0.0),
            c(0.3, 2.0),
            c(-2.7, 0.4),
            c(3.0, -40.0),
            c(0.25, 500.0),
        ] {
            let lhs = log_gamma(s + 1.0).unwrap();
            let rhs = log_gamma(s).unwrap() + s.ln();
            let d = lhs - rhs;
            assert!(d.re.abs() < 1e-11 && wrap(d.im).abs() < 1e-11, "{s}: {d}");
        }
    }

    #[test]
    fn reflection_formula() {
        let s = c(0.3, 2.0);
        let lhs = log_gamma(s).unwrap() + log_gamma(1.0 - s).unwrap();
        let rhs = (PI / (PI * s).sin()).ln();
        let d = lhs - rhs;
        assert!(d.re.abs() < 1e-10 && wrap(d.im).abs() < 1e-10, "{d}");
    }

    #[test]
    fn branch_is_continuous_along_vertical_lines() {
        for sigma in [-0.3, 0.25, 0.75, 1.3] {
            let mut prev = log_gamma(c(sigma, 0.5)).unwrap();
            let mut t = 0.5;
            while t < 2000.0 {
                t += 0.25;
                let cur = log_gamma(c(sigma, t)).unwrap();
                assert!(
                    (cur.im - prev.im).abs() < 2.5,
                    "jump at sigma = {sigma}, t = {t}"
                );
                prev = cur;
            }
        }
    }

    #[test]
    fn stirling_modulus_large_t() {
        // |Gamma(sigma + it)| ~ sqrt(2 pi) t^{sigma - 1/2} e^{-pi t / 2}
        let t = 1000.0;
        let v = log_gamma(c(0.25, t)).unwrap();
        let approx = HALF_LN_TAU + (0.25 - 0.5) * t.ln() - PI * t / 2.0;
        assert!((v.re - approx).abs() < 1e-3);
    }

    #[test]
    fn poles() {
        assert!(log_gamma(c(0.0, 0.0)).is_err());
        assert!(log_gamma(c(-3.0, 0.0)).is_err());
        assert!(log_gamma(c(-3.0, 1e-9)).is_ok());
    }
}
