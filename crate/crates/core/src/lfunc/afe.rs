use std::f64::consts::PI;

use num_complex::Complex64;

use super::{delta_factor, finite, LEvaluation, Method};
use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};
use crate::summation::ComplexSum;

/// Tolerance on `|2 pi x y - t| / t`.
pub const AFE_CONSTRAINT_TOLERANCE: f64 = 1e-9;

/// `sum_{n <= x} c(n) n^{-s}` for coefficients periodic mod `q`.
fn dirichlet_partial(values: &[Complex64], s: Complex64, x: f64) -> Complex64 {
    let q = values.len() as u64;
    let n_max = x.floor() as u64;
    let mut acc = ComplexSum::new();
    for n in 1..=n_max {
        let c = values[(n % q) as usize];
        if c.re == 0.0 && c.im == 0.0 {
            continue;
        }
        acc.add(c * (-s * (n as f64).ln()).exp());
    }
    acc.value()
}

/// Lavrik's error envelope `sqrt q (y^{-sigma} + x^{sigma-1} (qt)^{1/2-sigma}) log 2t`,
/// taken with implied constant 1.
pub fn afe_envelope(q: u64, s: Complex64, x: f64, y: f64) -> f64 {
    let (sigma, t) = (s.re, s.im);
    let qf = q as f64;
    qf.sqrt()
        * (y.powf(-sigma) + x.powf(sigma - 1.0) * (qf * t).powf(0.5 - sigma))
        * (2.0 * t).ln().abs()
}

/// `sum_{n<=x} chi(n) n^{-s} + Delta(s, chi) sum_{n<=y} conj chi(n) n^{s-1}`.
///
/// The reported bound is [`afe_envelope`], not a certified error.
pub fn afe_value(chi: &DirichletCharacter, s: Complex64, x: f64, y: f64) -> Result<LEvaluation> {
    let (sigma, t) = (s.re, s.im);
    if !(0.0..=1.0).contains(&sigma) || !(t > 0.0) || !t.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "afe needs 0 <= sigma <= 1 and t > 0, got s = {s}"
        )));
    }
    if !(x >= 1.0 && y >= 1.0) || !x.is_finite() || !y.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "afe needs x, y >= 1, got x = {x}, y = {y}"
        )));
    }
    if (2.0 * PI * x * y - t).abs() > AFE_CONSTRAINT_TOLERANCE * t {
        return Err(Error::InvalidArgument(format!(
            "afe needs 2 pi x y = t, got 2 pi x y = {} for t = {t}",
            2.0 * PI * x * y
        )));
    }
    let delta = delta_factor(s, chi)?;
    let values = chi.values();
    let conj: Vec<Complex64> = values.iter().map(|v| v.conj()).collect();
    let first = dirichlet_partial(&values, s, x);
    let second = dirichlet_partial(&conj, 1.0 - s, y);
    let value = finite(first + delta.value * second, "afe_value")?;
    Ok(LEvaluation {
        s,
        value,
        derivative: None,
        method: Method::Afe,
        abs_error_bound: afe_envelope(chi.modulus(), s, x, y).max(f64::MIN_POSITIVE),
    })
}

/// [`afe_value`] with `x = y = sqrt(t / 2 pi)`; needs `t >= 2 pi`.
pub fn afe_balanced(chi: &DirichletCharacter, s: Complex64) -> Result<LEvaluation> {
    let x = (s.im / (2.0 * PI)).sqrt();
    afe_value(chi, s, x, x)
}

/// Truncated Dirichlet series `sum_{n <= qt} chi(n) n^{-s}` for `sigma > 1`.
///
/// The bound is the tail envelope `q (qt)^{-sigma}`.
pub fn partial_sum_value(chi: &DirichletCharacter, s: Complex64) -> Result<LEvaluation> {
    let q = chi.modulus() as f64;
    if !(s.re > 1.0) || !(q * s.im >= 1.0) || !s.im.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "partial sum needs sigma > 1 and qt >= 1, got s = {s}"
        )));
    }
    let cutoff = q * s.im;
    let value = finite(
        dirichlet_partial(&chi.values(), s, cutoff),
        "partial_sum_value",
    )?;
    Ok(LEvaluation {
        s,
        value,
        derivative: None,
        method: Method::PartialSum,
        abs_error_bound: q * cutoff.powf(-s.re),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{character, enumerate_characters};
    use crate::lfunc::{l_value, LConfig};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn constraint_is_enforced() {
        let chi = character(1, 0).unwrap();
        assert!(afe_value(&chi, c(0.5, 50.0), 2.0, 2.0).is_err());
        assert!(afe_value(&chi, c(1.5, 50.0), 2.0, 50.0 / (4.0 * PI)).is_err());
        assert!(afe_value(&chi, c(0.5, 50.0), 2.0, 50.0 / (4.0 * PI)).is_ok());
    }

    #[test]
    fn within_envelope_mod_three() {
        let chi = character(3, 1).unwrap();
        let s = c(0.5, 30.0);
        let afe = afe_balanced(&chi, s).unwrap();
        let exact = l_value(&chi, s, &LConfig::default()).unwrap().value;
        assert!((afe.value - exact).norm() <= 10.0 * afe.abs_error_bound);
    }

    #[test]
    fn partial_sum_near_one() {
        for q in [1u64, 3, 4, 5] {
            for chi in enumerate_characters(q)
                .unwrap()
                .iter()
                .filter(|c| c.is_primitive())
            {
                let t = 40.0;
                let qt = q as f64 * t;
                let s = c(1.0 + 1.0 / qt.ln(), t);
                let ps = partial_sum_value(chi, s).unwrap();
                let exact = l_value(chi, s, &LConfig::default()).unwrap().value;
                let diff = (ps.value - exact).norm();
                assert!(diff <= 10.0 * q as f64 / qt, "{chi}: {diff}");
            }
        }
    }
}
