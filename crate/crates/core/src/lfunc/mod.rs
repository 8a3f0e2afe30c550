//! `L(s, chi)`, `L'(s, chi)` and `L'/L(s, chi)` in and around the critical
//! strip.
//!
//! Non-principal characters go through the Hurwitz decomposition
//! `L(s, chi) = q^{-s} sum_{a=1}^{q} chi(a) zeta(s, a/q)`; principal ones
//! through `zeta(s) prod_{p | q} (1 - p^{-s})`. The approximate functional
//! equation in [`afe`] is an independent cross-check path only.

mod afe;
mod delta;
mod laurent;
mod rotated;

use num_complex::Complex64;
use serde::Serialize;

use crate::analytic::{hurwitz_engine, hurwitz_engine_regular, EulerMaclaurinConfig};
use crate::arith;
use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};

pub use afe::{afe_balanced, afe_envelope, afe_value, partial_sum_value};
pub use delta::{delta_factor, epsilon_factor, DeltaFactor};
pub use laurent::{laurent_check_principal, laurent_closed_form_principal, PrincipalLaurent};
pub use rotated::{rotated_z, RotatedZ, Z_RESIDUE_TOLERANCE};

/// Floor below which `|L(s)|` is treated as a zero by [`l_log_derivative`].
pub const DEFAULT_ZERO_FLOOR: f64 = 1e-12;

/// Accuracy request for L-function evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LConfig {
    /// absolute error target for the value (and the derivative)
    pub target_abs_error: f64,
    pub zero_floor: f64,
}

impl Default for LConfig {
    fn default() -> Self {
        LConfig {
            target_abs_error: 1e-12,
            zero_floor: DEFAULT_ZERO_FLOOR,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Hurwitz-zeta decomposition over residues mod `q`.
    Hurwitz,
    /// Approximate functional equation with sharp cutoffs.
    Afe,
    /// `zeta(s)` times the finite Euler factors at `p | q`.
    EulerProductTail,
    /// Truncated Dirichlet series `sum_{n <= qt}` for `sigma > 1`.
    PartialSum,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LEvaluation {
    pub s: Complex64,
    pub value: Complex64,
    pub derivative: Option<Complex64>,
    pub method: Method,
    pub abs_error_bound: f64,
}

/// A character prepared for repeated evaluation.
#[derive(Debug, Clone)]
pub struct LFunction {
    chi: DirichletCharacter,
    /// `(a/q, chi(a))` over units `a` in `[1, q]`
    residues: Vec<(f64, Complex64)>,
    primes: Vec<u64>,
    log_q: f64,
}

impl LFunction {
    pub fn new(chi: &DirichletCharacter) -> Self {
        let q = chi.modulus();
        let residues = (1..=q)
            .filter(|&a| arith::gcd(a, q) == 1)
            .map(|a| (a as f64 / q as f64, chi.value(a)))
            .collect();
        LFunction {
            chi: chi.clone(),
            residues,
            primes: arith::prime_divisors(q),
            log_q: (q as f64).ln(),
        }
    }

    pub fn character(&self) -> &DirichletCharacter {
        &self.chi
    }

    pub fn modulus(&self) -> u64 {
        self.chi.modulus()
    }

    /// `L(s)` together with `L'(s)`.
    pub fn evaluate(&self, s: Complex64, cfg: &LConfig) -> Result<LEvaluation> {
        check_point(s)?;
        if self.chi.is_principal() {
            self.evaluate_principal(s, cfg)
        } else {
            self.evaluate_hurwitz(s, cfg)
        }
    }

    pub fn value(&self, s: Complex64, cfg: &LConfig) -> Result<Complex64> {
        Ok(self.evaluate(s, cfg)?.value)
    }

    pub fn derivative(&self, s: Complex64, cfg: &LConfig) -> Result<Complex64> {
        Ok(self
            .evaluate(s, cfg)?
            .derivative
            .expect("evaluate fills the derivative"))
    }

    /// `L'/L(s)`; refuses points where `|L(s)|` is below `cfg.zero_floor`.
    pub fn log_derivative(&self, s: Complex64, cfg: &LConfig) -> Result<Complex64> {
        let ev = self.evaluate(s, cfg)?;
        let magnitude = ev.value.norm();
        if magnitude < cfg.zero_floor {
            return Err(Error::NearZero {
                magnitude,
                floor: cfg.zero_floor,
            });
        }
        let out = ev.derivative.expect("evaluate fills the derivative") / ev.value;
        finite(out, "l_log_derivative")
    }

    fn evaluate_hurwitz(&self, s: Complex64, cfg: &LConfig) -> Result<LEvaluation> {
        let q = self.modulus() as f64;
        let phi = self.residues.len() as f64;
        // q^{-sigma} * phi * per-term error <= target
        let per_term = cfg.target_abs_error * q.powf(s.re) / phi;
        let em = EulerMaclaurinConfig::for_point(s, per_term)?;
        let mut value = Complex64::new(0.0, 0.0);
        let mut dsum = Complex64::new(0.0, 0.0);
        let mut err = 0.0;
        let mut derr = 0.0;
        // non-principal weights sum to zero, so the common pole drops out
        for &(a, c) in &self.residues {
            let h = hurwitz_engine_regular(s, a, &em)?;
            value += c * h.value;
            dsum += c * h.derivative;
            err += h.value_error;
            derr += h.derivative_error;
        }
        let scale = (-s * self.log_q).exp();
        let value = scale * value;
        let derivative = scale * dsum - self.log_q * value;
        let qs = q.powf(-s.re);
        let rounding = 1e-15 * (1.0 + value.norm()) * (em.shift as f64).sqrt();
        let bound = qs * (err + derr.max(err * self.log_q)) + rounding;
        Ok(LEvaluation {
            s,
            value: finite(value, "l_value")?,
            derivative: Some(finite(derivative, "l_derivative")?),
            method: Method::Hurwitz,
            abs_error_bound: bound,
        })
    }

    fn evaluate_principal(&self, s: Complex64, cfg: &LConfig) -> Result<LEvaluation> {
        if s.re == 1.0 && s.im == 0.0 {
            return Err(Error::Pole { re: 1.0, im: 0.0 });
        }
        // Euler factors are bounded by 2^{#primes} on sigma >= 0
        let growth = 2f64.powi(self.primes.len() as i32);
        let em = EulerMaclaurinConfig::for_point(s, cfg.target_abs_error / growth)?;
        let z = hurwitz_engine(s, 1.0, &em)?;

        let mut prod = Complex64::new(1.0, 0.0);
        let mut dprod = Complex64::new(0.0, 0.0);
        for &p in &self.primes {
            let lp = (p as f64).ln();
            let ps = (-s * lp).exp();
            let factor = 1.0 - ps;
            // (1 - p^{-s})' = log p * p^{-s}
            dprod = dprod * factor + prod * lp * ps;
            prod *= factor;
        }
        let value = z.value * prod;
        let derivative = z.derivative * prod + z.value * dprod;
        let rounding = 1e-15 * (1.0 + value.norm()) * (em.shift as f64).sqrt();
        Ok(LEvaluation {
            s,
            value: finite(value, "l_value")?,
            derivative: Some(finite(derivative, "l_derivative")?),
            method: Method::EulerProductTail,
            abs_error_bound: growth * (z.value_error + z.derivative_error) + rounding,
        })
    }
}

fn check_point(s: Complex64) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("non-finite s = {s}")))
    }
}

pub(crate) fn finite(z: Complex64, what: &'static str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what))
    }
}

/// `L(s, chi)`; the `derivative` field is left empty.
pub fn l_value(chi: &DirichletCharacter, s: Complex64, cfg: &LConfig) -> Result<LEvaluation> {
    let mut ev = LFunction::new(chi).evaluate(s, cfg)?;
    ev.derivative = None;
    Ok(ev)
}

/// `L'(s, chi)` in `derivative`, alongside the value.
pub fn l_derivative(chi: &DirichletCharacter, s: Complex64, cfg: &LConfig) -> Result<LEvaluation> {
    LFunction::new(chi).evaluate(s, cfg)
}

pub fn l_log_derivative(
    chi: &DirichletCharacter,
    s: Complex64,
    cfg: &LConfig,
) -> Result<Complex64> {
    LFunction::new(chi).log_derivative(s, cfg)
}

/// Error unless `chi` is primitive.
pub fn require_primitive(chi: &DirichletCharacter) -> Result<()> {
    if chi.is_primitive() {
        Ok(())
    } else {
        Err(Error::NotPrimitive {
            modulus: chi.modulus(),
            conductor: chi.conductor(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{character, enumerate_characters};
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zeta_two() {
        let chi = character(1, 0).unwrap();
        let ev = l_value(&chi, c(2.0, 0.0), &LConfig::default()).unwrap();
        assert!((ev.value.re - PI * PI / 6.0).abs() < 1e-12);
        assert!(ev.abs_error_bound > 0.0 && ev.abs_error_bound <= 1e-10);
    }

    #[test]
    fn leibniz_series_at_one() {
        let chi = character(4, 1).unwrap();
        // alternating-series oracle: partial sums averaged over two consecutive cutoffs
        let mut partial = 0.0;
        let mut prev = 0.0;
        for k in 0..1_000_000u64 {
            prev = partial;
            let n = (2 * k + 1) as f64;
            partial += if k % 2 == 0 { 1.0 / n } else { -1.0 / n };
        }
        let oracle = 0.5 * (partial + prev);
        let ev = l_value(&chi, c(1.0, 0.0), &LConfig::default()).unwrap();
        assert!(
            (ev.value.re - oracle).abs() < 1e-11,
            "{} vs {oracle}",
            ev.value
        );
        assert!((ev.value.re - PI / 4.0).abs() < 1e-12);
        assert_eq!(ev.method, Method::Hurwitz);
    }

    #[test]
    fn principal_mod_six() {
        let chi = character(6, 0).unwrap();
        let ev = l_value(&chi, c(2.0, 0.0), &LConfig::default()).unwrap();
        let expected = PI * PI / 6.0 * (1.0 - 0.25) * (1.0 - 1.0 / 9.0);
        assert!((ev.value.re - expected).abs() < 1e-12);
        assert!((ev.value.re - 1.0966227).abs() < 1e-7);
        assert_eq!(ev.method, Method::EulerProductTail);
        assert!(matches!(
            l_value(&chi, c(1.0, 0.0), &LConfig::default()),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn zeta_prime_two() {
        let chi = character(1, 0).unwrap();
        let d = l_derivative(&chi, c(2.0, 0.0), &LConfig::default())
            .unwrap()
            .derivative
            .unwrap();
        // -sum log n / n^2 with an integral tail
        let n = 2_000_000u64;
        let mut acc = crate::summation::NeumaierSum::new();
        for k in (2..=n).rev() {
            let x = k as f64;
            acc.add(-x.ln() / (x * x));
        }
        let x = n as f64 + 0.5;
        let oracle = acc.value() - (x.ln() + 1.0) / x;
        assert!((d.re - oracle).abs() < 1e-9, "{d} vs {oracle}");
        assert!((d.re + 0.9375482543).abs() < 1e-9);
    }

    #[test]
    fn derivative_finite_difference_mod_five() {
        let cfg = LConfig::default();
        for chi in enumerate_characters(5)
            .unwrap()
            .iter()
            .filter(|c| c.is_primitive())
        {
            let f = LFunction::new(chi);
            let s = c(0.5, 10.0);
            let h = 1e-5;
            let d = f.derivative(s, &cfg).unwrap();
            let fd = (f.value(s + h, &cfg).unwrap() - f.value(s - h, &cfg).unwrap()) / (2.0 * h);
            assert!((d - fd).norm() < 1e-6, "{chi}: {d} vs {fd}");
        }
    }

    #[test]
    fn conjugate_symmetry_of_derivative() {
        let cfg = LConfig::default();
        for chi in enumerate_characters(7).unwrap() {
            let s = c(0.3, 12.5);
            let d = l_derivative(&chi, s, &cfg).unwrap().derivative.unwrap();
            let dc = l_derivative(&chi.conjugate(), s.conj(), &cfg)
                .unwrap()
                .derivative
                .unwrap();
            assert!((d.conj() - dc).norm() < 1e-11, "{chi}");
        }
    }

    #[test]
    fn log_derivative_principal_identity() {
        let cfg = LConfig::default();
        let s = c(2.0, 0.0);
        let lhs = l_log_derivative(&character(6, 0).unwrap(), s, &cfg).unwrap();
        let zeta_ld = l_log_derivative(&character(1, 0).unwrap(), s, &cfg).unwrap();
        let extra: f64 = [2.0f64, 3.0].iter().map(|&p| p.ln() / (p * p - 1.0)).sum();
        assert!((lhs - zeta_ld - extra).norm() < 1e-12);
    }

    #[test]
    fn log_derivative_refuses_zero() {
        let chi = character(1, 0).unwrap();
        let r = l_log_derivative(&chi, c(0.5, 14.134725141734693), &LConfig::default());
        assert!(matches!(r, Err(Error::NearZero { .. })), "{r:?}");
    }

    #[test]
    fn log_derivative_dirichlet_series_mod_four() {
        let chi = character(4, 1).unwrap();
        let s = c(3.0, 0.0);
        let ld = l_log_derivative(&chi, s, &LConfig::default()).unwrap();
        // -sum chi(n) Lambda(n) n^{-3}
        let mut acc = 0.0;
        for n in 2..200_000u64 {
            let f = crate::arith::factorize(n);
            if f.len() == 1 {
                let p = f[0].0 as f64;
                acc -= chi.value(n).re * p.ln() / (n as f64).powi(3);
            }
        }
        assert!((ld.re - acc).abs() < 1e-8 && ld.im.abs() < 1e-14);
    }
}
