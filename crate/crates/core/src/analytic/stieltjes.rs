//! Stieltjes constants `gamma_0`, `gamma_1` and the `eta_k` coefficients of
//! `zeta'/zeta(s) + 1/(s-1)` at `s = 1`.

use std::sync::OnceLock;

use num_rational::BigRational;
use serde::Serialize;

use super::bernoulli::{bernoulli_numbers, em_coefficients};
use crate::error::{Error, Result};
use crate::summation::NeumaierSum;

const ACCEL_CUTOFF: usize = 40;
const ACCEL_TERMS: usize = 14;

/// `gamma_k` for `k` in `{0, 1}`, from the defining limit
/// `sum_{m<=n} log^k m / m - log^{k+1} n / (k+1)` with its Euler-Maclaurin
/// tail applied at a fixed cutoff.
pub fn stieltjes_gamma(k: u32) -> Result<f64> {
    if k > 1 {
        return Err(Error::InvalidArgument(format!(
            "only gamma_0 and gamma_1 are supported (k = {k})"
        )));
    }
    let n = ACCEL_CUTOFF;
    let f = |m: f64| m.ln().powi(k as i32) / m;
    let mut acc = NeumaierSum::new();
    for m in 1..n {
        acc.add(f(m as f64));
    }
    let x = n as f64;
    let lx = x.ln();
    acc.add(-lx.powi(k as i32 + 1) / (k as f64 + 1.0));
    acc.add(0.5 * f(x));
    let coeffs = em_coefficients();
    for j in 1..=ACCEL_TERMS {
        acc.add(-coeffs[j] * log_power_over_x_derivative(k, 2 * j as u32 - 1, x));
    }
    Ok(acc.value())
}

/// `d^r/dx^r (log^k x / x)` for `k` in `{0, 1}`:
/// `(-1)^r r! (log^k x - k H_r) / x^{r+1}`.
fn log_power_over_x_derivative(k: u32, r: u32, x: f64) -> f64 {
    let mut fact = 1.0;
    let mut harmonic = 0.0;
    for i in 1..=r {
        fact *= i as f64;
        harmonic += 1.0 / i as f64;
    }
    let sign = if r.is_multiple_of(2) { 1.0 } else { -1.0 };
    let head = if k == 0 { 1.0 } else { x.ln() - harmonic };
    sign * fact * head / x.powi(r as i32 + 1)
}

/// The raw limit expression truncated at `n`, without acceleration.
pub fn stieltjes_gamma_raw(k: u32, n: u64) -> f64 {
    let mut acc = NeumaierSum::new();
    for m in 1..=n {
        let x = m as f64;
        acc.add(x.ln().powi(k as i32) / x);
    }
    let ln = (n as f64).ln();
    acc.add(-ln.powi(k as i32 + 1) / (k as f64 + 1.0));
    acc.value()
}

/// `eta_0..=eta_{k_max}` with `zeta'/zeta(s) = -1/(s-1) + sum eta_k (s-1)^k`.
///
/// ```text
/// eta_k = (-1)^k { (k+1)/k! gamma_k + sum_{n<k} (-1)^n / (k-n-1)! eta_n gamma_{k-n-1} }
/// ```
///
/// so `eta_0 = gamma_0` and `eta_1 = -gamma_0^2 - 2 gamma_1`.
pub fn eta_constants(k_max: u32) -> Result<Vec<f64>> {
    if k_max > 1 {
        return Err(Error::InvalidArgument(format!(
            "eta_k only available for k <= 1 (k_max = {k_max})"
        )));
    }
    let gammas = [stieltjes_gamma(0)?, stieltjes_gamma(1)?];
    Ok(eta_from_gammas(&gammas[..=k_max as usize]))
}

pub(crate) fn eta_from_gammas(gammas: &[f64]) -> Vec<f64> {
    let fact = |n: usize| (1..=n).fold(1.0, |a, i| a * i as f64);
    let mut eta: Vec<f64> = Vec::with_capacity(gammas.len());
    for k in 0..gammas.len() {
        let mut inner = (k as f64 + 1.0) / fact(k) * gammas[k];
        for n in 0..k {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            inner += sign / fact(k - n - 1) * eta[n] * gammas[k - n - 1];
        }
        let outer = if k % 2 == 0 { 1.0 } else { -1.0 };
        eta.push(outer * inner);
    }
    eta
}

/// Frozen constants computed once at first use.
#[derive(Debug, Clone, Serialize)]
pub struct ConstantsTable {
    pub gamma0: f64,
    pub gamma1: f64,
    pub eta: Vec<f64>,
    #[serde(skip)]
    pub bernoulli: Vec<BigRational>,
}

pub const TABLE_BERNOULLI_MAX: usize = 60;

impl ConstantsTable {
    fn compute() -> Result<Self> {
        let gamma0 = stieltjes_gamma(0)?;
        let gamma1 = stieltjes_gamma(1)?;
        Ok(ConstantsTable {
            gamma0,
            gamma1,
            eta: eta_from_gammas(&[gamma0, gamma1]),
            bernoulli: bernoulli_numbers(TABLE_BERNOULLI_MAX)?,
        })
    }

    pub fn get() -> &'static ConstantsTable {
        static TABLE: OnceLock<ConstantsTable> = OnceLock::new();
        TABLE.get_or_init(|| ConstantsTable::compute().expect("constants table"))
    }

    /// Laurent coefficients `c_k = (-1)^k gamma_k / k!` of `zeta(s) - 1/(s-1)`.
    pub fn laurent_zeta(&self) -> [f64; 2] {
        [self.gamma0, -self.gamma1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::hurwitz::{hurwitz_engine, EulerMaclaurinConfig};
    use num_complex::Complex64;

    #[test]
    fn gamma_values_and_raw_limit() {
        let g0 = stieltjes_gamma(0).unwrap();
        let g1 = stieltjes_gamma(1).unwrap();
        assert!((g0 - 0.5772156649).abs() < 1e-10);
        assert!((g1 + 0.0728158455).abs() < 1e-10);
        assert!((g0 - stieltjes_gamma_raw(0, 1_000_000)).abs() < 1e-5);
        assert!((g1 - stieltjes_gamma_raw(1, 1_000_000)).abs() < 1e-5);
        assert!(stieltjes_gamma(2).is_err());
    }

    #[test]
    fn acceleration_is_stable_in_cutoff() {
        // moving the cutoff must not move the constant
        let g = stieltjes_gamma(1).unwrap();
        let raw_big = stieltjes_gamma_raw(1, 4_000_000);
        let n = 4_000_000f64;
        // first tail correction of the raw limit: -log n / (2n)
        assert!((raw_big - n.ln() / (2.0 * n) - g).abs() < 1e-9);
    }

    #[test]
    fn zeta_minus_pole_tends_to_gamma0() {
        let s = Complex64::new(1.0 + 1e-4, 0.0);
        let cfg = EulerMaclaurinConfig::for_point(s, 1e-13).unwrap();
        let z = hurwitz_engine(s, 1.0, &cfg).unwrap().value;
        let g0 = stieltjes_gamma(0).unwrap();
        let g1 = stieltjes_gamma(1).unwrap();
        // the limit is approached linearly with slope -gamma_1
        let residual = z.re - 1.0 / 1e-4 - g0;
        assert!(residual.abs() < 1e-5);
        assert!((residual + g1 * 1e-4).abs() < 1e-8);
    }

    #[test]
    fn eta_values() {
        let eta = eta_constants(1).unwrap();
        let t = ConstantsTable::get();
        assert_eq!(eta[0], t.gamma0);
        assert!((eta[1] - (-t.gamma0 * t.gamma0 - 2.0 * t.gamma1)).abs() < 1e-15);
        assert!(eta_constants(2).is_err());
    }

    /// Residual of `zeta'/zeta(s) + 1/(s-1) - eta_0 - eta_1 (s-1)` on `|s-1| = r`.
    fn laurent_residual(eta0: f64, eta1: f64, r: f64) -> f64 {
        let mut worst: f64 = 0.0;
        for j in 0..16 {
            let theta = std::f64::consts::TAU * (j as f64 + 0.5) / 16.0;
            let u = Complex64::from_polar(r, theta);
            let s = 1.0 + u;
            let cfg = EulerMaclaurinConfig::for_point(s, 1e-14).unwrap();
            let ev = hurwitz_engine(s, 1.0, &cfg).unwrap();
            let res = ev.derivative / ev.value + 1.0 / u - eta0 - eta1 * u;
            worst = worst.max(res.norm());
        }
        worst
    }

    #[test]
    fn eta_matches_laurent_fit() {
        let t = ConstantsTable::get();
        assert!(laurent_residual(t.eta[0], t.eta[1], 1e-2) <= 1e-5);
    }

    #[test]
    fn sign_reading_with_minus_one_to_the_n_minus_one_fails_the_fit() {
        // (-1)^{n-1} at n = 0 read as -1 gives eta_1 = gamma_0^2 - 2 gamma_1
        let t = ConstantsTable::get();
        let literal = t.gamma0 * t.gamma0 - 2.0 * t.gamma1;
        assert!((literal - 0.478810).abs() < 1e-5);
        assert!(laurent_residual(t.eta[0], literal, 1e-2) > 1e-3);
    }

    #[test]
    fn table_invariants() {
        let t = ConstantsTable::get();
        assert!(t.gamma0 > 0.5 && t.gamma0 < 0.6);
        assert!(t.gamma1 > -0.1 && t.gamma1 < 0.0);
        assert_eq!(t.bernoulli.len(), TABLE_BERNOULLI_MAX + 1);
    }
}
