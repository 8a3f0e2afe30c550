//! Hurwitz zeta `zeta(s, a) = sum_{n>=0} (n + a)^{-s}` and its `s`-derivative
//! by Euler-Maclaurin summation.
//!
//! With shift `N` and order `M`:
//!
//! ```text
//! zeta(s, a) = sum_{n<N} (n+a)^{-s} + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
//!            + sum_{k=1}^{M} B_{2k}/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1} + R
//! ```
//!
//! where `(s)_j` is the rising factorial. The remainder is bounded by the
//! first omitted correction times `|s + 2M + 1| / (sigma + 2M + 1)`; that
//! bound is what the accuracy budget is checked against. Bernoulli signs use
//! `B_1 = -1/2`, which is why the `(N+a)^{-s}/2` boundary term is added.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::bernoulli::{em_coefficients, EM_COEFF_MAX};
use crate::error::{Error, Result};

/// Largest Euler-Maclaurin order the parameter search will use.
pub const MAX_ORDER: usize = EM_COEFF_MAX - 2;
const DEFAULT_ORDER: usize = 12;
const MAX_SHIFT: usize = 2_000_000;

/// Shift `N`, order `M` and the absolute error the evaluation must meet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerMaclaurinConfig {
    pub shift: usize,
    pub order: usize,
    pub target_abs_error: f64,
}

impl EulerMaclaurinConfig {
    pub fn new(shift: usize, order: usize, target_abs_error: f64) -> Result<Self> {
        if shift < 1 || !(1..=MAX_ORDER).contains(&order) {
            return Err(Error::InvalidArgument(format!(
                "Euler-Maclaurin config needs N >= 1 and 1 <= M <= {MAX_ORDER} (got N = {shift}, M = {order})"
            )));
        }
        if !(target_abs_error > 0.0) {
            return Err(Error::InvalidArgument(
                "target error must be positive".into(),
            ));
        }
        Ok(Self {
            shift,
            order,
            target_abs_error,
        })
    }

    /// Baseline policy `N = max(30, ceil(1.3 |t| / 2 pi) + 10)`, `M = 12`.
    pub fn baseline(t: f64, target_abs_error: f64) -> Self {
        let shift = ((1.3 * t.abs() / TAU).ceil() as usize + 10).max(30);
        Self {
            shift,
            order: DEFAULT_ORDER,
            target_abs_error,
        }
    }

    /// Parameters meeting `target_abs_error` at `s` for every `a` in `(0, 1]`.
    ///
    /// Starts from [`baseline`](Self::baseline), raises `M` up to
    /// [`MAX_ORDER`], then grows `N`.
    pub fn for_point(s: Complex64, target_abs_error: f64) -> Result<Self> {
        if !(target_abs_error > 0.0) {
            return Err(Error::InvalidArgument(
                "target error must be positive".into(),
            ));
        }
        let mut cfg = Self::baseline(s.im, target_abs_error);
        loop {
            for order in (DEFAULT_ORDER..=MAX_ORDER).step_by(2) {
                cfg.order = order;
                // a -> 0 is the worst case for the remainder bound
                if remainder_bound(s, cfg.shift as f64, order) <= target_abs_error {
                    return Ok(cfg);
                }
            }
            cfg.order = DEFAULT_ORDER;
            cfg.shift = cfg.shift + cfg.shift / 4 + 8;
            if cfg.shift > MAX_SHIFT {
                return Err(Error::AccuracyBudget {
                    estimate: remainder_bound(s, MAX_SHIFT as f64, MAX_ORDER),
                    target: target_abs_error,
                });
            }
        }
    }

    /// Height up to which the baseline shift is in its convergent regime.
    pub fn validity_t_max(&self) -> f64 {
        TAU * (self.shift as f64 - 10.0).max(0.0) / 1.3
    }
}

/// `|T_{M+1}| * |s + 2M + 1| / (sigma + 2M + 1)` with `x = N + a`.
fn remainder_bound(s: Complex64, x: f64, order: usize) -> f64 {
    let coeffs = em_coefficients();
    let k = order + 1;
    let mut poch = 1.0;
    for j in 0..(2 * k - 1) {
        poch *= (s + j as f64).norm();
    }
    let term = coeffs[k].abs() * poch * x.powf(-s.re - (2 * k) as f64 + 1.0);
    let tail = 2.0 * order as f64 + 1.0;
    let denom = s.re + tail;
    if denom <= 0.0 {
        return f64::INFINITY;
    }
    term * (s + tail).norm() / denom
}

/// Value, derivative and self-estimated error bounds of one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurwitzEvaluation {
    pub value: Complex64,
    pub derivative: Complex64,
    pub value_error: f64,
    pub derivative_error: f64,
}

fn check_args(s: Complex64, a: f64, regular: bool) -> Result<()> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::InvalidArgument(format!("non-finite s = {s}")));
    }
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "Hurwitz parameter a = {a} outside (0, 1]"
        )));
    }
    if !regular && s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole { re: 1.0, im: 0.0 });
    }
    Ok(())
}

/// Core engine: value and analytic `s`-derivative together, no budget check.
pub fn hurwitz_engine(
    s: Complex64,
    a: f64,
    cfg: &EulerMaclaurinConfig,
) -> Result<HurwitzEvaluation> {
    engine(s, a, cfg, false)
}

/// `zeta(s, a) - 1/(s - 1)` and its derivative, analytic through `s = 1`.
///
/// Sums over residues with vanishing total weight lose nothing by dropping
/// the common pole.
pub fn hurwitz_engine_regular(
    s: Complex64,
    a: f64,
    cfg: &EulerMaclaurinConfig,
) -> Result<HurwitzEvaluation> {
    engine(s, a, cfg, true)
}

/// `(x^{-u} - 1)/u` with `x = e^lx`, and its `u`-derivative.
fn regular_integral(u: Complex64, lx: f64) -> (Complex64, Complex64) {
    let w = -u * lx;
    if w.norm() < 0.5 {
        let mut f = Complex64::new(0.0, 0.0);
        let mut df = Complex64::new(0.0, 0.0);
        let mut wk = Complex64::new(1.0, 0.0);
        let mut fact = 1.0; // (k+1)!
        for k in 0..40 {
            let kf = k as f64;
            fact *= kf + 1.0;
            f += wk / fact;
            df += wk * (kf + 1.0) / (fact * (kf + 2.0));
            wk *= w;
        }
        (-lx * f, lx * lx * df)
    } else {
        let e = w.exp();
        let f = (e - 1.0) / u;
        (f, -(lx * e + f) / u)
    }
}

fn engine(
    s: Complex64,
    a: f64,
    cfg: &EulerMaclaurinConfig,
    regular: bool,
) -> Result<HurwitzEvaluation> {
    check_args(s, a, regular)?;
    let n = cfg.shift;
    let m = cfg.order;
    if m > MAX_ORDER || n < 1 {
        return Err(Error::InvalidArgument(format!(
            "invalid Euler-Maclaurin config {cfg:?}"
        )));
    }
    let coeffs = em_coefficients();

    let mut value = Complex64::new(0.0, 0.0);
    let mut deriv = Complex64::new(0.0, 0.0);
    for j in 0..n {
        let x = j as f64 + a;
        let lx = x.ln();
        let term = (-s * lx).exp();
        value += term;
        deriv -= term * lx;
    }

    let x = n as f64 + a;
    let lx = x.ln();
    let x_s = (-s * lx).exp(); // (N+a)^{-s}
    let sm1 = s - 1.0;
    if regular {
        let (f, df) = regular_integral(sm1, lx);
        value += f + 0.5 * x_s;
        deriv += df - 0.5 * x_s * lx;
    } else {
        let integral = x_s * x / sm1;
        value += integral + 0.5 * x_s;
        deriv += -integral * lx - integral / sm1 - 0.5 * x_s * lx;
    }

    // rising factorial (s)_{2k-1} and its derivative
    let mut poch = s;
    let mut dpoch = Complex64::new(1.0, 0.0);
    let inv_x2 = 1.0 / (x * x);
    let mut xpow = 1.0 / x; // (N+a)^{1-2k}
    let mut last = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    for k in 1..=m + 1 {
        let c = coeffs[k];
        let base = x_s * xpow;
        let t = c * poch * base;
        let dt = c * base * (dpoch - poch * lx);
        if k <= m {
            value += t;
            deriv += dt;
        } else {
            last = (t, dt);
        }
        // advance to k + 1: multiply by (s + 2k - 1)(s + 2k)
        let f1 = s + (2 * k - 1) as f64;
        let f2 = s + (2 * k) as f64;
        dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
        poch = poch * f1 * f2;
        xpow *= inv_x2;
    }

    let tail = 2.0 * m as f64 + 1.0;
    let denom = s.re + tail;
    let factor = if denom > 0.0 {
        (s + tail).norm() / denom
    } else {
        f64::INFINITY
    };
    let value_error = last.0.norm() * factor;
    let derivative_error = (last.1.norm() + last.0.norm()) * factor;

    if !(value.re.is_finite()
        && value.im.is_finite()
        && deriv.re.is_finite()
        && deriv.im.is_finite())
    {
        return Err(Error::NonFinite("hurwitz_zeta"));
    }
    Ok(HurwitzEvaluation {
        value,
        derivative: deriv,
        value_error,
        derivative_error,
    })
}

/// `zeta(s, a)`, failing if the self-estimated error exceeds the target.
pub fn hurwitz_zeta(s: Complex64, a: f64, cfg: &EulerMaclaurinConfig) -> Result<Complex64> {
    let ev = hurwitz_engine(s, a, cfg)?;
    if !(ev.value_error <= cfg.target_abs_error) {
        return Err(Error::AccuracyBudget {
            estimate: ev.value_error,
            target: cfg.target_abs_error,
        });
    }
    Ok(ev.value)
}

/// `d/ds zeta(s, a)`, differentiated term by term.
pub fn hurwitz_zeta_ds(s: Complex64, a: f64, cfg: &EulerMaclaurinConfig) -> Result<Complex64> {
    let ev = hurwitz_engine(s, a, cfg)?;
    if !(ev.derivative_error <= cfg.target_abs_error) {
        return Err(Error::AccuracyBudget {
            estimate: ev.derivative_error,
            target: cfg.target_abs_error,
        });
    }
    Ok(ev.derivative)
}

/// Self-estimated truncation error of the value at `(s, a)` under `cfg`.
pub fn hurwitz_error_estimate(s: Complex64, a: f64, cfg: &EulerMaclaurinConfig) -> f64 {
    remainder_bound(s, cfg.shift as f64 + a, cfg.order)
}

/// Riemann zeta with parameters chosen for `target_abs_error`.
pub fn riemann_zeta(s: Complex64, target_abs_error: f64) -> Result<Complex64> {
    let cfg = EulerMaclaurinConfig::for_point(s, target_abs_error)?;
    hurwitz_zeta(s, 1.0, &cfg)
}
