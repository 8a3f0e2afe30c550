use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::{LConfig, LFunction};
use crate::analytic::ConstantsTable;
use crate::arith;
use crate::characters::character;
use crate::error::{Error, Result};

/// Sampling radius around `s = 1`.
pub const FIT_RADIUS: f64 = 1e-2;
/// Points on the sampling circle.
pub const FIT_POINTS: usize = 32;
/// Largest allowed disagreement between fits at `FIT_POINTS` and half as many.
pub const FIT_CONSISTENCY: f64 = 1e-7;

/// Laurent coefficients at `s = 1` for the principal character mod `q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PrincipalLaurent {
    pub modulus: u64,
    /// `L'`: orders -2, -1, 0
    pub derivative: [f64; 3],
    /// `L'/L`: orders -1, 0, 1
    pub log_derivative: [f64; 3],
}

impl PrincipalLaurent {
    pub fn to_vec(&self) -> Vec<f64> {
        self.derivative
            .iter()
            .chain(&self.log_derivative)
            .copied()
            .collect()
    }

    pub fn max_abs_diff(&self, other: &PrincipalLaurent) -> f64 {
        self.to_vec()
            .iter()
            .zip(other.to_vec())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Coefficients of `u^k` for `k` in `orders`, from samples `f(1 + r w_j)`,
/// `w_j` the `n`-th roots of unity rotated by half a step.
fn circle_fit(samples: &[(Complex64, Complex64)], r: f64, orders: &[i32]) -> Vec<Complex64> {
    let n = samples.len() as f64;
    orders
        .iter()
        .map(|&k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for &(w, f) in samples {
                acc += f * w.powi(-k);
            }
            acc / (n * r.powi(k))
        })
        .collect()
}

/// `(w_j, f(1 + r w_j))` pairs.
type Samples = Vec<(Complex64, Complex64)>;

fn sample(lf: &LFunction, points: usize) -> Result<(Samples, Samples)> {
    let cfg = LConfig::default();
    let mut d = Vec::with_capacity(points);
    let mut ld = Vec::with_capacity(points);
    for j in 0..points {
        let w = Complex64::from_polar(1.0, 2.0 * PI * (j as f64 + 0.5) / points as f64);
        let s = 1.0 + FIT_RADIUS * w;
        let ev = lf.evaluate(s, &cfg)?;
        let der = ev.derivative.expect("evaluate fills the derivative");
        d.push((w, der));
        ld.push((w, der / ev.value));
    }
    Ok((d, ld))
}

fn fit(lf: &LFunction, points: usize) -> Result<[Vec<Complex64>; 2]> {
    let (d, ld) = sample(lf, points)?;
    Ok([
        circle_fit(&d, FIT_RADIUS, &[-2, -1, 0]),
        circle_fit(&ld, FIT_RADIUS, &[-1, 0, 1]),
    ])
}

/// Numerically fitted Laurent coefficients of `L'(s, psi_0)` and
/// `L'/L(s, psi_0)` at `s = 1`, from samples on `|s - 1| = FIT_RADIUS`.
pub fn laurent_check_principal(q: u64) -> Result<PrincipalLaurent> {
    let lf = LFunction::new(&character(q, 0)?);
    let full = fit(&lf, FIT_POINTS)?;
    let half = fit(&lf, FIT_POINTS / 2)?;
    let mut out = [[0.0; 3]; 2];
    for which in 0..2 {
        for k in 0..3 {
            let a = full[which][k];
            let b = half[which][k];
            let scale = 1.0 + a.norm();
            if (a - b).norm() > FIT_CONSISTENCY * scale || a.im.abs() > FIT_CONSISTENCY * scale {
                return Err(Error::IllConditioned(format!(
                    "Laurent fit mod {q}: coefficient {a} vs {b} from half the samples"
                )));
            }
            out[which][k] = a.re;
        }
    }
    Ok(PrincipalLaurent {
        modulus: q,
        derivative: out[0],
        log_derivative: out[1],
    })
}

/// The same coefficients from the closed forms built on the Stieltjes and
/// `eta` constants and the Euler factors at `p | q`.
///
/// The zeta Laurent coefficients are `c_0 = gamma_0`, `c_1 = -gamma_1`.
pub fn laurent_closed_form_principal(q: u64) -> Result<PrincipalLaurent> {
    if q == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let table = ConstantsTable::get();
    let [c0, c1] = table.laurent_zeta();
    let (eta0, eta1) = (table.eta[0], table.eta[1]);
    let mut s1 = 0.0;
    let mut s1p = 0.0;
    for p in arith::prime_divisors(q) {
        let pf = p as f64;
        let lp = pf.ln();
        s1 += lp / (pf - 1.0);
        s1p -= pf * lp * lp / ((pf - 1.0) * (pf - 1.0));
    }
    let p0 = arith::euler_phi(q) as f64 / q as f64;
    let p1 = p0 * s1;
    let p2 = 0.5 * p0 * (s1 * s1 + s1p);
    Ok(PrincipalLaurent {
        modulus: q,
        derivative: [-p0, 0.0, p2 + c0 * p1 + c1 * p0],
        log_derivative: [-1.0, eta0 + s1, eta1 + s1p],
    })
}
