//! The sum of `L'(rho, chi)` over critical-line zeros against the
//! asymptotic `T/(4 pi) log^2(qT/2pi) + a1 (T/2pi) log(qT/2pi) + a2 T/2pi + a3`.

mod report;

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::analytic::ConstantsTable;
use crate::arith;
use crate::characters::{gauss_sum, DirichletCharacter};
use crate::error::{Error, Result};
use crate::lfunc::{require_primitive, LConfig, LFunction};
use crate::summation::ComplexSum;
use crate::zeros::ZeroList;

pub use report::{compare, compare_all_primitive, CompareConfig, ComparisonReport, ComparisonRow};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticConstants {
    pub q: u64,
    pub a1: f64,
    pub a2: f64,
    /// `sum_{p | q} log p / (p - 1)`
    pub euler_log_sum: f64,
    /// `sum_{p | q} p log^2 p / (p - 1)^2`
    pub euler_log2_sum: f64,
    pub gamma0: f64,
    pub gamma1: f64,
}

/// `a1` and `a2` for modulus `q`; sums run over distinct primes `p | q`.
pub fn constants(q: u64) -> Result<AsymptoticConstants> {
    if q == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let table = ConstantsTable::get();
    let (g0, g1) = (table.gamma0, table.gamma1);
    let mut s = 0.0;
    let mut w = 0.0;
    for p in arith::prime_divisors(q) {
        let pf = p as f64;
        let lp = pf.ln();
        s += lp / (pf - 1.0);
        w += pf * lp * lp / ((pf - 1.0) * (pf - 1.0));
    }
    Ok(AsymptoticConstants {
        q,
        a1: s + g0 - 1.0,
        a2: 0.5 * s * s + (g0 - 1.0) * s - 1.5 * w + 1.0 - g0 - g0 * g0 - g1,
        euler_log_sum: s,
        euler_log2_sum: w,
        gamma0: g0,
        gamma1: g1,
    })
}

/// A real character mod `q` and a real zero `beta` of its L-function.
#[derive(Debug, Clone)]
pub struct ExceptionalZeroSpec {
    pub omega: DirichletCharacter,
    pub beta: f64,
}

/// Smallest `beta` accepted as exceptional.
pub const MIN_EXCEPTIONAL_BETA: f64 = 0.5;

/// `omega chi(-1) tau(conj chi) tau(conj omega chi) / (q phi(q)) * L'(beta, omega)/beta * (qT/2pi)^beta`,
/// or 0 without a spec.
pub fn a3_term(
    spec: Option<&ExceptionalZeroSpec>,
    chi: &DirichletCharacter,
    t: f64,
) -> Result<Complex64> {
    let Some(spec) = spec else {
        return Ok(Complex64::new(0.0, 0.0));
    };
    let omega = &spec.omega;
    let q = chi.modulus();
    if !omega.is_real() {
        return Err(Error::InvalidArgument(format!(
            "omega = {} is not real-valued",
            omega.label()
        )));
    }
    if omega.is_principal() {
        return Err(Error::InvalidArgument("omega must be non-principal".into()));
    }
    if omega.modulus() != q {
        return Err(Error::InvalidArgument(format!(
            "omega has modulus {}, chi has modulus {q}",
            omega.modulus()
        )));
    }
    let beta = spec.beta;
    if !(MIN_EXCEPTIONAL_BETA..1.0).contains(&beta) {
        return Err(Error::InvalidArgument(format!(
            "beta = {beta} outside [{MIN_EXCEPTIONAL_BETA}, 1)"
        )));
    }
    let sign = (omega.parity_sign() * chi.parity_sign()) as f64;
    let tau_chi_bar = gauss_sum(&chi.conjugate()).complex();
    let tau_omega_chi = gauss_sum(&omega.conjugate().mul(chi)?).complex();
    let phi = arith::euler_phi(q) as f64;
    let lprime =
        LFunction::new(omega).derivative(Complex64::new(beta, 0.0), &LConfig::default())?;
    let growth = (q as f64 * t / (2.0 * PI)).powf(beta);
    Ok(sign * tau_chi_bar * tau_omega_chi / (q as f64 * phi) * lprime / beta * growth)
}

/// `T/(4 pi) log^2(qT/2pi) + a1 (T/2pi) log(qT/2pi) + a2 T/2pi`.
pub fn main_term_real(q: u64, t: f64, c: &AsymptoticConstants) -> f64 {
    let x = t / (2.0 * PI);
    let l = (q as f64 * x).ln();
    0.5 * x * l * l + c.a1 * x * l + c.a2 * x
}

/// [`main_term_real`] plus `a3`.
pub fn main_term(q: u64, t: f64, c: &AsymptoticConstants, a3: Complex64) -> Complex64 {
    main_term_real(q, t, c) + a3
}

/// `L'(1/2 + i gamma, chi)` for every listed zero, in list order.
pub fn derivatives_at_zeros(
    chi: &DirichletCharacter,
    zeros: &ZeroList,
    cfg: &LConfig,
) -> Result<Vec<Complex64>> {
    let lf = LFunction::new(chi);
    zeros
        .zeros
        .par_iter()
        .map(|z| {
            lf.derivative(Complex64::new(0.5, z.gamma), cfg)
                .map_err(|e| Error::ZeroEvaluation {
                    gamma: z.gamma,
                    source: Box::new(e),
                })
        })
        .collect()
}

/// Compensated sum of `L'(rho, chi)` over a certified zero list, in
/// ascending `gamma`.
pub fn empirical_sum(
    chi: &DirichletCharacter,
    zeros: &ZeroList,
    cfg: &LConfig,
) -> Result<Complex64> {
    require_primitive(chi)?;
    if zeros.certified_count.is_none() {
        return Err(Error::InvalidArgument(
            "zero list is not certified; run verify_completeness first".into(),
        ));
    }
    if zeros.character.label() != chi.label() {
        return Err(Error::InvalidArgument(format!(
            "zero list belongs to {}, not {}",
            zeros.character.label(),
            chi.label()
        )));
    }
    let values = derivatives_at_zeros(chi, zeros, cfg)?;
    Ok(values.into_iter().collect::<ComplexSum>().value())
}
