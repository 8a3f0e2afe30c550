use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    a3_term, constants, derivatives_at_zeros, main_term_real, AsymptoticConstants,
    ExceptionalZeroSpec,
};
use crate::characters::{enumerate_characters, DirichletCharacter};
use crate::error::{Error, Result};
use crate::lfunc::LConfig;
use crate::summation::ComplexSum;
use crate::zeros::{scan_zeros, snap_to_gap, verify_completeness, ScanConfig, ZeroList};

/// Scan extension used while looking for a zero above the top of the grid.
const SNAP_MARGIN: f64 = 4.0;

#[derive(Debug, Clone, Default)]
pub struct CompareConfig {
    pub scan: ScanConfig,
    pub lconfig: LConfig,
    pub exceptional: Option<ExceptionalZeroSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub t_requested: f64,
    pub t_snapped: f64,
    pub zero_count: usize,
    pub re_empirical: f64,
    pub im_empirical: f64,
    pub main_term: f64,
    pub re_a3: f64,
    pub im_a3: f64,
    pub re_remainder: f64,
    pub im_remainder: f64,
    /// `|R| / (sqrt(qT) log^{7/2}(qT))`
    pub envelope_ratio: f64,
    /// `|R| / (T exp(-0.1 sqrt(log T)))`
    pub unconditional_ratio: f64,
    /// `|R| / |M|`
    pub relative_remainder: f64,
    /// `|Im empirical| / (1 + |M|)`
    pub imag_fraction: f64,
}

impl ComparisonRow {
    pub fn empirical(&self) -> Complex64 {
        Complex64::new(self.re_empirical, self.im_empirical)
    }

    pub fn remainder(&self) -> Complex64 {
        Complex64::new(self.re_remainder, self.im_remainder)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub q: u64,
    pub label: String,
    pub constants: AsymptoticConstants,
    pub certified_count: usize,
    pub rows: Vec<ComparisonRow>,
    /// least-squares `C` in `|R| ~ C sqrt(qT) log^{7/2}(qT)`; needs two rows
    pub fitted_c: Option<f64>,
    /// slope of `log |R|` against `log qT`; needs two rows
    pub fitted_exponent: Option<f64>,
}

pub fn envelope(q: u64, t: f64) -> f64 {
    let x = q as f64 * t;
    x.sqrt() * x.ln().max(0.0).powf(3.5)
}

pub fn unconditional_envelope(t: f64) -> f64 {
    t * (-0.1 * t.ln().max(0.0).sqrt()).exp()
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("empty T grid".into()));
    }
    if grid.iter().any(|t| !(t.is_finite() && *t > 0.0)) {
        return Err(Error::InvalidArgument(format!(
            "T grid must be positive and finite: {grid:?}"
        )));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument(format!(
            "T grid must be strictly increasing: {grid:?}"
        )));
    }
    Ok(())
}

/// Scans until at least one zero lies above `t`.
fn scan_past(chi: &DirichletCharacter, t: f64, cfg: &ScanConfig) -> Result<ZeroList> {
    let mut hi = t + SNAP_MARGIN;
    let mut list = scan_zeros(chi, 0.0, hi, cfg)?;
    while list.zeros.last().is_none_or(|z| z.gamma <= t) {
        let more = scan_zeros(chi, hi, hi + SNAP_MARGIN, cfg)?;
        list.zeros.extend(more.zeros);
        hi += SNAP_MARGIN;
        list.t_max = hi;
        if hi > t + 100.0 * SNAP_MARGIN {
            return Err(Error::InvalidArgument(format!(
                "no zero found above T = {t}"
            )));
        }
    }
    Ok(list)
}

fn least_squares(rows: &[ComparisonRow], q: u64) -> (Option<f64>, Option<f64>) {
    if rows.len() < 2 {
        return (None, None);
    }
    let (mut num, mut den) = (0.0, 0.0);
    for r in rows {
        let e = envelope(q, r.t_snapped);
        num += r.remainder().norm() * e;
        den += e * e;
    }
    let c = (den > 0.0).then(|| num / den);
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.remainder().norm() > 0.0)
        .map(|r| ((q as f64 * r.t_snapped).ln(), r.remainder().norm().ln()))
        .collect();
    let slope = if pts.len() >= 2 {
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        (sxx > 0.0).then(|| sxy / sxx)
    } else {
        None
    };
    (c, slope)
}

/// Runs the full pipeline for one primitive character over a grid of heights.
///
/// Each `T` is snapped to the midpoint of the gap between zeros containing it.
pub fn compare(
    chi: &DirichletCharacter,
    grid: &[f64],
    cfg: &CompareConfig,
) -> Result<ComparisonReport> {
    check_grid(grid)?;
    let q = chi.modulus();
    let consts = constants(q)?;
    let top = *grid.last().expect("grid is non-empty");
    let full = scan_past(chi, top, &cfg.scan)?;
    let gammas = full.gammas();
    let snapped: Vec<f64> = grid
        .iter()
        .map(|&t| snap_to_gap(&gammas, t, 0.0))
        .collect::<Result<_>>()?;
    if snapped.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument(format!(
            "grid points fall in the same gap between zeros: {grid:?} snaps to {snapped:?}"
        )));
    }
    let t_top = *snapped.last().expect("grid is non-empty");
    let mut list = full.truncated(t_top);
    list.t_min = 0.0;
    let list = verify_completeness(list)?;
    let certified_count = list.certified_count.expect("verified list carries a count");
    let derivs = derivatives_at_zeros(chi, &list, &cfg.lconfig)?;

    let mut rows = Vec::with_capacity(grid.len());
    let mut acc = ComplexSum::new();
    let mut used = 0usize;
    for (&t_req, &t) in grid.iter().zip(&snapped) {
        while used < derivs.len() && list.zeros[used].gamma <= t {
            acc.add(derivs[used]);
            used += 1;
        }
        let emp = acc.value();
        let a3 = a3_term(cfg.exceptional.as_ref(), chi, t)?;
        let m = main_term_real(q, t, &consts);
        let r = emp - m - a3;
        let mt = (Complex64::new(m, 0.0) + a3).norm();
        rows.push(ComparisonRow {
            t_requested: t_req,
            t_snapped: t,
            zero_count: used,
            re_empirical: emp.re,
            im_empirical: emp.im,
            main_term: m,
            re_a3: a3.re,
            im_a3: a3.im,
            re_remainder: r.re,
            im_remainder: r.im,
            envelope_ratio: r.norm() / envelope(q, t),
            unconditional_ratio: r.norm() / unconditional_envelope(t),
            relative_remainder: r.norm() / mt,
            imag_fraction: emp.im.abs() / (1.0 + mt),
        });
    }
    let (fitted_c, fitted_exponent) = least_squares(&rows, q);
    Ok(ComparisonReport {
        q,
        label: chi.label(),
        constants: consts,
        certified_count,
        rows,
        fitted_c,
        fitted_exponent,
    })
}

/// [`compare`] for every primitive character mod `q`, in label order.
pub fn compare_all_primitive(
    q: u64,
    grid: &[f64],
    cfg: &CompareConfig,
) -> Result<Vec<ComparisonReport>> {
    let chars: Vec<DirichletCharacter> = enumerate_characters(q)?
        .into_iter()
        .filter(|c| c.is_primitive())
        .collect();
    chars
        .par_iter()
        .map(|chi| compare(chi, grid, cfg))
        .collect()
}
