//! Critical-line zeros of `L(s, chi)` for primitive `chi`.
//!
//! Zeros are located as sign changes of the rotated function `Z(t)` on an
//! adaptive grid, refined by safeguarded regula falsi, and certified against
//! an argument-principle count of the completed L-function.

mod argument;

use rayon::prelude::*;
use serde::Serialize;

use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};
use crate::lfunc::{require_primitive, RotatedZ};

pub use argument::{count_zeros_argument_principle, ArgumentPrincipleConfig};

/// `|Z|` below which a sign-preserving dip is treated as a possible double zero.
pub const TANGENCY_FLOOR: f64 = 1e-6;
/// Grid refinement factor applied around suspicious dips.
pub const SUSPICION_REFINEMENT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZeroRecord {
    pub gamma: f64,
    pub residual_halfwidth: f64,
    pub z_sign_left: i8,
    pub z_sign_right: i8,
}

#[derive(Debug, Clone)]
pub struct ZeroList {
    pub character: DirichletCharacter,
    /// zeros lie in `(t_min, t_max]`
    pub t_min: f64,
    pub t_max: f64,
    pub zeros: Vec<ZeroRecord>,
    pub certified_count: Option<usize>,
}

impl ZeroList {
    pub fn gammas(&self) -> Vec<f64> {
        self.zeros.iter().map(|z| z.gamma).collect()
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// The zeros with `gamma <= t`, keeping the lower end.
    pub fn truncated(&self, t: f64) -> ZeroList {
        ZeroList {
            character: self.character.clone(),
            t_min: self.t_min,
            t_max: t.min(self.t_max),
            zeros: self
                .zeros
                .iter()
                .copied()
                .filter(|z| z.gamma <= t)
                .collect(),
            certified_count: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    /// grid points per unit of `log(q(t+2))`
    pub grid_factor: f64,
    pub refine_tol: f64,
    /// ordinates at or below this are never reported
    pub t_min: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            grid_factor: 8.0,
            refine_tol: 1e-9,
            t_min: 0.0,
        }
    }
}

impl ScanConfig {
    fn validate(&self) -> Result<()> {
        if !(self.grid_factor >= 4.0) || !self.grid_factor.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "grid_factor must be at least 4, got {}",
                self.grid_factor
            )));
        }
        if !(self.refine_tol > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "refine_tol must be positive, got {}",
                self.refine_tol
            )));
        }
        Ok(())
    }
}

/// Grid step at height `t`.
pub fn grid_step(q: u64, t: f64, grid_factor: f64) -> f64 {
    1.0 / (grid_factor * (q as f64 * (t.abs() + 2.0)).ln().max(0.5))
}

fn sign(x: f64) -> i8 {
    if x < 0.0 {
        -1
    } else {
        1
    }
}

fn grid(q: u64, t0: f64, t1: f64, grid_factor: f64) -> Vec<f64> {
    let mut ts = vec![t0];
    let mut t = t0;
    loop {
        t += grid_step(q, t, grid_factor);
        if t >= t1 {
            ts.push(t1);
            break;
        }
        ts.push(t);
    }
    ts
}

fn eval_many(z: &RotatedZ, ts: &[f64]) -> Result<Vec<f64>> {
    ts.par_iter().map(|&t| z.eval(t)).collect()
}

/// Refines `[lo, hi]` with `Z(lo)`, `Z(hi)` of opposite sign.
fn refine_bracket(
    z: &RotatedZ,
    mut lo: f64,
    mut hi: f64,
    mut zlo: f64,
    mut zhi: f64,
    tol: f64,
) -> Result<ZeroRecord> {
    if sign(zlo) == sign(zhi) {
        return Err(Error::SameSignBracket { lo, hi });
    }
    let (slo, shi) = (sign(zlo), sign(zhi));
    // Illinois weights
    let (mut wlo, mut whi) = (1.0, 1.0);
    let mut last_side = 0i8;
    while 0.5 * (hi - lo) > tol {
        let width = hi - lo;
        let (flo, fhi) = (zlo * wlo, zhi * whi);
        let mut x = (lo * fhi - hi * flo) / (fhi - flo);
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        if x <= lo || x >= hi {
            break;
        }
        let zx = z.eval(x)?;
        if zx == 0.0 {
            lo = x;
            hi = x;
            break;
        }
        if sign(zx) == slo {
            lo = x;
            zlo = zx;
            wlo = 1.0;
            if last_side == -1 {
                whi *= 0.5;
            }
            last_side = -1;
        } else {
            hi = x;
            zhi = zx;
            whi = 1.0;
            if last_side == 1 {
                wlo *= 0.5;
            }
            last_side = 1;
        }
        // keep the bisection guarantee
        if hi - lo > 0.5 * width {
            let m = 0.5 * (lo + hi);
            if m <= lo || m >= hi {
                break;
            }
            let zm = z.eval(m)?;
            if sign(zm) == slo {
                lo = m;
                zlo = zm;
            } else {
                hi = m;
                zhi = zm;
            }
            wlo = 1.0;
            whi = 1.0;
            last_side = 0;
        }
    }
    Ok(ZeroRecord {
        gamma: 0.5 * (lo + hi),
        residual_halfwidth: 0.5 * (hi - lo),
        z_sign_left: slo,
        z_sign_right: shi,
    })
}

/// Refines a sign-change bracket of `Z` for `chi` down to half-width `tol`.
pub fn refine_zero(chi: &DirichletCharacter, bracket: (f64, f64), tol: f64) -> Result<ZeroRecord> {
    let (lo, hi) = bracket;
    if !(lo < hi) || !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "bad bracket ({lo}, {hi}) or tol {tol}"
        )));
    }
    let z = RotatedZ::new(chi)?;
    let (zlo, zhi) = (z.eval(lo)?, z.eval(hi)?);
    refine_bracket(&z, lo, hi, zlo, zhi, tol)
}

/// Sign-change brackets on a sampled grid, with dips re-sampled finer.
fn brackets(z: &RotatedZ, ts: &[f64], zs: &[f64]) -> Result<Vec<(f64, f64, f64, f64)>> {
    let mut out = Vec::new();
    let mut i = 0;
    while i + 1 < ts.len() {
        if sign(zs[i]) != sign(zs[i + 1]) {
            out.push((ts[i], ts[i + 1], zs[i], zs[i + 1]));
        }
        i += 1;
    }
    // a same-sign local minimum of |Z| may hide a close pair of zeros
    let dips: Vec<usize> = (1..ts.len().saturating_sub(1))
        .filter(|&i| {
            sign(zs[i - 1]) == sign(zs[i])
                && sign(zs[i]) == sign(zs[i + 1])
                && zs[i].abs() < zs[i - 1].abs()
                && zs[i].abs() < zs[i + 1].abs()
        })
        .collect();
    let extra: Vec<Vec<(f64, f64, f64, f64)>> = dips
        .par_iter()
        .map(|&i| {
            let (a, b) = (ts[i - 1], ts[i + 1]);
            let n = 2 * SUSPICION_REFINEMENT;
            let fine: Vec<f64> = (0..=n).map(|k| a + (b - a) * k as f64 / n as f64).collect();
            let vals: Vec<f64> = fine.iter().map(|&t| z.eval(t)).collect::<Result<_>>()?;
            let found: Vec<_> = (0..n)
                .filter(|&k| sign(vals[k]) != sign(vals[k + 1]))
                .map(|k| (fine[k], fine[k + 1], vals[k], vals[k + 1]))
                .collect();
            if found.is_empty() {
                let (k, m) = vals.iter().enumerate().map(|(k, v)| (k, v.abs())).fold(
                    (0, f64::INFINITY),
                    |acc, x| if x.1 < acc.1 { x } else { acc },
                );
                if m < TANGENCY_FLOOR {
                    return Err(Error::Tangency {
                        t: fine[k],
                        value: m,
                    });
                }
            }
            Ok(found)
        })
        .collect::<Result<_>>()?;
    out.extend(extra.into_iter().flatten());
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(out)
}

/// All critical-line zeros with `t0 < gamma <= t1`.
pub fn scan_zeros(
    chi: &DirichletCharacter,
    t0: f64,
    t1: f64,
    cfg: &ScanConfig,
) -> Result<ZeroList> {
    cfg.validate()?;
    require_primitive(chi)?;
    if !(t0 >= 0.0 && t1 >= t0) || !t1.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "need 0 <= t0 <= t1, got ({t0}, {t1})"
        )));
    }
    let z = RotatedZ::new(chi)?;
    let lo = t0.max(cfg.t_min);
    let mut list = ZeroList {
        character: chi.clone(),
        t_min: t0,
        t_max: t1,
        zeros: Vec::new(),
        certified_count: None,
    };
    if lo >= t1 {
        return Ok(list);
    }
    let ts = grid(chi.modulus(), lo, t1, cfg.grid_factor);
    let zs = eval_many(&z, &ts)?;
    let found = brackets(&z, &ts, &zs)?;
    let tol = cfg.refine_tol;
    let mut zeros: Vec<ZeroRecord> = found
        .par_iter()
        .map(|&(a, b, za, zb)| refine_bracket(&z, a, b, za, zb, tol))
        .collect::<Result<_>>()?;
    zeros.retain(|r| r.gamma > lo && r.gamma <= t1);
    zeros.sort_by(|a, b| a.gamma.total_cmp(&b.gamma));
    zeros.dedup_by(|b, a| (b.gamma - a.gamma).abs() <= a.residual_halfwidth + b.residual_halfwidth);
    list.zeros = zeros;
    Ok(list)
}

/// Midpoint of the gap between consecutive zeros that contains `t`.
///
/// `gammas` must be ascending and extend beyond `t`; `floor` is used when no
/// zero lies at or below `t`.
pub fn snap_to_gap(gammas: &[f64], t: f64, floor: f64) -> Result<f64> {
    let k = gammas.partition_point(|&g| g <= t);
    let below = if k == 0 { floor } else { gammas[k - 1] };
    match gammas.get(k) {
        Some(&above) => Ok(0.5 * (below + above)),
        None => Err(Error::InvalidArgument(format!(
            "no zero above t = {t} to snap against; scan further"
        ))),
    }
}

/// Attaches the argument-principle count, or localizes the first discrepancy.
pub fn verify_completeness(list: ZeroList) -> Result<ZeroList> {
    verify_with(list, &ArgumentPrincipleConfig::default())
}

pub fn verify_with(mut list: ZeroList, ap: &ArgumentPrincipleConfig) -> Result<ZeroList> {
    let chi = list.character.clone();
    if list.t_max <= list.t_min {
        list.certified_count = Some(0);
        return Ok(list);
    }
    let base = if list.t_min > 0.0 {
        argument::count_with(&chi, list.t_min, ap)?
    } else {
        0
    };
    let total = argument::count_with(&chi, list.t_max, ap)? - base;
    if total == list.zeros.len() as i64 {
        list.certified_count = Some(list.zeros.len());
        return Ok(list);
    }
    // heights between listed zeros; find the first one where counts disagree
    let g = list.gammas();
    let mut heights = vec![list.t_min];
    heights.extend(g.windows(2).map(|w| 0.5 * (w[0] + w[1])));
    heights.push(list.t_max);
    let scanned_below = |h: f64| g.partition_point(|&x| x <= h) as i64;
    let mut good = 0usize;
    let mut bad = heights.len() - 1;
    while bad - good > 1 {
        let mid = (good + bad) / 2;
        let h = heights[mid];
        let counted = argument::count_with(&chi, h, ap)? - base;
        if counted == scanned_below(h) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    Err(Error::CountMismatch {
        scanned: list.zeros.len(),
        counted: total,
        lo: heights[good],
        hi: heights[bad],
    })
}
