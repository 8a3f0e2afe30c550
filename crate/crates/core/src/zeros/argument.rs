use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::analytic::log_gamma;
use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};
use crate::lfunc::{require_primitive, LConfig, LFunction};

/// Contour and mesh parameters for the zero count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArgumentPrincipleConfig {
    pub sigma_left: f64,
    pub sigma_right: f64,
    pub vertical_step: f64,
    /// initial number of pieces on each horizontal edge; chosen so that
    /// dyadic refinements never land on `s = 0` or `s = 1`
    pub horizontal_pieces: usize,
    pub min_step: f64,
    pub max_increment: f64,
}

impl Default for ArgumentPrincipleConfig {
    fn default() -> Self {
        ArgumentPrincipleConfig {
            sigma_left: -0.6,
            sigma_right: 1.6,
            vertical_step: 0.25,
            horizontal_pieces: 37,
            min_step: 1e-9,
            max_increment: PI / 2.0,
        }
    }
}

/// `log Lambda(s)`, `Lambda = (q/pi)^{(s+kappa)/2} Gamma((s+kappa)/2) L(s)`,
/// times `s(s-1)` for the Riemann zeta function.
struct Completed {
    lf: LFunction,
    kappa: f64,
    log_q_pi: f64,
    xi: bool,
    cfg: LConfig,
}

impl Completed {
    fn phase(&self, s: Complex64) -> Result<f64> {
        let w = 0.5 * (s + self.kappa);
        let l = self.lf.value(s, &self.cfg)?;
        if l.norm() == 0.0 {
            return Err(Error::MeshFailure { re: s.re, im: s.im });
        }
        let mut v = w * self.log_q_pi + log_gamma(w)? + l.ln();
        if self.xi {
            v += s.ln() + (s - 1.0).ln();
        }
        Ok(v.im)
    }
}

fn wrap(x: f64) -> f64 {
    let y = x.rem_euclid(2.0 * PI);
    if y > PI {
        y - 2.0 * PI
    } else {
        y
    }
}

/// Phase change along the straight piece `a -> b`, halving until every
/// increment is below the limit and agrees with its midpoint split.
fn piece(
    f: &Completed,
    a: Complex64,
    b: Complex64,
    fa: f64,
    fb: f64,
    ap: &ArgumentPrincipleConfig,
) -> Result<f64> {
    let mut total = 0.0;
    let mut stack = vec![(a, b, fa, fb)];
    while let Some((a, b, fa, fb)) = stack.pop() {
        let m = 0.5 * (a + b);
        if (b - a).norm() < ap.min_step {
            return Err(Error::MeshFailure { re: m.re, im: m.im });
        }
        let fm = f.phase(m)?;
        let d = wrap(fb - fa);
        let d1 = wrap(fm - fa);
        let d2 = wrap(fb - fm);
        if d.abs() < ap.max_increment
            && d1.abs() < ap.max_increment
            && d2.abs() < ap.max_increment
            && (d1 + d2 - d).abs() < 1e-6
        {
            total += d;
        } else {
            // right half first so the left half is processed next
            stack.push((m, b, fm, fb));
            stack.push((a, m, fa, fm));
        }
    }
    Ok(total)
}

fn edge(
    f: &Completed,
    a: Complex64,
    b: Complex64,
    pieces: usize,
    ap: &ArgumentPrincipleConfig,
) -> Result<f64> {
    let pts: Vec<Complex64> = (0..=pieces)
        .map(|k| a + (b - a) * (k as f64 / pieces as f64))
        .collect();
    let phases: Vec<f64> = pts.par_iter().map(|&s| f.phase(s)).collect::<Result<_>>()?;
    let parts: Vec<f64> = (0..pieces)
        .into_par_iter()
        .map(|k| piece(f, pts[k], pts[k + 1], phases[k], phases[k + 1], ap))
        .collect::<Result<_>>()?;
    Ok(parts.iter().sum())
}

pub(crate) fn count_with(
    chi: &DirichletCharacter,
    t: f64,
    ap: &ArgumentPrincipleConfig,
) -> Result<i64> {
    require_primitive(chi)?;
    if !t.is_finite() {
        return Err(Error::InvalidArgument(format!("height {t} is not finite")));
    }
    if t <= 0.0 {
        return Ok(0);
    }
    let f = Completed {
        lf: LFunction::new(chi),
        kappa: chi.kappa() as f64,
        log_q_pi: (chi.modulus() as f64 / PI).ln(),
        xi: chi.modulus() == 1,
        cfg: LConfig::default(),
    };
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let (l, r) = (ap.sigma_left, ap.sigma_right);
    let vertical = ((t / ap.vertical_step).ceil() as usize).max(1);
    let horizontal = ap.horizontal_pieces.max(1);
    let total = edge(&f, c(l, 0.0), c(r, 0.0), horizontal, ap)?
        + edge(&f, c(r, 0.0), c(r, t), vertical, ap)?
        + edge(&f, c(r, t), c(l, t), horizontal, ap)?
        + edge(&f, c(l, t), c(l, 0.0), vertical, ap)?;
    let winding = total / (2.0 * PI);
    let n = winding.round();
    if (winding - n).abs() > 1e-3 {
        return Err(Error::MeshFailure { re: 0.5, im: t });
    }
    Ok(n as i64)
}

/// Number of zeros of `L(s, chi)` with `0 < Im s <= T` in the critical strip,
/// from the winding of the completed L-function around
/// `[-0.6, 1.6] x [0, T]`.
pub fn count_zeros_argument_principle(chi: &DirichletCharacter, t: f64) -> Result<i64> {
    count_with(chi, t, &ArgumentPrincipleConfig::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::character;

    #[test]
    fn zeta_counts() {
        let chi = character(1, 0).unwrap();
        assert_eq!(count_zeros_argument_principle(&chi, 14.0).unwrap(), 0);
        assert_eq!(count_zeros_argument_principle(&chi, 14.5).unwrap(), 1);
        assert_eq!(count_zeros_argument_principle(&chi, 100.0).unwrap(), 29);
    }

    #[test]
    fn rejects_non_primitive() {
        let chi = character(6, 0).unwrap();
        assert!(count_zeros_argument_principle(&chi, 10.0).is_err());
    }

    #[test]
    fn wrap_range() {
        for x in [-7.0, -PI, 0.0, 3.0, 3.2, 10.0] {
            let w = wrap(x);
            assert!(w > -PI - 1e-12 && w <= PI);
            assert!(
                ((x - w) / (2.0 * PI)).fract().abs() < 1e-12
                    || ((x - w) / (2.0 * PI)).fract().abs() > 1.0 - 1e-12
            );
        }
    }
}
