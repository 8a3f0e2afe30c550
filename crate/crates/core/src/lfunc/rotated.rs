use std::f64::consts::PI;

use num_complex::Complex64;

use super::{epsilon_factor, require_primitive, LConfig, LFunction};
use crate::analytic::log_gamma;
use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};

/// Relative tolerance on the imaginary part left after rotation.
pub const Z_RESIDUE_TOLERANCE: f64 = 1e-6;

/// Real-valued rotation of `L(1/2 + it, chi)` whose sign changes are the
/// critical-line zeros.
///
/// `Z(t) = Re[eps^{-1/2} e^{i theta(t)} L(1/2 + it)]` with
/// `theta(t) = Im log[(q/pi)^{(1/2+it+kappa)/2} Gamma((1/2+it+kappa)/2)]`,
/// i.e. the completed function divided by its modulus prefactor. `|Z| = |L|`.
#[derive(Debug, Clone)]
pub struct RotatedZ {
    lfun: LFunction,
    inv_sqrt_eps: Complex64,
    kappa: f64,
    half_log_q_pi: f64,
    cfg: LConfig,
}

impl RotatedZ {
    pub fn new(chi: &DirichletCharacter) -> Result<Self> {
        require_primitive(chi)?;
        let eps = epsilon_factor(chi)?;
        Ok(RotatedZ {
            lfun: LFunction::new(chi),
            inv_sqrt_eps: 1.0 / eps.sqrt(),
            kappa: chi.kappa() as f64,
            half_log_q_pi: 0.5 * (chi.modulus() as f64 / PI).ln(),
            cfg: LConfig::default(),
        })
    }

    pub fn character(&self) -> &DirichletCharacter {
        self.lfun.character()
    }

    pub fn lfunction(&self) -> &LFunction {
        &self.lfun
    }

    pub fn theta(&self, t: f64) -> Result<f64> {
        let g = log_gamma(Complex64::new(0.5 * (0.5 + self.kappa), 0.5 * t))?;
        Ok(t * self.half_log_q_pi + g.im)
    }

    /// `e^{i theta(t)} eps^{-1/2} L(1/2 + it)` before taking the real part.
    pub fn rotated(&self, t: f64) -> Result<Complex64> {
        let l = self.lfun.value(Complex64::new(0.5, t), &self.cfg)?;
        let th = self.theta(t)?;
        Ok(self.inv_sqrt_eps * Complex64::from_polar(1.0, th) * l)
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        let w = self.rotated(t)?;
        let z = w.re;
        if w.im.abs() > Z_RESIDUE_TOLERANCE * (1.0 + z.abs()) {
            return Err(Error::ImaginaryResidue { t, residue: w.im });
        }
        Ok(z)
    }
}

pub fn rotated_z(chi: &DirichletCharacter, t: f64) -> Result<f64> {
    RotatedZ::new(chi)?.eval(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{character, enumerate_characters};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sign_change_at_first_zeta_zero() {
        let chi = character(1, 0).unwrap();
        let a = rotated_z(&chi, 14.13).unwrap();
        let b = rotated_z(&chi, 14.14).unwrap();
        assert!(a * b < 0.0);
    }

    #[test]
    fn hardy_z_sign_convention() {
        // Z(0) region: zeta(1/2) < 0 and theta(0) = 0
        let z = RotatedZ::new(&character(1, 0).unwrap()).unwrap();
        assert!((z.eval(1e-9).unwrap() + 1.4603545088).abs() < 1e-8);
    }

    #[test]
    fn residue_small_at_random_heights() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut zs = Vec::new();
        for q in 1..=12u64 {
            for chi in enumerate_characters(q)
                .unwrap()
                .into_iter()
                .filter(|c| c.is_primitive())
            {
                zs.push(RotatedZ::new(&chi).unwrap());
            }
        }
        for _ in 0..100 {
            let z = &zs[rng.gen_range(0..zs.len())];
            let t = rng.gen_range(1.0..500.0);
            let w = z.rotated(t).unwrap();
            assert!(
                w.im.abs() <= 1e-8 * (1.0 + w.re.abs()),
                "{} t={t}: {w}",
                z.character()
            );
        }
    }

    #[test]
    fn even_symmetry_for_real_characters() {
        for q in [1u64, 3, 4, 5, 8, 12] {
            for chi in enumerate_characters(q)
                .unwrap()
                .iter()
                .filter(|c| c.is_primitive() && c.is_real())
            {
                let z = RotatedZ::new(chi).unwrap();
                for &t in &[3.3, 17.0, 61.5] {
                    let (a, b) = (z.eval(t).unwrap(), z.eval(-t).unwrap());
                    assert!(
                        (a - b).abs() <= 1e-8 * (1.0 + a.abs()),
                        "{chi} t={t}: {a} {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn high_t_is_finite() {
        let z = RotatedZ::new(&character(1, 0).unwrap()).unwrap();
        let v = z.eval(2000.5).unwrap();
        assert!(v.is_finite() && v.abs() < 100.0);
    }
}
