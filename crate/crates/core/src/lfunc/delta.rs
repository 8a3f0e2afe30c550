use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use super::{finite, require_primitive};
use crate::analytic::log_gamma;
use crate::characters::{gauss_sum, DirichletCharacter};
use crate::error::{Error, Result};

/// Distance from a removable or genuine singularity at which `delta_factor`
/// refuses to evaluate.
pub const SINGULAR_EXCLUSION: f64 = 1e-6;

/// `Delta(s, chi)` with `L(s, chi) = Delta(s, chi) L(1 - s, conj chi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeltaFactor {
    #[serde(serialize_with = "ser_complex")]
    pub s: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub value: Complex64,
    /// any branch of `log value`
    #[serde(skip)]
    pub log_value: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub epsilon_chi: Complex64,
    pub kappa: u8,
}

fn ser_complex<S: serde::Serializer>(
    z: &Complex64,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = ser.serialize_struct("Complex", 2)?;
    st.serialize_field("re", &z.re)?;
    st.serialize_field("im", &z.im)?;
    st.end()
}

/// Root number `tau(chi) / (i^kappa sqrt q)`.
pub fn epsilon_factor(chi: &DirichletCharacter) -> Result<Complex64> {
    require_primitive(chi)?;
    let tau = gauss_sum(chi).complex();
    let ik = if chi.kappa() == 0 {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::new(0.0, 1.0)
    };
    Ok(tau / (ik * (chi.modulus() as f64).sqrt()))
}

/// `log sin z`, stable for large `|Im z|`.
fn log_sin(z: Complex64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    let half = Complex64::new(-LN_2, 0.0);
    if z.im >= 0.0 {
        // sin z = (i/2) e^{-iz} (1 - e^{2iz})
        half + i * (PI / 2.0) - i * z + (1.0 - (2.0 * i * z).exp()).ln()
    } else {
        half - i * (PI / 2.0) + i * z + (1.0 - (-2.0 * i * z).exp()).ln()
    }
}

pub fn delta_factor(s: Complex64, chi: &DirichletCharacter) -> Result<DeltaFactor> {
    let epsilon_chi = epsilon_factor(chi)?;
    let kappa = chi.kappa();
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::InvalidArgument(format!("non-finite s = {s}")));
    }
    // poles of Gamma(1 - s) at s = 1, 2, ...; zeros of the sine at s = -kappa + 2m
    let n = s.re.round();
    if (s - n).norm() < SINGULAR_EXCLUSION {
        let ni = n as i64;
        if ni >= 1 || (ni + kappa as i64).rem_euclid(2) == 0 {
            return Err(Error::Pole { re: s.re, im: s.im });
        }
    }
    let q = chi.modulus() as f64;
    let log_value = epsilon_chi.ln()
        + s * LN_2
        + (s - 1.0) * PI.ln()
        + (0.5 - s) * q.ln()
        + log_gamma(1.0 - s)?
        + log_sin(0.5 * PI * (s + kappa as f64));
    let value = finite(log_value.exp(), "delta_factor")?;
    Ok(DeltaFactor {
        s,
        value,
        log_value,
        epsilon_chi,
        kappa,
    })
}
