use dirichlet_zerosum::characters::{character, gauss_sum};
use dirichlet_zerosum::lfunc::{l_derivative, l_value, LConfig};
use dirichlet_zerosum::summation::ComplexSum;
use dirichlet_zerosum::zeros::{scan_zeros, verify_completeness, ScanConfig};
use dirichlet_zerosum::zerosum::*;
use dirichlet_zerosum::Complex64;
use std::f64::consts::PI;

#[test]
fn empty_certified_list_sums_to_zero() {
    let chi = character(1, 0).unwrap();
    let list =
        verify_completeness(scan_zeros(&chi, 0.0, 10.0, &ScanConfig::default()).unwrap()).unwrap();
    assert_eq!(
        empirical_sum(&chi, &list, &LConfig::default()).unwrap(),
        Complex64::new(0.0, 0.0)
    );
}

#[test]
fn uncertified_list_is_refused() {
    let chi = character(1, 0).unwrap();
    let list = scan_zeros(&chi, 0.0, 30.0, &ScanConfig::default()).unwrap();
    assert!(empirical_sum(&chi, &list, &LConfig::default()).is_err());
}

#[test]
fn three_zeta_zeros_by_finite_differences() {
    let chi = character(1, 0).unwrap();
    let cfg = LConfig::default();
    let list =
        verify_completeness(scan_zeros(&chi, 0.0, 30.0, &ScanConfig::default()).unwrap()).unwrap();
    let total = empirical_sum(&chi, &list, &cfg).unwrap();
    let h = 1e-5;
    let mut oracle = Complex64::new(0.0, 0.0);
    for g in list.gammas() {
        let s = Complex64::new(0.5, g);
        let a = l_value(&chi, s + h, &cfg).unwrap().value;
        let b = l_value(&chi, s - h, &cfg).unwrap().value;
        oracle += (a - b) / (2.0 * h);
    }
    assert!((total - oracle).norm() < 1e-6);
}

#[test]
fn conjugate_character_sum() {
    let chi = character(5, 1).unwrap();
    let bar = chi.conjugate();
    let cfg = LConfig::default();
    let t = 40.0;
    let a = verify_completeness(scan_zeros(&chi, 0.0, t, &ScanConfig::default()).unwrap()).unwrap();
    let b = verify_completeness(scan_zeros(&bar, 0.0, t, &ScanConfig::default()).unwrap()).unwrap();
    // sum over conj chi's zeros equals conj of L'(chi) at the reflected ordinates
    let reflected: Complex64 = b
        .gammas()
        .iter()
        .map(|&g| {
            l_derivative(&chi, Complex64::new(0.5, -g), &cfg)
                .unwrap()
                .derivative
                .unwrap()
        })
        .sum();
    let direct = empirical_sum(&bar, &b, &cfg).unwrap();
    assert!((direct - reflected.conj()).norm() < 1e-9);
    assert!(empirical_sum(&chi, &a, &cfg).is_ok());
}

#[test]
fn order_independence() {
    let chi = character(1, 0).unwrap();
    let cfg = LConfig::default();
    let list =
        verify_completeness(scan_zeros(&chi, 0.0, 300.0, &ScanConfig::default()).unwrap()).unwrap();
    let vals = derivatives_at_zeros(&chi, &list, &cfg).unwrap();
    let fwd = empirical_sum(&chi, &list, &cfg).unwrap();
    let rev: Complex64 = vals.iter().rev().copied().collect::<ComplexSum>().value();
    assert!((fwd - rev).norm() <= 1e-9 * vals.len() as f64);
}

#[test]
fn synthetic_exceptional_term() {
    let chi = character(5, 1).unwrap();
    let omega = character(5, 2).unwrap();
    assert!(omega.is_real() && !omega.is_principal());
    let beta = 0.9;
    let t = 100.0;
    let spec = ExceptionalZeroSpec {
        omega: omega.clone(),
        beta,
    };
    let got = a3_term(Some(&spec), &chi, t).unwrap();
    // factor by factor
    let sign = (omega.value_i(-1) * chi.value_i(-1)).re;
    let tau1 = gauss_sum(&chi.conjugate()).complex();
    let prod = omega.mul(&chi).unwrap();
    let tau2: Complex64 = (1..=5u64)
        .map(|a| prod.value(a) * Complex64::from_polar(1.0, 2.0 * PI * a as f64 / 5.0))
        .sum();
    let h = 1e-5;
    let cfg = LConfig::default();
    let lp = (l_value(&omega, Complex64::new(beta + h, 0.0), &cfg)
        .unwrap()
        .value
        - l_value(&omega, Complex64::new(beta - h, 0.0), &cfg)
            .unwrap()
            .value)
        / (2.0 * h);
    let expected = sign * tau1 * tau2 / (5.0 * 4.0) * lp / beta * (5.0 * t / (2.0 * PI)).powf(beta);
    assert!(
        (got - expected).norm() < 1e-8 * (1.0 + expected.norm()),
        "{got} vs {expected}"
    );
    assert!(got.re.is_finite());
}

#[test]
fn constants_mod_six() {
    let c = constants(6).unwrap();
    let s = 2f64.ln() + 3f64.ln() / 2.0;
    let w = 2.0 * 2f64.ln().powi(2) + 3.0 * 3f64.ln().powi(2) / 4.0;
    let (g0, g1) = (c.gamma0, c.gamma1);
    let a2 = s * s / 2.0 + (g0 - 1.0) * s - 1.5 * w + 1.0 - g0 - g0 * g0 - g1;
    assert!((c.euler_log_sum - s).abs() < 1e-15);
    assert!((c.a2 - a2).abs() < 1e-14);
}

#[test]
fn main_term_is_not_a_scaling_identity() {
    let c1 = constants(1).unwrap();
    let c4 = constants(4).unwrap();
    assert!((main_term_real(4, 100.0, &c4) - main_term_real(1, 400.0, &c1)).abs() > 1.0);
}

#[test]
fn q_three_imaginary_part_small() {
    let chi = character(3, 1).unwrap();
    let rep = compare(&chi, &[50.0, 100.0, 200.0], &CompareConfig::default()).unwrap();
    assert!(rep.rows.last().unwrap().imag_fraction <= 0.05);
    assert!(rep.fitted_c.unwrap().is_finite());
}
