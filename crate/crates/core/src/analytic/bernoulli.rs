use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest index accepted by [`bernoulli_numbers`].
pub const MAX_BERNOULLI_INDEX: usize = 1024;

/// Exact `B_0..=B_{n_max}` with `B_1 = -1/2`, from
/// `sum_{k=0}^{n} C(n+1, k) B_k = 0`.
pub fn bernoulli_numbers(n_max: usize) -> Result<Vec<BigRational>> {
    if n_max > MAX_BERNOULLI_INDEX {
        return Err(Error::Overflow(format!(
            "Bernoulli numbers requested up to B_{n_max}; the limit is B_{MAX_BERNOULLI_INDEX}"
        )));
    }
    let mut b: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    b.push(BigRational::from_integer(BigInt::from(1)));
    // binomial row C(n+1, k), updated in place
    let mut row: Vec<BigInt> = vec![BigInt::from(1), BigInt::from(2), BigInt::from(1)];
    for n in 1..=n_max {
        // row currently holds C(n+1, 0..=n+1)
        if n >= 3 && n % 2 == 1 {
            b.push(BigRational::zero());
        } else {
            let mut acc = BigRational::zero();
            for (k, bk) in b.iter().enumerate() {
                if !bk.is_zero() {
                    acc += BigRational::from_integer(row[k].clone()) * bk;
                }
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(n as u64 + 1)));
        }
        // advance to C(n+2, .)
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::from(1));
        for k in 1..row.len() {
            next.push(&row[k - 1] + &row[k]);
        }
        next.push(BigInt::from(1));
        row = next;
    }
    Ok(b)
}

/// `B_0..=B_{n_max}` rounded to `f64`; errors once a value leaves the `f64` range.
pub fn bernoulli_f64(n_max: usize) -> Result<Vec<f64>> {
    bernoulli_numbers(n_max)?
        .iter()
        .enumerate()
        .map(|(n, b)| {
            ratio_to_f64(b).ok_or_else(|| Error::Overflow(format!("B_{n} does not fit in f64")))
        })
        .collect()
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> Option<f64> {
    let v = r.to_f64()?;
    v.is_finite().then_some(v)
}

/// Coefficients `B_{2k} / (2k)!` for `k = 0..=K_MAX`, shared by the
/// Euler-Maclaurin engines.
pub(crate) const EM_COEFF_MAX: usize = 48;

pub(crate) fn em_coefficients() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let b = bernoulli_numbers(2 * EM_COEFF_MAX).expect("within limit");
        let mut fact = BigInt::from(1);
        let mut out = Vec::with_capacity(EM_COEFF_MAX + 1);
        for k in 0..=EM_COEFF_MAX {
            if k > 0 {
                fact *= BigInt::from((2 * k - 1) as u64);
                fact *= BigInt::from((2 * k) as u64);
            }
            let c = &b[2 * k] / BigRational::from_integer(fact.clone());
            out.push(ratio_to_f64(&c).expect("small Bernoulli ratios fit in f64"));
        }
        out
    })
}
