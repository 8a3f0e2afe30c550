//! Dirichlet characters modulo `q`.
//!
//! `(Z/qZ)^*` is decomposed into cyclic factors: one per odd prime power
//! (generated by a primitive root that works for every power of that prime),
//! `<-1>` for `4`, and `<-1> x <5>` for `2^k` with `k >= 3`. A character is an
//! exponent vector on those generators, so `chi(g_j) = e(k_j / ord_j)`. Every
//! value is stored as an exact residue `r` with `chi(n) = e(r / m)`, `m` the
//! exponent of the group; complex numbers are produced only at the end.
//!
//! Canonical labels are `q.k` where `k` is the mixed-radix index of the
//! exponent vector, the first factor being most significant. Factors are
//! ordered by ascending prime, with the `-1` factor before the `5` factor for
//! powers of two. Index `0` is always the principal character.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::arith::{self, gcd, lcm};
use crate::error::{Error, Result};

/// One cyclic factor of `(Z/qZ)^*`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct CyclicFactor {
    prime: u64,
    /// exponent `e` of the prime power `p^e` this factor lives in
    power: u32,
    prime_power: u64,
    /// generator as a residue modulo `p^e`
    generator: u64,
    order: u64,
}

impl CyclicFactor {
    /// `(prime, 0)` for odd primes and the `-1` factor of `2^e`, `(2, 1)` for `<5>`.
    fn kind(&self) -> (u64, u8) {
        if self.prime == 2 && self.generator == 5 {
            (2, 1)
        } else {
            (self.prime, 0)
        }
    }
}

/// `(Z/qZ)^*` with a discrete-log table over the canonical generators.
#[derive(Debug, PartialEq, Eq)]
struct UnitGroup {
    modulus: u64,
    factors: Vec<CyclicFactor>,
    exponent: u64,
    /// `dlog[n * factors.len() + j]`; `None` rows for `gcd(n, q) > 1`.
    dlog: Vec<Option<u64>>,
}

impl UnitGroup {
    fn new(q: u64) -> Self {
        let mut factors = Vec::new();
        for (p, e) in arith::factorize(q) {
            let pe = p.pow(e);
            if p == 2 {
                if e >= 2 {
                    factors.push(CyclicFactor {
                        prime: 2,
                        power: e,
                        prime_power: pe,
                        generator: pe - 1,
                        order: 2,
                    });
                }
                if e >= 3 {
                    factors.push(CyclicFactor {
                        prime: 2,
                        power: e,
                        prime_power: pe,
                        generator: 5,
                        order: pe / 4,
                    });
                }
            } else {
                factors.push(CyclicFactor {
                    prime: p,
                    power: e,
                    prime_power: pe,
                    generator: arith::primitive_root_odd_prime_power(p),
                    order: pe / p * (p - 1),
                });
            }
        }
        let exponent = factors.iter().fold(1, |acc, f| lcm(acc, f.order));

        // discrete-log tables per prime power
        let nf = factors.len();
        let mut tables: Vec<Vec<Option<u64>>> = Vec::with_capacity(nf);
        for f in &factors {
            let mut table = vec![None; f.prime_power as usize];
            if f.prime == 2 && f.generator == 5 {
                let mut x = 1u64;
                for b in 0..f.order {
                    table[x as usize] = Some(b);
                    x = x * 5 % f.prime_power;
                }
            } else if f.prime == 2 {
                // sign factor: n = (-1)^a 5^b, a determined by n mod 4
                for n in (1..f.prime_power).step_by(2) {
                    table[n as usize] = Some(if n % 4 == 3 { 1 } else { 0 });
                }
            } else {
                let mut x = 1u64;
                for k in 0..f.order {
                    table[x as usize] = Some(k);
                    x = x * f.generator % f.prime_power;
                }
            }
            tables.push(table);
        }

        let mut dlog = vec![None; q as usize * nf];
        for n in 0..q {
            if gcd(n, q) != 1 {
                continue;
            }
            for (j, f) in factors.iter().enumerate() {
                let mut r = n % f.prime_power;
                if f.prime == 2 && f.generator == 5 && r % 4 == 3 {
                    r = f.prime_power - r;
                }
                dlog[n as usize * nf + j] = tables[j][r as usize];
            }
        }
        UnitGroup {
            modulus: q,
            factors,
            exponent,
            dlog,
        }
    }

    fn size(&self) -> u64 {
        self.factors.iter().map(|f| f.order).product()
    }

    fn exponents_from_index(&self, mut index: u64) -> Vec<u64> {
        let mut exps = vec![0; self.factors.len()];
        for (j, f) in self.factors.iter().enumerate().rev() {
            exps[j] = index % f.order;
            index /= f.order;
        }
        exps
    }
}

/// A Dirichlet character modulo `q`, stored as exponents on the canonical
/// generators of `(Z/qZ)^*`.
#[derive(Clone)]
pub struct DirichletCharacter {
    group: Arc<UnitGroup>,
    exponents: Vec<u64>,
    index: u64,
    conductor: u64,
    kappa: u8,
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.group.modulus == other.group.modulus && self.exponents == other.exponents
    }
}

impl Eq for DirichletCharacter {}

impl fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DirichletCharacter")
            .field("label", &self.label())
            .field("exponents", &self.exponents)
            .field("conductor", &self.conductor)
            .field("kappa", &self.kappa)
            .finish()
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// All `phi(q)` characters modulo `q` in canonical order.
pub fn enumerate_characters(q: u64) -> Result<Vec<DirichletCharacter>> {
    if q == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let group = Arc::new(UnitGroup::new(q));
    Ok((0..group.size())
        .map(|k| {
            let exps = group.exponents_from_index(k);
            DirichletCharacter::build(Arc::clone(&group), exps)
        })
        .collect())
}

/// The character with canonical index `index` modulo `q`.
pub fn character(q: u64, index: u64) -> Result<DirichletCharacter> {
    if q == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let group = Arc::new(UnitGroup::new(q));
    if index >= group.size() {
        return Err(Error::InvalidArgument(format!(
            "character index {index} out of range: there are {} characters mod {q}",
            group.size()
        )));
    }
    let exps = group.exponents_from_index(index);
    Ok(DirichletCharacter::build(group, exps))
}

/// Parse a `q.k` label.
pub fn character_from_label(label: &str) -> Result<DirichletCharacter> {
    let (q, k) = label.split_once('.').ok_or_else(|| {
        Error::InvalidArgument(format!("character label `{label}` is not of the form q.k"))
    })?;
    let q: u64 = q
        .trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("bad modulus in label `{label}`")))?;
    let k: u64 = k
        .trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("bad index in label `{label}`")))?;
    character(q, k)
}

impl DirichletCharacter {
    fn build(group: Arc<UnitGroup>, exponents: Vec<u64>) -> Self {
        let index = exponents
            .iter()
            .zip(&group.factors)
            .fold(0, |acc, (&k, f)| acc * f.order + k);
        let conductor = conductor_of(&group, &exponents);
        let mut chi = DirichletCharacter {
            group,
            exponents,
            index,
            conductor,
            kappa: 0,
        };
        let q = chi.modulus();
        chi.kappa = match chi.phase(q.saturating_sub(1)) {
            Some(0) => 0,
            Some(_) => 1,
            None => 0,
        };
        chi
    }

    /// Character modulo `q` from an explicit exponent vector.
    pub fn from_exponents(q: u64, exponents: &[u64]) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        let group = Arc::new(UnitGroup::new(q));
        if exponents.len() != group.factors.len() {
            return Err(Error::InvalidArgument(format!(
                "mod {q} needs {} exponents, got {}",
                group.factors.len(),
                exponents.len()
            )));
        }
        let exps = exponents
            .iter()
            .zip(&group.factors)
            .map(|(&k, f)| k % f.order)
            .collect();
        Ok(Self::build(group, exps))
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn label(&self) -> String {
        format!("{}.{}", self.modulus(), self.index)
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Orders of the cyclic generators the exponents refer to.
    pub fn generator_orders(&self) -> Vec<u64> {
        self.group.factors.iter().map(|f| f.order).collect()
    }

    /// Generators as residues modulo `q` (CRT-lifted; other components set to 1).
    pub fn generators(&self) -> Vec<u64> {
        let q = self.modulus();
        self.group
            .factors
            .iter()
            .map(|f| crt_lift(q, f.prime_power, f.generator))
            .collect()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.modulus()
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&k| k == 0)
    }

    /// Real-valued, i.e. of order at most two.
    pub fn is_real(&self) -> bool {
        self.exponents
            .iter()
            .zip(&self.group.factors)
            .all(|(&k, f)| (2 * k) % f.order == 0)
    }

    /// `0` for even characters, `1` for odd ones.
    pub fn kappa(&self) -> u8 {
        self.kappa
    }

    /// `chi(-1)` as `+1` or `-1`.
    pub fn parity_sign(&self) -> i32 {
        if self.kappa == 0 {
            1
        } else {
            -1
        }
    }

    /// Exponent of the group: every value is an `order_exponent()`-th root of unity.
    pub fn order_exponent(&self) -> u64 {
        self.group.exponent
    }

    /// Multiplicative order of the character.
    pub fn order(&self) -> u64 {
        self.exponents
            .iter()
            .zip(&self.group.factors)
            .fold(1, |acc, (&k, f)| lcm(acc, f.order / gcd(k, f.order)))
    }

    /// Exact phase: `chi(n) = e(r / order_exponent())`, `None` when `gcd(n, q) > 1`.
    pub fn phase(&self, n: u64) -> Option<u64> {
        let q = self.modulus();
        let n = (n % q) as usize;
        let nf = self.group.factors.len();
        let m = self.group.exponent;
        let mut r = 0u64;
        for (j, f) in self.group.factors.iter().enumerate() {
            let l = self.group.dlog[n * nf + j]?;
            r = (r + self.exponents[j] * l % f.order * (m / f.order)) % m;
        }
        if nf == 0 && gcd(n as u64, q) != 1 {
            return None;
        }
        Some(r)
    }

    /// Phase at a possibly negative integer.
    pub fn phase_i(&self, n: i64) -> Option<u64> {
        self.phase(n.rem_euclid(self.modulus() as i64) as u64)
    }

    pub fn value(&self, n: u64) -> Complex64 {
        match self.phase(n) {
            Some(r) => root_of_unity(r, self.group.exponent),
            None => Complex64::new(0.0, 0.0),
        }
    }

    pub fn value_i(&self, n: i64) -> Complex64 {
        self.value(n.rem_euclid(self.modulus() as i64) as u64)
    }

    /// `[chi(0), chi(1), ..., chi(q-1)]`.
    pub fn values(&self) -> Vec<Complex64> {
        (0..self.modulus()).map(|n| self.value(n)).collect()
    }

    pub fn conjugate(&self) -> Self {
        let exps = self
            .exponents
            .iter()
            .zip(&self.group.factors)
            .map(|(&k, f)| (f.order - k) % f.order)
            .collect();
        Self::build(Arc::clone(&self.group), exps)
    }

    /// Pointwise product of two characters with the same modulus.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.modulus() != other.modulus() {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply characters mod {} and mod {}",
                self.modulus(),
                other.modulus()
            )));
        }
        let exps = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .zip(&self.group.factors)
            .map(|((&a, &b), f)| (a + b) % f.order)
            .collect();
        Ok(Self::build(Arc::clone(&self.group), exps))
    }

    /// The primitive character modulo `conductor()` that induces `self`.
    pub fn primitive_inducing(&self) -> Result<Self> {
        let d = self.conductor;
        if d == self.modulus() {
            return Ok(self.clone());
        }
        let target = UnitGroup::new(d);
        let mut exps = Vec::with_capacity(target.factors.len());
        for tf in &target.factors {
            let (j, sf) = self
                .group
                .factors
                .iter()
                .enumerate()
                .find(|(_, sf)| sf.kind() == tf.kind())
                .ok_or_else(|| Error::InvalidArgument("inconsistent factor structure".into()))?;
            let k = self.exponents[j];
            let shrink = sf.order / tf.order;
            if !k.is_multiple_of(shrink) {
                return Err(Error::InvalidArgument(format!(
                    "character {} is not induced from modulus {d}",
                    self.label()
                )));
            }
            exps.push(k / shrink);
        }
        Ok(Self::build(Arc::new(target), exps))
    }
}

/// `e(r/m) = exp(2 pi i r / m)` with the angle reduced exactly first.
pub fn root_of_unity(r: u64, m: u64) -> Complex64 {
    let r = r % m;
    if r == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if 2 * r == m {
        return Complex64::new(-1.0, 0.0);
    }
    if 4 * r == m {
        return Complex64::new(0.0, 1.0);
    }
    if 4 * r == 3 * m {
        return Complex64::new(0.0, -1.0);
    }
    // fold to the shortest angle for accuracy
    let x = if 2 * r > m {
        -((m - r) as f64) / m as f64
    } else {
        r as f64 / m as f64
    };
    let theta = std::f64::consts::TAU * x;
    Complex64::new(theta.cos(), theta.sin())
}

fn crt_lift(q: u64, pe: u64, residue: u64) -> u64 {
    // x = residue mod pe, x = 1 mod q/pe
    let other = q / pe;
    (0..q)
        .find(|&x| x % pe == residue % pe && x % other == 1 % other)
        .unwrap_or(residue)
}

fn conductor_of(group: &UnitGroup, exponents: &[u64]) -> u64 {
    let mut d = 1u64;
    let mut j = 0;
    while j < group.factors.len() {
        let f = &group.factors[j];
        if f.prime == 2 {
            // one or two factors for 2^e
            let a = exponents[j];
            let (b, consumed) = match group.factors.get(j + 1) {
                Some(g) if g.prime == 2 => (exponents[j + 1], 2),
                _ => (0, 1),
            };
            let e = f.power;
            let fexp = if b != 0 {
                e - arith::p_adic_valuation(b, 2)
            } else if a != 0 {
                2
            } else {
                0
            };
            d *= 2u64.pow(fexp);
            j += consumed;
        } else {
            let k = exponents[j];
            if k != 0 {
                let v = arith::p_adic_valuation(k, f.prime).min(f.power - 1);
                d *= f.prime.pow(f.power - v);
            }
            j += 1;
        }
    }
    d
}

/// `tau(chi) = sum_{a=1}^q chi(a) e(a/q)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussSumValue {
    pub modulus: u64,
    pub index: u64,
    pub value: Complex64Ser,
}

/// Plain `(re, im)` pair for serialization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Complex64Ser {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for Complex64Ser {
    fn from(z: Complex64) -> Self {
        Complex64Ser { re: z.re, im: z.im }
    }
}

impl GaussSumValue {
    pub fn complex(&self) -> Complex64 {
        Complex64::new(self.value.re, self.value.im)
    }
}

pub fn gauss_sum(chi: &DirichletCharacter) -> GaussSumValue {
    GaussSumValue {
        modulus: chi.modulus(),
        index: chi.index(),
        value: twisted_gauss_sum(1, chi).into(),
    }
}

/// `G(n, chi) = sum_{a=1}^q chi(a) e(an/q)`.
///
/// Each term's phase is combined as one exact rational before the
/// exponential is taken.
pub fn twisted_gauss_sum(n: i64, chi: &DirichletCharacter) -> Complex64 {
    let q = chi.modulus();
    let m = chi.order_exponent();
    let big = (m as u128) * (q as u128);
    let nq = n.rem_euclid(q as i64) as u128;
    let mut re = 0.0;
    let mut im = 0.0;
    for a in 1..=q {
        if let Some(r) = chi.phase(a) {
            let num = (r as u128 * q as u128 + (a as u128 * nq % q as u128) * m as u128) % big;
            let z = root_of_unity_wide(num, big);
            re += z.re;
            im += z.im;
        }
    }
    Complex64::new(re, im)
}

fn root_of_unity_wide(r: u128, m: u128) -> Complex64 {
    if r == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if 2 * r == m {
        return Complex64::new(-1.0, 0.0);
    }
    if 4 * r == m {
        return Complex64::new(0.0, 1.0);
    }
    if 4 * r == 3 * m {
        return Complex64::new(0.0, -1.0);
    }
    let x = if 2 * r > m {
        -((m - r) as f64) / m as f64
    } else {
        r as f64 / m as f64
    };
    let theta = std::f64::consts::TAU * x;
    Complex64::new(theta.cos(), theta.sin())
}

/// `0` if `chi(-1) = 1`, `1` if `chi(-1) = -1`.
pub fn parity_kappa(chi: &DirichletCharacter) -> u8 {
    chi.kappa()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn trivial_modulus() {
        let chars = enumerate_characters(1).unwrap();
        assert_eq!(chars.len(), 1);
        let chi = &chars[0];
        for n in 0..10 {
            assert_eq!(chi.value(n), Complex64::new(1.0, 0.0));
        }
        assert_eq!(chi.conductor(), 1);
        assert!(chi.is_primitive());
        assert!(approx(
            gauss_sum(chi).complex(),
            Complex64::new(1.0, 0.0),
            1e-15
        ));
    }

    #[test]
    fn modulus_two_is_trivial_group() {
        let chars = enumerate_characters(2).unwrap();
        assert_eq!(chars.len(), 1);
        assert_eq!(chars[0].value(0), Complex64::new(0.0, 0.0));
        assert_eq!(chars[0].value(1), Complex64::new(1.0, 0.0));
        assert_eq!(chars[0].conductor(), 1);
    }

    #[test]
    fn modulus_four() {
        let chars = enumerate_characters(4).unwrap();
        assert_eq!(chars.len(), 2);
        assert!(chars[0].is_principal());
        let chi = &chars[1];
        assert_eq!(chi.value(1), Complex64::new(1.0, 0.0));
        assert_eq!(chi.value(3), Complex64::new(-1.0, 0.0));
        assert_eq!(chi.value(2), Complex64::new(0.0, 0.0));
        assert_eq!(chi.conductor(), 4);
        assert_eq!(chi.kappa(), 1);
        assert!(approx(
            gauss_sum(chi).complex(),
            Complex64::new(0.0, 2.0),
            1e-14
        ));
    }

    #[test]
    fn modulus_five_values_are_fourth_roots() {
        let chars = enumerate_characters(5).unwrap();
        assert_eq!(chars.len(), 4);
        let allowed = [
            Complex64::new(1.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
        ];
        for chi in &chars {
            for n in 1..5 {
                let v = chi.value(n);
                assert!(allowed.contains(&v), "{chi}: chi({n}) = {v}");
            }
        }
        let quad = chars
            .iter()
            .find(|c| c.is_real() && !c.is_principal())
            .unwrap();
        assert_eq!(quad.kappa(), 0);
        assert_eq!(quad.value(4), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn conductors() {
        let chars6 = enumerate_characters(6).unwrap();
        assert_eq!(chars6[0].conductor(), 1);
        let chars8 = enumerate_characters(8).unwrap();
        // the character mod 8 that only sees n mod 4
        let induced = chars8
            .iter()
            .find(|c| {
                c.value(3) == Complex64::new(-1.0, 0.0) && c.value(5) == Complex64::new(1.0, 0.0)
            })
            .unwrap();
        assert_eq!(induced.conductor(), 4);
        let prim = induced.primitive_inducing().unwrap();
        assert_eq!(prim.modulus(), 4);
        for n in (1..8).step_by(2) {
            assert_eq!(prim.value(n), induced.value(n));
        }
    }

    fn brute_conductor(chi: &DirichletCharacter) -> u64 {
        let q = chi.modulus();
        for d in arith::divisors(q) {
            let induced = (1..q)
                .filter(|&n| gcd(n, q) == 1 && n % d == 1 % d)
                .all(|n| chi.phase(n) == Some(0));
            if induced {
                return d;
            }
        }
        q
    }

    #[test]
    fn conductor_matches_definition() {
        for q in 1..=120u64 {
            for chi in enumerate_characters(q).unwrap() {
                assert_eq!(chi.conductor(), brute_conductor(&chi), "{chi}");
                let prim = chi.primitive_inducing().unwrap();
                assert!(prim.is_primitive(), "{chi} -> {prim}");
                for n in 1..q {
                    if gcd(n, q) == 1 {
                        assert_eq!(prim.value(n), chi.value(n), "{chi} at {n}");
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicativity_and_periodicity() {
        for q in [7u64, 8, 9, 12, 15, 16, 20, 24, 27, 32, 45] {
            for chi in enumerate_characters(q).unwrap() {
                for m in 0..q {
                    for n in 0..q {
                        let lhs = chi.phase(m * n);
                        let rhs = match (chi.phase(m), chi.phase(n)) {
                            (Some(a), Some(b)) => Some((a + b) % chi.order_exponent()),
                            _ => None,
                        };
                        assert_eq!(lhs, rhs, "{chi}: {m}*{n}");
                    }
                    assert_eq!(chi.phase(m), chi.phase(m + q));
                    assert_eq!(chi.phase(m).is_none(), gcd(m, q) != 1);
                }
                let minus_one = chi.value(q - 1);
                assert_eq!(minus_one.re as i32, chi.parity_sign());
            }
        }
    }

    #[test]
    fn characters_are_distinct() {
        for q in 1..=60u64 {
            let chars = enumerate_characters(q).unwrap();
            assert_eq!(chars.len() as u64, arith::euler_phi(q));
            let tables: Vec<Vec<Option<u64>>> = chars
                .iter()
                .map(|c| (0..q).map(|n| c.phase(n)).collect())
                .collect();
            for i in 0..tables.len() {
                for j in i + 1..tables.len() {
                    assert_ne!(tables[i], tables[j], "q = {q}: {i} vs {j}");
                }
            }
            for (i, c) in chars.iter().enumerate() {
                assert_eq!(c.index(), i as u64);
            }
        }
    }

    #[test]
    fn twisted_sums() {
        let chars = enumerate_characters(5).unwrap();
        for chi in chars.iter().filter(|c| c.is_primitive()) {
            let tau = gauss_sum(chi).complex();
            assert!(approx(twisted_gauss_sum(1, chi), tau, 0.0));
            assert!(twisted_gauss_sum(0, chi).norm() < 1e-14);
            let expected = chi.value(2).conj() * tau;
            assert!(approx(twisted_gauss_sum(2, chi), expected, 1e-12));
        }
    }

    #[test]
    fn label_round_trip() {
        let chi = character_from_label("12.3").unwrap();
        assert_eq!(chi.label(), "12.3");
        assert!(character_from_label("12").is_err());
        assert!(character_from_label("5.9").is_err());
        assert!(enumerate_characters(0).is_err());
    }

    #[test]
    fn conjugate_and_product() {
        for chi in enumerate_characters(13).unwrap() {
            let prod = chi.mul(&chi.conjugate()).unwrap();
            assert!(prod.is_principal());
            assert_eq!(chi.conjugate().conjugate(), chi);
        }
    }
}
