use anyhow::{bail, Context, Result};
use dirichlet_zerosum::analytic::ConstantsTable;
use dirichlet_zerosum::characters::{
    character, character_from_label, enumerate_characters, DirichletCharacter,
};
use dirichlet_zerosum::lfunc::{afe_balanced, l_derivative, LConfig, Method};
use dirichlet_zerosum::zeros::{scan_zeros, verify_completeness, ScanConfig};
use dirichlet_zerosum::zerosum::{
    compare, compare_all_primitive, constants, CompareConfig, ComparisonReport,
};
use dirichlet_zerosum::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::args::{CharSelector, Command, EvalMethod, OutputArgs, ScanArgs};
use crate::output::{g15, stdout, to_json, write_csv, write_file};

pub const ZEROS_CSV_HEADER: [&str; 3] = ["index", "gamma", "residual_halfwidth"];
pub const COMPARE_CSV_HEADER: [&str; 7] = [
    "T_snapped",
    "re_empirical",
    "im_empirical",
    "main_term",
    "re_remainder",
    "im_remainder",
    "envelope_ratio",
];

pub fn run(cmd: Command) -> Result<()> {
    match cmd {
        Command::Characters { modulus, json } => characters(modulus, json),
        Command::Constants { modulus } => constants_cmd(modulus),
        Command::Eval {
            chi,
            sigma,
            t,
            method,
        } => eval(&chi, sigma, t, method),
        Command::Zeros {
            chi,
            tmax,
            tmin,
            scan,
            out,
        } => zeros(&chi, tmin, tmax, &scan, &out),
        Command::Compare {
            modulus,
            character,
            all_primitive,
            tgrid,
            scan,
            out,
        } => compare_cmd(
            modulus,
            character.as_deref(),
            all_primitive,
            &tgrid,
            &scan,
            &out,
        ),
    }
}

/// Accepts `k` or `q.k`.
fn select(modulus: u64, sel: &str) -> Result<DirichletCharacter> {
    let chi = if sel.contains('.') {
        let chi = character_from_label(sel)?;
        if chi.modulus() != modulus {
            bail!("label {sel} is not a character mod {modulus}");
        }
        chi
    } else {
        let k: u64 = sel.parse().with_context(|| {
            format!("character selector {sel:?} is neither an index nor a label q.k")
        })?;
        character(modulus, k)?
    };
    Ok(chi)
}

fn select_primitive(s: &CharSelector) -> Result<DirichletCharacter> {
    let chi = select(s.modulus, &s.character)?;
    if !chi.is_primitive() {
        bail!(
            "{} is not primitive (conductor {}); use its inducing character {}",
            chi.label(),
            chi.conductor(),
            chi.primitive_inducing()?.label()
        );
    }
    Ok(chi)
}

fn scan_config(a: &ScanArgs) -> ScanConfig {
    ScanConfig {
        grid_factor: a.grid_factor,
        refine_tol: a.refine_tol,
        ..ScanConfig::default()
    }
}

#[derive(Serialize)]
struct CharacterRecord {
    label: String,
    modulus: u64,
    index: u64,
    generators: Vec<u64>,
    generator_orders: Vec<u64>,
    exponents: Vec<u64>,
    order: u64,
    conductor: u64,
    primitive: bool,
    principal: bool,
    real: bool,
    kappa: u8,
}

fn characters(modulus: u64, json: bool) -> Result<()> {
    let recs: Vec<CharacterRecord> = enumerate_characters(modulus)?
        .iter()
        .map(|c| CharacterRecord {
            label: c.label(),
            modulus,
            index: c.index(),
            generators: c.generators(),
            generator_orders: c.generator_orders(),
            exponents: c.exponents().to_vec(),
            order: c.order(),
            conductor: c.conductor(),
            primitive: c.is_primitive(),
            principal: c.is_principal(),
            real: c.is_real(),
            kappa: c.kappa(),
        })
        .collect();
    if json {
        return stdout(&to_json(&recs)?);
    }
    let mut s = String::from(
        "# label q.k: k is the mixed-radix index of the exponent vector on the generators, first generator most significant\n",
    );
    s.push_str("label\tconductor\tprimitive\tkappa\torder\treal\texponents\tgenerators\n");
    for r in &recs {
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{:?}\t{:?}\n",
            r.label, r.conductor, r.primitive, r.kappa, r.order, r.real, r.exponents, r.generators
        ));
    }
    stdout(&s)
}

#[derive(Serialize)]
struct BernoulliRecord {
    n: usize,
    numerator: String,
    denominator: String,
    value: f64,
}

#[derive(Serialize)]
struct ConstantsOut {
    gamma0: f64,
    gamma1: f64,
    eta0: f64,
    eta1: f64,
    bernoulli: Vec<BernoulliRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    asymptotic: Option<dirichlet_zerosum::zerosum::AsymptoticConstants>,
}

fn constants_cmd(modulus: Option<u64>) -> Result<()> {
    let t = ConstantsTable::get();
    let bernoulli = t.bernoulli[..=12]
        .iter()
        .enumerate()
        .map(|(n, b)| BernoulliRecord {
            n,
            numerator: b.numer().to_string(),
            denominator: b.denom().to_string(),
            value: b.to_f64().unwrap_or(f64::NAN),
        })
        .collect();
    let out = ConstantsOut {
        gamma0: t.gamma0,
        gamma1: t.gamma1,
        eta0: t.eta[0],
        eta1: t.eta[1],
        bernoulli,
        asymptotic: modulus.map(constants).transpose()?,
    };
    stdout(&to_json(&out)?)
}

#[derive(Serialize)]
struct ComplexOut {
    re: f64,
    im: f64,
}

impl From<Complex64> for ComplexOut {
    fn from(z: Complex64) -> Self {
        ComplexOut { re: z.re, im: z.im }
    }
}

#[derive(Serialize)]
struct EvalOut {
    label: String,
    s: ComplexOut,
    method: Method,
    value: ComplexOut,
    derivative: Option<ComplexOut>,
    abs_error_bound: f64,
}

fn eval(sel: &CharSelector, sigma: f64, t: f64, method: EvalMethod) -> Result<()> {
    let chi = select(sel.modulus, &sel.character)?;
    let s = Complex64::new(sigma, t);
    let ev = match method {
        EvalMethod::Hurwitz => l_derivative(&chi, s, &LConfig::default())?,
        EvalMethod::Afe => afe_balanced(&chi, s)?,
    };
    let out = EvalOut {
        label: chi.label(),
        s: s.into(),
        method: ev.method,
        value: ev.value.into(),
        derivative: ev.derivative.map(Into::into),
        abs_error_bound: ev.abs_error_bound,
    };
    stdout(&to_json(&out)?)
}

#[derive(Serialize)]
struct ZeroOut {
    index: usize,
    gamma: f64,
    residual_halfwidth: f64,
}

#[derive(Serialize)]
struct ZerosOut {
    label: String,
    modulus: u64,
    t_min: f64,
    t_max: f64,
    certified_count: Option<usize>,
    zeros: Vec<ZeroOut>,
}

fn zeros(
    sel: &CharSelector,
    tmin: f64,
    tmax: f64,
    scan: &ScanArgs,
    out: &OutputArgs,
) -> Result<()> {
    let chi = select_primitive(sel)?;
    let list = verify_completeness(scan_zeros(&chi, tmin, tmax, &scan_config(scan))?)?;
    let report = ZerosOut {
        label: chi.label(),
        modulus: chi.modulus(),
        t_min: list.t_min,
        t_max: list.t_max,
        certified_count: list.certified_count,
        zeros: list
            .zeros
            .iter()
            .enumerate()
            .map(|(i, z)| ZeroOut {
                index: i + 1,
                gamma: z.gamma,
                residual_halfwidth: z.residual_halfwidth,
            })
            .collect(),
    };
    if let Some(path) = &out.csv {
        let rows: Vec<Vec<String>> = report
            .zeros
            .iter()
            .map(|z| vec![z.index.to_string(), g15(z.gamma), g15(z.residual_halfwidth)])
            .collect();
        write_csv(path, &ZEROS_CSV_HEADER, &rows)?;
    }
    match &out.json {
        Some(Some(path)) => write_file(path, &to_json(&report)?)?,
        Some(None) => return stdout(&to_json(&report)?),
        None => {}
    }
    let mut s = format!(
        "# {}: {} zeros in ({}, {}], certified count {}\n",
        report.label,
        report.zeros.len(),
        g15(report.t_min),
        g15(report.t_max),
        report
            .certified_count
            .map_or("none".into(), |c| c.to_string())
    );
    for z in &report.zeros {
        s.push_str(&format!("{}\t{}\n", z.index, g15(z.gamma)));
    }
    stdout(&s)
}

fn compare_rows(rep: &ComparisonReport) -> Vec<Vec<String>> {
    rep.rows
        .iter()
        .map(|r| {
            [
                r.t_snapped,
                r.re_empirical,
                r.im_empirical,
                r.main_term,
                r.re_remainder,
                r.im_remainder,
                r.envelope_ratio,
            ]
            .iter()
            .map(|&x| g15(x))
            .collect()
        })
        .collect()
}

/// `out.csv` -> `out_5.2.csv` for one character of several.
fn per_character(path: &std::path::Path, label: &str) -> std::path::PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}_{label}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{label}"),
    };
    path.with_file_name(name)
}

fn compare_cmd(
    modulus: u64,
    sel: Option<&str>,
    all: bool,
    grid: &[f64],
    scan: &ScanArgs,
    out: &OutputArgs,
) -> Result<()> {
    let cfg = CompareConfig {
        scan: scan_config(scan),
        ..CompareConfig::default()
    };
    let reports = if all {
        let r = compare_all_primitive(modulus, grid, &cfg)?;
        if r.is_empty() {
            bail!("there are no primitive characters mod {modulus}");
        }
        r
    } else {
        let sel = sel.context("either --char or --all-primitive is required")?;
        let chi = select_primitive(&CharSelector {
            modulus,
            character: sel.to_string(),
        })?;
        vec![compare(&chi, grid, &cfg)?]
    };
    if let Some(path) = &out.csv {
        for rep in &reports {
            let p = if all {
                per_character(path, &rep.label)
            } else {
                path.clone()
            };
            write_csv(&p, &COMPARE_CSV_HEADER, &compare_rows(rep))?;
        }
    }
    let json = if all {
        to_json(&reports)?
    } else {
        to_json(&reports[0])?
    };
    match &out.json {
        Some(Some(path)) => write_file(path, &json)?,
        Some(None) => return stdout(&json),
        None => {}
    }
    let mut s = String::new();
    for rep in &reports {
        s.push_str(&format!(
            "# {}: a1 = {}, a2 = {}, certified zeros {}, fitted C = {}, fitted exponent = {}\n",
            rep.label,
            g15(rep.constants.a1),
            g15(rep.constants.a2),
            rep.certified_count,
            rep.fitted_c.map_or("none".into(), g15),
            rep.fitted_exponent.map_or("none".into(), g15),
        ));
        s.push_str("T_requested\tT_snapped\tzeros\tre_empirical\tim_empirical\tmain_term\t|R|/M\tenvelope_ratio\timag_fraction\n");
        for r in &rep.rows {
            s.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                g15(r.t_requested),
                g15(r.t_snapped),
                r.zero_count,
                g15(r.re_empirical),
                g15(r.im_empirical),
                g15(r.main_term),
                g15(r.relative_remainder),
                g15(r.envelope_ratio),
                g15(r.imag_fraction)
            ));
        }
    }
    stdout(&s)
}
