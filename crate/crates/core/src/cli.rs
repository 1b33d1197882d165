//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on a
//! usage error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::centralizer::centralizer_suite;
use crate::error::{Error, Result};
use crate::graded::{graded_report, invariant_degrees, molien_series, shephard_todd_check};
use crate::poly::QPolynomial;
use crate::qanalog::{
    kostka_charge, kostka_foulkes, kostka_foulkes_gl, partitions, tensor_decompose,
};
use crate::realform::{FamilySpec, RealFormFamily, RealWeight};
use crate::rootdata::{CartanType, RootSystem};
use crate::stalks::{self, Convention, StalkTable};

pub const THREADS_ENV: &str = "SATAKE_KIT_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "satake-kit",
    version,
    about = "Kostka-Foulkes polynomials, IC stalks and graded checks for real forms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Seed for rational sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Lorentz,
    Octonionic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Perverse,
    Shifted,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Perverse => Convention::Perverse,
            ConventionArg::Shifted => Convention::Shifted,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyKind,
    /// Parameter of `PSO(2n-1,1)`.
    #[arg(long)]
    pub n: Option<u32>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec> {
        family_spec(Some(self.family), self.n)?
            .ok_or_else(|| Error::InvalidFamily("missing --family".into()))
    }
}

fn family_spec(kind: Option<FamilyKind>, n: Option<u32>) -> Result<Option<FamilySpec>> {
    Ok(match (kind, n) {
        (None, None) => None,
        (None, Some(_)) => {
            return Err(Error::InvalidFamily("--n requires --family lorentz".into()))
        }
        (Some(FamilyKind::Lorentz), Some(n)) => Some(FamilySpec::Lorentz { n }),
        (Some(FamilyKind::Lorentz), None) => {
            return Err(Error::InvalidFamily("--family lorentz requires --n".into()))
        }
        (Some(FamilyKind::Octonionic), None) => Some(FamilySpec::Octonionic),
        (Some(FamilyKind::Octonionic), Some(_)) => {
            return Err(Error::InvalidFamily(
                "--n only applies to --family lorentz".into(),
            ))
        }
    })
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Kostka-Foulkes polynomial of A1 or A2 (weights or partitions).
    Kostka(KostkaArgs),
    /// Stalk table over a box of dominant weights.
    Stalks(StalksArgs),
    /// Invariant-degree identities and the Ext-algebra Hilbert series.
    HilbertCheck(FamilyArgs),
    /// <lambda, rho_G> = n_X <lambda, rho_X^vee> over a box.
    PairingCheck(PairingArgs),
    /// Regularity, equivariance and nu checks for e^T.
    CentralizerCheck(CentralizerArgs),
    /// Decomposition of a tensor product of two irreducibles.
    Tensor(TensorArgs),
    /// Every suite, one status line per check.
    VerifyAll(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct KostkaArgs {
    #[arg(long = "type", default_value = "a2")]
    pub ty: String,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub lambda: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub mu: Option<Vec<i64>>,
    /// Partition entry point, e.g. `--shape 2,1 --content 1,1,1`.
    #[arg(long, value_delimiter = ',')]
    pub shape: Option<Vec<u32>>,
    #[arg(long, value_delimiter = ',')]
    pub content: Option<Vec<u32>>,
}

#[derive(Args, Debug)]
pub struct StalksArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Largest coordinate of lambda in the sweep.
    #[arg(long, visible_alias = "box", default_value_t = 6)]
    pub lmax: i64,
    #[arg(long, value_enum, default_value_t = ConventionArg::Perverse)]
    pub convention: ConventionArg,
}

#[derive(Args, Debug)]
pub struct PairingArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Defaults to 40 (Lorentz) or 12 (octonionic).
    #[arg(long, visible_alias = "box")]
    pub lmax: Option<i64>,
}

#[derive(Args, Debug)]
pub struct CentralizerArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
}

#[derive(Args, Debug)]
pub struct TensorArgs {
    #[arg(long = "type", default_value = "a2")]
    pub ty: String,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub lambda: Vec<i64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub mu: Vec<i64>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Restrict to one family; all families when omitted.
    #[arg(long, value_enum)]
    pub family: Option<FamilyKind>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Sweep bound for stalk tables.
    #[arg(long, visible_alias = "box", default_value_t = 8)]
    pub lmax: i64,
}

/// Outcome of one command: text for stdout and the exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }

    fn checked(text: String, passed: bool) -> Self {
        Self {
            text,
            code: if passed { 0 } else { 1 },
        }
    }
}

/// Runs the CLI with the process arguments and environment.
pub fn main_with_env() -> i32 {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        match v.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => {
                eprintln!("error: {THREADS_ENV} must be a positive integer, got {v:?}");
                return 2;
            }
        }
    }
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_from_args(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    run(&cli, out, err)
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Kostka(a) => kostka_cmd(a, cli.format),
        Command::Stalks(a) => stalks_cmd(a, cli.format),
        Command::HilbertCheck(a) => hilbert_cmd(a, cli.format),
        Command::PairingCheck(a) => pairing_cmd(a, cli.format),
        Command::CentralizerCheck(a) => centralizer_cmd(a, cli.format, cli.seed),
        Command::Tensor(a) => tensor_cmd(a, cli.format),
        Command::VerifyAll(a) => verify_all(a, cli.format, cli.seed),
    }
}

fn type_a_system(label: &str) -> Result<RootSystem> {
    let ty: CartanType = label.parse()?;
    if ty != CartanType::A1 && ty != CartanType::A2 {
        return Err(Error::UnsupportedType(ty));
    }
    RootSystem::new(ty)
}

fn poly_json(p: &QPolynomial) -> serde_json::Value {
    let coeffs: BTreeMap<String, String> = p
        .terms()
        .map(|(e, c)| (e.to_string(), c.to_string()))
        .collect();
    json!({ "polynomial": p.to_string(), "coefficients": coeffs })
}

fn kostka_cmd(a: &KostkaArgs, format: Format) -> Result<Outcome> {
    let sys = type_a_system(&a.ty)?;
    let (p, lambda, mu) = match (&a.lambda, &a.mu, &a.shape, &a.content) {
        (Some(l), Some(m), None, None) => {
            let lw = sys.weight(l)?;
            let mw = sys.weight(m)?;
            (kostka_foulkes(&sys, &lw, &mw)?, json!(l), json!(m))
        }
        (None, None, Some(s), Some(c)) => (kostka_foulkes_gl(&sys, s, c)?, json!(s), json!(c)),
        _ => {
            return Err(Error::InvalidFamily(
                "give either --lambda and --mu or --shape and --content".into(),
            ))
        }
    };
    let text = match format {
        Format::Pretty => format!("{p}\n"),
        Format::Json => {
            let mut v = poly_json(&p);
            v["type"] = json!(sys.cartan_type().to_string());
            v["lambda"] = lambda;
            v["mu"] = mu;
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Csv => {
            let mut s = String::from("exponent,coefficient\n");
            for (e, c) in p.terms() {
                let _ = writeln!(s, "{e},{c}");
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn render_table(t: &StalkTable, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", t.to_json()),
        Format::Csv => t.to_csv(),
        Format::Pretty => t.to_pretty(),
    }
}

fn stalks_cmd(a: &StalksArgs, format: Format) -> Result<Outcome> {
    if a.lmax < 0 {
        return Err(Error::InvalidFamily("--lmax must be nonnegative".into()));
    }
    let fam = RealFormFamily::new(a.family.spec()?)?;
    let t = stalks::sweep(&fam, a.lmax, a.convention.into())?;
    let ok = stalks::parity_check(&t) && stalks::bounds_check(&t);
    Ok(Outcome::checked(render_table(&t, format), ok))
}

fn hilbert_cmd(a: &FamilyArgs, format: Format) -> Result<Outcome> {
    let fam = RealFormFamily::new(a.spec()?)?;
    let r = graded_report(&fam)?;
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&r).expect("json")),
        Format::Csv => {
            let c = &r.checks;
            format!(
                "check,passed\npart1_k,{}\npart1_m,{}\npart2_m,{}\npart2_k,{}\next_hilbert,{}\n",
                c.part1_k, c.part1_m, c.part2_m, c.part2_k, c.ext_hilbert
            )
        }
        Format::Pretty => {
            let c = &r.checks;
            let d = &r.degree_multisets;
            let mut s = String::new();
            let _ = writeln!(s, "family {}", fam.spec());
            let _ = writeln!(
                s,
                "M side {} vs {}: {}",
                d.lemma31.m_side,
                d.lemma31.m_target,
                status(c.part2_m)
            );
            let _ = writeln!(
                s,
                "K side {} vs {}: {}",
                d.lemma31.k_side,
                d.lemma31.k_target,
                status(c.part2_k)
            );
            let _ = writeln!(s, "W_M invariants: {}", status(c.part1_m));
            let _ = writeln!(s, "W_K invariants: {}", status(c.part1_k));
            let _ = writeln!(s, "Ext generators {}: {}", d.ext, status(c.ext_hilbert));
            let _ = writeln!(
                s,
                "Ext Hilbert series ({}) / ({})",
                r.hilbert_series.num, r.hilbert_series.den
            );
            s
        }
    };
    Ok(Outcome::checked(text, r.passed()))
}

#[derive(Serialize)]
struct PairingReport {
    family: FamilySpec,
    checked: usize,
    failures: Vec<String>,
}

fn pairing_report(fam: &RealFormFamily, lmax: i64) -> PairingReport {
    let box_ = fam.dominant_box(lmax);
    let failures = box_
        .iter()
        .filter(|l| !fam.check_pairing_identity(l))
        .map(RealWeight::to_string)
        .collect();
    PairingReport {
        family: fam.spec(),
        checked: box_.len(),
        failures,
    }
}

fn default_pairing_bound(spec: FamilySpec) -> i64 {
    match spec {
        FamilySpec::Lorentz { .. } => 40,
        FamilySpec::Octonionic => 12,
    }
}

fn pairing_cmd(a: &PairingArgs, format: Format) -> Result<Outcome> {
    let spec = a.family.spec()?;
    let fam = RealFormFamily::new(spec)?;
    let lmax = a.lmax.unwrap_or_else(|| default_pairing_bound(spec));
    if lmax < 0 {
        return Err(Error::InvalidFamily("--lmax must be nonnegative".into()));
    }
    let r = pairing_report(&fam, lmax);
    let passed = r.failures.is_empty();
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&r).expect("json")),
        Format::Csv => {
            let mut s = String::from("lambda,lhs,rhs\n");
            for l in fam.dominant_box(lmax) {
                let (x, y) = fam.pairing_sides(&l)?;
                let _ = writeln!(s, "\"{l}\",{x},{y}");
            }
            s
        }
        Format::Pretty => format!(
            "pairing identity for {}: {} weights, {} failures: {}\n",
            fam.spec(),
            r.checked,
            r.failures.len(),
            status(passed)
        ),
    };
    Ok(Outcome::checked(text, passed))
}

fn centralizer_cmd(a: &CentralizerArgs, format: Format, seed: u64) -> Result<Outcome> {
    if a.samples == 0 {
        return Err(Error::EmptySamples);
    }
    let fam = RealFormFamily::new(a.family.spec()?)?;
    let r = centralizer_suite(&fam, a.samples, seed)?;
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&r).expect("json")),
        Format::Csv => format!(
            "check,passed\nregularity,{}\nabelian,{}\nequivariance,{}\nequivariance_symbolic,{}\nnu_charpoly,{}\n",
            r.failures.is_empty(),
            r.abelian,
            r.equivariance,
            r.equivariance_symbolic,
            r.nu_charpoly
        ),
        Format::Pretty => format!(
            "centralizer suite for {}: {} samples, {} failures, abelian {}, equivariance {} ({} grid points, symbolic {}), nu {} ({} samples)\n",
            r.family,
            r.samples,
            r.failures.len(),
            r.abelian,
            r.equivariance,
            r.equivariance_grid,
            r.equivariance_symbolic,
            r.nu_charpoly,
            r.nu_samples
        ),
    };
    Ok(Outcome::checked(text, r.passed()))
}

fn tensor_cmd(a: &TensorArgs, format: Format) -> Result<Outcome> {
    let sys = type_a_system(&a.ty)?;
    let l = sys.weight(&a.lambda)?;
    let m = sys.weight(&a.mu)?;
    let parts = tensor_decompose(&sys, &l, &m)?;
    let text = match format {
        Format::Json => {
            let v: Vec<_> = parts
                .iter()
                .map(|(w, k)| json!({ "weight": w.coords, "multiplicity": k }))
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Csv => {
            let mut s = String::from("weight,multiplicity\n");
            for (w, k) in &parts {
                let _ = writeln!(s, "\"{w}\",{k}");
            }
            s
        }
        Format::Pretty => {
            let terms: Vec<String> = parts
                .iter()
                .map(|(w, k)| {
                    if *k == 1 {
                        format!("V{w}")
                    } else {
                        format!("{k} V{w}")
                    }
                })
                .collect();
            format!("{}\n", terms.join(" + "))
        }
    };
    Ok(Outcome::ok(text))
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub scope: String,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

/// Charge oracle against the alternating sum: 2-row partitions of size
/// `<= max_two` (A1) and 3-row partitions of size `<= max_three` (A2).
/// Returns the number of pairs and the mismatches.
pub fn oracle_equivalence(max_two: u32, max_three: u32) -> Result<(usize, Vec<String>)> {
    let a1 = RootSystem::new(CartanType::A1)?;
    let a2 = RootSystem::new(CartanType::A2)?;
    let mut jobs = Vec::new();
    for (sys, rows, max) in [(&a1, 2usize, max_two), (&a2, 3, max_three)] {
        for size in 0..=max {
            let ps = partitions(size, rows);
            for s in &ps {
                for c in &ps {
                    jobs.push((sys, s.clone(), c.clone()));
                }
            }
        }
    }
    let mismatches: Vec<Option<String>> = jobs
        .par_iter()
        .map(|(sys, s, c)| {
            let lhs = kostka_charge(s, c)?;
            let rhs = kostka_foulkes_gl(sys, s, c)?;
            Ok((lhs != rhs).then(|| {
                format!(
                    "{} {s:?}/{c:?}: charge {lhs} vs sum {rhs}",
                    sys.cartan_type()
                )
            }))
        })
        .collect::<Result<_>>()?;
    Ok((jobs.len(), mismatches.into_iter().flatten().collect()))
}

/// `K(1)` against Freudenthal for A1 with `lambda <= max_a1` and A2 with
/// `<lambda, rho^vee> <= max_a2`.
pub fn q_one_consistency(max_a1: i64, max_a2: i64) -> Result<(usize, Vec<String>)> {
    let mut jobs = Vec::new();
    let a1 = RootSystem::new(CartanType::A1)?;
    for m in 0..=max_a1 {
        jobs.push((&a1, a1.weight(&[m])?));
    }
    let a2 = RootSystem::new(CartanType::A2)?;
    for a in 0..=max_a2 {
        for b in 0..=max_a2 - a {
            jobs.push((&a2, a2.weight(&[a, b])?));
        }
    }
    let results: Vec<(usize, Vec<String>)> = jobs
        .par_iter()
        .map(|(sys, lam)| {
            let mut count = 0;
            let mut bad = Vec::new();
            let ch = sys.dominant_character(lam)?;
            for mu in sys.dominant_weights_below(lam)? {
                count += 1;
                let k = kostka_foulkes(sys, lam, &mu)?.eval_at_one();
                let f = ch.get(&mu).cloned().unwrap_or_else(|| BigInt::from(0));
                if k != f {
                    bad.push(format!("{} {lam}/{mu}: K(1)={k} vs {f}", sys.cartan_type()));
                }
            }
            Ok((count, bad))
        })
        .collect::<Result<_>>()?;
    let count = results.iter().map(|r| r.0).sum();
    Ok((count, results.into_iter().flat_map(|r| r.1).collect()))
}

/// Molien series of the explicit reflection representations against the
/// degree tables (A1, A2, B1-B4, D2-D4, G2, F4), and the Shephard–Todd
/// identities for E6.
pub fn molien_suite() -> Result<Vec<(CartanType, bool)>> {
    let mut tys = vec![
        CartanType::A1,
        CartanType::A2,
        CartanType::G2,
        CartanType::F4,
    ];
    tys.extend((1..=4).map(CartanType::b));
    tys.extend((2..=4).map(CartanType::d));
    let mut out: Vec<(CartanType, bool)> = tys
        .par_iter()
        .map(|&ty| {
            let sys = RootSystem::new(ty)?;
            Ok((
                ty,
                molien_series(&sys)? == invariant_degrees(ty)?.hilbert_series(),
            ))
        })
        .collect::<Result<_>>()?;
    out.push((CartanType::E6, shephard_todd_check(CartanType::E6)?));
    Ok(out)
}

fn family_checks(fam: &RealFormFamily, args: &VerifyArgs, seed: u64) -> Result<Vec<CheckLine>> {
    let scope = fam.spec().to_string();
    let line = |check: &str, passed: bool, detail: String| CheckLine {
        scope: scope.clone(),
        check: check.into(),
        passed,
        detail,
    };
    let mut out = Vec::new();

    let p = pairing_report(fam, default_pairing_bound(fam.spec()));
    out.push(line(
        "pairing",
        p.failures.is_empty(),
        format!("{} weights, {} failures", p.checked, p.failures.len()),
    ));

    let g = graded_report(fam)?;
    let c = &g.checks;
    out.push(line(
        "cohomology-degrees",
        c.part1_k && c.part1_m && c.part2_m && c.part2_k,
        format!(
            "K {} = {}, M {} = {}",
            g.degree_multisets.lemma31.k_side,
            g.degree_multisets.lemma31.k_target,
            g.degree_multisets.lemma31.m_side,
            g.degree_multisets.lemma31.m_target
        ),
    ));
    out.push(line(
        "ext-hilbert",
        c.ext_hilbert,
        format!("generators {}", g.degree_multisets.ext),
    ));

    let w = fam.weyl_factorization();
    out.push(line(
        "weyl-factorization",
        w.holds,
        format!(
            "{} = {} * {} ({})",
            w.k_order,
            w.m_order,
            w.x_order,
            if w.by_enumeration {
                "enumerated"
            } else {
                "formula"
            }
        ),
    ));

    let paving = fam.minuscule_paving();
    let n_x = u64::from(fam.n_x());
    let expected: Vec<u64> = match fam.spec() {
        FamilySpec::Lorentz { n } => vec![0, 2 * u64::from(n) - 2],
        FamilySpec::Octonionic => vec![0, 8, 16],
    };
    out.push(line(
        "paving",
        paving == expected && paving.iter().all(|d| d % n_x == 0),
        format!("{paving:?}"),
    ));

    let table = stalks::sweep(fam, args.lmax, Convention::Perverse)?;
    let mut subst_ok = true;
    let mut lx_ok = true;
    for (l, m) in table.entries.keys() {
        let k = stalks::dual_kostka(fam, l, m)?.unwrap_or_else(QPolynomial::zero);
        let view = stalks::q_substitution_view(fam, l, m)?;
        subst_ok &= view
            .terms()
            .map(|(e, c)| (e, c.clone()))
            .collect::<Vec<_>>()
            == k.terms()
                .map(|(e, c)| (e * fam.n_x() / 2, c.clone()))
                .collect::<Vec<_>>();
        lx_ok &= stalks::lx_stalk_polynomial(fam, l, m).is_ok();
    }
    out.push(line(
        "stalk-parity",
        stalks::parity_check(&table) && stalks::bounds_check(&table),
        format!(
            "{} (lambda, mu) pairs, lmax {}",
            table.entries.len(),
            args.lmax
        ),
    ));
    out.push(line(
        "stalk-lx-shift",
        lx_ok,
        "orbit-dimension shift agrees".into(),
    ));
    out.push(line(
        "stalk-substitution",
        subst_ok,
        format!("exponents scaled by {}", fam.n_x() / 2),
    ));

    let r = centralizer_suite(fam, args.samples, seed)?;
    out.push(line(
        "centralizer",
        r.passed(),
        format!(
            "{} samples, {} failures, grid {}, nu {}",
            r.samples,
            r.failures.len(),
            r.equivariance_grid,
            r.nu_samples
        ),
    ));
    Ok(out)
}

/// All checks of `verify-all`, in a fixed order.
pub fn verify_lines(args: &VerifyArgs, seed: u64) -> Result<Vec<CheckLine>> {
    let specs: Vec<FamilySpec> = match family_spec(args.family, args.n)? {
        Some(s) => vec![s],
        None => (2..=12)
            .map(|n| FamilySpec::Lorentz { n })
            .chain([FamilySpec::Octonionic])
            .collect(),
    };
    let mut lines = Vec::new();
    let global = |check: &str, passed: bool, detail: String| CheckLine {
        scope: "global".into(),
        check: check.into(),
        passed,
        detail,
    };
    let (pairs, bad) = oracle_equivalence(12, 9)?;
    lines.push(global(
        "oracle-equivalence",
        bad.is_empty(),
        format!("{pairs} partition pairs, {} mismatches", bad.len()),
    ));
    let (pairs, bad) = q_one_consistency(20, 6)?;
    lines.push(global(
        "q-one",
        bad.is_empty(),
        format!("{pairs} weight pairs, {} mismatches", bad.len()),
    ));
    let molien = molien_suite()?;
    lines.push(global(
        "molien",
        molien.iter().all(|(_, ok)| *ok),
        molien
            .iter()
            .map(|(ty, ok)| format!("{ty}:{}", status(*ok)))
            .collect::<Vec<_>>()
            .join(" "),
    ));
    for spec in specs {
        let fam = RealFormFamily::new(spec)?;
        lines.extend(family_checks(&fam, args, seed)?);
    }
    Ok(lines)
}

fn verify_all(args: &VerifyArgs, format: Format, seed: u64) -> Result<Outcome> {
    if args.lmax < 0 {
        return Err(Error::InvalidFamily("--lmax must be nonnegative".into()));
    }
    if args.samples == 0 {
        return Err(Error::EmptySamples);
    }
    let lines = verify_lines(args, seed)?;
    let passed = lines.iter().all(|l| l.passed);
    let failures: Vec<String> = lines
        .iter()
        .filter(|l| !l.passed)
        .map(|l| format!("{}/{}", l.scope, l.check))
        .collect();
    let text = match format {
        Format::Json => {
            let v =
                json!({ "seed": seed, "passed": passed, "failures": failures, "checks": lines });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["scope", "check", "passed", "detail"])
                .expect("in-memory");
            for l in &lines {
                w.write_record([
                    l.scope.as_str(),
                    l.check.as_str(),
                    status(l.passed),
                    l.detail.as_str(),
                ])
                .expect("in-memory");
            }
            String::from_utf8(w.into_inner().expect("in-memory")).expect("utf8")
        }
        Format::Pretty => {
            let mut s = String::new();
            for l in &lines {
                let _ = writeln!(
                    s,
                    "[{}] {} {}: {}",
                    status(l.passed),
                    l.scope,
                    l.check,
                    l.detail
                );
            }
            let _ = writeln!(
                s,
                "{} of {} checks passed (seed {seed})",
                lines.iter().filter(|l| l.passed).count(),
                lines.len()
            );
            s
        }
    };
    Ok(Outcome::checked(text, passed))
}
