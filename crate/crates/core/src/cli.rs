//! Command-line front end. `run` returns the exit code together with the
//! captured output so it can be exercised without spawning a process.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cone::{self, ConeV, Extremal};
use crate::push::{hyperplane_cone, product_cone_pushforward, push_tuple, ProductSource, PushSpec};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::ring::{self, CovClass, NumClass, Polynomial, RingPresentation};
use crate::theorems::bounds::{BoundEngine, BoundPair};
use crate::theorems::fixtures;
use crate::theorems::stable::{check_650, stable_containment, stable_delta_bounds, StableBounds};
use crate::theorems::suite::{parse_suite, reference_suite, run_suite, Suite};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(
    name = "univhyp",
    version,
    about = "Exact cones of cycles on universal hypersurfaces"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arithmetic in the numerical ring of X_{n,d}.
    Ring(RingArgs),
    /// Polyhedral cone operations on JSON cone files ("-" reads stdin).
    Cone(ConeArgs),
    /// Product-map pushforward of a covariant tuple.
    Push(PushArgs),
    /// Pushforward tables compared against their closed forms.
    Table(TableArgs),
    /// Lower and upper bounds for pseudoeffective cones.
    Verify(VerifyArgs),
    /// Stable-range slopes.
    Stable(StableArgs),
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("op").required(true).multiple(false)))]
pub struct RingArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: u64,
    /// Reduced form of a polynomial such as "xi^5".
    #[arg(long, group = "op")]
    pub reduce: Option<String>,
    /// Product of two polynomials.
    #[arg(long, group = "op", num_args = 2, value_names = ["A", "B"])]
    pub mul: Option<Vec<String>>,
    /// Degree of a top-codimension polynomial.
    #[arg(long, group = "op")]
    pub degree: Option<String>,
    /// Covariant coordinates of a polynomial class.
    #[arg(long, group = "op")]
    pub covariant: Option<String>,
    /// Class with the given covariant coordinates "d_n,...,d_0" (needs --i).
    #[arg(long, group = "op", allow_hyphen_values = true)]
    pub from_covariant: Option<String>,
    /// Pair a functional with the cycle given by --cycle and --i.
    #[arg(long, group = "op")]
    pub pair: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub cycle: Option<String>,
    #[arg(long)]
    pub i: Option<usize>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("op").required(true).multiple(false)))]
pub struct ConeArgs {
    #[arg(long, group = "op")]
    pub dual: Option<PathBuf>,
    /// Extremal rays (and lineality, if any).
    #[arg(long, group = "op")]
    pub rays: Option<PathBuf>,
    #[arg(long, group = "op", requires = "point")]
    pub member: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    #[arg(long, group = "op", num_args = 2, value_names = ["A", "B"])]
    pub equal: Option<Vec<PathBuf>>,
    #[arg(long, group = "op", num_args = 2, value_names = ["A", "B"])]
    pub sum: Option<Vec<PathBuf>>,
    #[arg(long, group = "op")]
    pub simplicial: Option<PathBuf>,
    /// Facet inequalities.
    #[arg(long, group = "op")]
    pub hrep: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PushArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub t: usize,
    #[arg(long, default_value = "1")]
    pub delta_deg: String,
    /// Tuple "d_n,...,d_0".
    #[arg(long, allow_hyphen_values = true)]
    pub eta: String,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// 1: X_{n,1} x Y_{n,d}; 2: X_{2,2} x Y_{2,d}.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub formulary: u8,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Degree of the second factor.
    #[arg(long)]
    pub d: u64,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("what").required(true).multiple(false)))]
pub struct VerifyArgs {
    /// "n,d,i".
    #[arg(long, group = "what")]
    pub case: Option<String>,
    /// Bundled suite name; only "paper" ships.
    #[arg(long, group = "what")]
    pub suite: Option<String>,
    #[arg(long, group = "what")]
    pub suite_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("what").required(true).multiple(false)))]
pub struct StableArgs {
    #[arg(long, group = "what")]
    pub i: Option<usize>,
    /// Monotonicity of the slopes up to this bound.
    #[arg(long, group = "what")]
    pub check_650: Option<usize>,
    /// The two-generator lower bound at this dimension.
    #[arg(long, group = "what")]
    pub containment: Option<usize>,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        message: msg.to_string(),
    }
}

/// Output text, plus a message when a verification check failed.
type CmdResult = Result<(String, Option<String>), Failure>;

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let fmt = cli.format;
    let result = match &cli.command {
        Command::Ring(a) => ring_cmd(a, fmt),
        Command::Cone(a) => cone_cmd(a, fmt),
        Command::Push(a) => push_cmd(a, fmt),
        Command::Table(a) => table_cmd(a, fmt),
        Command::Verify(a) => verify_cmd(a, fmt),
        Command::Stable(a) => stable_cmd(a, fmt),
    };
    match result {
        Ok((mut stdout, failed)) => {
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            let (code, stderr) = match failed {
                None => (0, String::new()),
                Some(m) => (1, format!("verification failed: {m}\n")),
            };
            Output {
                code,
                stdout,
                stderr,
            }
        }
        Err(f) => Output {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn parse_tuple(s: &str) -> Result<Vec<Rational>, Failure> {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|x| parse_rational(x).map_err(usage))
        .collect()
}

fn fmt_tuple(v: &[Rational]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|q| {
            if q.is_integer() {
                q.numer().to_string()
            } else {
                format_rational(q)
            }
        })
        .collect();
    format!("({})", parts.join(","))
}

fn rational_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn poly(pres: RingPresentation, s: &str) -> Result<NumClass, Failure> {
    let p = Polynomial::parse(s).map_err(usage)?;
    ring::reduce(&p, pres).map_err(usage)
}

fn class_output(c: &NumClass, fmt: Format) -> String {
    match fmt {
        Format::Json => to_json(c),
        Format::Pretty => format!("{c}  (codim {})", c.codim()),
        Format::Csv => {
            let mut s = String::from("a,b,coeff\n");
            for (a, q) in c.coeffs() {
                let _ = writeln!(s, "{a},{},{}", c.codim() - a, format_rational(q));
            }
            s
        }
    }
}

fn cov_output(c: &CovClass, fmt: Format) -> String {
    match fmt {
        Format::Json => to_json(c),
        Format::Pretty => format!("{}  (dimension {})", fmt_tuple(c.coords()), c.dim()),
        Format::Csv => {
            let n = c.presentation().n;
            let head: Vec<String> = (0..=n).rev().map(|j| format!("d_{j}")).collect();
            format!(
                "{}\n{}",
                head.join(","),
                rational_strings(c.coords()).join(",")
            )
        }
    }
}

fn scalar_output(key: &str, q: &Rational, fmt: Format) -> String {
    match fmt {
        Format::Json => to_json(&json!({ key: format_rational(q) })),
        Format::Pretty => format!("{key} = {}", format_rational(q)),
        Format::Csv => format!("{key}\n{}", format_rational(q)),
    }
}

fn bool_output(key: &str, b: bool, fmt: Format) -> String {
    match fmt {
        Format::Json => to_json(&json!({ key: b })),
        Format::Pretty => format!("{key}: {b}"),
        Format::Csv => format!("{key}\n{b}"),
    }
}

fn ray_lines(rays: &[cone::Ray], sep: &str) -> String {
    rays.iter()
        .map(|r| {
            let parts: Vec<String> = r.iter().map(ToString::to_string).collect();
            format!("({})", parts.join(","))
        })
        .collect::<Vec<_>>()
        .join(sep)
}

fn ring_cmd(a: &RingArgs, fmt: Format) -> CmdResult {
    let pres = RingPresentation::new(a.n, a.d).map_err(usage)?;
    let need_i = || a.i.ok_or_else(|| usage("--i is required"));
    if let Some(s) = &a.reduce {
        return Ok((class_output(&poly(pres, s)?, fmt), None));
    }
    if let Some(v) = &a.mul {
        let prod = ring::multiply(&poly(pres, &v[0])?, &poly(pres, &v[1])?).map_err(usage)?;
        return Ok((class_output(&prod, fmt), None));
    }
    if let Some(s) = &a.degree {
        let q = ring::degree(&poly(pres, s)?).map_err(usage)?;
        return Ok((scalar_output("degree", &q, fmt), None));
    }
    if let Some(s) = &a.covariant {
        let c = ring::to_covariant(&poly(pres, s)?).map_err(usage)?;
        return Ok((cov_output(&c, fmt), None));
    }
    if let Some(s) = &a.from_covariant {
        let c = CovClass::new(pres, need_i()?, parse_tuple(s)?).map_err(usage)?;
        let cls = ring::from_covariant(&c).map_err(usage)?;
        return Ok((class_output(&cls, fmt), None));
    }
    if let Some(s) = &a.pair {
        let cyc = a
            .cycle
            .as_ref()
            .ok_or_else(|| usage("--cycle is required"))?;
        let c = CovClass::new(pres, need_i()?, parse_tuple(cyc)?).map_err(usage)?;
        let q = ring::pair(&poly(pres, s)?, &c).map_err(usage)?;
        return Ok((scalar_output("pairing", &q, fmt), None));
    }
    Err(usage("no ring operation given"))
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(usage)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn read_cone(path: &PathBuf) -> Result<ConeV, Failure> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn cone_output(c: &ConeV, fmt: Format) -> String {
    match fmt {
        Format::Json => to_json(c),
        Format::Pretty => c.to_string(),
        Format::Csv => {
            let mut s = String::new();
            for r in c.rays() {
                let parts: Vec<String> = r.iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "{}", parts.join(","));
            }
            s
        }
    }
}

fn cone_cmd(a: &ConeArgs, fmt: Format) -> CmdResult {
    if let Some(p) = &a.dual {
        return Ok((cone_output(&cone::dual_cone(&read_cone(p)?), fmt), None));
    }
    if let Some(p) = &a.hrep {
        let h = cone::h_representation(&read_cone(p)?);
        let out = match fmt {
            Format::Json => to_json(&h),
            Format::Pretty => ray_lines(h.inequalities(), " "),
            Format::Csv => ray_lines(h.inequalities(), "\n"),
        };
        return Ok((out, None));
    }
    if let Some(p) = &a.rays {
        let c = read_cone(p)?;
        let out = match cone::extremal_rays(&c) {
            Extremal::Pointed(r) => match fmt {
                Format::Json => to_json(&json!({ "pointed": true, "cone": r })),
                _ => cone_output(&r, fmt),
            },
            Extremal::NonPointed { rays, lineality } => match fmt {
                Format::Json => {
                    let lin_json: Vec<Vec<Value>> = lineality
                        .iter()
                        .map(|r| {
                            r.iter()
                                .map(|x| serde_json::from_str(&x.to_string()).expect("integer"))
                                .collect()
                        })
                        .collect();
                    to_json(&json!({ "pointed": false, "cone": rays, "lineality": lin_json }))
                }
                _ => format!(
                    "{}\nlineality: {}",
                    cone_output(&rays, fmt),
                    ray_lines(&lineality, " ")
                ),
            },
        };
        return Ok((out, None));
    }
    if let Some(p) = &a.member {
        let c = read_cone(p)?;
        let x = parse_tuple(a.point.as_deref().unwrap_or_default())?;
        let b = cone::member(&c, &x).map_err(usage)?;
        return Ok((bool_output("member", b, fmt), None));
    }
    if let Some(v) = &a.equal {
        let b = cone::cone_equal(&read_cone(&v[0])?, &read_cone(&v[1])?).map_err(usage)?;
        return Ok((bool_output("equal", b, fmt), None));
    }
    if let Some(v) = &a.sum {
        let s = cone::minkowski_sum(&read_cone(&v[0])?, &read_cone(&v[1])?).map_err(usage)?;
        return Ok((cone_output(&s, fmt), None));
    }
    if let Some(p) = &a.simplicial {
        let b = cone::is_simplicial(&read_cone(p)?).map_err(usage)?;
        return Ok((bool_output("simplicial", b, fmt), None));
    }
    Err(usage("no cone operation given"))
}

fn push_cmd(a: &PushArgs, fmt: Format) -> CmdResult {
    let q = parse_rational(&a.delta_deg).map_err(usage)?;
    let spec = PushSpec::new(a.n, a.s, a.t, q).map_err(usage)?;
    let eta = parse_tuple(&a.eta)?;
    if eta.len() != a.n + 1 {
        return Err(usage(format!("--eta needs {} coordinates", a.n + 1)));
    }
    let out = push_tuple(&eta, &spec);
    let text = match fmt {
        Format::Json => to_json(&json!({
            "n": a.n, "i": a.s + a.t, "coords": rational_strings(&out)
        })),
        Format::Pretty => format!("{}  (dimension {})", fmt_tuple(&out), a.s + a.t),
        Format::Csv => rational_strings(&out).join(","),
    };
    Ok((text, None))
}

#[derive(Serialize)]
struct TableRow {
    i: usize,
    computed: ConeV,
    reference: Vec<ConeV>,
    matches: bool,
    /// Listed reference generators that are not extremal in the computed cone.
    non_extremal_listed: Vec<String>,
}

fn non_extremal(fixture: &ConeV, computed: &ConeV) -> Vec<String> {
    fixture
        .rays()
        .iter()
        .filter(|r| !computed.rays().contains(r))
        .map(|r| {
            let parts: Vec<String> = r.iter().map(ToString::to_string).collect();
            format!("({})", parts.join(","))
        })
        .collect()
}

/// `(i, computed cone, reference cones, all equal, listed non-extremal generators)`.
pub type FormularyRow = (usize, ConeV, Vec<ConeV>, bool, Vec<String>);

pub fn formulary_rows(formulary: u8, n: usize, d2: u64) -> Result<Vec<FormularyRow>, String> {
    let d1 = if formulary == 1 { 1 } else { 2 };
    if formulary == 2 && n != 2 {
        return Err("formulary 2 is defined for n = 2".into());
    }
    let base = ProductSource::new(n, d1, d2).map_err(|e| e.to_string())?;
    let top = base.source_dim + base.m;
    let mut rows = Vec::new();
    for i in 0..=top {
        let src = base
            .clone()
            .with_cones(i, |j| {
                if d1 == 1 {
                    hyperplane_cone(n, j)
                } else {
                    fixtures::conic_cone(j)
                        .ok_or(crate::push::PushError::MissingSourceDimension { j })
                }
            })
            .map_err(|e| e.to_string())?;
        let pushed = product_cone_pushforward(&src, i).map_err(|e| e.to_string())?;
        let computed = match cone::extremal_rays(&pushed) {
            Extremal::Pointed(c) => c,
            Extremal::NonPointed { rays, .. } => rays,
        };
        let reference: Vec<ConeV> = if d1 == 1 {
            fixtures::hyperplane_product(n, d2, i)
        } else {
            fixtures::conic_product(d2, i).into_iter().collect()
        };
        let mut matches = true;
        let mut listed = Vec::new();
        for f in &reference {
            matches &= cone::cone_equal(f, &computed).map_err(|e| e.to_string())?;
            listed.extend(non_extremal(f, &computed));
        }
        rows.push((i, computed, reference, matches, listed));
    }
    Ok(rows)
}

fn table_cmd(a: &TableArgs, fmt: Format) -> CmdResult {
    let rows = formulary_rows(a.formulary, a.n, a.d).map_err(usage)?;
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.3)
        .map(|r| format!("i={}", r.0))
        .collect();
    let rows: Vec<TableRow> = rows
        .into_iter()
        .map(
            |(i, computed, reference, matches, non_extremal_listed)| TableRow {
                i,
                computed,
                reference,
                matches,
                non_extremal_listed,
            },
        )
        .collect();
    let text = match fmt {
        Format::Json => to_json(&json!({
            "formulary": a.formulary, "n": a.n, "d": a.d, "rows": rows
        })),
        Format::Csv => {
            let mut s = String::from("i,computed,reference,matches,non_extremal_listed\n");
            for r in &rows {
                let refs: Vec<String> = r.reference.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    r.i,
                    csv_field(&r.computed.to_string()),
                    csv_field(&refs.join(" = ")),
                    r.matches,
                    csv_field(&r.non_extremal_listed.join(" "))
                );
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for r in &rows {
                let mark = if r.reference.is_empty() {
                    "no closed form"
                } else if r.matches {
                    "ok"
                } else {
                    "MISMATCH"
                };
                let _ = write!(s, "i={:<3} {}  [{mark}]", r.i, r.computed);
                if !r.non_extremal_listed.is_empty() {
                    let _ = write!(
                        s,
                        "  listed but not extremal: {}",
                        r.non_extremal_listed.join(" ")
                    );
                }
                s.push('\n');
            }
            s
        }
    };
    let failed = (!bad.is_empty()).then(|| format!("table mismatch at {}", bad.join(", ")));
    Ok((text, failed))
}

fn parse_case(s: &str) -> Result<(usize, u64, usize), Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [n, d, i] = parts.as_slice() else {
        return Err(usage(format!("--case expects n,d,i, got {s:?}")));
    };
    let bad = |_| usage(format!("--case expects integers, got {s:?}"));
    Ok((
        n.parse().map_err(bad)?,
        d.parse().map_err(bad)?,
        i.parse().map_err(bad)?,
    ))
}

fn report_pretty(r: &BoundPair) -> String {
    let mut s = format!(
        "case {}: {}\n  lower {}\n  upper {}\n",
        r.case, r.status, r.lower, r.upper
    );
    if let Some(b) = r.simplicial {
        let _ = writeln!(s, "  simplicial lower cone: {b}");
    }
    for a in &r.assumptions {
        let _ = writeln!(s, "  assumes: {a}");
    }
    s
}

fn report_csv_row(r: &BoundPair) -> String {
    format!(
        "{},{},{},{},{},{}",
        r.case.n,
        r.case.d,
        r.case.i,
        r.status,
        csv_field(&r.lower.to_string()),
        csv_field(&r.upper.to_string())
    )
}

const CSV_HEADER: &str = "n,d,i,status,lower,upper";

fn verify_cmd(a: &VerifyArgs, fmt: Format) -> CmdResult {
    if let Some(c) = &a.case {
        let (n, d, i) = parse_case(c)?;
        let engine = BoundEngine::new();
        let r = engine.verify(n, d, i).map_err(|e| match e {
            crate::theorems::TheoremError::Containment { .. }
            | crate::theorems::TheoremError::Internal { .. } => Failure {
                code: 1,
                message: format!("case {n},{d},{i}: {e}"),
            },
            other => usage(other),
        })?;
        let text = match fmt {
            Format::Json => to_json(&r),
            Format::Pretty => report_pretty(&r),
            Format::Csv => format!("{CSV_HEADER}\n{}", report_csv_row(&r)),
        };
        return Ok((text, None));
    }
    let suite: Suite = if let Some(name) = &a.suite {
        if name != "paper" {
            return Err(usage(format!("unknown suite {name:?}; available: paper")));
        }
        reference_suite()
    } else if let Some(p) = &a.suite_file {
        parse_suite(&read_input(p)?).map_err(usage)?
    } else {
        return Err(usage("nothing to verify"));
    };
    let outcomes = run_suite(&suite);
    let ok = outcomes.iter().all(|o| o.passed);
    let failed: Vec<&str> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.name.as_str())
        .collect();
    let text = match fmt {
        Format::Json => to_json(&json!({
            "passed": ok,
            "failed": failed,
            "cases": outcomes,
        })),
        Format::Csv => {
            let mut s = format!("name,passed,{CSV_HEADER}\n");
            for o in &outcomes {
                let row = o.report.as_ref().map(report_csv_row).unwrap_or_default();
                let _ = writeln!(s, "{},{},{row}", o.name, o.passed);
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for o in &outcomes {
                let status = o
                    .report
                    .as_ref()
                    .map(|r| r.status.to_string())
                    .unwrap_or_else(|| "ERROR".into());
                let _ = writeln!(
                    s,
                    "{} {:<16} {status}{}",
                    if o.passed { "PASS" } else { "FAIL" },
                    o.name,
                    if o.failures.is_empty() {
                        String::new()
                    } else {
                        format!("  ({})", o.failures.join("; "))
                    }
                );
            }
            let _ = write!(
                s,
                "{} of {} cases passed",
                outcomes.len() - failed.len(),
                outcomes.len()
            );
            s
        }
    };
    Ok((
        text,
        (!ok).then(|| format!("failed cases: {}", failed.join(", "))),
    ))
}

fn stable_row(b: &StableBounds) -> String {
    format!(
        "{},{},{},{},{},{}",
        b.i,
        b.m,
        b.big_m,
        b.d0,
        format_rational(&b.delta_min),
        format_rational(&b.delta_max)
    )
}

fn stable_cmd(a: &StableArgs, fmt: Format) -> CmdResult {
    if let Some(i) = a.i {
        let b = stable_delta_bounds(i).map_err(usage)?;
        let text = match fmt {
            Format::Json => to_json(&b),
            Format::Csv => format!("i,m,M,d0,delta_min,delta_max\n{}", stable_row(&b)),
            Format::Pretty => format!(
                "i={} m={} M={} d0={} delta_min={} delta_max={}",
                b.i,
                b.m,
                b.big_m,
                b.d0,
                format_rational(&b.delta_min),
                format_rational(&b.delta_max)
            ),
        };
        return Ok((text, None));
    }
    if let Some(i_max) = a.check_650 {
        if i_max < 8 {
            return Err(usage("--check-650 needs a bound of at least 8"));
        }
        let r = check_650(i_max).map_err(usage)?;
        let text = match fmt {
            Format::Json => to_json(&r),
            Format::Csv => format!(
                "i_max,ok,counterexample\n{},{},{}",
                r.i_max,
                r.ok,
                r.counterexample
                    .as_ref()
                    .map(|(i, w)| format!("{i}: {w}"))
                    .unwrap_or_default()
            ),
            Format::Pretty => match &r.counterexample {
                None => format!("slopes monotone and ordered for 2 <= i <= {}", r.i_max),
                Some((i, w)) => format!("fails at i={i}: {w}"),
            },
        };
        let failed = r
            .counterexample
            .as_ref()
            .map(|(i, w)| format!("i={i}: {w}"));
        return Ok((text, failed));
    }
    if let Some(i) = a.containment {
        let c = stable_containment(i).map_err(usage)?;
        let ok = c.proportional && c.contains_delta_max;
        let text = match fmt {
            Format::Json => to_json(&json!({
                "bounds": c.bounds,
                "z": rational_strings(&c.z),
                "z_prime": rational_strings(&c.z_prime),
                "proportional": c.proportional,
                "contains_delta_max": c.contains_delta_max,
            })),
            Format::Csv => format!(
                "i,z,z_prime,proportional,contains_delta_max\n{},{},{},{},{}",
                i,
                csv_field(&fmt_tuple(&c.z)),
                csv_field(&fmt_tuple(&c.z_prime)),
                c.proportional,
                c.contains_delta_max
            ),
            Format::Pretty => format!(
                "i={i}: Z={} Z'={} proportional={} contains (1,delta_max,0)={}",
                fmt_tuple(&c.z),
                fmt_tuple(&c.z_prime),
                c.proportional,
                c.contains_delta_max
            ),
        };
        return Ok((text, (!ok).then(|| format!("containment fails at i={i}"))));
    }
    Err(usage("nothing to compute"))
}
