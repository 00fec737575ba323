use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ncinvert_core::invert::{
    abel_one_closed_form, abel_polynomials, solve_b_family, solve_f0, solve_g, solve_h, solve_k_result, SolverResult,
};
use ncinvert_core::ncsf::{commutative_image, specialize_binomial_int, specialize_exp, specialize_one};
use ncinvert_core::parking::char_q_with;
use ncinvert_core::pgraph::{build_gamma_with, check_gamma_isomorphism_with};
use ncinvert_core::trees::{gamma_triangle, motzkin_returns_triangle};
use ncinvert_core::verify::{selected, Outcome, Selection};
use ncinvert_core::{Basis, Caps, Coefficient, Composition, Error, NcsfElement, ParkingFamily};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Parser)]
#[command(name = "ncinvert", version, about = "Noncommutative Lagrange inversion toolkit")]
struct Cli {
    /// Override every enumeration and degree cap (also NCINVERT_CAP).
    #[arg(long, global = true)]
    cap: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// q-characteristic of a family of parking functions.
    Char(CharArgs),
    /// Solve an inversion equation up to a degree.
    Solve(SolveArgs),
    /// Noncommutative Abel polynomial P_n(x;A).
    Abel(AbelArgs),
    /// Tree-counting triangles as CSV.
    Triangle(TriangleArgs),
    /// The graph Γ_I as DOT, or its isomorphism certificate as JSON.
    Gamma(GammaArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
    /// Commutative specializations of a solution.
    Specialize(SpecializeArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct CharArgs {
    /// classic, r=R or k,l=K,L
    #[arg(long, default_value = "classic", value_parser = parse_family)]
    family: ParkingFamily,
    #[arg(long)]
    n: u32,
    /// Keep the q-grading (otherwise q = 1).
    #[arg(long)]
    q: bool,
    #[arg(long, default_value = "S", value_parser = parse_basis)]
    basis: Basis,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SolveArgs {
    /// g, h, f0, K or b=B
    #[arg(long, value_parser = parse_equation)]
    eq: EqChoice,
    #[arg(long)]
    degree: u32,
    #[arg(long, default_value = "S", value_parser = parse_basis)]
    basis: Basis,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct AbelArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, default_value = "S", value_parser = parse_basis)]
    basis: Basis,
    /// Print P_n(x;1) instead.
    #[arg(long)]
    at_one: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum TriangleKind {
    Gamma,
    Motzkin,
}

#[derive(Args)]
struct TriangleArgs {
    #[arg(long, value_enum, default_value = "gamma")]
    kind: TriangleKind,
    /// Tree family parameter for the gamma triangle.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    b: i32,
    #[arg(long, default_value_t = 7)]
    rows: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum GammaFormat {
    Dot,
    Certificate,
}

#[derive(Args)]
struct GammaArgs {
    /// Parts separated by commas, e.g. 3,3,1
    #[arg(long, value_parser = parse_composition)]
    composition: Composition,
    #[arg(long, value_enum, default_value = "dot")]
    format: GammaFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// all, paper-tables, oracles or involutions
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: Selection,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    jobs: Option<usize>,
    /// Include per-check wall time in the report.
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy)]
enum Target {
    One,
    Exp,
    Binomial(i64),
    Commutative,
}

#[derive(Args)]
struct SpecializeArgs {
    #[arg(long, value_parser = parse_equation)]
    eq: EqChoice,
    #[arg(long)]
    degree: u32,
    /// one, exp, binomial=ALPHA or commutative
    #[arg(long, value_parser = parse_target)]
    to: Target,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy)]
enum EqChoice {
    G,
    H,
    F0,
    K,
    B(i32),
}

fn parse_family(s: &str) -> Result<ParkingFamily, String> {
    if s == "classic" {
        return Ok(ParkingFamily::Classic);
    }
    if let Some(r) = s.strip_prefix("r=") {
        let r = r.parse().map_err(|_| format!("bad shift in {s:?}"))?;
        return ParkingFamily::shifted(r).map_err(|e| e.to_string());
    }
    if let Some(kl) = s.strip_prefix("k,l=") {
        let (k, l) = kl
            .split_once(',')
            .ok_or_else(|| format!("expected k,l=K,L, got {s:?}"))?;
        let k = k.parse().map_err(|_| format!("bad k in {s:?}"))?;
        let l = l.parse().map_err(|_| format!("bad l in {s:?}"))?;
        return ParkingFamily::arithmetic(k, l).map_err(|e| e.to_string());
    }
    Err(format!("unknown family {s:?}; use classic, r=R or k,l=K,L"))
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    Basis::from_str(s).map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<Selection, String> {
    Selection::from_str(s).map_err(|e| e.to_string())
}

fn parse_equation(s: &str) -> Result<EqChoice, String> {
    match s {
        "g" => Ok(EqChoice::G),
        "h" => Ok(EqChoice::H),
        "f0" => Ok(EqChoice::F0),
        "K" => Ok(EqChoice::K),
        _ => match s.strip_prefix("b=").map(str::parse) {
            Some(Ok(b)) => Ok(EqChoice::B(b)),
            _ => Err(format!("unknown equation {s:?}; use g, h, f0, K or b=B")),
        },
    }
}

fn parse_target(s: &str) -> Result<Target, String> {
    match s {
        "one" => Ok(Target::One),
        "exp" => Ok(Target::Exp),
        "commutative" => Ok(Target::Commutative),
        _ => match s.strip_prefix("binomial=").map(str::parse) {
            Some(Ok(a)) => Ok(Target::Binomial(a)),
            _ => Err(format!("unknown specialization {s:?}")),
        },
    }
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| format!("bad part {p:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    Composition::new(parts).map_err(|e| e.to_string())
}

/// Why a command did not succeed.
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

fn caps_from(flag: Option<u32>) -> Result<Caps, Failure> {
    let env = match std::env::var("NCINVERT_CAP") {
        Ok(v) => Some(
            v.trim()
                .parse::<u32>()
                .map_err(|_| Failure::Usage(format!("NCINVERT_CAP={v:?} is not a number")))?,
        ),
        Err(_) => None,
    };
    match flag.or(env) {
        Some(n) => {
            eprintln!("warning: caps overridden to {n}; large values can take very long");
            Ok(Caps::uniform(n))
        }
        None => Ok(Caps::default()),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn element_out(e: &NcsfElement, format: Format) -> String {
    match format {
        Format::Text => format!("{e}\n"),
        Format::Json => json(e),
    }
}

fn run_char(a: CharArgs, caps: &Caps) -> CmdResult {
    let mut e = char_q_with(a.family, a.n, caps)?;
    if !a.q {
        e = e.eval_q_one();
    }
    Ok(element_out(&e.to_basis(a.basis)?, a.format))
}

fn solve(eq: EqChoice, degree: u32, caps: &Caps) -> Result<SolverResult, Failure> {
    Caps::check("solver degree", degree, caps.degree)?;
    let order = degree as usize;
    Ok(match eq {
        EqChoice::G => solve_g(order),
        EqChoice::H => solve_h(order),
        EqChoice::F0 => solve_f0(order),
        EqChoice::K => solve_k_result(order),
        EqChoice::B(b) => solve_b_family(b, order)?,
    })
}

#[derive(Serialize)]
struct Report {
    equation: String,
    #[serde(rename = "N")]
    n: u32,
    basis: Basis,
    components: Vec<NcsfElement>,
    checksums: Vec<String>,
}

fn run_solve(a: SolveArgs, caps: &Caps) -> CmdResult {
    let res = solve(a.eq, a.degree, caps)?;
    let components = res
        .components
        .iter()
        .map(|c| c.to_basis(a.basis))
        .collect::<Result<Vec<_>, _>>()?;
    match a.format {
        Format::Text => Ok(components
            .iter()
            .enumerate()
            .map(|(n, c)| format!("{}[{n}] = {c}\n", res.equation))
            .collect()),
        Format::Json => {
            let checksums = components
                .iter()
                .map(|c| hex::encode(Sha256::digest(serde_json::to_vec(c).expect("serializable"))))
                .collect();
            Ok(json(&Report {
                equation: res.equation.to_string(),
                n: a.degree,
                basis: a.basis,
                components,
                checksums,
            }))
        }
    }
}

fn run_abel(a: AbelArgs, caps: &Caps) -> CmdResult {
    Caps::check("Abel polynomial degree", a.n, caps.degree)?;
    if a.at_one {
        let p = abel_one_closed_form(a.n);
        return Ok(match a.format {
            Format::Text => format!("{p}\n"),
            Format::Json => json(&p),
        });
    }
    let p = abel_polynomials(a.n as usize).pop().expect("nonempty");
    Ok(element_out(&p.to_basis(a.basis)?, a.format))
}

fn run_triangle(a: TriangleArgs) -> CmdResult {
    let rows: Vec<(u32, Vec<String>)> = match a.kind {
        TriangleKind::Gamma => gamma_triangle(a.b, a.rows)?
            .into_iter()
            .zip(1..)
            .map(|(r, n)| (n, r.iter().map(|v| v.to_string()).collect()))
            .collect(),
        TriangleKind::Motzkin => motzkin_returns_triangle(a.rows)?
            .into_iter()
            .zip(0..)
            .map(|(r, n)| (n, r.iter().map(|v| v.to_string()).collect()))
            .collect(),
    };
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for (n, row) in rows {
        let mut rec = vec![n.to_string()];
        rec.extend(row);
        w.write_record(&rec).map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("ascii digits"))
}

fn run_gamma(a: GammaArgs, caps: &Caps) -> Result<String, Failure> {
    match a.format {
        GammaFormat::Dot => Ok(build_gamma_with(&a.composition, caps)?.to_dot()),
        GammaFormat::Certificate => {
            let cert = check_gamma_isomorphism_with(&a.composition, caps)?;
            let out = json(&cert);
            if cert.passed {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Verification)
            }
        }
    }
}

#[derive(Serialize)]
struct CheckLine<'a> {
    #[serde(flatten)]
    outcome: &'a Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    millis: Option<u128>,
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    suite: &'a str,
    max_degree: Option<u32>,
    passed: bool,
    checks: Vec<CheckLine<'a>>,
}

fn run_verify(a: VerifyArgs, suite_name: &str) -> CmdResult {
    let checks = selected(a.suite);
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = a.jobs {
        if j == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        pool = pool.num_threads(j);
    }
    let pool = pool.build().map_err(|e| Failure::Usage(e.to_string()))?;
    let outcomes: Vec<Outcome> = pool.install(|| checks.par_iter().map(|c| c.run(a.max_degree)).collect());
    let passed = outcomes.iter().all(|o| o.passed);
    let report = VerifyReport {
        suite: suite_name,
        max_degree: a.max_degree,
        passed,
        checks: outcomes
            .iter()
            .map(|o| CheckLine {
                outcome: o,
                millis: a.timings.then_some(o.millis),
            })
            .collect(),
    };
    let out = json(&report);
    if passed {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct SpecializedComponent {
    degree: usize,
    value: serde_json::Value,
}

fn run_specialize(a: SpecializeArgs, caps: &Caps) -> CmdResult {
    let res = solve(a.eq, a.degree, caps)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (n, c) in res.components.iter().enumerate() {
        let (shown, value) = match a.to {
            Target::One => {
                let v = specialize_one(c);
                (v.to_string(), serde_json::to_value(&v))
            }
            Target::Exp => {
                let v = specialize_exp(c)?;
                (v.to_string(), serde_json::to_value(&v))
            }
            Target::Binomial(alpha) => {
                let v = specialize_binomial_int(c, alpha);
                (v.to_string(), serde_json::to_value(&v))
            }
            Target::Commutative => {
                let img = commutative_image(c)?;
                let shown = commutative_text(&img);
                let value: Vec<(Vec<u32>, Coefficient)> = img.into_iter().collect();
                (shown, serde_json::to_value(&value))
            }
        };
        text.push_str(&format!("{}[{n}] -> {shown}\n", res.equation));
        rows.push(SpecializedComponent {
            degree: n,
            value: value.expect("serializable"),
        });
    }
    Ok(match a.format {
        Format::Text => text,
        Format::Json => json(&rows),
    })
}

fn commutative_text(img: &std::collections::BTreeMap<Vec<u32>, Coefficient>) -> String {
    if img.is_empty() {
        return "0".into();
    }
    let mut keys: Vec<&Vec<u32>> = img.keys().collect();
    keys.sort_by(|a, b| b.cmp(a));
    keys.iter()
        .map(|k| {
            let h = if k.is_empty() {
                "1".to_string()
            } else {
                format!("h[{}]", k.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
            };
            let c = &img[*k];
            if c.is_one() {
                h
            } else if c.len() == 1 {
                format!("{c}·{h}")
            } else {
                format!("({c})·{h}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = match caps_from(cli.cap) {
        Ok(c) => c,
        Err(f) => return finish(Err(f)),
    };
    let result = match cli.command {
        Command::Char(a) => run_char(a, &caps),
        Command::Solve(a) => run_solve(a, &caps),
        Command::Abel(a) => run_abel(a, &caps),
        Command::Triangle(a) => run_triangle(a),
        Command::Gamma(a) => run_gamma(a, &caps),
        Command::Verify(a) => {
            let name = match a.suite {
                Selection::All => "all",
                Selection::One(s) => s.name(),
            };
            run_verify(a, name)
        }
        Command::Specialize(a) => run_specialize(a, &caps),
    };
    finish(result)
}

fn finish(result: CmdResult) -> ExitCode {
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
