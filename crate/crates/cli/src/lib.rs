//! Command-line front end shared by the `loop-schubert` and `schubert` binaries.
//!
//! Exit codes: 0 success, 1 a requested check failed, 2 bad input,
//! 3 a mathematical precondition failed (including the size cap).

pub mod golden;
pub mod record;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use loop_schubert::affine::min_coset_rep;
use loop_schubert::affschubert::{max_m_from_env, verify_theorem_a, SchubertCache};
use loop_schubert::alcove::{
    length_by_separation, max_antidominant_factor, word_to_transform, AffineTransform, CartanType, Matrix, RootSystem,
};
use loop_schubert::demazure::{double_schubert, fixed_point_class, single_schubert};
use loop_schubert::parse::{parse_affine_element, parse_coweight, parse_letters, parse_permutation};
use loop_schubert::{Error, QPoly};
use serde::Serialize;

pub use record::TableRecord;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Parser, Debug)]
#[command(version, about = "Schubert classes of flag varieties and loop groups")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Affine Schubert polynomial in h_1..h_{n-1}.
    Affine(AffineArgs),
    /// Double Schubert polynomial of a permutation.
    Double(PermArgs),
    /// Single Schubert polynomial of a permutation.
    Single(PermArgs),
    /// Equivariant class of a torus-fixed point of the flag variety.
    FixedPoint(PermArgs),
    /// Check the factorization identity for lambda and an antidominant mu.
    TheoremA(TheoremAArgs),
    /// Maximal antidominant translation factor of an affine Weyl group element.
    Factorize(FactorizeArgs),
    /// Table of affine Schubert polynomials up to a given length.
    Table(TableArgs),
    /// Replay the reference examples and print a pass/fail matrix.
    VerifyPaper,
}

#[derive(Args, Debug)]
struct AffineArgs {
    #[arg(long)]
    n: usize,
    /// Coweight, `w:..` or `a:..`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Reduced word or window of m^lambda.
    #[arg(long, alias = "w")]
    word: Option<String>,
    /// Include the intermediate polynomials S~(x,y) and S~(x).
    #[arg(long)]
    tilde: bool,
}

#[derive(Args, Debug)]
struct PermArgs {
    #[arg(long)]
    n: usize,
    /// Window `[2,3,1]`, `2 3 1`, or word `s1 s2`.
    #[arg(long, alias = "word")]
    w: String,
}

#[derive(Args, Debug)]
struct TheoremAArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
}

#[derive(Args, Debug)]
struct FactorizeArgs {
    /// Cartan type such as `C2`, or a Cartan matrix as JSON.
    #[arg(long = "type")]
    cartan: String,
    #[arg(long, alias = "w")]
    word: String,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    max_length: usize,
    #[arg(long)]
    tilde: bool,
}

/// Failure of a subcommand, mapped onto an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Precondition(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition(_)
            | Error::TooLarge { .. }
            | Error::NotReduced(_)
            | Error::MissingFinalS0(_)
            | Error::NotFiniteType
            | Error::ExponentTooLarge { .. } => Failure::Precondition(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Output of a subcommand and its exit code.
struct Report {
    text: String,
    code: i32,
}

impl Report {
    fn ok(text: String) -> Self {
        Self { text, code: EXIT_OK }
    }

    fn checked(text: String, pass: bool) -> Self {
        Self { text, code: if pass { EXIT_OK } else { EXIT_CHECK_FAILED } }
    }
}

fn render<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Result<String, Failure> {
    if json {
        Ok(serde_json::to_string_pretty(value)? + "\n")
    } else {
        Ok(text())
    }
}

#[derive(Serialize)]
struct PolyOutput {
    polynomial: loop_schubert::polyring::PolyJson,
    text: String,
}

fn poly_report(json: bool, p: &QPoly) -> Result<Report, Failure> {
    let out = PolyOutput { polynomial: p.to_json(), text: p.to_string() };
    Ok(Report::ok(render(json, &out, || format!("{p}\n"))?))
}

fn affine(args: &AffineArgs, json: bool) -> Result<Report, Failure> {
    let n = args.n;
    let lambda = match (&args.lambda, &args.word) {
        (Some(l), None) => parse_coweight(n, l)?,
        (l, Some(w)) => {
            let x = parse_affine_element(n, w)?;
            if !x.is_right_minimal() {
                return Err(Failure::Precondition(format!("{w} is not minimal in its coset")));
            }
            let from_word = x.translation_part();
            if let Some(l) = l {
                let given = parse_coweight(n, l)?;
                if given != from_word {
                    return Err(Failure::Precondition(format!("{w} is m^{from_word}, not m^{given}")));
                }
            }
            from_word
        }
        (None, None) => return Err(Failure::Usage("one of --lambda or --word is required".into())),
    };
    let record = TableRecord::compute(&lambda, args.tilde, max_m_from_env())?;
    let text = || {
        let mut s = format!(
            "lambda      {lambda}\nlambda_hat  a:{}\nm^lambda    {}\nlength      {}\nS^          {}\n",
            join(&record.lambda_hat),
            min_coset_rep(&lambda).reduced_word(),
            record.length,
            record.schubert().map(|p| p.to_string()).unwrap_or_default()
        );
        for (label, p) in [("S~(x,y)", &record.tilde_xy), ("S~(x)", &record.tilde_x)] {
            if let Some(p) = p {
                let p = QPoly::from_json(p).map(|p| p.to_string()).unwrap_or_default();
                s.push_str(&format!("{label:<11} {p}\n"));
            }
        }
        s
    };
    Ok(Report::ok(render(json, &record, text)?))
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct TheoremAOutput {
    lambda: Vec<i64>,
    mu: Vec<i64>,
    nu: Vec<i64>,
    preconditions_hold: bool,
    identity_holds: Option<bool>,
    lhs: Option<String>,
    rhs: Option<String>,
}

fn theorem_a(args: &TheoremAArgs, json: bool) -> Result<Report, Failure> {
    let lambda = parse_coweight(args.n, &args.lambda)?;
    let mu = parse_coweight(args.n, &args.mu)?;
    let cache = SchubertCache::<num_rational::BigRational>::from_env();
    let r = verify_theorem_a(&lambda, &mu, &cache)?;
    let (lhs, rhs) = if r.preconditions_hold {
        let l = &cache.get(&lambda)? * &cache.get(&mu)?;
        (Some(l.to_string()), Some(cache.get(&r.nu)?.to_string()))
    } else {
        (None, None)
    };
    let out = TheoremAOutput {
        lambda: lambda.coeffs().to_vec(),
        mu: mu.coeffs().to_vec(),
        nu: r.nu.coeffs().to_vec(),
        preconditions_hold: r.preconditions_hold,
        identity_holds: r.identity_holds,
        lhs,
        rhs,
    };
    let text = render(json, &out, || {
        let mut s = format!("lambda  {lambda}\nmu      {mu}\nnu      {}\n", r.nu);
        match (&out.lhs, &out.rhs, r.identity_holds) {
            (Some(l), Some(rh), Some(holds)) => {
                s.push_str(&format!(
                    "S^lambda S^mu  {l}\nS^nu           {rh}\nidentity       {}\n",
                    if holds { "holds" } else { "FAILS" }
                ));
            }
            _ => s.push_str("preconditions fail: need mu antidominant, m^lambda t^mu minimal, lengths adding\n"),
        }
        s
    })?;
    Ok(match r.identity_holds {
        None => Report { text, code: EXIT_PRECONDITION },
        Some(holds) => Report::checked(text, holds),
    })
}

fn root_system(spec: &str) -> Result<RootSystem, Failure> {
    let spec = spec.trim();
    if spec.starts_with('[') {
        let m: Matrix = serde_json::from_str(spec)?;
        return Ok(RootSystem::new(m)?);
    }
    let t: CartanType = spec.parse()?;
    Ok(RootSystem::of_type(t))
}

/// A reduced word by repeatedly removing a left descent.
fn reduced_word(x: &AffineTransform, rs: &RootSystem) -> Vec<usize> {
    let mut x = x.clone();
    let mut len = length_by_separation(&x, rs);
    let mut out = Vec::new();
    while len > 0 {
        for i in 0..=rs.rank() {
            let y = AffineTransform::simple(rs, i).expect("in range").compose(&x);
            let l = length_by_separation(&y, rs);
            if l < len {
                out.push(i);
                x = y;
                len = l;
                break;
            }
        }
    }
    out
}

#[derive(Serialize)]
struct FactorizeOutput {
    cartan: Matrix,
    word: Vec<usize>,
    length: usize,
    lambda: Vec<i64>,
    y_word: Vec<usize>,
    y_length: usize,
    y_linear: Matrix,
    y_translation: Vec<i64>,
}

fn factorize(args: &FactorizeArgs, json: bool) -> Result<Report, Failure> {
    let rs = root_system(&args.cartan)?;
    let letters = parse_letters(&args.word, rs.rank())?;
    let x = word_to_transform(&letters, &rs)?;
    let f = max_antidominant_factor(&x, &rs)?;
    let y_word = reduced_word(&f.y, &rs);
    let out = FactorizeOutput {
        cartan: rs.cartan().clone(),
        word: letters,
        length: length_by_separation(&x, &rs),
        y_length: y_word.len(),
        lambda: f.lambda.clone(),
        y_word,
        y_linear: f.y.linear().clone(),
        y_translation: f.y.translate().to_vec(),
    };
    let text = render(json, &out, || {
        let word = |w: &[usize]| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
            }
        };
        format!(
            "x       {}  (length {})\nlambda  w:{}\ny       {}  (length {})\n",
            word(&out.word),
            out.length,
            join(&out.lambda),
            word(&out.y_word),
            out.y_length
        )
    })?;
    Ok(Report::ok(text))
}

fn table(args: &TableArgs, json: bool, to_file: bool) -> Result<Report, Failure> {
    let rows = record::table(args.n, args.max_length, args.tilde, max_m_from_env())?;
    if json || to_file {
        return Ok(Report::ok(serde_json::to_string_pretty(&rows)? + "\n"));
    }
    let mut s = String::new();
    for r in &rows {
        let p = r.schubert().map(|p| p.to_string()).unwrap_or_default();
        let w = loop_schubert::affine::AffineWord { sigma_power: r.sigma_power, letters: r.m_word.clone() };
        s.push_str(&format!("{:>3}  w:{:<12} {:<28} {p}\n", r.length, join(&r.lambda), w.to_string()));
    }
    Ok(Report::ok(s))
}

#[derive(Serialize)]
struct VerifyRow {
    group: &'static str,
    name: String,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn verify_paper(json: bool) -> Result<Report, Failure> {
    let rows: Vec<VerifyRow> = golden::suite()
        .into_iter()
        .map(|c| {
            let (pass, error) = match (c.run)() {
                Ok(p) => (p, None),
                Err(e) => (false, Some(e.to_string())),
            };
            VerifyRow { group: c.group, name: c.name, pass, error }
        })
        .collect();
    let ok = rows.iter().all(|r| r.pass);
    let text = render(json, &rows, || {
        let mut s = String::new();
        let mut group = "";
        for r in &rows {
            if r.group != group {
                group = r.group;
                s.push_str(&format!("{group}\n"));
            }
            let status = if r.pass { "pass" } else { "FAIL" };
            s.push_str(&format!("  {status}  {}", r.name));
            if let Some(e) = &r.error {
                s.push_str(&format!("  ({e})"));
            }
            s.push('\n');
        }
        let passed = rows.iter().filter(|r| r.pass).count();
        s.push_str(&format!("{passed}/{} checks pass\n", rows.len()));
        s
    })?;
    Ok(Report::checked(text, ok))
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Affine(a) => affine(a, json),
        Command::Double(p) => poly_report(json, &double_schubert(&parse_permutation(p.n, &p.w)?)),
        Command::Single(p) => poly_report(json, &single_schubert(&parse_permutation(p.n, &p.w)?)),
        Command::FixedPoint(p) => poly_report(json, &fixed_point_class(&parse_permutation(p.n, &p.w)?)),
        Command::TheoremA(a) => theorem_a(a, json),
        Command::Factorize(a) => factorize(a, json),
        Command::Table(a) => table(a, json, cli.out.is_some()),
        Command::VerifyPaper => verify_paper(json),
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(stderr, "{}", e.render()) } else { write!(stdout, "{}", e.render()) };
            return code;
        }
    };
    let result = dispatch(&cli).and_then(|report| {
        match &cli.out {
            Some(path) => fs::write(path, &report.text)?,
            None => stdout.write_all(report.text.as_bytes())?,
        }
        Ok(report.code)
    });
    match result {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Precondition(m)) => {
            let _ = writeln!(stderr, "{m}");
            EXIT_PRECONDITION
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Entry point for the binaries.
pub fn main_with_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
