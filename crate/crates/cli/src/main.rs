//! Batch front end: evaluate the library's functions at single points, sweep
//! rectangular grids into CSV, manage zeros files, and run the
//! counting-perturbation verifier.
//!
//! Exit codes: 0 success, 2 domain/format error, 3 near-singular evaluation
//! point, 4 quadrature/search failure (including a missed --precision-target).

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use zetalab_core::arith::{read_spectrum, CountingSnapshot};
use zetalab_core::primezeta::{self, ContinuationConfig, Verdict};
use zetalab_core::regdet::{self, CountingForm, CountingModel, SpectrumSpec};
use zetalab_core::specfun;
use zetalab_core::superzeta::{self, ZerosTable};
use zetalab_core::{Complex, Error, EvalResult, Result};

/// Zeros table used when --zeros-file is not given.
const DEFAULT_TABLE: usize = 100;

#[derive(Parser)]
#[command(name = "zetalab", version, about = "prime zeta / zeros zeta / regularized determinant toolbox")]
struct Cli {
    /// Zeros table file to use instead of the computed cache
    #[arg(long, global = true, value_name = "PATH")]
    zeros_file: Option<PathBuf>,

    /// Largest prime sieve a run is allowed to trigger
    #[arg(long, global = true, value_name = "N", default_value_t = 100_000_000)]
    sieve_limit: u64,

    /// Fail (exit 4) when the error estimate of a point evaluation exceeds this
    #[arg(long, global = true, value_name = "EPS")]
    precision_target: Option<f64>,

    /// Write the result here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one function at one point
    Eval(EvalArgs),
    /// Sweep a rectangular grid, one CSV row per node
    Scan(ScanArgs),
    /// Zeros files: compute, import/normalize, verify
    Zeros {
        #[command(subcommand)]
        sub: ZerosCmd,
    },
    /// Regularized determinant of a spectrum (same as: eval regdet)
    Detlog(SpectrumArgs),
    /// Counting-model spectral zeta (same as: eval approx)
    Approx(ApproxArgs),
    /// Compare a perturbed counting table against the primes and emit the JSON report
    Theorem(TheoremArgs),
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum Target {
    /// Riemann zeta
    Zeta,
    /// Prime zeta (continued)
    Primezeta,
    /// Zeta over the nontrivial-zero ordinates (continued)
    Superzeta,
    /// eval: the determinant itself; scan: the spectral zeta at each node
    Regdet,
    /// Closed-form counting approximation of a spectral zeta
    Approx,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(value_enum)]
    target: Target,

    /// Evaluation point, written a+bi / a-bi / a (no whitespace)
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,

    #[command(flatten)]
    spectrum: SpectrumArgs,

    #[command(flatten)]
    approx: ApproxOpts,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(value_enum)]
    target: Target,

    #[arg(long, allow_negative_numbers = true)]
    re_lo: f64,
    #[arg(long, allow_negative_numbers = true)]
    re_hi: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    im_lo: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    im_hi: f64,
    #[arg(long, default_value_t = 1)]
    n_re: usize,
    #[arg(long, default_value_t = 1)]
    n_im: usize,

    #[command(flatten)]
    spectrum: SpectrumArgs,

    #[command(flatten)]
    approx: ApproxOpts,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Named eigenvalue generator
    #[arg(long, value_enum)]
    spectrum_generator: Option<Generator>,

    /// Explicit eigenvalue list, one ascending positive value per line
    #[arg(long, value_name = "PATH")]
    spectrum_file: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum Generator {
    Primes,
    Integers,
    Zeros,
}

#[derive(Args)]
struct ApproxOpts {
    /// Spectrum family the counting model describes
    #[arg(long, value_enum)]
    family: Option<Family>,

    /// Cut index separating the explicit head sum from the modeled tail
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum Family {
    Zeros,
    Primes,
}

#[derive(Args)]
struct ApproxArgs {
    /// Evaluation point, written a+bi / a-bi / a (no whitespace)
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,

    #[command(flatten)]
    opts: ApproxOpts,
}

#[derive(Subcommand)]
enum ZerosCmd {
    /// Compute the first N ordinates (through the cache) and write a zeros file
    Compute { n: usize },
    /// Read a zeros file, report count and horizon; with --out, rewrite it normalized
    Import { file: PathBuf },
    /// Recompute |zeta(1/2 + i g)| for every entry of --zeros-file, report the max
    Verify,
}

#[derive(Args)]
struct TheoremArgs {
    /// Reference counting generator
    #[arg(long, value_enum, default_value_t = BaseGen::Primes)]
    base: BaseGen,

    /// Perturbed jump points, one ascending positive value per line
    #[arg(long, value_name = "PATH")]
    perturbed: PathBuf,

    /// Closeness exponent: the hypothesis |Q(x) - pi(x)| <= C x^k
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    k: f64,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum BaseGen {
    Primes,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.cmd {
        Cmd::Eval(a) => cmd_eval(cli, a),
        Cmd::Scan(a) => cmd_scan(cli, a),
        Cmd::Zeros { sub } => cmd_zeros(cli, sub),
        Cmd::Detlog(sp) => finish_eval(cli, regdet::reg_det(&spectrum_spec(sp)?)?),
        Cmd::Approx(a) => {
            let (model, spec) = approx_model(&a.opts)?;
            let r = regdet::approx_zeta_via_counting(&model, &spec, parse_s(&a.s)?)?;
            finish_eval(cli, r)
        }
        Cmd::Theorem(a) => cmd_theorem(cli, a),
    }
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::NearSingular { .. } | Error::Singular(_) => 3,
        Error::Quadrature(_) | Error::MissedZero(_) => 4,
        _ => 2,
    }
}

fn cmd_eval(cli: &Cli, a: &EvalArgs) -> Result<()> {
    let r = match a.target {
        Target::Zeta => specfun::riemann_zeta(parse_s(&a.s)?)?,
        Target::Primezeta => {
            primezeta::prime_zeta_continued(parse_s(&a.s)?, &ContinuationConfig::default())?
        }
        Target::Superzeta => {
            let table = load_table(cli)?;
            superzeta::superzeta_continued(parse_s(&a.s)?, &table)?
        }
        Target::Regdet => regdet::reg_det(&spectrum_spec(&a.spectrum)?)?,
        Target::Approx => {
            let (model, spec) = approx_model(&a.approx)?;
            regdet::approx_zeta_via_counting(&model, &spec, parse_s(&a.s)?)?
        }
    };
    finish_eval(cli, r)
}

/// A scan evaluates one of these at every grid node; the shared context is
/// resolved once, before the parallel sweep.
enum PointFn<'a> {
    Zeta,
    PrimeZeta,
    SuperZeta(&'a ZerosTable),
    SpectralZeta(&'a SpectrumSpec),
    Approx(&'a CountingModel, &'a SpectrumSpec),
}

fn eval_point(f: &PointFn, s: Complex) -> Result<EvalResult> {
    match f {
        PointFn::Zeta => specfun::riemann_zeta(s),
        PointFn::PrimeZeta => primezeta::prime_zeta_continued(s, &ContinuationConfig::default()),
        PointFn::SuperZeta(t) => superzeta::superzeta_continued(s, t),
        PointFn::SpectralZeta(sp) => regdet::spectral_zeta(sp, s),
        PointFn::Approx(m, sp) => regdet::approx_zeta_via_counting(m, sp, s),
    }
}

fn cmd_scan(cli: &Cli, a: &ScanArgs) -> Result<()> {
    if a.re_lo > a.re_hi || a.im_lo > a.im_hi {
        return Err(Error::Domain("grid bounds need lo <= hi on both axes".into()));
    }
    if a.n_re < 1 || a.n_im < 1 {
        return Err(Error::Domain("grid needs at least one node per axis".into()));
    }
    let table;
    let spec;
    let approx_ctx;
    let f = match a.target {
        Target::Zeta => PointFn::Zeta,
        Target::Primezeta => PointFn::PrimeZeta,
        Target::Superzeta => {
            table = load_table(cli)?;
            PointFn::SuperZeta(&table)
        }
        Target::Regdet => {
            spec = spectrum_spec(&a.spectrum)?;
            PointFn::SpectralZeta(&spec)
        }
        Target::Approx => {
            approx_ctx = approx_model(&a.approx)?;
            PointFn::Approx(&approx_ctx.0, &approx_ctx.1)
        }
    };
    let res = linspace(a.re_lo, a.re_hi, a.n_re);
    let ims = linspace(a.im_lo, a.im_hi, a.n_im);
    let points: Vec<Complex> = ims
        .iter()
        .flat_map(|&y| res.iter().map(move |&x| Complex::new(x, y)))
        .collect();
    // node evaluations in parallel; assembly and writing stay ordered
    let rows: Vec<String> = points.par_iter().map(|&s| csv_row(s, eval_point(&f, s))).collect();
    let mut out = String::from("re_s,im_s,re_val,im_val,abs_err,error\n");
    for row in &rows {
        out.push_str(row);
    }
    write_out(cli, &out)
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(|i| lo + step * i as f64).collect()
}

fn csv_row(s: Complex, r: Result<EvalResult>) -> String {
    match r {
        Ok(v) => format!(
            "{:.11e},{:.11e},{:.11e},{:.11e},{:.11e},\n",
            s.re, s.im, v.value.re, v.value.im, v.abs_err
        ),
        Err(e) => format!("{:.11e},{:.11e},,,,{}\n", s.re, s.im, error_tag(&e)),
    }
}

fn error_tag(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "domain",
        Error::Pole(_) => "pole",
        Error::Singular(_) => "singular",
        Error::NearSingular { .. } => "near-singular",
        Error::BranchCut(_) => "branch-cut",
        Error::Capacity(_) => "capacity",
        Error::MissedZero(_) => "missed-zero",
        Error::Format { .. } => "format",
        Error::Order { .. } => "order",
        Error::Quadrature(_) => "quadrature",
        Error::TailUnbounded(_) => "tail-unbounded",
        Error::ZeroEigenvalue(_) => "zero-eigenvalue",
        Error::NotRegularizable(_) => "not-regularizable",
        Error::Io(_) => "io",
    }
}

fn cmd_zeros(cli: &Cli, sub: &ZerosCmd) -> Result<()> {
    match sub {
        ZerosCmd::Compute { n } => {
            let table = superzeta::cached_zeros(*n)?;
            write_out(cli, &render_zeros_file(&table))
        }
        ZerosCmd::Import { file } => {
            let table = superzeta::import_zeros(file)?;
            if let Some(path) = &cli.out {
                write_file(path, &render_zeros_file(&table))?;
            }
            println!("{} zeros, horizon {:.9}", table.count, table.horizon);
            Ok(())
        }
        ZerosCmd::Verify => {
            let path = cli
                .zeros_file
                .as_ref()
                .ok_or_else(|| Error::Domain("zeros verify reads the table from --zeros-file".into()))?;
            let table = superzeta::import_zeros(path)?;
            if table.count == 0 {
                return Err(Error::Domain("the zeros table is empty".into()));
            }
            let mut worst = 0.0f64;
            for &g in &table.ordinates {
                let z = specfun::riemann_zeta(Complex::new(0.5, g))?;
                worst = worst.max(z.value.norm());
            }
            write_out(cli, &format!("max residual {:.3e} over {} zeros\n", worst, table.count))
        }
    }
}

/// Fixed 9-decimal rendering; import_zeros and the parser in `arith` read it back.
fn render_zeros_file(table: &ZerosTable) -> String {
    let mut s = format!("# horizon {:.9}\n", table.horizon);
    for g in &table.ordinates {
        s.push_str(&format!("{g:.9}\n"));
    }
    s
}

fn cmd_theorem(cli: &Cli, a: &TheoremArgs) -> Result<()> {
    let BaseGen::Primes = a.base;
    let points = read_spectrum(&a.perturbed)?;
    let q = CountingSnapshot::from_jump_points(&points)?;
    if q.max_breakpoint() > cli.sieve_limit as f64 {
        return Err(Error::Capacity(format!(
            "the perturbed table reaches {} but --sieve-limit is {}",
            q.max_breakpoint(),
            cli.sieve_limit
        )));
    }
    let report = primezeta::verify_theorem1(&q, a.k, &primezeta::standard_grid())?;
    let json = serde_json::to_string_pretty(&report).map_err(|e| Error::Io(e.to_string()))? + "\n";
    match &cli.out {
        Some(path) => {
            write_file(path, &json)?;
            println!("verdict: {}", verdict_name(&report.verdict));
            Ok(())
        }
        None => {
            print!("{json}");
            Ok(())
        }
    }
}

fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::Consistent => "consistent",
        Verdict::HypothesisViolated => "hypothesis-violated",
        Verdict::DivergenceDetected => "divergence-detected",
    }
}

fn finish_eval(cli: &Cli, r: EvalResult) -> Result<()> {
    if let Some(t) = cli.precision_target {
        if !(t > 0.0) {
            return Err(Error::Domain("precision target must be positive".into()));
        }
        if r.abs_err > t {
            return Err(Error::Quadrature(format!(
                "error estimate {:.1e} misses the requested target {:.1e}",
                r.abs_err, t
            )));
        }
    }
    write_out(cli, &format!("{} ± {:.1e} ({})\n", fmt_complex(r.value), r.abs_err, r.method))
}

fn spectrum_spec(sp: &SpectrumArgs) -> Result<SpectrumSpec> {
    match (&sp.spectrum_generator, &sp.spectrum_file) {
        (Some(_), Some(_)) => Err(Error::Domain(
            "give either --spectrum-generator or --spectrum-file, not both".into(),
        )),
        (Some(g), None) => Ok(match g {
            Generator::Primes => SpectrumSpec::primes(),
            Generator::Integers => SpectrumSpec::integers(),
            Generator::Zeros => SpectrumSpec::riemann_zeros(),
        }),
        (None, Some(path)) => Ok(SpectrumSpec::explicit(read_spectrum(path)?)),
        (None, None) => Err(Error::Domain(
            "a spectrum is needed: --spectrum-generator or --spectrum-file".into(),
        )),
    }
}

fn approx_model(o: &ApproxOpts) -> Result<(CountingModel, SpectrumSpec)> {
    let family = o
        .family
        .ok_or_else(|| Error::Domain("approx needs --family zeros|primes".into()))?;
    let (spec, form) = match family {
        Family::Zeros => (SpectrumSpec::riemann_zeros(), CountingForm::TLnT),
        Family::Primes => (SpectrumSpec::primes(), CountingForm::TOverLnT),
    };
    let model = match o.k {
        Some(k) => CountingModel::new(form, k)?,
        None => CountingModel::with_default_cut(form, &spec)?,
    };
    Ok((model, spec))
}

fn load_table(cli: &Cli) -> Result<ZerosTable> {
    match &cli.zeros_file {
        Some(p) => superzeta::import_zeros(p),
        None => superzeta::cached_zeros(DEFAULT_TABLE),
    }
}

fn parse_s(s: &Option<String>) -> Result<Complex> {
    let text = s.as_deref().ok_or_else(|| Error::Domain("this target needs --s".into()))?;
    parse_complex(text)
}

/// "a+bi" / "a-bi" / "a" / "bi", no whitespace; the imaginary unit is a
/// trailing 'i'. A sign directly after e/E stays part of the exponent.
fn parse_complex(text: &str) -> Result<Complex> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Domain("empty complex literal".into()));
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex::new(parse_f64(t)?, 0.0));
    };
    let bytes = body.as_bytes();
    let mut split = None;
    for j in (1..bytes.len()).rev() {
        let c = bytes[j] as char;
        if (c == '+' || c == '-') && !matches!(bytes[j - 1] as char, 'e' | 'E') {
            split = Some(j);
            break;
        }
    }
    let (re_s, im_s) = match split {
        Some(j) => (&body[..j], &body[j..]),
        None => ("", body),
    };
    let re = if re_s.is_empty() { 0.0 } else { parse_f64(re_s)? };
    let im = match im_s {
        "" | "+" => 1.0,
        "-" => -1.0,
        _ => parse_f64(im_s)?,
    };
    Ok(Complex::new(re, im))
}

fn parse_f64(s: &str) -> Result<f64> {
    s.parse::<f64>()
        .map_err(|_| Error::Domain(format!("cannot parse '{s}' as a number")))
}

fn fmt_complex(z: Complex) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn write_out(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
