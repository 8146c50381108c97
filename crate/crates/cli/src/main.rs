//! `rydberg`: exact and asymptotic entropies of hydrogenic states.
//!
//! Exit codes: 0 success, 2 invalid input, 3 a quadrature missed its tolerance.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rydberg_core::asympt::{airy_constant, bessel_constant, cosine_constant, RegimeConstant};
use rydberg_core::output::{format_float, write_columns_csv, write_gnuplot, Format, OutputRecord, RecordWriter};
use rydberg_core::specfile::parse_spec;
use rydberg_core::sweep::{evaluate, figure_columns, run_sweep_streaming, run_sweep_with, SweepRow, SHANNON_NOTE};
use rydberg_core::{EntropyKind, Error, Execution, FigureId, MethodSelector, QuadratureConfig, QuantumState};

const EXIT_VALIDATION: u8 = 2;
const EXIT_NOT_CONVERGED: u8 = 3;

#[derive(Parser)]
#[command(name = "rydberg", version, about = "Rényi, Shannon and Tsallis entropies of hydrogenic states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Entropies of one state.
    Entropy(EntropyArgs),
    /// Regime constants C(p, β), C_B(α, p, β) and C_A(p).
    Constants(ConstantsArgs),
    /// Data behind the n, p and Z figures.
    Figure(FigureArgs),
    /// Sweep over the grids of a spec file.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Renyi,
    Shannon,
    Tsallis,
}

impl From<KindArg> for EntropyKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Renyi => EntropyKind::Renyi,
            KindArg::Shannon => EntropyKind::Shannon,
            KindArg::Tsallis => EntropyKind::Tsallis,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Exact,
    Asympt,
    Both,
}

impl From<MethodArg> for MethodSelector {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Exact => MethodSelector::Exact,
            MethodArg::Asympt => MethodSelector::Asymptotic,
            MethodArg::Both => MethodSelector::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    #[value(alias = "jsonl", alias = "json")]
    JsonLines,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::JsonLines => Format::JsonLines,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotFormat {
    Csv,
    Gnuplot,
}

#[derive(Args)]
struct EntropyArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    l: u32,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    m: i32,
    /// Nuclear charge.
    #[arg(long = "Z", default_value_t = 1.0)]
    z: f64,
    /// Order of the entropy; repeat for several orders.
    #[arg(long, allow_negative_numbers = true)]
    p: Vec<f64>,
    #[arg(long, value_enum, default_value_t = KindArg::Renyi)]
    kind: KindArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
    method: MethodArg,
    #[arg(long)]
    rel_tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ConstantChoice {
    /// C(p, β) of the cosine regime.
    #[arg(long, num_args = 2, value_names = ["P", "BETA"], allow_negative_numbers = true)]
    cosine: Option<Vec<f64>>,
    /// C_B(α, p, β) of the Bessel regime.
    #[arg(long, num_args = 3, value_names = ["ALPHA", "P", "BETA"], allow_negative_numbers = true)]
    bessel: Option<Vec<f64>>,
    /// C_A(p) of the Airy regime.
    #[arg(long, value_name = "P", allow_negative_numbers = true)]
    airy: Option<f64>,
}

#[derive(Args)]
struct ConstantsArgs {
    #[command(flatten)]
    choice: ConstantChoice,
    #[arg(long)]
    rel_tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
struct FigureArgs {
    /// One of n, p1, p2, z.
    figure: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Asympt)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = PlotFormat::Csv)]
    plot_format: PlotFormat,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long)]
    rel_tol: Option<f64>,
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct SweepArgs {
    spec: PathBuf,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) => 1,
            _ => EXIT_VALIDATION,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Error::from(e).into()
    }
}

type CmdResult = Result<u8, Failure>;

fn config(rel_tol: Option<f64>) -> Result<QuadratureConfig, Error> {
    let cfg = match rel_tol {
        Some(t) => QuadratureConfig::default().with_rel_tol(t),
        None => QuadratureConfig::default(),
    };
    cfg.validate()?;
    Ok(cfg)
}

fn execution(jobs: Option<usize>) -> Result<Execution, Error> {
    match jobs {
        None => Ok(Execution::Parallel),
        Some(0) => Err(Error::Config("--jobs must be at least 1".into())),
        Some(1) => Ok(Execution::Sequential),
        Some(j) => Ok(Execution::ParallelJobs(j)),
    }
}

fn cmd_entropy(a: EntropyArgs) -> CmdResult {
    let state = QuantumState::new(a.n, a.l, a.m, a.z)?;
    let cfg = config(a.rel_tol)?;
    let kind = EntropyKind::from(a.kind);
    if let Some(p) = a.p.iter().find(|p| !(**p > 0.0) || !p.is_finite()) {
        return Err(Error::Domain(format!("p must satisfy p > 0 (got p = {p})")).into());
    }
    let ps: Vec<Option<f64>> = match (kind, a.p.is_empty()) {
        (EntropyKind::Shannon, _) => vec![None],
        (_, true) => return Err(Error::Config(format!("--p is required for the {kind} entropy")).into()),
        (_, false) => a.p.iter().map(|&p| Some(p)).collect(),
    };
    let stdout = io::stdout();
    let mut w = RecordWriter::new(stdout.lock(), a.format.into())?;
    let mut code = 0;
    for p in ps {
        for &method in MethodSelector::from(a.method).methods() {
            let (r, rerouted) = evaluate(&state, kind, p, method, &cfg)?;
            if !r.converged {
                code = EXIT_NOT_CONVERGED;
            }
            let row = SweepRow {
                state,
                p: if r.kind == EntropyKind::Shannon { None } else { p },
                kind: r.kind,
                method: r.method,
                regime: r.regime,
                value: r.value,
                error_estimate: r.error_estimate,
                converged: r.converged,
                note: if rerouted { SHANNON_NOTE.to_string() } else { String::new() },
                failure: None,
                wall_time: Default::default(),
            };
            w.write(&OutputRecord::from(&row))?;
        }
    }
    w.flush()?;
    Ok(code)
}

fn cmd_constants(a: ConstantsArgs) -> CmdResult {
    let cfg = config(a.rel_tol)?;
    let c = &a.choice;
    let (name, alpha, p, beta, value, error, converged) = if let Some(v) = &c.cosine {
        ("cosine", None, v[0], Some(v[1]), cosine_constant(v[0], v[1])?, 0.0, true)
    } else if let Some(v) = &c.bessel {
        let r: RegimeConstant = bessel_constant(v[0], v[1], v[2], &cfg)?;
        ("bessel", r.alpha, r.p, r.beta, r.value, r.error_estimate, r.converged)
    } else {
        let r = airy_constant(c.airy.expect("clap group requires one constant"), &cfg)?;
        ("airy", None, r.p, None, r.value, r.error_estimate, r.converged)
    };
    let opt = |x: Option<f64>| x.map(format_float);
    let mut out = io::stdout().lock();
    match Format::from(a.format) {
        Format::Csv => {
            writeln!(out, "constant,alpha,p,beta,value,error")?;
            writeln!(
                out,
                "{name},{},{},{},{},{}",
                opt(alpha).unwrap_or_default(),
                format_float(p),
                opt(beta).unwrap_or_default(),
                format_float(value),
                format_float(error)
            )?;
        }
        Format::JsonLines => writeln!(
            out,
            "{{\"constant\":\"{name}\",\"alpha\":{},\"p\":{},\"beta\":{},\"value\":{},\"error\":{}}}",
            opt(alpha).unwrap_or("null".into()),
            format_float(p),
            opt(beta).unwrap_or("null".into()),
            format_float(value),
            format_float(error)
        )?,
    }
    Ok(if converged { 0 } else { EXIT_NOT_CONVERGED })
}

fn cmd_figure(a: FigureArgs) -> CmdResult {
    let figure: FigureId = a.figure.parse()?;
    let methods = MethodSelector::from(a.method);
    if methods == MethodSelector::Both {
        return Err(Error::Config("figures take a single method (exact or asympt)".into()).into());
    }
    let mut spec = figure.spec(methods);
    spec.cfg = config(a.rel_tol)?;
    let table = run_sweep_with(&spec, execution(a.jobs)?)?;
    let mut code = 0;
    for r in table.rows.iter().filter(|r| !r.is_ok() || !r.converged) {
        eprintln!("warning: {} p={:?}: {}", r.state, r.p, r.note);
        code = EXIT_NOT_CONVERGED;
    }
    let cols = figure_columns(figure, &table);
    let title = format!("figure {figure}: total Rényi entropy of ns states ({} method)", methods.methods()[0]);
    let sink: Box<dyn Write> = match &a.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    match a.plot_format {
        PlotFormat::Gnuplot => write_gnuplot(sink, title, &cols)?,
        PlotFormat::Csv => write_columns_csv(sink, &cols)?,
    }
    Ok(code)
}

fn cmd_sweep(a: SweepArgs) -> CmdResult {
    let text = std::fs::read_to_string(&a.spec)
        .map_err(|e| Failure { code: EXIT_VALIDATION, message: format!("cannot read {}: {e}", a.spec.display()) })?;
    let spec = parse_spec(&text)?;
    let exec = execution(a.jobs)?;
    let stdout = io::stdout();
    let mut w = RecordWriter::new(stdout.lock(), a.format.into())?;
    let mut code = 0;
    // a chunk per pool's worth of points keeps output flowing
    let chunk = std::thread::available_parallelism().map_or(8, |n| n.get() * 4);
    let provenance = run_sweep_streaming(&spec, exec, chunk, |row| {
        if let Some(e) = &row.failure {
            eprintln!("warning: {} p={:?}: {e}", row.state, row.p);
            code = code.max(Failure::from(e.clone()).code);
        } else if !row.converged {
            code = EXIT_NOT_CONVERGED;
        }
        w.write(&OutputRecord::from(row))?;
        w.flush()
    })?;
    eprintln!("# {provenance}");
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Entropy(a) => cmd_entropy(a),
        Command::Constants(a) => cmd_constants(a),
        Command::Figure(a) => cmd_figure(a),
        Command::Sweep(a) => cmd_sweep(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
