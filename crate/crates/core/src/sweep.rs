//! Parameter sweeps over exact and asymptotic entropies.
//!
//! Grid points are independent, so they are evaluated data-parallel with
//! rayon when the `parallel` feature is on; rows are always gathered in grid
//! order, which keeps tables byte-identical across runs and thread counts.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use sha2::{Digest, Sha256};

use crate::asympt::{renyi_total_asymptotic, shannon_asymptotic, tsallis_total_asymptotic, Regime};
use crate::error::{Error, Result};
use crate::hydrogenic::{renyi_total, shannon_total, tsallis_total, EntropyKind, EntropyResult, Method, QuantumState};
use crate::quad::QuadratureConfig;

/// Above this `n` exact quadrature runs at no tighter than [`LARGE_N_REL_TOL`].
pub const LARGE_N: u32 = 200;
pub const LARGE_N_REL_TOL: f64 = 1e-8;

/// Note attached to rows where `p = 1` was evaluated as a Shannon entropy.
pub const SHANNON_NOTE: &str = "p = 1 evaluated as the Shannon entropy";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MethodSelector {
    Exact,
    Asymptotic,
    Both,
}

impl MethodSelector {
    pub fn methods(&self) -> &'static [Method] {
        match self {
            MethodSelector::Exact => &[Method::ExactQuadrature],
            MethodSelector::Asymptotic => &[Method::Asymptotic],
            MethodSelector::Both => &[Method::ExactQuadrature, Method::Asymptotic],
        }
    }
}

impl FromStr for MethodSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "exact" => Ok(MethodSelector::Exact),
            "asympt" | "asymptotic" => Ok(MethodSelector::Asymptotic),
            "both" => Ok(MethodSelector::Both),
            other => Err(Error::Config(format!("unknown method '{other}' (expected exact, asympt or both)"))),
        }
    }
}

impl FromStr for EntropyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "renyi" => Ok(EntropyKind::Renyi),
            "shannon" => Ok(EntropyKind::Shannon),
            "tsallis" => Ok(EntropyKind::Tsallis),
            other => Err(Error::Config(format!("unknown kind '{other}' (expected renyi, shannon or tsallis)"))),
        }
    }
}

/// Evaluates one total entropy. `p = 1` with a Rényi or Tsallis kind is
/// evaluated as the Shannon entropy; the returned flag says so.
pub fn evaluate(
    state: &QuantumState,
    kind: EntropyKind,
    p: Option<f64>,
    method: Method,
    cfg: &QuadratureConfig,
) -> Result<(EntropyResult, bool)> {
    let (kind, rerouted) = match (kind, p) {
        (EntropyKind::Shannon, _) => (EntropyKind::Shannon, false),
        (_, Some(p)) if p == 1.0 => (EntropyKind::Shannon, true),
        (_, Some(_)) => (kind, false),
        (_, None) => return Err(Error::Config(format!("{kind} entropy needs a value of p"))),
    };
    let cfg = if method == Method::ExactQuadrature && state.n() > LARGE_N && cfg.rel_tol < LARGE_N_REL_TOL {
        cfg.with_rel_tol(LARGE_N_REL_TOL)
    } else {
        *cfg
    };
    let p = p.unwrap_or(1.0);
    let result = match (kind, method) {
        (EntropyKind::Shannon, Method::ExactQuadrature) => shannon_total(state, &cfg)?,
        (EntropyKind::Shannon, Method::Asymptotic) => shannon_asymptotic(state, &cfg)?,
        (EntropyKind::Renyi, Method::ExactQuadrature) => renyi_total(state, p, &cfg)?,
        (EntropyKind::Renyi, Method::Asymptotic) => renyi_total_asymptotic(state, p, &cfg)?,
        (EntropyKind::Tsallis, Method::ExactQuadrature) => tsallis_total(state, p, &cfg)?,
        (EntropyKind::Tsallis, Method::Asymptotic) => tsallis_total_asymptotic(state, p, &cfg)?,
    };
    Ok((result, rerouted))
}

/// Grids and settings of a sweep. Combinations violating `l < n` or
/// `|m| ≤ l` are skipped.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub n: Vec<u32>,
    pub l: Vec<u32>,
    pub m: Vec<i32>,
    pub z: Vec<f64>,
    pub p: Vec<f64>,
    pub kind: EntropyKind,
    pub methods: MethodSelector,
    pub cfg: QuadratureConfig,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            n: Vec::new(),
            l: vec![0],
            m: vec![0],
            z: vec![1.0],
            p: Vec::new(),
            kind: EntropyKind::Renyi,
            methods: MethodSelector::Exact,
            cfg: QuadratureConfig::default(),
        }
    }
}

/// One grid point before evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub state: QuantumState,
    pub p: Option<f64>,
    pub method: Method,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        for (name, empty) in [
            ("n", self.n.is_empty()),
            ("l", self.l.is_empty()),
            ("m", self.m.is_empty()),
            ("Z", self.z.is_empty()),
            ("p", self.p.is_empty() && self.kind != EntropyKind::Shannon),
        ] {
            if empty {
                return Err(Error::EmptyGrid(format!("the {name} grid has no values")));
            }
        }
        if let Some(p) = self.p.iter().find(|p| !(**p > 0.0) || !p.is_finite()) {
            return Err(Error::Config(format!("p must satisfy p > 0 (got p = {p})")));
        }
        if let Some(z) = self.z.iter().find(|z| !(**z > 0.0) || !z.is_finite()) {
            return Err(Error::Config(format!("Z must satisfy Z > 0 (got Z = {z})")));
        }
        self.cfg.validate()
    }

    /// Grid points in evaluation order: n, l, m, Z, p, then method.
    pub fn points(&self) -> Result<Vec<GridPoint>> {
        self.validate()?;
        let ps: Vec<Option<f64>> = if self.kind == EntropyKind::Shannon {
            vec![None]
        } else {
            self.p.iter().map(|&p| Some(p)).collect()
        };
        let mut out = Vec::new();
        for &n in &self.n {
            for &l in &self.l {
                for &m in &self.m {
                    for &z in &self.z {
                        let Ok(state) = QuantumState::new(n, l, m, z) else { continue };
                        for &p in &ps {
                            for &method in self.methods.methods() {
                                out.push(GridPoint { state, p, method });
                            }
                        }
                    }
                }
            }
        }
        if out.is_empty() {
            return Err(Error::EmptyGrid("no (n, l, m) combination satisfies l < n and |m| ≤ l".into()));
        }
        Ok(out)
    }

    /// SHA-256 over a canonical rendering of the grids and settings.
    pub fn config_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("n={:?};l={:?};m={:?};", self.n, self.l, self.m));
        for z in &self.z {
            h.update(z.to_bits().to_le_bytes());
        }
        h.update(b";");
        for p in &self.p {
            h.update(p.to_bits().to_le_bytes());
        }
        h.update(format!(";kind={};methods={:?};cfg={:?}", self.kind, self.methods, self.cfg));
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// One evaluated grid point. Failures are kept as rows with a NaN value and
/// the error text in `note`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub state: QuantumState,
    pub p: Option<f64>,
    pub kind: EntropyKind,
    pub method: Method,
    pub regime: Regime,
    pub value: f64,
    pub error_estimate: f64,
    pub converged: bool,
    pub note: String,
    pub failure: Option<Error>,
    pub wall_time: Duration,
}

impl SweepRow {
    pub fn is_ok(&self) -> bool {
        self.failure.is_none()
    }
}

fn run_point(point: &GridPoint, kind: EntropyKind, cfg: &QuadratureConfig) -> SweepRow {
    let start = Instant::now();
    let outcome = evaluate(&point.state, kind, point.p, point.method, cfg);
    let wall_time = start.elapsed();
    match outcome {
        Ok((r, rerouted)) => SweepRow {
            state: point.state,
            p: if r.kind == EntropyKind::Shannon { None } else { point.p },
            kind: r.kind,
            method: r.method,
            regime: r.regime,
            value: r.value,
            error_estimate: r.error_estimate,
            converged: r.converged,
            note: if rerouted {
                SHANNON_NOTE.to_string()
            } else if !r.converged {
                "quadrature did not reach the requested tolerance".to_string()
            } else {
                String::new()
            },
            failure: None,
            wall_time,
        },
        Err(e) => SweepRow {
            state: point.state,
            p: point.p,
            kind,
            method: point.method,
            regime: Regime::NotApplicable,
            value: f64::NAN,
            error_estimate: f64::NAN,
            converged: false,
            note: e.to_string(),
            failure: Some(e),
            wall_time,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub version: String,
    pub config_hash: String,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rydberg-core {} config-sha256 {}", self.version, self.config_hash)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub provenance: Provenance,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    pub fn all_converged(&self) -> bool {
        self.rows.iter().all(|r| r.is_ok() && r.converged)
    }
}

/// How grid points are distributed over threads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// The global rayon pool. Without the `parallel` feature both parallel
    /// variants run sequentially.
    #[default]
    Parallel,
    /// A dedicated pool with this many threads.
    ParallelJobs(usize),
}

fn map_points(points: &[GridPoint], kind: EntropyKind, cfg: &QuadratureConfig, exec: Execution) -> Result<Vec<SweepRow>> {
    let sequential = || points.iter().map(|p| run_point(p, kind, cfg)).collect::<Vec<_>>();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let parallel = || points.par_iter().map(|p| run_point(p, kind, cfg)).collect::<Vec<_>>();
        match exec {
            Execution::Sequential => Ok(sequential()),
            Execution::Parallel => Ok(parallel()),
            Execution::ParallelJobs(jobs) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .map_err(|e| Error::Config(format!("cannot build a pool of {jobs} threads: {e}")))?;
                Ok(pool.install(parallel))
            }
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = exec;
        Ok(sequential())
    }
}

fn provenance(spec: &SweepSpec) -> Provenance {
    Provenance { version: env!("CARGO_PKG_VERSION").to_string(), config_hash: spec.config_hash() }
}

pub fn run_sweep(spec: &SweepSpec) -> Result<SweepTable> {
    run_sweep_with(spec, Execution::default())
}

pub fn run_sweep_with(spec: &SweepSpec, exec: Execution) -> Result<SweepTable> {
    let points = spec.points()?;
    let rows = map_points(&points, spec.kind, &spec.cfg, exec)?;
    Ok(SweepTable { provenance: provenance(spec), rows })
}

/// Like [`run_sweep_with`] but hands rows to `sink` in grid order as each
/// chunk of `chunk` points completes. Returns the provenance.
pub fn run_sweep_streaming<F>(spec: &SweepSpec, exec: Execution, chunk: usize, mut sink: F) -> Result<Provenance>
where
    F: FnMut(&SweepRow) -> Result<()>,
{
    let points = spec.points()?;
    for part in points.chunks(chunk.max(1)) {
        for row in map_points(part, spec.kind, &spec.cfg, exec)? {
            sink(&row)?;
        }
    }
    Ok(provenance(spec))
}

/// `|exact − asymptotic|` at one `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergencePoint {
    pub n: u32,
    pub error: f64,
    /// Error divided by the previous point's error.
    pub ratio: Option<f64>,
}

/// Error sequence in `n` for one `(l, m, Z, p, kind)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceSeries {
    pub l: u32,
    pub m: i32,
    pub z: f64,
    pub p: Option<f64>,
    pub kind: EntropyKind,
    pub points: Vec<ConvergencePoint>,
    /// Least-squares slope of `ln error` against `ln n`.
    pub decay_exponent: Option<f64>,
}

impl ConvergenceSeries {
    pub fn strictly_decreasing(&self) -> bool {
        self.points.windows(2).all(|w| w[1].error < w[0].error)
    }
}

/// Least-squares slope of `y` on `x`; `None` with fewer than two points.
pub fn least_squares_slope(x: &[f64], y: &[f64]) -> Option<f64> {
    let k = x.len().min(y.len());
    if k < 2 {
        return None;
    }
    let mx = x[..k].iter().sum::<f64>() / k as f64;
    let my = y[..k].iter().sum::<f64>() / k as f64;
    let sxy: f64 = x[..k].iter().zip(&y[..k]).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x[..k].iter().map(|a| (a - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Pairs exact and asymptotic rows of a `Both` sweep and reports the error
/// sequence in `n` of every other grid combination.
pub fn convergence_report(table: &SweepTable) -> Vec<ConvergenceSeries> {
    let mut series: Vec<ConvergenceSeries> = Vec::new();
    for exact in table.rows.iter().filter(|r| r.method == Method::ExactQuadrature && r.is_ok()) {
        let Some(asym) = table.rows.iter().find(|r| {
            r.method == Method::Asymptotic && r.is_ok() && r.state == exact.state && r.p == exact.p && r.kind == exact.kind
        }) else {
            continue;
        };
        let s = exact.state;
        let error = (exact.value - asym.value).abs();
        let idx = match series.iter().position(|c| {
            c.l == s.l() && c.m == s.m() && c.z == s.charge() && c.p == exact.p && c.kind == exact.kind
        }) {
            Some(i) => i,
            None => {
                series.push(ConvergenceSeries {
                    l: s.l(),
                    m: s.m(),
                    z: s.charge(),
                    p: exact.p,
                    kind: exact.kind,
                    points: Vec::new(),
                    decay_exponent: None,
                });
                series.len() - 1
            }
        };
        series[idx].points.push(ConvergencePoint { n: s.n(), error, ratio: None });
    }
    for c in &mut series {
        c.points.sort_by_key(|p| p.n);
        for i in 1..c.points.len() {
            c.points[i].ratio = Some(c.points[i].error / c.points[i - 1].error);
        }
        let (x, y): (Vec<f64>, Vec<f64>) = c
            .points
            .iter()
            .filter(|p| p.error > 0.0)
            .map(|p| (f64::from(p.n).ln(), p.error.ln()))
            .unzip();
        c.decay_exponent = least_squares_slope(&x, &y);
    }
    series
}

/// The four figure grids of total Rényi entropies of `ns` states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    /// `n = 10, 15, …, 50` at `p = 3/4, 2, 7/2`.
    N,
    /// `p = 0.1, 0.2, …, 1.9` at `n = 50`.
    P1,
    /// `p = 3, 4, …, 20` at `n = 50`.
    P2,
    /// `Z = 1, …, 103` at `n = 50`, `p = 3/2, 2, 4`.
    Z,
}

impl FigureId {
    pub const ALL: [FigureId; 4] = [FigureId::N, FigureId::P1, FigureId::P2, FigureId::Z];

    pub fn as_str(&self) -> &'static str {
        match self {
            FigureId::N => "n",
            FigureId::P1 => "p1",
            FigureId::P2 => "p2",
            FigureId::Z => "z",
        }
    }

    /// Name of the abscissa column.
    pub fn axis(&self) -> &'static str {
        match self {
            FigureId::N => "n",
            FigureId::P1 | FigureId::P2 => "p",
            FigureId::Z => "Z",
        }
    }

    pub fn spec(&self, methods: MethodSelector) -> SweepSpec {
        let base = SweepSpec { n: vec![50], methods, ..SweepSpec::default() };
        match self {
            FigureId::N => SweepSpec { n: (10..=50).step_by(5).collect(), p: vec![0.75, 2.0, 3.5], ..base },
            FigureId::P1 => SweepSpec { p: (1..=19).map(|i| f64::from(i) / 10.0).collect(), ..base },
            FigureId::P2 => SweepSpec { p: (3..=20).map(f64::from).collect(), ..base },
            FigureId::Z => SweepSpec { z: (1..=103).map(f64::from).collect(), p: vec![1.5, 2.0, 4.0], ..base },
        }
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "n" => Ok(FigureId::N),
            "p1" => Ok(FigureId::P1),
            "p2" => Ok(FigureId::P2),
            "z" => Ok(FigureId::Z),
            other => Err(Error::UnknownFigure(other.to_string())),
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn figure_data(figure: FigureId, method: Method) -> Result<SweepTable> {
    let methods = match method {
        Method::ExactQuadrature => MethodSelector::Exact,
        Method::Asymptotic => MethodSelector::Asymptotic,
    };
    run_sweep(&figure.spec(methods))
}

/// A figure pivoted to one abscissa column plus one column per series.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureColumns {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

/// Pivots figure rows: series are the values of `p` for figures N and Z,
/// and a single entropy column for the p figures.
pub fn figure_columns(figure: FigureId, table: &SweepTable) -> FigureColumns {
    let p_of = |r: &SweepRow| r.p.unwrap_or(1.0);
    let x_of = |r: &SweepRow| match figure {
        FigureId::N => f64::from(r.state.n()),
        FigureId::P1 | FigureId::P2 => p_of(r),
        FigureId::Z => r.state.charge(),
    };
    let mut xs: Vec<f64> = Vec::new();
    let mut series: Vec<f64> = Vec::new();
    for r in &table.rows {
        if !xs.contains(&x_of(r)) {
            xs.push(x_of(r));
        }
        if matches!(figure, FigureId::N | FigureId::Z) && !series.contains(&p_of(r)) {
            series.push(p_of(r));
        }
    }
    let mut header = vec![figure.axis().to_string()];
    match figure {
        FigureId::N | FigureId::Z => header.extend(series.iter().map(|p| format!("R_{p}"))),
        _ => header.push("R_p".to_string()),
    }
    let rows = xs
        .iter()
        .map(|&x| {
            let mut row = vec![x];
            match figure {
                FigureId::N | FigureId::Z => {
                    for &p in &series {
                        let v = table.rows.iter().find(|r| x_of(r) == x && p_of(r) == p).map_or(f64::NAN, |r| r.value);
                        row.push(v);
                    }
                }
                _ => row.push(table.rows.iter().find(|r| x_of(r) == x).map_or(f64::NAN, |r| r.value)),
            }
            row
        })
        .collect();
    FigureColumns { header, rows }
}
