//! Command-line front end. Every subcommand reads a graph file, applies
//! the Robin overrides and writes CSV (header row, `{:.16e}` numbers) to
//! stdout or `--output`.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::bounds::{self, RangeRegion};
use crate::continuation::{self, ParameterPath, TraceConfig};
use crate::dtn;
use crate::error::Error;
use crate::fd;
use crate::graph::{MetricGraph, VertexCondition};
use crate::secular::{self, DirichletMode, Region};

pub const TOL_RANGE: (f64, f64) = (1e-14, 1e-2);

#[derive(Parser, Debug)]
#[command(name = "robin-graph", version, about = "Spectra of metric graphs with complex Robin vertex conditions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Graph file (JSON).
    #[arg(long)]
    graph: PathBuf,
    /// Solver tolerance, in [1e-14, 1e-2].
    #[arg(long, default_value_t = 1e-10, value_parser = parse_tol)]
    tol: f64,
    /// Uniform Robin parameter `re[,im]` for every Robin vertex.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    alpha: Option<Complex64>,
    /// Robin parameter for one vertex, `ID=re[,im]`; turns the vertex into a
    /// Robin vertex. Applied after `--alpha`; repeatable.
    #[arg(long = "set-alpha", allow_hyphen_values = true, value_parser = parse_assignment)]
    set_alpha: Vec<(String, Complex64)>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    workers: Option<usize>,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct Window {
    /// `RE_MIN RE_MAX IM_MIN IM_MAX`.
    #[arg(long, num_args = 4, allow_negative_numbers = true, value_names = ["RE_MIN", "RE_MAX", "IM_MIN", "IM_MAX"])]
    region: Vec<f64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the graph and print its basic quantities.
    Validate {
        #[command(flatten)]
        common: Common,
    },
    /// Eigenvalues in a rectangle.
    Spectrum {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: Window,
    },
    /// Eigenvalues with Dirichlet conditions imposed on some vertices.
    DirichletSpectrum {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: Window,
        #[arg(long, value_enum, default_value_t = Mode::Robin)]
        mode: Mode,
    },
    /// Reduced Dirichlet-to-Neumann matrix at one spectral parameter.
    Dtn {
        #[command(flatten)]
        common: Common,
        /// `re[,im]`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        lambda: Complex64,
    },
    /// Track the eigenvalues found in `--region` along `α(t) = α + t e^{iθ}`.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: Window,
        /// Direction angle θ in radians for every Robin vertex.
        #[arg(long, allow_hyphen_values = true, default_value_t = std::f64::consts::PI)]
        angle: f64,
        /// Direction angle for one vertex, `ID=θ`; repeatable.
        #[arg(long = "set-angle", allow_hyphen_values = true, value_parser = parse_angle)]
        set_angle: Vec<(String, f64)>,
        /// Speed `|α'(t)|` of every Robin vertex.
        #[arg(long, default_value_t = 1.0)]
        modulus: f64,
        #[arg(long, default_value_t = 100.0)]
        t_end: f64,
        /// Number of equal steps in `[0, T]` reported per branch.
        #[arg(long, default_value_t = 10)]
        samples: usize,
        /// Window for the Dirichlet limit points; defaults to
        /// `[min(RE_MIN, -5), max(4 RE_MAX, 400)] × [-5, 5]`.
        #[arg(long, num_args = 4, allow_negative_numbers = true)]
        dirichlet_region: Option<Vec<f64>>,
    },
    /// Eigenvalue bounds for the current Robin parameters.
    Bounds {
        #[command(flatten)]
        common: Common,
    },
    /// Random Rayleigh quotients and their membership in the enclosure.
    SampleRange {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Secular roots against the finite element oracle.
    OracleCompare {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: Window,
        /// Coarse mesh density in nodes per unit length (the fine mesh
        /// doubles it).
        #[arg(long, default_value_t = 64.0)]
        nodes: f64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Mode {
    /// Dirichlet at the Robin vertices.
    Robin,
    /// Dirichlet at every vertex.
    All,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Runs the command line `args` (program name first) and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            1
        }
    }
}

fn dispatch(command: Command) -> Result<(), Failure> {
    let common = match &command {
        Command::Validate { common }
        | Command::Spectrum { common, .. }
        | Command::DirichletSpectrum { common, .. }
        | Command::Dtn { common, .. }
        | Command::Sweep { common, .. }
        | Command::Bounds { common }
        | Command::SampleRange { common, .. }
        | Command::OracleCompare { common, .. } => common.clone(),
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = common.workers {
        if n == 0 {
            return Err(Failure::Usage("--workers must be at least 1".into()));
        }
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(|e| Failure::Domain(e.to_string()))?;
    let csv = pool.install(|| execute(command, &common))?;
    match &common.output {
        Some(path) => std::fs::write(path, csv).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?,
        None => print!("{csv}"),
    }
    Ok(())
}

fn load(common: &Common) -> Result<MetricGraph, Failure> {
    let mut g = MetricGraph::from_json_file(&common.graph)
        .map_err(|e| Failure::Domain(format!("{}: {e}", common.graph.display())))?;
    let report = g.validate();
    if !report.is_valid() {
        let list: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(Failure::Domain(format!("invalid graph: {}", list.join("; "))));
    }
    if let Some(a) = common.alpha {
        g = g.with_alpha(&vec![a; g.robin_vertices().len()])?;
    }
    for (id, a) in &common.set_alpha {
        let v = g.vertex_index(id).ok_or_else(|| Error::UnknownVertex(id.clone()))?;
        g.set_condition(v, VertexCondition::Robin(*a));
    }
    Ok(g)
}

fn region(values: &[f64]) -> Result<Region, Failure> {
    match values {
        [a, b, c, d] => Region::new(*a, *b, *c, *d)
            .map_err(|_| Failure::Usage(format!("degenerate region {a} {b} {c} {d}"))),
        _ => Err(Failure::Usage("--region needs four numbers".into())),
    }
}

fn execute(command: Command, common: &Common) -> Result<String, Failure> {
    let tol = common.tol;
    let mut out = String::new();
    match command {
        Command::Validate { .. } => {
            let g = load(common)?;
            let m = g.metrics();
            out.push_str("property,value\n");
            let _ = writeln!(out, "vertices,{}", g.vertices().len());
            let _ = writeln!(out, "edges,{}", g.edges().len());
            let _ = writeln!(out, "robin_vertices,{}", g.robin_vertices().len());
            let _ = writeln!(out, "dirichlet_vertices,{}", g.dirichlet_vertices().len());
            let _ = writeln!(out, "total_length,{}", num(m.total_length));
            let _ = writeln!(out, "shortest_edge,{}", num(m.shortest_edge));
            if let Some(d) = m.min_robin_degree {
                let _ = writeln!(out, "min_robin_degree,{d}");
            }
        }
        Command::Spectrum { window, .. } => {
            let g = load(common)?;
            let roots = secular::find_roots(&g, &region(&window.region)?, tol)?;
            spectrum_csv(&mut out, &roots);
        }
        Command::DirichletSpectrum { window, mode, .. } => {
            let g = load(common)?;
            let mode = match mode {
                Mode::Robin => DirichletMode::RobinVertices,
                Mode::All => DirichletMode::AllVertices,
            };
            let roots = secular::dirichlet_spectrum(&g, mode, &region(&window.region)?, tol)?;
            spectrum_csv(&mut out, &roots);
        }
        Command::Dtn { lambda, .. } => {
            let g = load(common)?;
            let red = dtn::reduced_dtn(&g, lambda)?;
            let ids: Vec<&str> = g.robin_vertices().iter().map(|&v| g.vertices()[v].id.as_str()).collect();
            out.push_str("row,col,re_m,im_m\n");
            for (i, a) in ids.iter().enumerate() {
                for (j, b) in ids.iter().enumerate() {
                    let z = red.matrix[(i, j)];
                    let _ = writeln!(out, "{a},{b},{},{}", num(z.re), num(z.im));
                }
            }
        }
        Command::Sweep { window, angle, set_angle, modulus, t_end, samples, dirichlet_region, .. } => {
            let g = load(common)?;
            let win = region(&window.region)?;
            let dwin = match dirichlet_region {
                Some(v) => region(&v)?,
                None => Region::new(win.re_min.min(-5.0), (4.0 * win.re_max).max(400.0), -5.0, 5.0)?,
            };
            if samples == 0 || !(t_end.is_finite() && t_end > 0.0) {
                return Err(Failure::Usage("--samples and --t-end must be positive".into()));
            }
            let robin = g.robin_vertices();
            let mut angles = vec![angle; robin.len()];
            for (id, th) in &set_angle {
                let v = g.vertex_index(id).ok_or_else(|| Error::UnknownVertex(id.clone()))?;
                let j = robin
                    .iter()
                    .position(|&r| r == v)
                    .ok_or_else(|| Failure::Domain(format!("vertex `{id}` is not a Robin vertex")))?;
                angles[j] = *th;
            }
            let path = ParameterPath::new(g.alpha(), vec![modulus; robin.len()], angles)?;
            let grid: Vec<f64> = (0..=samples).map(|i| t_end * i as f64 / samples as f64).collect();
            let config = TraceConfig { t_end, tol, checkpoints: grid.clone(), ..TraceConfig::default() };
            let count = continuation::count_divergent(&g, &path, &win, &dwin, &config);
            let branches = match count {
                Ok(c) => c.branches,
                Err(Error::Inconclusive { .. }) => {
                    let starts = secular::find_roots(&g, &win, tol)?;
                    let dirichlet: Vec<Complex64> =
                        secular::dirichlet_spectrum(&g, DirichletMode::RobinVertices, &dwin, tol)?
                            .into_iter()
                            .map(|r| r.lambda)
                            .collect();
                    starts
                        .iter()
                        .map(|s| continuation::trace_branch(&g, &path, s, &config, &dirichlet))
                        .collect::<crate::Result<Vec<_>>>()?
                }
                Err(e) => return Err(e.into()),
            };
            out.push_str("branch,t");
            for j in 0..robin.len() {
                let _ = write!(out, ",re_alpha_{j},im_alpha_{j}");
            }
            out.push_str(",re_lambda,im_lambda,status\n");
            for (b, branch) in branches.iter().enumerate() {
                for t in &grid {
                    let Some(s) = branch.at(*t) else { continue };
                    let _ = write!(out, "{b},{}", num(s.t));
                    for a in &s.alpha {
                        let _ = write!(out, ",{},{}", num(a.re), num(a.im));
                    }
                    let _ = writeln!(out, ",{},{},{}", num(s.lambda.re), num(s.lambda.im), branch.status.label());
                }
            }
        }
        Command::Bounds { .. } => {
            let g = load(common)?;
            bounds_csv(&mut out, &g, tol)?;
        }
        Command::SampleRange { count, seed, .. } => {
            let g = load(common)?;
            let reg = RangeRegion::for_graph(&g)?;
            out.push_str("re_q,im_q,member\n");
            for s in bounds::sample_numerical_range(&g, &reg, count, seed)? {
                let _ = writeln!(out, "{},{},{}", num(s.quotient.re), num(s.quotient.im), s.membership.member);
            }
        }
        Command::OracleCompare { window, nodes, .. } => {
            let g = load(common)?;
            let win = region(&window.region)?;
            let roots = secular::find_roots(&g, &win.expand(1.0), tol)?;
            let approx = fd::extrapolated_eigs(&g, nodes, &win.expand(1.0))?;
            let h = 1.0 / nodes;
            let m = fd::match_spectra(&roots, &approx, &win, |z| 5.0 * h * h * (1.0 + z.norm()));
            out.push_str("kind,re_secular,im_secular,re_fd,im_fd,distance\n");
            for (a, b) in &m.pairs {
                if win.contains(*a) || win.contains(*b) {
                    let _ = writeln!(out, "pair,{},{},{},{},{}", num(a.re), num(a.im), num(b.re), num(b.im), num((a - b).norm()));
                }
            }
            for a in &m.unmatched_reference {
                let _ = writeln!(out, "secular_only,{},{},,,", num(a.re), num(a.im));
            }
            for b in &m.unmatched_approx {
                let _ = writeln!(out, "fd_only,,,{},{},", num(b.re), num(b.im));
            }
        }
    }
    Ok(out)
}

fn spectrum_csv(out: &mut String, roots: &[secular::RootResult]) {
    out.push_str("re_lambda,im_lambda,multiplicity,residual\n");
    for r in roots {
        let _ = writeln!(out, "{},{},{},{}", num(r.lambda.re), num(r.lambda.im), r.multiplicity, num(r.residual));
    }
}

/// Rows for every bound that applies. The real-part bound uses the most
/// negative `Re α_j`, which is valid for unequal parameters too.
fn bounds_csv(out: &mut String, g: &MetricGraph, tol: f64) -> Result<(), Failure> {
    let m = g.metrics();
    let d = m.min_robin_degree.ok_or(Error::NoRobinVertices)? as f64;
    let alpha = g.alpha();
    let worst = alpha.iter().map(|a| a.re).fold(f64::INFINITY, f64::min);
    out.push_str("bound,value\n");
    let lower = bounds::real_part_lower_bound(Complex64::new(worst, 0.0), d, m.shortest_edge);
    let _ = writeln!(out, "real_part_lower,{}", num(lower));
    if let Ok(upper) = bounds::first_eigenvalue_upper_bound(g) {
        let _ = writeln!(out, "first_eigenvalue_upper,{}", num(upper));
    }
    if alpha.iter().all(|a| a.re >= 0.0) {
        let deg = g.degrees();
        let ratio = g
            .robin_vertices()
            .iter()
            .zip(&alpha)
            .map(|(&v, a)| a.im.abs() / deg[v] as f64)
            .fold(0.0, f64::max);
        let _ = writeln!(out, "imag_part_slope,{}", num(2.0 * ratio));
        let _ = writeln!(out, "imag_part_offset,{}", num(ratio / (d * m.shortest_edge)));
    }
    if let Ok(n) = bounds::count_negative_eigenvalues(g, tol) {
        let _ = writeln!(out, "negative_count,{}", n.count);
        if let Some(k) = n.predicted {
            let _ = writeln!(out, "negative_count_predicted,{k}");
        }
    }
    Ok(())
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(TOL_RANGE.0..=TOL_RANGE.1).contains(&x) {
        return Err(format!("tolerance {x:e} outside [{:e}, {:e}]", TOL_RANGE.0, TOL_RANGE.1));
    }
    Ok(x)
}

/// `re` or `re,im`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let mut parts = s.split(',');
    let re = parts.next().unwrap_or("").trim();
    let im = parts.next().map(str::trim);
    if parts.next().is_some() {
        return Err(format!("`{s}`: expected re[,im]"));
    }
    let re: f64 = re.parse().map_err(|_| format!("`{s}`: expected re[,im]"))?;
    let im: f64 = match im {
        Some(t) => t.parse().map_err(|_| format!("`{s}`: expected re[,im]"))?,
        None => 0.0,
    };
    if !re.is_finite() || !im.is_finite() {
        return Err(format!("`{s}`: non-finite value"));
    }
    Ok(Complex64::new(re, im))
}

fn parse_assignment(s: &str) -> Result<(String, Complex64), String> {
    let (id, v) = s.split_once('=').ok_or_else(|| format!("`{s}`: expected ID=re[,im]"))?;
    Ok((id.to_string(), parse_complex(v)?))
}

fn parse_angle(s: &str) -> Result<(String, f64), String> {
    let (id, v) = s.split_once('=').ok_or_else(|| format!("`{s}`: expected ID=angle"))?;
    let th: f64 = v.parse().map_err(|_| format!("`{s}`: expected ID=angle"))?;
    Ok((id.to_string(), th))
}
