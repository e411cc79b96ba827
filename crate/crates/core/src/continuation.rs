//! Eigenvalue branches `λ(α(t))` along straight-line parameter paths,
//! their classification (divergent / converging to the Dirichlet spectrum /
//! undecided) and a fit of the large-coupling law `λ ≈ -α²/deg²`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::MetricGraph;
use crate::secular::{self, DirichletMode, Region, RootResult, SecularFunction, NEWTON_MAX_ITER};

/// Angular margin keeping a direction strictly inside the open left
/// half-plane before it counts as a left-sector path.
pub const SECTOR_MARGIN: f64 = 0.05;

/// `α_j(t) = α⁰_j + t d_j e^{iθ_j}` for every Robin vertex `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParameterPath {
    pub base: Vec<Complex64>,
    pub modulus: Vec<f64>,
    pub angle: Vec<f64>,
}

/// Which large-coupling regime a vertex is in along the path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// The direction lies in a closed subsector of the open left
    /// half-plane; such vertices produce divergent eigenvalues.
    SectorLeft,
    /// `Re α_j` stays bounded below.
    BoundedBelow,
    /// Left half-plane but within the margin of the imaginary axis.
    Marginal,
}

impl ParameterPath {
    pub fn new(base: Vec<Complex64>, modulus: Vec<f64>, angle: Vec<f64>) -> Result<Self> {
        let k = base.len();
        if modulus.len() != k {
            return Err(Error::AlphaLength { expected: k, got: modulus.len() });
        }
        if angle.len() != k {
            return Err(Error::AlphaLength { expected: k, got: angle.len() });
        }
        if modulus.iter().any(|d| !(d.is_finite() && *d >= 0.0)) {
            return Err(Error::NotApplicable("direction modulus must be finite and nonnegative"));
        }
        Ok(ParameterPath { base, modulus, angle })
    }

    /// Every vertex moves with the same modulus and angle.
    pub fn uniform(base: Vec<Complex64>, modulus: f64, angle: f64) -> Self {
        let k = base.len();
        ParameterPath { base, modulus: vec![modulus; k], angle: vec![angle; k] }
    }

    /// A path that does not move.
    pub fn frozen(base: Vec<Complex64>) -> Self {
        Self::uniform(base, 0.0, 0.0)
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// `α'(t)`.
    pub fn velocity(&self) -> Vec<Complex64> {
        self.modulus
            .iter()
            .zip(&self.angle)
            .map(|(&d, &th)| Complex64::from_polar(d, th))
            .collect()
    }

    pub fn alpha_at(&self, t: f64) -> Vec<Complex64> {
        self.base.iter().zip(self.velocity()).map(|(&a, v)| a + t * v).collect()
    }

    pub fn tags(&self) -> Vec<CaseTag> {
        self.modulus
            .iter()
            .zip(&self.angle)
            .map(|(&d, &th)| {
                if d == 0.0 || th.cos() >= 0.0 {
                    CaseTag::BoundedBelow
                } else {
                    let from_negative_axis = (th.rem_euclid(2.0 * PI) - PI).abs();
                    if from_negative_axis < std::f64::consts::FRAC_PI_2 - SECTOR_MARGIN {
                        CaseTag::SectorLeft
                    } else {
                        CaseTag::Marginal
                    }
                }
            })
            .collect()
    }

    /// Number of left-sector vertices, i.e. the predicted number of
    /// divergent eigenvalues.
    pub fn divergent_prediction(&self) -> usize {
        self.tags().iter().filter(|t| **t == CaseTag::SectorLeft).count()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceConfig {
    pub t_end: f64,
    /// Newton tolerance (relative to `1 + |λ|`).
    pub tol: f64,
    pub div_threshold: f64,
    pub conv_tol: f64,
    /// Values of `t` that must appear among the samples.
    pub checkpoints: Vec<f64>,
    /// Stop a branch as soon as it is classified divergent instead of
    /// running to `t_end`; far out the basis functions grow like
    /// `e^{|Im √λ| ℓ}` and would eventually overflow.
    pub stop_when_divergent: bool,
    /// On a detected crossing, step `t` past it by `1e-4 T` and re-seed
    /// from the nearest root instead of stopping.
    pub restart_on_crossing: bool,
}

impl Default for TraceConfig {
    fn default() -> Self {
        TraceConfig {
            t_end: 1.0,
            tol: 1e-10,
            div_threshold: 1e3,
            conv_tol: 1e-6,
            checkpoints: Vec::new(),
            stop_when_divergent: true,
            restart_on_crossing: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BranchSample {
    pub t: f64,
    pub alpha: Vec<Complex64>,
    pub lambda: Complex64,
    /// Normalised `|det|` at `lambda`.
    pub residual: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BranchStatus {
    Divergent,
    DirichletConvergent(Complex64),
    Undecided,
}

impl BranchStatus {
    pub fn label(&self) -> &'static str {
        match self {
            BranchStatus::Divergent => "divergent",
            BranchStatus::DirichletConvergent(_) => "dirichlet_convergent",
            BranchStatus::Undecided => "undecided",
        }
    }
}

/// Why tracing ended.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum StopReason {
    Completed,
    /// Classified divergent before `t_end`.
    Diverged,
    /// `det` has a (near) multiple root here; branches meet.
    Crossing { t: f64, lambda: Complex64 },
    /// The step size fell below `T · 1e-8`.
    StepFloor { t: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Branch {
    pub origin: RootResult,
    pub samples: Vec<BranchSample>,
    pub status: BranchStatus,
    pub stop: StopReason,
}

impl Branch {
    pub fn last(&self) -> &BranchSample {
        self.samples.last().expect("a branch always has its origin sample")
    }

    /// The sample at `t`, if one was recorded there.
    pub fn at(&self, t: f64) -> Option<&BranchSample> {
        self.samples.iter().find(|s| (s.t - t).abs() <= 1e-12 * (1.0 + t.abs()))
    }
}

/// Distance from `z` to the half-line `[0, ∞)`.
pub fn distance_to_positive_axis(z: Complex64) -> f64 {
    if z.re >= 0.0 {
        z.im.abs()
    } else {
        z.norm()
    }
}

/// Corrected Newton at fixed parameters. Returns `None` on failure.
fn correct(f: &SecularFunction, z0: Complex64, w: usize, tol: f64) -> Option<Complex64> {
    let mut z = z0;
    for it in 0..NEWTON_MAX_ITER {
        let sys = f.assemble(z).ok()?;
        let Some(ld) = sys.log_derivative() else { return Some(z) };
        let step = w as f64 / ld;
        if !(step.re.is_finite() && step.im.is_finite()) {
            return Some(z);
        }
        if it == 0 && step.norm() < tol * (1.0 + z.norm()) {
            // already on the branch: leave it untouched so a frozen path
            // reproduces its samples exactly
            return Some(z);
        }
        z -= step;
        if step.norm() < tol * (1.0 + z.norm()) {
            return Some(z);
        }
    }
    None
}

/// `dλ/dt` from implicit differentiation of `det A(λ, α(t)) = 0`.
fn velocity(f: &SecularFunction, z: Complex64, dalpha: &[Complex64]) -> Option<Complex64> {
    let try_at = |z: Complex64| -> Option<Complex64> {
        let sys = f.assemble(z).ok()?;
        let (da, dl) = sys.parameter_derivatives()?;
        let num: Complex64 = da.iter().zip(dalpha).map(|(a, b)| a * b).sum();
        let v = -num / dl;
        (v.re.is_finite() && v.im.is_finite()).then_some(v)
    };
    try_at(z).or_else(|| try_at(z + Complex64::from_polar(1e-7 * (1.0 + z.norm()), 0.45)))
}

/// Normalised `|det'|`, i.e. `|det'| (1 + |λ|) / Π‖row‖`, from a one-sided
/// difference; tiny values flag a multiple root.
fn derivative_size(f: &SecularFunction, z: Complex64) -> f64 {
    let h = 1e-6 * (1.0 + z.norm());
    let Ok(s) = f.sample(z + h) else { return f64::INFINITY };
    let Ok(s0) = f.sample(z) else { return f64::INFINITY };
    let diff = s.det.scaled(s.hadamard_log) - s0.det.scaled(s.hadamard_log);
    diff.norm() / h * (1.0 + z.norm())
}

/// Follows the root `start` of the secular determinant at `t = 0` along
/// `path` up to `config.t_end`. A start root of multiplicity `w > 1` is
/// followed as a cluster with `w`-modified Newton steps.
pub fn trace_branch(
    graph: &MetricGraph,
    path: &ParameterPath,
    start: &RootResult,
    config: &TraceConfig,
    dirichlet: &[Complex64],
) -> Result<Branch> {
    let t_end = config.t_end;
    if !(t_end.is_finite() && t_end > 0.0) {
        return Err(Error::NotApplicable("horizon T must be positive"));
    }
    let w = start.multiplicity.max(1);
    let mut f = SecularFunction::with_alpha(graph, &path.alpha_at(0.0))?;
    let dalpha = path.velocity();
    let tol = config.tol;
    // a quarter of the typical gap between eigenvalues near λ: √λ-spacing
    // π/|G| mapped to λ
    let gap = PI / graph.total_length();
    let max_move = |z: Complex64| 0.25 * gap * (2.0 * z.norm().sqrt() + gap);

    let mut lambda = correct(&f, start.lambda, w, tol).unwrap_or(start.lambda);
    let residual = |f: &SecularFunction, z| f.sample(z).map(|s| s.normalized()).unwrap_or(f64::NAN);
    let mut samples = vec![BranchSample { t: 0.0, alpha: path.alpha_at(0.0), lambda, residual: residual(&f, lambda) }];
    let mut checkpoints: Vec<f64> = config.checkpoints.iter().copied().filter(|&c| c > 0.0 && c < t_end).collect();
    checkpoints.sort_by(f64::total_cmp);
    checkpoints.push(t_end);

    let floor = t_end * 1e-8;
    let max_dt = t_end / 20.0;
    let mut dt = t_end / 100.0;
    let mut t = 0.0;
    let mut prev_lambda = lambda;
    let mut streak = 0;
    let mut stop = StopReason::Completed;

    while t < t_end {
        let target = *checkpoints.iter().find(|&&c| c > t).unwrap_or(&t_end);
        let t_next = (t + dt).min(target);
        let h = t_next - t;
        let Some(v) = velocity(&f, lambda, &dalpha) else {
            if w == 1 && config.restart_on_crossing {
                if let Some(z) = reseed(graph, path, t + 1e-4 * t_end, lambda, &prev_lambda, tol) {
                    t += 1e-4 * t_end;
                    f.set_alpha(&path.alpha_at(t))?;
                    lambda = z;
                    continue;
                }
            }
            stop = StopReason::Crossing { t, lambda };
            break;
        };
        let predicted = lambda + h * v;
        let reach = max_move(lambda);
        let accepted = if (predicted - lambda).norm() > reach {
            None
        } else {
            let mut trial = f.clone();
            trial.set_alpha(&path.alpha_at(t_next))?;
            correct(&trial, predicted, w, tol)
                .filter(|z| {
                    let jump = (z - predicted).norm();
                    jump <= 0.5 * (predicted - lambda).norm() + 1e-6 * (1.0 + z.norm()) && (z - lambda).norm() <= reach
                })
                .map(|z| (z, trial))
        };
        match accepted {
            Some((z, trial)) => {
                prev_lambda = lambda;
                lambda = z;
                t = t_next;
                f = trial;
                let alpha = path.alpha_at(t);
                samples.push(BranchSample { t, alpha, lambda, residual: residual(&f, lambda) });
                streak += 1;
                if streak >= 3 {
                    dt = (2.0 * dt).min(max_dt);
                    streak = 0;
                }
                if w == 1 && derivative_size(&f, lambda) < 1e-12 {
                    if config.restart_on_crossing {
                        let t2 = (t + 1e-4 * t_end).min(t_end);
                        if let Some(z) = reseed(graph, path, t2, lambda, &prev_lambda, tol) {
                            t = t2;
                            f.set_alpha(&path.alpha_at(t))?;
                            lambda = z;
                            samples.push(BranchSample {
                                t,
                                alpha: path.alpha_at(t),
                                lambda,
                                residual: residual(&f, lambda),
                            });
                            continue;
                        }
                    }
                    stop = StopReason::Crossing { t, lambda };
                    break;
                }
                if config.stop_when_divergent && t < t_end {
                    if let BranchStatus::Divergent = classify_samples(&samples, dirichlet, config) {
                        stop = StopReason::Diverged;
                        break;
                    }
                }
            }
            None => {
                streak = 0;
                dt *= 0.5;
                if dt < floor {
                    stop = StopReason::StepFloor { t };
                    break;
                }
            }
        }
    }

    let mut branch = Branch { origin: *start, samples, status: BranchStatus::Undecided, stop };
    branch.status = match stop {
        StopReason::Completed | StopReason::Diverged => classify_limit(&branch, dirichlet, config),
        _ => BranchStatus::Undecided,
    };
    Ok(branch)
}

/// Root nearest to `near` at parameter `t`, searched in a box sized by the
/// last step.
fn reseed(
    graph: &MetricGraph,
    path: &ParameterPath,
    t: f64,
    near: Complex64,
    prev: &Complex64,
    tol: f64,
) -> Option<Complex64> {
    let f = SecularFunction::with_alpha(graph, &path.alpha_at(t)).ok()?;
    let h = (4.0 * (near - prev).norm()).max(1e-3 * (1.0 + near.norm()));
    let roots = secular::find_roots_with(&f, &Region::around(near, h), tol).ok()?;
    roots
        .into_iter()
        .filter(|r| r.multiplicity == 1)
        .min_by(|a, b| (a.lambda - near).norm().total_cmp(&(b.lambda - near).norm()))
        .map(|r| r.lambda)
}

fn classify_samples(samples: &[BranchSample], dirichlet: &[Complex64], config: &TraceConfig) -> BranchStatus {
    const WINDOW: usize = 10;
    if samples.len() < WINDOW {
        return BranchStatus::Undecided;
    }
    let tail = &samples[samples.len() - WINDOW..];
    let end = tail[WINDOW - 1].lambda;
    let dist: Vec<f64> = tail.iter().map(|s| distance_to_positive_axis(s.lambda)).collect();
    if dist[WINDOW - 1] > config.div_threshold && dist.windows(2).all(|p| p[1] > p[0]) {
        return BranchStatus::Divergent;
    }
    let nearest = dirichlet
        .iter()
        .copied()
        .min_by(|a, b| (a - end).norm().total_cmp(&(b - end).norm()));
    if let Some(mu) = nearest {
        let d: Vec<f64> = tail.iter().map(|s| (s.lambda - mu).norm()).collect();
        let slack = 1e-12 * (1.0 + mu.norm());
        if d[WINDOW - 1] < config.conv_tol && d.windows(2).all(|p| p[1] <= p[0] + slack) {
            return BranchStatus::DirichletConvergent(mu);
        }
    }
    BranchStatus::Undecided
}

/// Classifies the end of a traced branch against a computed Dirichlet
/// spectrum; at least ten samples are needed for any decision.
pub fn classify_limit(branch: &Branch, dirichlet: &[Complex64], config: &TraceConfig) -> BranchStatus {
    classify_samples(&branch.samples, dirichlet, config)
}

/// Result of fitting `λ ≈ -α_j²/c²` on the asymptotic part of a branch.
#[derive(Clone, Debug, PartialEq)]
pub struct DivergenceFit {
    pub coefficient: f64,
    /// Slope of `ln|λ + α_j²/deg²| - 2 ln|α_j|` against `Re α_j`.
    pub rate: f64,
    pub samples_used: usize,
}

/// Fits the divergent law on the samples with `Re α_j < -5/ℓ_G`.
pub fn fit_divergence_law(graph: &MetricGraph, branch: &Branch, j: usize) -> Result<DivergenceFit> {
    let robin = graph.robin_vertices();
    let Some(&v) = robin.get(j) else {
        return Err(Error::AlphaLength { expected: robin.len(), got: j + 1 });
    };
    let deg = graph.degree(v) as f64;
    let cutoff = -5.0 / graph.shortest_edge();
    let pts: Vec<(Complex64, Complex64)> = branch
        .samples
        .iter()
        .filter(|s| s.alpha[j].re < cutoff)
        .map(|s| (s.alpha[j], s.lambda))
        .collect();
    if pts.len() < 3 {
        return Err(Error::AsymptoticRegimeNotReached { usable: pts.len() });
    }
    // least squares for λ = -s α² over real s
    let num: f64 = pts.iter().map(|(a, l)| ((a * a).conj() * l).re).sum();
    let den: f64 = pts.iter().map(|(a, _)| (a * a).norm_sqr()).sum();
    let s = -num / den;
    let coefficient = if s > 0.0 { 1.0 / s.sqrt() } else { f64::NAN };

    let rate_pts: Vec<(f64, f64)> = pts
        .iter()
        .filter_map(|(a, l)| {
            let err = (l + a * a / (deg * deg)).norm();
            (err > 1e3 * f64::EPSILON * l.norm()).then(|| (a.re, err.ln() - 2.0 * a.norm().ln()))
        })
        .collect();
    if rate_pts.len() < 3 {
        return Err(Error::AsymptoticRegimeNotReached { usable: rate_pts.len() });
    }
    let n = rate_pts.len() as f64;
    let mx = rate_pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = rate_pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = rate_pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = rate_pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(DivergenceFit { coefficient, rate: sxy / sxx, samples_used: pts.len() })
}

/// Outcome of tracing every eigenvalue of a window.
#[derive(Clone, Debug)]
pub struct DivergenceCount {
    /// Divergent branches, counted with multiplicity.
    pub divergent: usize,
    /// The prediction: number of left-sector vertices.
    pub predicted: usize,
    pub branches: Vec<Branch>,
}

/// Traces all eigenvalues found in `window` at `t = 0` and counts the
/// divergent ones. The Dirichlet spectrum used for classification is
/// computed on `dirichlet_window`.
pub fn count_divergent(
    graph: &MetricGraph,
    path: &ParameterPath,
    window: &Region,
    dirichlet_window: &Region,
    config: &TraceConfig,
) -> Result<DivergenceCount> {
    let g0 = graph.with_alpha(&path.alpha_at(0.0))?;
    let starts = secular::find_roots(&g0, window, config.tol)?;
    let dirichlet: Vec<Complex64> =
        secular::dirichlet_spectrum(graph, DirichletMode::RobinVertices, dirichlet_window, config.tol)?
            .into_iter()
            .map(|r| r.lambda)
            .collect();
    let branches: Vec<Branch> = starts
        .par_iter()
        .map(|s| trace_branch(graph, path, s, config, &dirichlet))
        .collect::<Result<_>>()?;
    let undecided = branches.iter().filter(|b| b.status == BranchStatus::Undecided).count();
    if undecided > 0 {
        return Err(Error::Inconclusive { t_end: config.t_end, undecided });
    }
    let divergent = branches
        .iter()
        .filter(|b| b.status == BranchStatus::Divergent)
        .map(|b| b.origin.multiplicity)
        .sum();
    Ok(DivergenceCount { divergent, predicted: path.divergent_prediction(), branches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, VertexCondition};
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn root(z: Complex64) -> RootResult {
        RootResult { lambda: z, multiplicity: 1, residual: 0.0 }
    }

    #[test]
    fn tags() {
        let p = ParameterPath::new(
            vec![c(0.0, 0.0); 4],
            vec![1.0, 1.0, 1.0, 0.0],
            vec![PI, PI / 2.0, PI / 2.0 + 0.01, PI],
        )
        .unwrap();
        assert_eq!(
            p.tags(),
            vec![CaseTag::SectorLeft, CaseTag::BoundedBelow, CaseTag::Marginal, CaseTag::BoundedBelow]
        );
        assert_eq!(p.divergent_prediction(), 1);
    }

    #[test]
    fn pt_branch_reaches_t_squared() {
        let g = fixtures::pt_interval(1.0, 0.0);
        // α(t) = (-it, +it)
        let path = ParameterPath::new(vec![c(0.0, 0.0); 2], vec![1.0, 1.0], vec![-PI / 2.0, PI / 2.0]).unwrap();
        let cfg = TraceConfig { t_end: 3.0, ..TraceConfig::default() };
        let b = trace_branch(&g, &path, &root(c(0.0, 0.0)), &cfg, &[]).unwrap();
        assert_eq!(b.stop, StopReason::Completed);
        assert!((b.last().lambda - 9.0).norm() < 1e-8, "{:?}", b.last());
        assert!(b.samples.iter().all(|s| s.residual < 1e-8));
    }

    #[test]
    fn pt_branch_at_dirichlet_point_converges() {
        let g = fixtures::pt_interval(1.0, 0.0);
        let path = ParameterPath::new(vec![c(0.0, 0.0); 2], vec![1.0, 1.0], vec![-PI / 2.0, PI / 2.0]).unwrap();
        let cfg = TraceConfig { t_end: 3.0, ..TraceConfig::default() };
        let b = trace_branch(&g, &path, &root(c(PI * PI, 0.0)), &cfg, &[c(PI * PI, 0.0)]).unwrap();
        assert_eq!(b.status, BranchStatus::DirichletConvergent(c(PI * PI, 0.0)));
    }

    #[test]
    fn star_branch_diverges() {
        let g = fixtures::star(&[1.0; 3], c(0.0, 0.0), VertexCondition::Standard);
        let path = ParameterPath::uniform(vec![c(0.0, 0.0)], 1.0, PI);
        let cfg = TraceConfig { t_end: 100.0, checkpoints: vec![30.0], ..TraceConfig::default() };
        let b = trace_branch(&g, &path, &root(c(0.0, 0.0)), &cfg, &[]).unwrap();
        let at30 = b.at(30.0).unwrap().lambda;
        assert!((at30.re + 100.0).abs() < 0.01, "{at30}");
        assert_eq!(b.status, BranchStatus::Divergent);
    }

    #[test]
    fn frozen_path_is_constant() {
        let g = fixtures::with_uniform_alpha(&fixtures::f2_path(), c(-1.0, 0.5));
        let start = secular::find_roots(&g, &Region::new(-5.0, 5.0, -3.0, 3.0).unwrap(), 1e-12).unwrap()[0];
        let path = ParameterPath::frozen(g.alpha());
        let cfg = TraceConfig { t_end: 1.0, ..TraceConfig::default() };
        let b = trace_branch(&g, &path, &start, &cfg, &[]).unwrap();
        assert!(b.samples.windows(2).skip(1).all(|w| w[0].lambda == w[1].lambda));
        assert_eq!(b.status, BranchStatus::Undecided);
    }

    #[test]
    fn fit_on_star() {
        let g = fixtures::star(&[1.0; 3], c(0.0, 0.0), VertexCondition::Standard);
        let path = ParameterPath::uniform(vec![c(0.0, 0.0)], 1.0, PI);
        let cfg = TraceConfig { t_end: 30.0, checkpoints: vec![10.0, 20.0], ..TraceConfig::default() };
        let b = trace_branch(&g, &path, &root(c(0.0, 0.0)), &cfg, &[]).unwrap();
        let fit = fit_divergence_law(&g, &b, 0).unwrap();
        assert!((fit.coefficient - 3.0).abs() < 0.03, "{fit:?}");
    }

    #[test]
    fn regime_not_reached() {
        let g = fixtures::star(&[1.0; 3], c(0.0, 0.0), VertexCondition::Standard);
        let path = ParameterPath::uniform(vec![c(0.0, 0.0)], 1.0, PI);
        let cfg = TraceConfig { t_end: 4.0, ..TraceConfig::default() };
        let b = trace_branch(&g, &path, &root(c(0.0, 0.0)), &cfg, &[]).unwrap();
        assert!(matches!(fit_divergence_law(&g, &b, 0), Err(Error::AsymptoticRegimeNotReached { .. })));
    }
}
