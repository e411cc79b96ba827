use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::MetricGraph;
use crate::secular::{self, Region, RootResult};

/// `-(Re α)²/𝔇² + Re α/(𝔇 ℓ_G)` for `Re α < 0`, and 0 otherwise (the
/// numerical range then lies in the right half-plane).
pub fn real_part_lower_bound(alpha: Complex64, min_degree: f64, shortest: f64) -> f64 {
    let a = alpha.re;
    if a >= 0.0 {
        return 0.0;
    }
    -a * a / (min_degree * min_degree) + a / (min_degree * shortest)
}

fn uniform_real_alpha(graph: &MetricGraph) -> Result<f64> {
    let a = graph.alpha();
    let Some(&a0) = a.first() else { return Err(Error::NoRobinVertices) };
    if a0.im != 0.0 || a.iter().any(|&x| x != a0) {
        return Err(Error::NotApplicable("all Robin parameters must be equal and real"));
    }
    Ok(a0.re)
}

/// Upper bound for the lowest eigenvalue when every Robin parameter equals
/// the same real `α < 0`: `min{-(α/𝔇 + 1/ℓ_G)², kα/|G|}`, the first term
/// only when `α < -𝔇/ℓ_G`.
pub fn first_eigenvalue_upper_bound(graph: &MetricGraph) -> Result<f64> {
    let alpha = uniform_real_alpha(graph)?;
    if alpha >= 0.0 {
        return Err(Error::NotApplicable("upper bound needs alpha < 0"));
    }
    let m = graph.metrics();
    let d = m.min_robin_degree.ok_or(Error::NoRobinVertices)? as f64;
    let ell = m.shortest_edge;
    let k = graph.robin_vertices().len() as f64;
    let flat = k * alpha / m.total_length;
    let star = if alpha < -d / ell { -(alpha / d + 1.0 / ell).powi(2) } else { f64::INFINITY };
    Ok(star.min(flat))
}

/// Lower and upper bounds for the lowest eigenvalue at a uniform real
/// coupling `α < 0`.
pub fn two_sided_bounds(graph: &MetricGraph) -> Result<(f64, f64)> {
    let alpha = uniform_real_alpha(graph)?;
    let m = graph.metrics();
    let d = m.min_robin_degree.ok_or(Error::NoRobinVertices)? as f64;
    let lower = real_part_lower_bound(Complex64::new(alpha, 0.0), d, m.shortest_edge);
    Ok((lower, first_eigenvalue_upper_bound(graph)?))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ImagCheck {
    pub bound: f64,
    pub holds: bool,
}

/// `|Im λ| ≤ max_j |Im α_j|/deg v_j · (2√Re λ + 1/(𝔇ℓ_G))`, valid when every
/// `Re α_j ≥ 0`. A slightly negative `Re λ` from rounding is treated as 0.
pub fn imag_part_bound(graph: &MetricGraph, lambda: Complex64) -> Result<ImagCheck> {
    let alpha = graph.alpha();
    if alpha.is_empty() {
        return Err(Error::NoRobinVertices);
    }
    if alpha.iter().any(|a| a.re < 0.0) {
        return Err(Error::NotApplicable("imaginary-part bound needs Re alpha_j >= 0 for all j"));
    }
    let m = graph.metrics();
    let d = m.min_robin_degree.ok_or(Error::NoRobinVertices)? as f64;
    let deg = graph.degrees();
    let ratio = graph
        .robin_vertices()
        .iter()
        .zip(&alpha)
        .map(|(&v, a)| a.im.abs() / deg[v] as f64)
        .fold(0.0, f64::max);
    let bound = ratio * (2.0 * lambda.re.max(0.0).sqrt() + 1.0 / (d * m.shortest_edge));
    Ok(ImagCheck { bound, holds: lambda.im.abs() <= bound })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StarSolution {
    /// Lowest eigenvalue `-μ*` of the star with Robin centre and Dirichlet
    /// leaves.
    pub lambda: f64,
    /// `-(α/D + 1/ℓ)²`.
    pub upper_bound: f64,
}

/// Solves `√μ coth(√μ ℓ) + α/D = 0` on `μ ∈ (0, (α/D)²]` by bisection.
/// `None` unless `α < -D/ℓ`.
pub fn star_secular_solve(alpha: f64, ell: f64, degree: usize) -> Option<StarSolution> {
    let d = degree as f64;
    if !(alpha < -d / ell) || !ell.is_finite() || ell <= 0.0 {
        return None;
    }
    let g = |k: f64| k / (k * ell).tanh() + alpha / d;
    // bracket in k = √μ: g(0+) = 1/ℓ + α/D < 0 and g(|α|/D) > 0
    let (mut lo, mut hi) = (0.0, -alpha / d);
    while hi - lo > 1e-13 * hi {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if mid > 0.0 && g(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let k = 0.5 * (lo + hi);
    Some(StarSolution { lambda: -k * k, upper_bound: -(alpha / d + 1.0 / ell).powi(2) })
}

#[derive(Clone, Debug, PartialEq)]
pub struct NegativeCount {
    pub count: usize,
    /// The negative eigenvalues, with multiplicity.
    pub roots: Vec<RootResult>,
    /// `Some(k)` when `α < -2 max_j deg v_j/ℓ_j`, where exactly `k`
    /// negative eigenvalues are guaranteed.
    pub predicted: Option<usize>,
    pub window: Region,
}

/// Half-height of the search strip around the negative real axis.
pub const NEGATIVE_STRIP: f64 = 1e-6;

/// Counts eigenvalues in `[-R, 0) × [-δ, δ]` with
/// `R = (Re α)²/𝔇² - Re α/(𝔇ℓ_G) + 1`, which encloses every negative
/// eigenvalue. The right edge sits at `-δ` so that it does not pass
/// through a zero eigenvalue.
pub fn count_negative_eigenvalues(graph: &MetricGraph, tol: f64) -> Result<NegativeCount> {
    let alpha = uniform_real_alpha(graph)?;
    let m = graph.metrics();
    let d = m.min_robin_degree.ok_or(Error::NoRobinVertices)? as f64;
    let r = -real_part_lower_bound(Complex64::new(alpha, 0.0), d, m.shortest_edge) + 1.0;
    let window = Region::new(-r, -NEGATIVE_STRIP, -NEGATIVE_STRIP, NEGATIVE_STRIP)?;
    let roots = secular::find_roots(graph, &window, tol)?;
    let count = roots.iter().map(|x| x.multiplicity).sum();
    let deg = graph.degrees();
    let threshold = graph
        .robin_vertices()
        .iter()
        .zip(&m.robin_shortest_incident)
        .map(|(&v, &l)| deg[v] as f64 / l)
        .fold(0.0, f64::max);
    let predicted = (alpha < -2.0 * threshold).then(|| graph.robin_vertices().len());
    Ok(NegativeCount { count, roots, predicted, window })
}
