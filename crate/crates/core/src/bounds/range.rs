use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::MetricGraph;

/// Enclosure of the numerical range of the form `a_α`.
#[derive(Clone, Debug, PartialEq)]
pub enum RangeRegion {
    /// `{t + α s : t ≥ 0, 0 ≤ s ≤ 2√t/𝔇 + 1/(𝔇ℓ_G)}`.
    Constant { alpha: Complex64, min_degree: f64, shortest: f64 },
    /// `{t + Σ α_j s_j : t ≥ 0, 0 ≤ s_j ≤ 2√τ_j/𝔇 + 2/(𝔇ℓ_G), Σ τ_j ≤ t}`.
    Variable { alpha: Vec<Complex64>, min_degree: f64, shortest: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Membership {
    pub member: bool,
    /// Distance from the point to the region (0 inside).
    pub residual: f64,
}

impl RangeRegion {
    pub fn constant(graph: &MetricGraph, alpha: Complex64) -> Result<Self> {
        let m = graph.metrics();
        let d = m.min_robin_degree.ok_or(Error::NoRobinVertices)?;
        Ok(RangeRegion::Constant { alpha, min_degree: d as f64, shortest: m.shortest_edge })
    }

    pub fn variable(graph: &MetricGraph, alpha: Vec<Complex64>) -> Result<Self> {
        let m = graph.metrics();
        let d = m.min_robin_degree.ok_or(Error::NoRobinVertices)?;
        let k = graph.robin_vertices().len();
        if alpha.len() != k {
            return Err(Error::AlphaLength { expected: k, got: alpha.len() });
        }
        Ok(RangeRegion::Variable { alpha, min_degree: d as f64, shortest: m.shortest_edge })
    }

    /// The constant form when all Robin parameters of `graph` agree, the
    /// vertex-dependent one otherwise.
    pub fn for_graph(graph: &MetricGraph) -> Result<Self> {
        let a = graph.alpha();
        match a.first() {
            None => Err(Error::NoRobinVertices),
            Some(&a0) if a.iter().all(|&x| x == a0) => Self::constant(graph, a0),
            Some(_) => Self::variable(graph, a),
        }
    }

    pub fn contains(&self, z: Complex64) -> bool {
        self.membership(z).member
    }

    pub fn membership(&self, z: Complex64) -> Membership {
        match self {
            RangeRegion::Constant { alpha, min_degree, shortest } => {
                constant_membership(z, *alpha, *min_degree, *shortest)
            }
            RangeRegion::Variable { alpha, min_degree, shortest } => {
                let residual = variable_distance(z, alpha, *min_degree, *shortest);
                Membership { member: residual < 1e-6 * (1.0 + z.norm()), residual }
            }
        }
    }
}

fn constant_membership(z: Complex64, alpha: Complex64, d: f64, ell: f64) -> Membership {
    // rounding-level slack only
    let eps = 4.0 * f64::EPSILON * (1.0 + z.norm());
    let smax = |t: f64| 2.0 * t.max(0.0).sqrt() / d + 1.0 / (d * ell);
    if alpha.im != 0.0 {
        let s = z.im / alpha.im;
        let t = z.re - s * alpha.re;
        let over = [-t, -s, s - smax(t)].into_iter().fold(0.0f64, f64::max);
        return Membership { member: over <= eps, residual: over };
    }
    // real coupling: the region lies on the real axis
    let x = z.re;
    let lower = if alpha.re >= 0.0 {
        0.0
    } else {
        let a = -alpha.re;
        -a * a / (d * d) - a / (d * ell)
    };
    let residual = z.im.abs().max(lower - x).max(0.0);
    Membership { member: residual <= eps, residual }
}

/// Distance to the vertex-dependent region through its support function
/// `h(u) = sup_{w ∈ Λ} ⟨u, w⟩`, finite only for `Re u ≤ 0`.
fn variable_distance(z: Complex64, alpha: &[Complex64], d: f64, ell: f64) -> f64 {
    let c = 2.0 / (d * ell);
    let gap = |theta: f64| -> f64 {
        let u = Complex64::from_polar(1.0, theta);
        let proj = u.re * z.re + u.im * z.im;
        let mut h = 0.0;
        for a in alpha {
            let beta = u.re * a.re + u.im * a.im;
            if beta <= 0.0 {
                continue;
            }
            if u.re >= 0.0 {
                return f64::NEG_INFINITY;
            }
            // sup over s ≥ 0 of β s - 𝔇²|Re u|/4 · max(0, s - c)²
            let q = -u.re * d * d / 4.0;
            h += beta * c + beta * beta / (4.0 * q);
        }
        proj - h
    };
    const GRID: usize = 4096;
    let lo = PI / 2.0;
    let step = PI / GRID as f64;
    let (mut best, mut arg) = (f64::NEG_INFINITY, lo);
    for i in 0..=GRID {
        let th = lo + i as f64 * step;
        let g = gap(th);
        if g > best {
            best = g;
            arg = th;
        }
    }
    // golden-section polish of the grid maximiser
    let (mut a, mut b) = ((arg - step).max(lo), (arg + step).min(lo + PI));
    let r = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..60 {
        let x1 = b - r * (b - a);
        let x2 = a + r * (b - a);
        if gap(x1) > gap(x2) {
            b = x2;
        } else {
            a = x1;
        }
    }
    best.max(gap(0.5 * (a + b))).max(0.0)
}
