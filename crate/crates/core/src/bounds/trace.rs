use std::collections::BTreeSet;

use super::test_function::{Norms, TestFunction};
use crate::error::{Error, Result};
use crate::graph::{MetricGraph, Side};

/// Which form of the vertex trace inequality to check.
#[derive(Clone, Debug, PartialEq)]
pub enum TraceMode {
    /// `deg v |f(v)|² ≤ 2‖f‖‖f'‖ + ‖f‖²/ℓ_S` on the star at `vertex` whose
    /// edges are shortened to the fraction `xi[e]` (indexed by edge, values
    /// in `(0, 1]`).
    Local { vertex: usize, xi: Vec<f64> },
    /// `Σ_{v∈V₀} deg v |f(v)|² ≤ 2‖f‖‖f'‖ + ‖f‖²/ℓ_{G₀}` on the union `G₀` of
    /// the spanning stars of `V₀`.
    Global { vertices: Vec<usize> },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TraceCheck {
    pub lhs: f64,
    pub rhs: f64,
}

impl TraceCheck {
    pub fn slack(&self) -> f64 {
        self.rhs - self.lhs
    }
}

/// Evaluates both sides with exact piecewise-linear norms. Graphs with
/// loops are rejected; subdivide them first.
pub fn trace_inequality_check(graph: &MetricGraph, f: &TestFunction, mode: &TraceMode) -> Result<TraceCheck> {
    if graph.has_loops() {
        return Err(Error::NotApplicable("trace inequality needs a loop-free graph"));
    }
    let inc = graph.incidence();
    let edges = graph.edges();
    match mode {
        TraceMode::Local { vertex, xi } => {
            let v = *vertex;
            if v >= inc.len() {
                return Err(Error::UnknownVertex(v.to_string()));
            }
            if xi.len() != edges.len() || xi.iter().any(|&x| !(x > 0.0 && x <= 1.0)) {
                return Err(Error::NotApplicable("scaling factors must lie in (0, 1], one per edge"));
            }
            let mut n = Norms::default();
            let mut shortest = f64::INFINITY;
            for p in &inc[v] {
                let ell = edges[p.edge].length;
                let part = xi[p.edge] * ell;
                shortest = shortest.min(part);
                n += match p.side {
                    Side::Start => f.segment_norms(p.edge, ell, 0.0, part),
                    Side::End => f.segment_norms(p.edge, ell, ell - part, ell),
                };
            }
            let lhs = inc[v].len() as f64 * f.vertex_value(graph, v).norm_sqr();
            Ok(TraceCheck { lhs, rhs: rhs(n, shortest) })
        }
        TraceMode::Global { vertices } => {
            let mut star_edges = BTreeSet::new();
            let mut lhs = 0.0;
            for &v in vertices {
                if v >= inc.len() {
                    return Err(Error::UnknownVertex(v.to_string()));
                }
                lhs += inc[v].len() as f64 * f.vertex_value(graph, v).norm_sqr();
                star_edges.extend(inc[v].iter().map(|p| p.edge));
            }
            let mut n = Norms::default();
            let mut shortest = f64::INFINITY;
            for &e in &star_edges {
                n += f.edge_norms(graph, e);
                shortest = shortest.min(edges[e].length);
            }
            Ok(TraceCheck { lhs, rhs: rhs(n, shortest) })
        }
    }
}

fn rhs(n: Norms, shortest: f64) -> f64 {
    if !shortest.is_finite() {
        return 0.0;
    }
    2.0 * n.l2_sq.sqrt() * n.grad_sq.sqrt() + n.l2_sq / shortest
}
