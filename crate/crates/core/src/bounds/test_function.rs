use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{MetricGraph, Side, VertexCondition};

/// Nodes per edge used when sampling random test functions.
pub const DEFAULT_NODES: usize = 16;

/// Continuous piecewise-linear function on a metric graph, stored as node
/// values on a uniform grid of each edge (endpoints included).
#[derive(Clone, Debug, PartialEq)]
pub struct TestFunction {
    values: Vec<Vec<Complex64>>,
}

/// `‖f‖²` and `‖f'‖²` over some part of a graph.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Norms {
    pub l2_sq: f64,
    pub grad_sq: f64,
}

impl std::ops::AddAssign for Norms {
    fn add_assign(&mut self, o: Norms) {
        self.l2_sq += o.l2_sq;
        self.grad_sq += o.grad_sq;
    }
}

impl TestFunction {
    /// Checks node counts and exact continuity at every vertex.
    pub fn new(graph: &MetricGraph, values: Vec<Vec<Complex64>>) -> Result<Self> {
        if values.len() != graph.edges().len() {
            return Err(Error::InvalidGraph(format!(
                "test function has {} edges, graph has {}",
                values.len(),
                graph.edges().len()
            )));
        }
        if values.iter().any(|v| v.len() < 2) {
            return Err(Error::InvalidGraph("every edge needs at least two nodes".into()));
        }
        let f = TestFunction { values };
        for (v, ends) in graph.incidence().iter().enumerate() {
            let first = ends.first().map(|p| f.end_value(p.edge, p.side));
            if ends.iter().any(|p| Some(f.end_value(p.edge, p.side)) != first) {
                return Err(Error::InvalidGraph(format!("test function is discontinuous at vertex {v}")));
            }
        }
        Ok(f)
    }

    /// Linear interpolation of vertex values along every edge.
    pub fn from_vertex_values(graph: &MetricGraph, nodes: usize, vertex: &[Complex64]) -> Self {
        let nodes = nodes.max(2);
        let values = graph
            .edges()
            .iter()
            .map(|e| {
                (0..nodes)
                    .map(|i| {
                        let x = i as f64 / (nodes - 1) as f64;
                        vertex[e.from] * (1.0 - x) + vertex[e.to] * x
                    })
                    .collect()
            })
            .collect();
        TestFunction { values }
    }

    pub fn constant(graph: &MetricGraph, nodes: usize, c: Complex64) -> Self {
        Self::from_vertex_values(graph, nodes, &vec![c; graph.vertices().len()])
    }

    /// Node values i.i.d. uniform on `[-1, 1]`; each vertex gets the average
    /// of the draws at its incident edge ends, and Dirichlet vertices get 0.
    pub fn random<R: Rng + ?Sized>(graph: &MetricGraph, nodes: usize, rng: &mut R) -> Self {
        let nodes = nodes.max(2);
        let mut values: Vec<Vec<Complex64>> = graph
            .edges()
            .iter()
            .map(|_| (0..nodes).map(|_| Complex64::new(rng.random_range(-1.0..=1.0), 0.0)).collect())
            .collect();
        for (v, ends) in graph.incidence().iter().enumerate() {
            if ends.is_empty() {
                continue;
            }
            let value = if graph.vertices()[v].condition == VertexCondition::Dirichlet {
                Complex64::new(0.0, 0.0)
            } else {
                let idx = |side| if side == Side::Start { 0 } else { nodes - 1 };
                let sum: Complex64 = ends.iter().map(|p| values[p.edge][idx(p.side)]).sum();
                sum / ends.len() as f64
            };
            for p in ends {
                let i = if p.side == Side::Start { 0 } else { nodes - 1 };
                values[p.edge][i] = value;
            }
        }
        TestFunction { values }
    }

    pub fn values(&self) -> &[Vec<Complex64>] {
        &self.values
    }

    fn end_value(&self, edge: usize, side: Side) -> Complex64 {
        let v = &self.values[edge];
        match side {
            Side::Start => v[0],
            Side::End => v[v.len() - 1],
        }
    }

    /// `f(v)`; zero for a vertex without edges.
    pub fn vertex_value(&self, graph: &MetricGraph, v: usize) -> Complex64 {
        graph
            .incidence()
            .get(v)
            .and_then(|ends| ends.first())
            .map(|p| self.end_value(p.edge, p.side))
            .unwrap_or_default()
    }

    /// Exact norms over `[a, b] ⊂ [0, ℓ]` of one edge.
    pub fn segment_norms(&self, edge: usize, length: f64, a: f64, b: f64) -> Norms {
        let v = &self.values[edge];
        let cells = v.len() - 1;
        let h = length / cells as f64;
        let at = |x: f64| {
            let i = ((x / h).floor() as usize).min(cells - 1);
            let s = (x - i as f64 * h) / h;
            v[i] * (1.0 - s) + v[i + 1] * s
        };
        let mut out = Norms::default();
        for i in 0..cells {
            let (x0, x1) = (i as f64 * h, (i + 1) as f64 * h);
            let (lo, hi) = (x0.max(a), x1.min(b));
            if hi <= lo {
                continue;
            }
            let (fa, fb) = if lo == x0 && hi == x1 { (v[i], v[i + 1]) } else { (at(lo), at(hi)) };
            let len = hi - lo;
            out.l2_sq += len / 3.0 * (fa.norm_sqr() + (fa * fb.conj()).re + fb.norm_sqr());
            // the slope is constant on the cell
            out.grad_sq += ((v[i + 1] - v[i]) / h).norm_sqr() * len;
        }
        out
    }

    pub fn edge_norms(&self, graph: &MetricGraph, edge: usize) -> Norms {
        let ell = graph.edges()[edge].length;
        self.segment_norms(edge, ell, 0.0, ell)
    }

    pub fn norms(&self, graph: &MetricGraph) -> Norms {
        let mut n = Norms::default();
        for e in 0..graph.edges().len() {
            n += self.edge_norms(graph, e);
        }
        n
    }
}

/// `a_α[f, f] / ‖f‖²` with `a_α[f, f] = ‖f'‖² + Σ_j α_j |f(v_j)|²`.
pub fn rayleigh_quotient(graph: &MetricGraph, alpha: &[Complex64], f: &TestFunction) -> Result<Complex64> {
    let robin = graph.robin_vertices();
    if alpha.len() != robin.len() {
        return Err(Error::AlphaLength { expected: robin.len(), got: alpha.len() });
    }
    if graph
        .dirichlet_vertices()
        .iter()
        .any(|&v| f.vertex_value(graph, v) != Complex64::new(0.0, 0.0))
    {
        return Err(Error::NotApplicable("test function must vanish at Dirichlet vertices"));
    }
    let n = f.norms(graph);
    if n.l2_sq == 0.0 {
        return Err(Error::ZeroNorm);
    }
    let boundary: Complex64 = robin
        .iter()
        .zip(alpha)
        .map(|(&v, a)| a * f.vertex_value(graph, v).norm_sqr())
        .sum();
    Ok((n.grad_sq + boundary) / n.l2_sq)
}
