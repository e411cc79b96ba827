//! Independent check of the secular solver: linear finite elements with a
//! lumped mass matrix on every edge, solved by dense eigendecomposition.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{MetricGraph, VertexCondition};
use crate::linalg::{self, CMatrix};
use crate::secular::{Region, RootResult};

/// Largest matrix handed to the dense eigensolver.
pub const DIMENSION_CAP: usize = 3000;

/// Mass-scaled stiffness operator `M^{-1/2} K M^{-1/2}` in triplet form.
///
/// Unknowns are the non-Dirichlet vertices (in vertex order) followed by
/// the interior nodes of each edge.
#[derive(Clone, Debug)]
pub struct DiscreteOperator {
    pub dimension: usize,
    /// Stiffness entries `(row, col, value)`; duplicates are summed.
    pub stiffness: Vec<(usize, usize, Complex64)>,
    /// Lumped mass per unknown.
    pub mass: Vec<f64>,
    /// Cells per edge.
    pub cells: Vec<usize>,
    /// Largest cell width.
    pub h: f64,
    /// Unknown attached to each vertex, `None` for Dirichlet vertices.
    pub vertex_node: Vec<Option<usize>>,
}

/// Discretises `-Δ` with the vertex conditions of `graph` using
/// `ceil(N ℓ_e)` cells on edge `e`.
pub fn discretize(graph: &MetricGraph, nodes_per_length: f64) -> Result<DiscreteOperator> {
    let shortest = graph.shortest_edge();
    if !(nodes_per_length.is_finite() && nodes_per_length * shortest >= 8.0 - 1e-12) {
        return Err(Error::NotApplicable("mesh needs N >= 8 / shortest edge"));
    }
    let mut vertex_node = vec![None; graph.vertices().len()];
    let mut next = 0;
    for (i, v) in graph.vertices().iter().enumerate() {
        if v.condition != VertexCondition::Dirichlet {
            vertex_node[i] = Some(next);
            next += 1;
        }
    }
    let mut stiffness = Vec::new();
    let mut mass = vec![0.0; next];
    let mut cells = Vec::with_capacity(graph.edges().len());
    let mut h_max: f64 = 0.0;
    for e in graph.edges() {
        let n = (nodes_per_length * e.length).ceil() as usize;
        let h = e.length / n as f64;
        h_max = h_max.max(h);
        cells.push(n);
        let first_interior = next;
        next += n - 1;
        mass.resize(next, 0.0);
        let node = |i: usize| -> Option<usize> {
            if i == 0 {
                vertex_node[e.from]
            } else if i == n {
                vertex_node[e.to]
            } else {
                Some(first_interior + i - 1)
            }
        };
        let k = Complex64::new(1.0 / h, 0.0);
        for i in 0..n {
            let (p, q) = (node(i), node(i + 1));
            if let Some(p) = p {
                stiffness.push((p, p, k));
                mass[p] += 0.5 * h;
            }
            if let Some(q) = q {
                stiffness.push((q, q, k));
                mass[q] += 0.5 * h;
            }
            if let (Some(p), Some(q)) = (p, q) {
                stiffness.push((p, q, -k));
                stiffness.push((q, p, -k));
            }
        }
    }
    for (i, v) in graph.vertices().iter().enumerate() {
        if let (VertexCondition::Robin(a), Some(p)) = (v.condition, vertex_node[i]) {
            stiffness.push((p, p, a));
        }
    }
    Ok(DiscreteOperator { dimension: next, stiffness, mass, cells, h: h_max, vertex_node })
}

impl DiscreteOperator {
    /// `K x` with the unscaled stiffness matrix.
    pub fn stiffness_apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let mut y = vec![Complex64::new(0.0, 0.0); self.dimension];
        for &(i, j, v) in &self.stiffness {
            y[i] += v * x[j];
        }
        y
    }

    pub fn is_real(&self) -> bool {
        self.stiffness.iter().all(|(_, _, v)| v.im == 0.0)
    }

    /// Dense `M^{-1/2} K M^{-1/2}`.
    pub fn scaled_matrix(&self) -> CMatrix {
        let n = self.dimension;
        let s: Vec<f64> = self.mass.iter().map(|m| 1.0 / m.sqrt()).collect();
        let mut a = CMatrix::zeros(n, n);
        for &(i, j, v) in &self.stiffness {
            a[(i, j)] += v * (s[i] * s[j]);
        }
        a
    }
}

/// Discrete eigenvalues inside `window`, sorted by `(Re, Im)`.
pub fn eigs_window(op: &DiscreteOperator, window: &Region) -> Result<Vec<Complex64>> {
    if op.dimension > DIMENSION_CAP {
        return Err(Error::DimensionCap { dim: op.dimension, cap: DIMENSION_CAP });
    }
    let a = op.scaled_matrix();
    let mut ev: Vec<Complex64> = if op.is_real() {
        let re = DMatrix::from_fn(op.dimension, op.dimension, |i, j| a[(i, j)].re);
        SymmetricEigen::new(re).eigenvalues.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    } else {
        linalg::eigenvalues(&a)?
    };
    ev.retain(|z| window.contains(*z));
    ev.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(ev)
}

/// Richardson-extrapolated eigenvalues `(4 λ_{h/2} - λ_h) / 3` from meshes
/// with `N` and `2N` nodes per unit length. Each coarse eigenvalue in
/// `window` is paired with the nearest unused fine one.
pub fn extrapolated_eigs(graph: &MetricGraph, nodes_per_length: f64, window: &Region) -> Result<Vec<Complex64>> {
    let margin = 1.0 + 0.1 * window.diameter();
    let wide = window.expand(margin);
    let (coarse, fine) = rayon::join(
        || discretize(graph, nodes_per_length).and_then(|op| eigs_window(&op, &wide)),
        || discretize(graph, 2.0 * nodes_per_length).and_then(|op| eigs_window(&op, &wide)),
    );
    let (coarse, fine) = (coarse?, fine?);
    let pairs = pair_nearest(&coarse, &fine);
    let mut out: Vec<Complex64> = pairs
        .into_iter()
        .filter_map(|(c, f)| f.map(|f| (4.0 * f - c) / 3.0))
        .filter(|z| window.contains(*z))
        .collect();
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(out)
}

/// Greedy nearest pairing: globally closest pairs first.
fn pair_nearest(a: &[Complex64], b: &[Complex64]) -> Vec<(Complex64, Option<Complex64>)> {
    let mut cand: Vec<(f64, usize, usize)> = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            cand.push(((x - y).norm(), i, j));
        }
    }
    cand.sort_by(|p, q| p.0.total_cmp(&q.0));
    let mut used_a = vec![None; a.len()];
    let mut used_b = vec![false; b.len()];
    for (_, i, j) in cand {
        if used_a[i].is_none() && !used_b[j] {
            used_a[i] = Some(b[j]);
            used_b[j] = true;
        }
    }
    a.iter().copied().zip(used_a).collect()
}

/// Outcome of matching two spectra.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SpectrumMatch {
    /// `(reference, approximation)`.
    pub pairs: Vec<(Complex64, Complex64)>,
    pub unmatched_reference: Vec<Complex64>,
    pub unmatched_approx: Vec<Complex64>,
}

impl SpectrumMatch {
    pub fn is_complete(&self) -> bool {
        self.unmatched_reference.is_empty() && self.unmatched_approx.is_empty()
    }

    pub fn max_discrepancy(&self) -> f64 {
        self.pairs.iter().map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

/// Matches `reference` (roots with multiplicity, counted in full) against
/// `approx` one to one, closest pairs first, accepting a pair when its
/// distance is below `tol(reference value)`. Only unmatched entries lying
/// in `window` are reported, so values just outside it on one side do
/// not count against the other.
pub fn match_spectra(
    reference: &[RootResult],
    approx: &[Complex64],
    window: &Region,
    tol: impl Fn(Complex64) -> f64,
) -> SpectrumMatch {
    let refs: Vec<Complex64> = reference
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.lambda, r.multiplicity))
        .collect();
    let mut cand = Vec::new();
    for (i, x) in refs.iter().enumerate() {
        for (j, y) in approx.iter().enumerate() {
            let d = (x - y).norm();
            if d <= tol(*x) {
                cand.push((d, i, j));
            }
        }
    }
    cand.sort_by(|p, q| p.0.total_cmp(&q.0));
    let mut used_r = vec![false; refs.len()];
    let mut used_a = vec![false; approx.len()];
    let mut out = SpectrumMatch::default();
    for (_, i, j) in cand {
        if !used_r[i] && !used_a[j] {
            used_r[i] = true;
            used_a[j] = true;
            out.pairs.push((refs[i], approx[j]));
        }
    }
    out.unmatched_reference = refs
        .iter()
        .zip(&used_r)
        .filter(|(z, u)| !**u && window.contains(**z))
        .map(|(z, _)| *z)
        .collect();
    out.unmatched_approx = approx
        .iter()
        .zip(&used_a)
        .filter(|(z, u)| !**u && window.contains(**z))
        .map(|(z, _)| *z)
        .collect();
    out.pairs.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    out
}

/// `log₂(e_h / e_{h/2})`, the observed convergence order.
pub fn observed_order(error_coarse: f64, error_fine: f64) -> f64 {
    (error_coarse / error_fine).log2()
}
