//! Global Dirichlet-to-Neumann matrix on the non-Dirichlet vertices and
//! its Schur-complement reduction to the Robin vertices.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{MetricGraph, VertexCondition};
use crate::kernels::{edge_dtn_at, SpectralPoint};
use crate::linalg::{self, CMatrix};

/// `K` blocks with a reciprocal condition number at or below this value
/// are treated as singular.
pub const K_RCOND_THRESHOLD: f64 = 1e-13;

#[derive(Clone, Debug)]
pub struct FullDtn {
    pub matrix: CMatrix,
    /// Graph vertex index of each row: Robin vertices first, then standard
    /// ones, each group in file order.
    pub order: Vec<usize>,
    pub robin_count: usize,
    pub point: SpectralPoint,
}

#[derive(Clone, Debug)]
pub struct ReducedDtn {
    /// `M(λ) = R - Cᵀ K⁻¹ C`, of size k×k.
    pub matrix: CMatrix,
    pub r: CMatrix,
    pub c: CMatrix,
    pub k: CMatrix,
    /// `1 / (‖M_V‖₁ ‖K⁻¹‖₁)`: the reciprocal condition of `K` measured
    /// against the scale of the whole matrix, so that a uniformly tiny `K`
    /// also counts as singular (1 when `K` is empty).
    pub k_rcond: f64,
}

/// Assembles the DtN matrix by summing edge blocks. Edges ending at a
/// Dirichlet vertex contribute only their diagonal entry at the other end.
/// Loops and parallel edges are summed like any other edge, which is the
/// correct operator even though the entrywise "one edge per pair" formula
/// no longer applies.
pub fn assemble_full_dtn(graph: &MetricGraph, lambda: Complex64) -> Result<FullDtn> {
    let point = SpectralPoint::new(lambda)?;
    let robin = graph.robin_vertices();
    let standard = graph.standard_vertices();
    let order: Vec<usize> = robin.iter().chain(standard.iter()).copied().collect();
    let mut slot = vec![None; graph.vertices().len()];
    for (i, &v) in order.iter().enumerate() {
        slot[v] = Some(i);
    }
    let n = order.len();
    let mut m = CMatrix::zeros(n, n);
    for (ei, e) in graph.edges().iter().enumerate() {
        let (si, sj) = (slot[e.from], slot[e.to]);
        if si.is_none() && sj.is_none() {
            continue;
        }
        let d = edge_dtn_at(&point, e.length).map_err(|err| match err {
            Error::EdgePole { lambda, nearest_pole, .. } => {
                Error::EdgePole { edge: Some(ei), lambda, nearest_pole }
            }
            other => other,
        })?;
        if let Some(i) = si {
            m[(i, i)] += d.a;
        }
        if let Some(j) = sj {
            m[(j, j)] += d.a;
        }
        if let (Some(i), Some(j)) = (si, sj) {
            m[(i, j)] += d.b;
            m[(j, i)] += d.b;
        }
    }
    Ok(FullDtn { matrix: m, order, robin_count: robin.len(), point })
}

/// Schur complement onto the Robin vertices.
pub fn reduce_dtn(full: &FullDtn) -> Result<ReducedDtn> {
    let k = full.robin_count;
    if k == 0 {
        return Err(Error::NoRobinVertices);
    }
    let n = full.matrix.nrows();
    let r = full.matrix.view((0, 0), (k, k)).into_owned();
    let c = full.matrix.view((k, 0), (n - k, k)).into_owned();
    let kb = full.matrix.view((k, k), (n - k, n - k)).into_owned();
    if n == k {
        return Ok(ReducedDtn { matrix: r.clone(), r, c, k: kb, k_rcond: 1.0 });
    }
    let k_rcond = match kb.clone().try_inverse() {
        Some(inv) => {
            let r = 1.0 / (linalg::norm_1(&full.matrix) * linalg::norm_1(&inv));
            if r.is_finite() { r } else { 0.0 }
        }
        None => 0.0,
    };
    if k_rcond <= K_RCOND_THRESHOLD {
        return Err(Error::NearDirichletSpectrum { rcond: k_rcond });
    }
    let sol = kb.clone().lu().solve(&c).ok_or(Error::NearDirichletSpectrum { rcond: 0.0 })?;
    let matrix = &r - c.transpose() * sol;
    Ok(ReducedDtn { matrix, r, c, k: kb, k_rcond })
}

/// `M(λ)` for the Robin vertices of `graph`.
pub fn reduced_dtn(graph: &MetricGraph, lambda: Complex64) -> Result<ReducedDtn> {
    reduce_dtn(&assemble_full_dtn(graph, lambda)?)
}

/// `diag(deg v_1, …, deg v_k)` over the Robin vertices.
pub fn robin_degree_matrix(graph: &MetricGraph) -> CMatrix {
    let deg = graph.degrees();
    let d: Vec<Complex64> = graph
        .robin_vertices()
        .iter()
        .map(|&v| Complex64::new(deg[v] as f64, 0.0))
        .collect();
    CMatrix::from_diagonal(&nalgebra::DVector::from_vec(d))
}

/// `‖M(λ) - i√λ D‖₂` (Frobenius), the deviation from the leading-order
/// behaviour for `Im √λ` large. The principal root has `Im √λ ≥ 0`, which
/// selects the `+` sign.
pub fn asymptotic_deviation(graph: &MetricGraph, lambda: Complex64) -> Result<f64> {
    let red = reduced_dtn(graph, lambda)?;
    let s = lambda.sqrt();
    let lead = robin_degree_matrix(graph) * (Complex64::i() * s);
    Ok((red.matrix - lead).norm())
}

/// Eigenvalues of `M(λ)`.
pub fn reduced_eigenvalues(graph: &MetricGraph, lambda: Complex64) -> Result<Vec<Complex64>> {
    linalg::eigenvalues(&reduced_dtn(graph, lambda)?.matrix)
}

/// `I_α = diag(α_1, …, α_k)` from the current Robin parameters.
pub fn alpha_matrix(graph: &MetricGraph) -> CMatrix {
    let a: Vec<Complex64> = graph
        .vertices()
        .iter()
        .filter_map(|v| match v.condition {
            VertexCondition::Robin(a) => Some(a),
            _ => None,
        })
        .collect();
    CMatrix::from_diagonal(&nalgebra::DVector::from_vec(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_edge_matches_edge_block() {
        let g = fixtures::interval(1.0, c(1.0, 0.0), c(2.0, 0.0));
        let full = assemble_full_dtn(&g, c(-1.0, 0.0)).unwrap();
        let coth = 1.0 / 1f64.tanh();
        let csch = 1.0 / 1f64.sinh();
        assert!((full.matrix[(0, 0)] - c(-coth, 0.0)).norm() < 1e-14);
        assert!((full.matrix[(0, 1)] - c(csch, 0.0)).norm() < 1e-14);
        // both vertices are Robin, so nothing is eliminated
        let red = reduce_dtn(&full).unwrap();
        assert_eq!(red.matrix, full.matrix);
    }

    #[test]
    fn star_full_and_reduced() {
        let g = fixtures::star(&[1.0, 1.0, 1.0], c(-1.0, 0.0), VertexCondition::Standard);
        let full = assemble_full_dtn(&g, c(-1.0, 0.0)).unwrap();
        let coth = 1.0 / 1f64.tanh();
        let csch = 1.0 / 1f64.sinh();
        assert!((full.matrix[(0, 0)] - c(-3.0 * coth, 0.0)).norm() < 1e-13);
        for j in 1..4 {
            assert!((full.matrix[(j, j)] - c(-coth, 0.0)).norm() < 1e-13);
            assert!((full.matrix[(0, j)] - c(csch, 0.0)).norm() < 1e-13);
            for i in 1..4 {
                if i != j {
                    assert_eq!(full.matrix[(i, j)], c(0.0, 0.0));
                }
            }
        }
        let red = reduce_dtn(&full).unwrap();
        // -3 tanh 1 from the explicit solution cosh(ℓ - x)
        assert!((red.matrix[(0, 0)] - c(-3.0 * 1f64.tanh(), 0.0)).norm() < 1e-13);
        assert!((red.matrix[(0, 0)].re + 2.2847).abs() < 1e-3);
    }

    #[test]
    fn pole_reports_edge() {
        let g = fixtures::star(&[2.0, 1.0], c(-1.0, 0.0), VertexCondition::Standard);
        let pi2 = std::f64::consts::PI.powi(2);
        match assemble_full_dtn(&g, c(pi2, 0.0)) {
            Err(Error::EdgePole { edge: Some(e), .. }) => assert!(e <= 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dirichlet_neighbour_contributes_diagonal_only() {
        let g = MetricGraph::builder()
            .robin("r", c(0.0, 0.0))
            .dirichlet("d")
            .edge("r", "d", 1.0)
            .build()
            .unwrap();
        let full = assemble_full_dtn(&g, c(-1.0, 0.0)).unwrap();
        assert_eq!(full.matrix.nrows(), 1);
        assert!((full.matrix[(0, 0)] - c(-1.0 / 1f64.tanh(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn singular_k_detected_at_dirichlet_point() {
        // centre Robin, leaves standard: with the centre pinned each edge is
        // a Dirichlet-Neumann interval, lowest eigenvalue π²/4
        let g = fixtures::star(&[1.0, 1.0, 1.0], c(-1.0, 0.0), VertexCondition::Standard);
        let mu = std::f64::consts::PI.powi(2) / 4.0;
        assert!(matches!(reduced_dtn(&g, c(mu, 0.0)), Err(Error::NearDirichletSpectrum { .. })));
        assert!(reduced_dtn(&g, c(mu + 0.3, 0.0)).is_ok());
    }

    #[test]
    fn complex_symmetric() {
        let g = fixtures::f5_complete();
        let red = reduced_dtn(&g, c(3.3, 1.7)).unwrap();
        let full = assemble_full_dtn(&g, c(3.3, 1.7)).unwrap();
        assert!((&full.matrix - full.matrix.transpose()).norm() < 1e-14);
        assert!((&red.matrix - red.matrix.transpose()).norm() < 1e-12 * red.matrix.norm());
    }
}
