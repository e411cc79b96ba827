//! Entire secular determinant, argument-principle root finding and the
//! Dirichlet-to-Neumann cross-check.

mod contour;
mod roots;
mod system;

pub use contour::{count_with_nudge, winding_number, CountReport, Region, NUDGE, SAMPLE_BUDGET};
pub use roots::{find_roots_with, newton, sort_roots, RootResult, NEWTON_MAX_ITER};
pub use system::{DetSample, SecularFunction, SecularSystem};

use num_complex::Complex64;

use crate::dtn::{alpha_matrix, reduced_dtn};
use crate::error::Result;
use crate::graph::MetricGraph;
use crate::linalg;

/// Assembles the secular system of `graph` with its own Robin parameters.
pub fn assemble_secular(graph: &MetricGraph, lambda: Complex64) -> Result<SecularSystem> {
    SecularFunction::new(graph).assemble(lambda)
}

pub fn secular_logdet(system: &SecularSystem) -> linalg::LogDet {
    system.log_det()
}

/// Number of eigenvalues (with multiplicity) in `region`.
pub fn count_roots(graph: &MetricGraph, region: &Region) -> Result<usize> {
    Ok(count_with_nudge(&SecularFunction::new(graph), region)?.count)
}

pub fn find_roots(graph: &MetricGraph, region: &Region, tol: f64) -> Result<Vec<RootResult>> {
    find_roots_with(&SecularFunction::new(graph), region, tol)
}

/// Which vertices get a Dirichlet condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DirichletMode {
    /// The Robin vertices; standard vertices keep their condition.
    RobinVertices,
    /// Every vertex, which decouples the edges.
    AllVertices,
}

pub fn dirichlet_graph(graph: &MetricGraph, mode: DirichletMode) -> MetricGraph {
    match mode {
        DirichletMode::RobinVertices => graph.robin_to_dirichlet(),
        DirichletMode::AllVertices => graph.all_dirichlet(),
    }
}

pub fn dirichlet_spectrum(
    graph: &MetricGraph,
    mode: DirichletMode,
    region: &Region,
    tol: f64,
) -> Result<Vec<RootResult>> {
    find_roots(&dirichlet_graph(graph, mode), region, tol)
}

/// `det(M(λ) - I_α)`.
pub fn reduced_secular_value(graph: &MetricGraph, lambda: Complex64) -> Result<Complex64> {
    let red = reduced_dtn(graph, lambda)?;
    Ok((red.matrix - alpha_matrix(graph)).determinant())
}

/// `|det(M(λ) - I_α)| / Π_i (‖M_i‖ + |α_i|)`, a scale-free size in
/// `[0, 1]`. Each row is measured before the subtraction so that
/// cancellation between `M` and `α` shows up, also for a single vertex.
pub fn reduced_secular_normalized(graph: &MetricGraph, lambda: Complex64) -> Result<f64> {
    let red = reduced_dtn(graph, lambda)?;
    let alpha = alpha_matrix(graph);
    let scale: f64 = red
        .matrix
        .row_iter()
        .zip(alpha.diagonal().iter())
        .map(|(r, a)| (r.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt() + a.norm()).ln())
        .sum();
    let d = linalg::log_det(&(red.matrix - alpha));
    Ok((d.log_magnitude - scale).exp())
}

/// Marks roots lying within `radius` of a point of `dirichlet`, where the
/// DtN formulation says nothing.
pub fn near_dirichlet(root: &RootResult, dirichlet: &[RootResult], radius: f64) -> bool {
    dirichlet.iter().any(|d| (d.lambda - root.lambda).norm() < radius)
}
