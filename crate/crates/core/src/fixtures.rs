//! Small reference graphs used by tests, examples and the CLI docs.
//!
//! The `f*` fixtures are built with a placeholder Robin parameter of `-1`;
//! use [`MetricGraph::with_alpha`] to set the values of interest.

use num_complex::Complex64;

use crate::graph::{MetricGraph, VertexCondition};

fn placeholder() -> Complex64 {
    Complex64::new(-1.0, 0.0)
}

/// Interval of length `ell` with Robin conditions at both ends.
pub fn interval(ell: f64, alpha0: Complex64, alpha1: Complex64) -> MetricGraph {
    MetricGraph::builder()
        .robin("v0", alpha0)
        .robin("v1", alpha1)
        .edge("v0", "v1", ell)
        .build()
        .expect("fixture is well formed")
}

/// Interval of length `d` with `α = (-it, +it)`; its spectrum is
/// `{t²} ∪ {n²π²/d²}`.
pub fn pt_interval(d: f64, t: f64) -> MetricGraph {
    interval(d, Complex64::new(0.0, -t), Complex64::new(0.0, t))
}

/// Interval with Dirichlet conditions at both ends.
pub fn dirichlet_interval(ell: f64) -> MetricGraph {
    MetricGraph::builder()
        .dirichlet("v0")
        .dirichlet("v1")
        .edge("v0", "v1", ell)
        .build()
        .expect("fixture is well formed")
}

/// Star with a Robin centre `c` and leaves `l0, l1, …` carrying `leaf`.
pub fn star(lengths: &[f64], centre_alpha: Complex64, leaf: VertexCondition) -> MetricGraph {
    let mut b = MetricGraph::builder().robin("c", centre_alpha);
    for i in 0..lengths.len() {
        b = b.vertex(format!("l{i}"), leaf);
    }
    for (i, &l) in lengths.iter().enumerate() {
        b = b.edge("c", format!("l{i}"), l);
    }
    b.build().expect("fixture is well formed")
}

/// Star with a standard centre and Robin leaves.
pub fn leaf_robin_star(lengths: &[f64], leaf_alpha: Complex64) -> MetricGraph {
    let mut b = MetricGraph::builder().standard("c");
    for i in 0..lengths.len() {
        b = b.robin(format!("l{i}"), leaf_alpha);
    }
    for (i, &l) in lengths.iter().enumerate() {
        b = b.edge("c", format!("l{i}"), l);
    }
    b.build().expect("fixture is well formed")
}

/// F1: unit interval, both ends Robin.
pub fn f1_interval() -> MetricGraph {
    interval(1.0, placeholder(), placeholder())
}

/// F2: path `v1 - v2 - v3` with unit edges, Robin at both ends.
pub fn f2_path() -> MetricGraph {
    MetricGraph::builder()
        .robin("v1", placeholder())
        .standard("v2")
        .robin("v3", placeholder())
        .edge("v1", "v2", 1.0)
        .edge("v2", "v3", 1.0)
        .build()
        .expect("fixture is well formed")
}

/// F3: equilateral 3-star with unit edges, Robin centre, standard leaves.
pub fn f3_star() -> MetricGraph {
    star(&[1.0, 1.0, 1.0], placeholder(), VertexCondition::Standard)
}

/// F4: triangle `a b c` with a pendant edge `c - p`; Robin at `a` and `p`.
pub fn f4_cycle_pendant() -> MetricGraph {
    MetricGraph::builder()
        .robin("a", placeholder())
        .standard("b")
        .standard("c")
        .robin("p", placeholder())
        .edge("a", "b", 1.0)
        .edge("b", "c", 1.2)
        .edge("c", "a", 0.8)
        .edge("c", "p", 0.9)
        .build()
        .expect("fixture is well formed")
}

/// F5: complete graph on four vertices with distinct lengths, one Robin
/// vertex.
pub fn f5_complete() -> MetricGraph {
    MetricGraph::builder()
        .robin("v1", placeholder())
        .standard("v2")
        .standard("v3")
        .standard("v4")
        .edge("v1", "v2", 1.0)
        .edge("v1", "v3", 1.1)
        .edge("v1", "v4", 0.9)
        .edge("v2", "v3", 1.2)
        .edge("v2", "v4", 0.8)
        .edge("v3", "v4", 1.3)
        .build()
        .expect("fixture is well formed")
}

/// The five reference graphs with short names.
pub fn all() -> Vec<(&'static str, MetricGraph)> {
    vec![
        ("interval", f1_interval()),
        ("path", f2_path()),
        ("star", f3_star()),
        ("cycle-pendant", f4_cycle_pendant()),
        ("complete", f5_complete()),
    ]
}

/// Sets every Robin parameter of `graph` to `alpha`.
pub fn with_uniform_alpha(graph: &MetricGraph, alpha: Complex64) -> MetricGraph {
    let k = graph.robin_vertices().len();
    graph.with_alpha(&vec![alpha; k]).expect("length matches")
}
