//! Compact metric graphs with per-vertex Robin, standard or Dirichlet
//! conditions.
//!
//! Vertices keep the order they were given in. Matrix routines that need a
//! Robin-first ordering (the DtN blocks) derive it from
//! [`MetricGraph::robin_vertices`] and [`MetricGraph::standard_vertices`],
//! both of which preserve that order.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Condition imposed at a vertex, on top of continuity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum VertexCondition {
    /// Sum of inward derivatives plus `alpha * f(v)` vanishes.
    Robin(Complex64),
    /// Kirchhoff condition; identical to `Robin(0)`.
    Standard,
    /// `f(v) = 0`.
    Dirichlet,
}

impl VertexCondition {
    pub fn robin(re: f64, im: f64) -> Self {
        VertexCondition::Robin(Complex64::new(re, im))
    }

    /// Coupling constant entering the vertex row; `None` for Dirichlet.
    pub fn coupling(&self) -> Option<Complex64> {
        match *self {
            VertexCondition::Robin(a) => Some(a),
            VertexCondition::Standard => Some(Complex64::new(0.0, 0.0)),
            VertexCondition::Dirichlet => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Vertex {
    pub id: String,
    pub condition: VertexCondition,
}

/// An edge identified with `[0, length]`; `from` sits at `x = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub length: f64,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.from == self.to
    }
}

/// Which end of an edge touches a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `x = 0`
    Start,
    /// `x = length`
    End,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub edge: usize,
    pub side: Side,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MetricGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    NonpositiveLength { edge: usize, length: f64 },
    NonfiniteLength { edge: usize },
    Disconnected { components: usize },
    DuplicateId(String),
    IsolatedVertex(String),
    NoVertices,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonpositiveLength { edge, length } => {
                write!(f, "nonpositive length {length} on edge {edge}")
            }
            Violation::NonfiniteLength { edge } => write!(f, "nonfinite length on edge {edge}"),
            Violation::Disconnected { components } => {
                write!(f, "disconnected ({components} components)")
            }
            Violation::DuplicateId(id) => write!(f, "duplicate vertex id `{id}`"),
            Violation::IsolatedVertex(id) => write!(f, "isolated vertex `{id}` (degree 0)"),
            Violation::NoVertices => write!(f, "graph has no vertices"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Derived metric and combinatorial quantities.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphMetrics {
    /// Shortest edge length.
    pub shortest_edge: f64,
    /// Sum of all edge lengths.
    pub total_length: f64,
    /// Minimum degree over Robin vertices; `None` when there are none.
    pub min_robin_degree: Option<usize>,
    /// Degree of every vertex, loops counted twice.
    pub degrees: Vec<usize>,
    /// Shortest incident edge per Robin vertex, in Robin order.
    pub robin_shortest_incident: Vec<f64>,
}

impl MetricGraph {
    /// Builds a graph from vertices and index-based edges. Only index
    /// ranges are checked here; everything else is left to [`validate`].
    ///
    /// [`validate`]: MetricGraph::validate
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        for (i, e) in edges.iter().enumerate() {
            if e.from >= vertices.len() || e.to >= vertices.len() {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} references a vertex index out of range"
                )));
            }
        }
        Ok(MetricGraph { vertices, edges })
    }

    pub fn builder() -> GraphBuilder {
        GraphBuilder::default()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.from == v) + usize::from(e.to == v))
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.from] += 1;
            deg[e.to] += 1;
        }
        deg
    }

    /// Edge endpoints attached to each vertex, ordered by edge index and
    /// then side (a loop contributes both of its ends).
    pub fn incidence(&self) -> Vec<Vec<Endpoint>> {
        let mut inc = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.from].push(Endpoint { edge: i, side: Side::Start });
            inc[e.to].push(Endpoint { edge: i, side: Side::End });
        }
        inc
    }

    fn indices_where(&self, pred: impl Fn(&VertexCondition) -> bool) -> Vec<usize> {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| pred(&v.condition))
            .map(|(i, _)| i)
            .collect()
    }

    /// Robin vertices in file order.
    pub fn robin_vertices(&self) -> Vec<usize> {
        self.indices_where(|c| matches!(c, VertexCondition::Robin(_)))
    }

    pub fn standard_vertices(&self) -> Vec<usize> {
        self.indices_where(|c| matches!(c, VertexCondition::Standard))
    }

    pub fn dirichlet_vertices(&self) -> Vec<usize> {
        self.indices_where(|c| matches!(c, VertexCondition::Dirichlet))
    }

    /// Current Robin parameters in Robin order.
    pub fn alpha(&self) -> Vec<Complex64> {
        self.vertices
            .iter()
            .filter_map(|v| match v.condition {
                VertexCondition::Robin(a) => Some(a),
                _ => None,
            })
            .collect()
    }

    /// Copy of the graph with the Robin parameters replaced.
    pub fn with_alpha(&self, alpha: &[Complex64]) -> Result<Self> {
        let robin = self.robin_vertices();
        if robin.len() != alpha.len() {
            return Err(Error::AlphaLength { expected: robin.len(), got: alpha.len() });
        }
        let mut g = self.clone();
        for (&v, &a) in robin.iter().zip(alpha) {
            g.vertices[v].condition = VertexCondition::Robin(a);
        }
        Ok(g)
    }

    /// Copy with every Robin vertex turned into a Dirichlet vertex; this is
    /// the graph carrying `-Delta^D_{V_R}`.
    pub fn robin_to_dirichlet(&self) -> Self {
        let mut g = self.clone();
        for v in &mut g.vertices {
            if matches!(v.condition, VertexCondition::Robin(_)) {
                v.condition = VertexCondition::Dirichlet;
            }
        }
        g
    }

    /// Copy with a Dirichlet condition at every vertex (decoupled edges).
    pub fn all_dirichlet(&self) -> Self {
        let mut g = self.clone();
        for v in &mut g.vertices {
            v.condition = VertexCondition::Dirichlet;
        }
        g
    }

    pub fn set_condition(&mut self, v: usize, condition: VertexCondition) {
        self.vertices[v].condition = condition;
    }

    pub fn total_length(&self) -> f64 {
        self.edges.iter().map(|e| e.length).sum()
    }

    pub fn shortest_edge(&self) -> f64 {
        self.edges.iter().map(|e| e.length).fold(f64::INFINITY, f64::min)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// True when there are no loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::new();
        self.edges.iter().all(|e| {
            let key = (e.from.min(e.to), e.from.max(e.to));
            !e.is_loop() && seen.insert(key)
        })
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.vertices.is_empty() {
            violations.push(Violation::NoVertices);
            return ValidationReport { violations };
        }
        let mut seen = HashSet::new();
        for v in &self.vertices {
            if !seen.insert(v.id.as_str()) {
                violations.push(Violation::DuplicateId(v.id.clone()));
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            if !e.length.is_finite() {
                violations.push(Violation::NonfiniteLength { edge: i });
            } else if e.length <= 0.0 {
                violations.push(Violation::NonpositiveLength { edge: i, length: e.length });
            }
        }
        for (v, d) in self.degrees().iter().enumerate() {
            if *d == 0 {
                violations.push(Violation::IsolatedVertex(self.vertices[v].id.clone()));
            }
        }
        let components = self.component_count();
        if components > 1 {
            violations.push(Violation::Disconnected { components });
        }
        ValidationReport { violations }
    }

    fn component_count(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.from), find(&mut parent, e.to));
            if a != b {
                parent[a] = b;
            }
        }
        (0..n).filter(|&x| find(&mut parent, x) == x).count()
    }

    pub fn metrics(&self) -> GraphMetrics {
        let degrees = self.degrees();
        let robin = self.robin_vertices();
        let min_robin_degree = robin.iter().map(|&v| degrees[v]).min();
        let robin_shortest_incident = robin
            .iter()
            .map(|&v| {
                self.edges
                    .iter()
                    .filter(|e| e.from == v || e.to == v)
                    .map(|e| e.length)
                    .fold(f64::INFINITY, f64::min)
            })
            .collect();
        GraphMetrics {
            shortest_edge: self.shortest_edge(),
            total_length: self.total_length(),
            min_robin_degree,
            degrees,
            robin_shortest_incident,
        }
    }

    /// Removes loops and parallel edges by inserting standard vertices.
    ///
    /// Every edge of a parallel bundle is split at its midpoint. A loop of
    /// length `L` is split into three edges of length `L / 3`. Vertex
    /// conditions of existing vertices are untouched and the total length
    /// is preserved. A simple graph is returned unchanged.
    pub fn subdivide_special_edges(&self) -> MetricGraph {
        if self.is_simple() {
            return self.clone();
        }
        let mut bundle: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            *bundle.entry((e.from.min(e.to), e.from.max(e.to))).or_default() += 1;
        }
        let mut vertices = self.vertices.clone();
        let mut edges = Vec::with_capacity(self.edges.len() * 2);
        let used: HashSet<&str> = self.vertices.iter().map(|v| v.id.as_str()).collect();
        let mut fresh: Vec<String> = Vec::new();
        let mut counter = 0usize;
        let mut new_vertex = |vertices: &mut Vec<Vertex>, fresh: &mut Vec<String>| -> usize {
            let id = loop {
                let candidate = format!("_sub{counter}");
                counter += 1;
                if !used.contains(candidate.as_str()) && !fresh.contains(&candidate) {
                    break candidate;
                }
            };
            fresh.push(id.clone());
            vertices.push(Vertex { id, condition: VertexCondition::Standard });
            vertices.len() - 1
        };
        for e in &self.edges {
            if e.is_loop() {
                let a = new_vertex(&mut vertices, &mut fresh);
                let b = new_vertex(&mut vertices, &mut fresh);
                let l = e.length / 3.0;
                edges.push(Edge { from: e.from, to: a, length: l });
                edges.push(Edge { from: a, to: b, length: l });
                edges.push(Edge { from: b, to: e.to, length: l });
            } else if bundle[&(e.from.min(e.to), e.from.max(e.to))] > 1 {
                let m = new_vertex(&mut vertices, &mut fresh);
                let l = e.length / 2.0;
                edges.push(Edge { from: e.from, to: m, length: l });
                edges.push(Edge { from: m, to: e.to, length: l });
            } else {
                edges.push(*e);
            }
        }
        MetricGraph { vertices, edges }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(s)?;
        file.into_graph()
    }

    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json_str(&text)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&GraphFile::from_graph(self))
            .expect("graph file serialization cannot fail")
    }
}

/// Name-based graph construction.
#[derive(Default)]
pub struct GraphBuilder {
    vertices: Vec<Vertex>,
    edges: Vec<(String, String, f64)>,
}

impl GraphBuilder {
    pub fn vertex(mut self, id: impl Into<String>, condition: VertexCondition) -> Self {
        self.vertices.push(Vertex { id: id.into(), condition });
        self
    }

    pub fn robin(self, id: impl Into<String>, alpha: Complex64) -> Self {
        self.vertex(id, VertexCondition::Robin(alpha))
    }

    pub fn standard(self, id: impl Into<String>) -> Self {
        self.vertex(id, VertexCondition::Standard)
    }

    pub fn dirichlet(self, id: impl Into<String>) -> Self {
        self.vertex(id, VertexCondition::Dirichlet)
    }

    pub fn edge(mut self, from: impl Into<String>, to: impl Into<String>, length: f64) -> Self {
        self.edges.push((from.into(), to.into(), length));
        self
    }

    pub fn build(self) -> Result<MetricGraph> {
        let mut index = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            index.entry(v.id.clone()).or_insert(i);
        }
        let lookup = |id: &str| index.get(id).copied().ok_or_else(|| Error::UnknownVertex(id.to_owned()));
        let edges = self
            .edges
            .iter()
            .map(|(a, b, l)| Ok(Edge { from: lookup(a)?, to: lookup(b)?, length: *l }))
            .collect::<Result<Vec<_>>>()?;
        MetricGraph::new(self.vertices, edges)
    }
}

// On-disk representation.

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct VertexRecord {
    pub id: String,
    pub condition: ConditionRecord,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub from: String,
    pub to: String,
    pub length: f64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ConditionRecord {
    Named(NamedCondition),
    Robin(RobinRecord),
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "lowercase")]
pub enum NamedCondition {
    Standard,
    Dirichlet,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RobinRecord {
    pub robin: [f64; 2],
}

impl GraphFile {
    pub fn into_graph(self) -> Result<MetricGraph> {
        let mut b = MetricGraph::builder();
        for v in self.vertices {
            let condition = match v.condition {
                ConditionRecord::Named(NamedCondition::Standard) => VertexCondition::Standard,
                ConditionRecord::Named(NamedCondition::Dirichlet) => VertexCondition::Dirichlet,
                ConditionRecord::Robin(RobinRecord { robin: [re, im] }) => {
                    if !re.is_finite() || !im.is_finite() {
                        return Err(Error::InvalidGraph(format!(
                            "non-finite Robin parameter at `{}`",
                            v.id
                        )));
                    }
                    VertexCondition::robin(re, im)
                }
            };
            b = b.vertex(v.id, condition);
        }
        for e in self.edges {
            b = b.edge(e.from, e.to, e.length);
        }
        b.build()
    }

    pub fn from_graph(g: &MetricGraph) -> Self {
        let vertices = g
            .vertices
            .iter()
            .map(|v| VertexRecord {
                id: v.id.clone(),
                condition: match v.condition {
                    VertexCondition::Standard => ConditionRecord::Named(NamedCondition::Standard),
                    VertexCondition::Dirichlet => ConditionRecord::Named(NamedCondition::Dirichlet),
                    VertexCondition::Robin(a) => ConditionRecord::Robin(RobinRecord { robin: [a.re, a.im] }),
                },
            })
            .collect();
        let edges = g
            .edges
            .iter()
            .map(|e| EdgeRecord {
                from: g.vertices[e.from].id.clone(),
                to: g.vertices[e.to].id.clone(),
                length: e.length,
            })
            .collect();
        GraphFile { vertices, edges }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_edge_is_valid() {
        let g = MetricGraph::builder().standard("a").standard("b").edge("a", "b", 1.0).build().unwrap();
        assert!(g.validate().is_valid());
    }

    #[test]
    fn zero_length_is_reported() {
        let g = MetricGraph::builder().standard("a").standard("b").edge("a", "b", 0.0).build().unwrap();
        let r = g.validate();
        assert!(matches!(r.violations[..], [Violation::NonpositiveLength { edge: 0, .. }]));
        assert!(r.violations[0].to_string().contains("nonpositive length"));
    }

    #[test]
    fn disjoint_edges_are_disconnected() {
        let g = MetricGraph::builder()
            .standard("a")
            .standard("b")
            .standard("c")
            .standard("d")
            .edge("a", "b", 1.0)
            .edge("c", "d", 1.0)
            .build()
            .unwrap();
        let r = g.validate();
        assert!(r.violations.iter().any(|v| v.to_string().contains("disconnected")));
    }

    #[test]
    fn duplicate_ids_are_reported() {
        let g = MetricGraph::builder().standard("a").standard("a").edge("a", "a", 1.0).build().unwrap();
        assert!(g.validate().violations.contains(&Violation::DuplicateId("a".into())));
    }

    #[test]
    fn loop_counts_twice() {
        let g = MetricGraph::builder().robin("v", c(-1.0, 0.0)).edge("v", "v", 2.0).build().unwrap();
        assert_eq!(g.degree(0), 2);
        assert!(!g.is_simple());
    }

    #[test]
    fn loop_subdivision() {
        let g = MetricGraph::builder().robin("v", c(-1.0, 0.5)).edge("v", "v", 2.0).build().unwrap();
        let s = g.subdivide_special_edges();
        assert!(s.is_simple());
        assert_eq!(s.edges().len(), 3);
        assert_eq!(s.degree(0), 2);
        assert_eq!(s.vertices()[0].condition, VertexCondition::robin(-1.0, 0.5));
        assert!(s.vertices()[1..].iter().all(|v| v.condition == VertexCondition::Standard));
        assert!((s.total_length() - 2.0).abs() < 1e-15);
        let m = s.metrics();
        assert_eq!(m.min_robin_degree, Some(2));
        assert!((m.shortest_edge - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn parallel_bundle_subdivision() {
        let g = MetricGraph::builder()
            .standard("v1")
            .standard("v2")
            .edge("v1", "v2", 1.0)
            .edge("v1", "v2", 1.0)
            .build()
            .unwrap();
        let s = g.subdivide_special_edges();
        assert!(s.is_simple());
        assert_eq!(s.edges().len(), 4);
        assert_eq!(s.vertices().len(), 4);
        assert!(s.edges().iter().all(|e| e.length == 0.5));
    }

    #[test]
    fn simple_graph_untouched_and_idempotent() {
        let g = MetricGraph::builder()
            .robin("a", c(1.0, 0.0))
            .standard("b")
            .dirichlet("c")
            .edge("a", "b", 1.0)
            .edge("b", "c", 2.0)
            .build()
            .unwrap();
        assert_eq!(g.subdivide_special_edges(), g);
        let h = MetricGraph::builder()
            .standard("a")
            .standard("b")
            .edge("a", "b", 1.0)
            .edge("a", "b", 3.0)
            .edge("a", "a", 0.3)
            .build()
            .unwrap();
        let once = h.subdivide_special_edges();
        assert_eq!(once.subdivide_special_edges(), once);
        assert!((once.total_length() - h.total_length()).abs() < 1e-14);
    }

    #[test]
    fn star_metrics() {
        let g = MetricGraph::builder()
            .robin("c", c(-1.0, 0.0))
            .standard("a")
            .standard("b")
            .standard("d")
            .edge("c", "a", 1.0)
            .edge("c", "b", 2.0)
            .edge("c", "d", 3.0)
            .build()
            .unwrap();
        let m = g.metrics();
        assert_eq!(m.shortest_edge, 1.0);
        assert_eq!(m.total_length, 6.0);
        assert_eq!(m.min_robin_degree, Some(3));
        assert_eq!(m.robin_shortest_incident, vec![1.0]);
    }

    #[test]
    fn interval_metrics_and_empty_robin_set() {
        let g = MetricGraph::builder()
            .robin("a", c(0.0, 1.0))
            .robin("b", c(0.0, -1.0))
            .edge("a", "b", 2.5)
            .build()
            .unwrap();
        let m = g.metrics();
        assert_eq!(m.min_robin_degree, Some(1));
        assert_eq!(m.shortest_edge, 2.5);
        assert_eq!(m.total_length, 2.5);
        let n = MetricGraph::builder().standard("a").standard("b").edge("a", "b", 1.0).build().unwrap();
        assert_eq!(n.metrics().min_robin_degree, None);
    }

    #[test]
    fn partition_of_vertex_sets() {
        let g = MetricGraph::builder()
            .standard("s")
            .robin("r1", c(1.0, 0.0))
            .dirichlet("d")
            .robin("r2", c(2.0, 0.0))
            .edge("s", "r1", 1.0)
            .edge("r1", "d", 1.0)
            .edge("d", "r2", 1.0)
            .build()
            .unwrap();
        assert_eq!(g.robin_vertices(), vec![1, 3]);
        assert_eq!(g.standard_vertices(), vec![0]);
        assert_eq!(g.dirichlet_vertices(), vec![2]);
        assert_eq!(g.alpha(), vec![c(1.0, 0.0), c(2.0, 0.0)]);
    }

    #[test]
    fn json_parsing_and_rejection() {
        let text = r#"{
            "vertices": [
                {"id": "v1", "condition": {"robin": [-3.0, 0.5]}},
                {"id": "v2", "condition": "standard"},
                {"id": "v3", "condition": "dirichlet"}
            ],
            "edges": [
                {"from": "v1", "to": "v2", "length": 1.0},
                {"from": "v2", "to": "v3", "length": 0.5}
            ]
        }"#;
        let g = MetricGraph::from_json_str(text).unwrap();
        assert_eq!(g.vertices()[0].condition, VertexCondition::robin(-3.0, 0.5));
        assert_eq!(g.edges()[1].length, 0.5);
        assert_eq!(MetricGraph::from_json_str(&g.to_json_string()).unwrap(), g);

        let extra = r#"{"vertices": [], "edges": [], "colour": 1}"#;
        assert!(MetricGraph::from_json_str(extra).is_err());
        let extra_edge = r#"{"vertices": [{"id": "a", "condition": "standard"}],
            "edges": [{"from": "a", "to": "a", "length": 1.0, "weight": 2}]}"#;
        assert!(MetricGraph::from_json_str(extra_edge).is_err());
        let bad_cond = r#"{"vertices": [{"id": "a", "condition": "neumann"}], "edges": []}"#;
        assert!(MetricGraph::from_json_str(bad_cond).is_err());
        let unknown = r#"{"vertices": [{"id": "a", "condition": "standard"}],
            "edges": [{"from": "a", "to": "b", "length": 1.0}]}"#;
        assert!(matches!(MetricGraph::from_json_str(unknown), Err(Error::UnknownVertex(_))));
    }
}
