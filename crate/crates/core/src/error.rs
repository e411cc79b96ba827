use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by graph handling and the spectral routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite spectral parameter {0}")]
    NonFiniteSpectralParameter(Complex64),

    #[error("edge Dirichlet pole{}: lambda = {lambda} is within tolerance of {nearest_pole}", edge.map(|e| format!(" on edge {e}")).unwrap_or_default())]
    EdgePole {
        edge: Option<usize>,
        lambda: Complex64,
        nearest_pole: f64,
    },

    #[error("lambda near Dirichlet spectrum of -Delta^D_{{V_R}} (reciprocal condition {rcond:.3e})")]
    NearDirichletSpectrum { rcond: f64 },

    #[error("graph has no Robin vertices")]
    NoRobinVertices,

    #[error("expected {expected} Robin parameters, got {got}")]
    AlphaLength { expected: usize, got: usize },

    #[error("unknown vertex id `{0}`")]
    UnknownVertex(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("ill-conditioned contour: refinement budget of {budget} samples exceeded")]
    IllConditionedContour { budget: usize },

    #[error("root on contour boundary near {0}")]
    RootOnBoundary(Complex64),

    #[error("degenerate region")]
    DegenerateRegion,

    #[error("asymptotic regime not reached ({usable} usable samples)")]
    AsymptoticRegimeNotReached { usable: usize },

    #[error("inconclusive at horizon T = {t_end}: {undecided} undecided branch(es)")]
    Inconclusive { t_end: f64, undecided: usize },

    #[error("bound not applicable: {0}")]
    NotApplicable(&'static str),

    #[error("test function has zero norm")]
    ZeroNorm,

    #[error("discrete operator dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("eigenvalue computation failed to converge")]
    EigenNoConvergence,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("graph file: {0}")]
    Parse(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
