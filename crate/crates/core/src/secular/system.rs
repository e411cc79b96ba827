use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{Endpoint, MetricGraph, VertexCondition};
use crate::kernels::{eval_at, EdgeKernel, SpectralPoint};
use crate::linalg::{self, CMatrix, LogDet};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// The 2m×2m vertex-condition system in the unknowns `(a_e, b_e)` of
/// `f_e = a_e C(x; λ) + b_e S(x; λ)`, together with its λ-derivative.
#[derive(Clone, Debug)]
pub struct SecularSystem {
    pub lambda: Complex64,
    pub matrix: CMatrix,
    pub dlambda: CMatrix,
    /// For each Robin vertex (Robin order), its condition row and the
    /// entries multiplying `α_j`, i.e. the row of `∂A/∂α_j`.
    pub alpha_rows: Vec<(usize, Vec<(usize, Complex64)>)>,
    /// `log det` of the trigonometric-basis system minus `log det matrix`;
    /// zero unless the exponential basis was used.
    pub log_correction: Complex64,
    /// λ-derivative of `log_correction`.
    pub dlog_correction: Complex64,
}

/// `Im √λ · ℓ_max` from which edges are written in the decaying
/// exponential basis. Beyond it `C` and `S` grow like `e^{Im √λ ℓ}` and
/// the vertex rows lose everything to cancellation.
pub const EXP_BASIS_THRESHOLD: f64 = 1.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Basis {
    /// `f_e = a C(x) + b S(x)`, entire in λ.
    Trigonometric,
    /// `f_e = a e^{i√λ x} + b e^{i√λ (ℓ - x)}`, bounded for `Im √λ ≥ 0`.
    Exponential,
}

/// The square root of λ with `Im ≥ 0`, so that `e^{i√λ x}` decays.
fn decaying_root(p: &SpectralPoint) -> Complex64 {
    if p.im_sqrt < 0.0 {
        -p.sqrt_lambda
    } else {
        p.sqrt_lambda
    }
}

/// Values and λ-derivatives of the two basis functions: endpoint traces
/// and fluxes, indexed `[side][column]`.
struct EdgeBasis {
    trace: [[(Complex64, Complex64); 2]; 2],
    flux: [[(Complex64, Complex64); 2]; 2],
}

impl EdgeBasis {
    fn new(p: &SpectralPoint, ell: f64, basis: Basis) -> Self {
        let lambda = p.lambda;
        match basis {
            Basis::Trigonometric => {
                let k: EdgeKernel = eval_at(p, ell);
                EdgeBasis {
                    trace: [[(ONE, ZERO), (ZERO, ZERO)], [(k.c, k.dc_dlambda), (k.s, k.ds_dlambda)]],
                    flux: [
                        [(ZERO, ZERO), (-ONE, ZERO)],
                        [(-lambda * k.s, -k.s - lambda * k.ds_dlambda), (k.c, k.dc_dlambda)],
                    ],
                }
            }
            Basis::Exponential => {
                let i = Complex64::i();
                let s = decaying_root(p);
                let is = i * s;
                let dis = i / (2.0 * s);
                let e = (is * ell).exp();
                let de = ell * dis * e;
                EdgeBasis {
                    trace: [[(ONE, ZERO), (e, de)], [(e, de), (ONE, ZERO)]],
                    flux: [
                        [(-is, -dis), (is * e, dis * e + is * de)],
                        [(is * e, dis * e + is * de), (-is, -dis)],
                    ],
                }
            }
        }
    }
}

/// Secular determinant of one graph with fixed vertex conditions.
#[derive(Clone, Debug)]
pub struct SecularFunction {
    lengths: Vec<f64>,
    rows: Vec<RowSpec>,
    alpha_slots: Vec<usize>,
    alpha: Vec<Complex64>,
    total_length: f64,
}

#[derive(Clone, Debug)]
enum RowSpec {
    /// trace at `first` minus trace at `other`
    Continuity { first: Endpoint, other: Endpoint },
    /// Σ ∂_ν f + α f(v); `alpha` indexes into the Robin parameters, `None`
    /// for a standard vertex.
    Flux { ends: Vec<Endpoint>, alpha: Option<usize> },
    Dirichlet { first: Endpoint },
}

/// log-determinant together with the log of the Hadamard row-norm bound,
/// so that `log_magnitude - hadamard_log ≤ 0` is a scale-free size.
#[derive(Clone, Copy, Debug)]
pub struct DetSample {
    pub det: LogDet,
    pub hadamard_log: f64,
}

impl DetSample {
    /// `|det| / Π‖row‖`, in `[0, 1]`.
    pub fn normalized(&self) -> f64 {
        (self.det.log_magnitude - self.hadamard_log).exp()
    }
}

impl SecularFunction {
    /// Uses the Robin parameters stored in `graph`.
    pub fn new(graph: &MetricGraph) -> Self {
        Self::with_alpha(graph, &graph.alpha()).expect("graph alpha has the right length")
    }

    /// Same vertex structure as `graph`, Robin parameters replaced.
    pub fn with_alpha(graph: &MetricGraph, alpha: &[Complex64]) -> Result<Self> {
        let robin = graph.robin_vertices();
        if robin.len() != alpha.len() {
            return Err(Error::AlphaLength { expected: robin.len(), got: alpha.len() });
        }
        let mut robin_slot = vec![None; graph.vertices().len()];
        for (j, &v) in robin.iter().enumerate() {
            robin_slot[v] = Some(j);
        }
        let mut rows = Vec::with_capacity(2 * graph.edges().len());
        let mut alpha_slots = vec![0; robin.len()];
        for (v, ends) in graph.incidence().into_iter().enumerate() {
            let Some(&first) = ends.first() else { continue };
            for &other in &ends[1..] {
                rows.push(RowSpec::Continuity { first, other });
            }
            match graph.vertices()[v].condition {
                VertexCondition::Dirichlet => rows.push(RowSpec::Dirichlet { first }),
                VertexCondition::Standard => rows.push(RowSpec::Flux { ends, alpha: None }),
                VertexCondition::Robin(_) => {
                    let j = robin_slot[v].expect("robin vertex has a slot");
                    alpha_slots[j] = rows.len();
                    rows.push(RowSpec::Flux { ends, alpha: Some(j) });
                }
            }
        }
        Ok(SecularFunction {
            lengths: graph.edges().iter().map(|e| e.length).collect(),
            rows,
            alpha_slots,
            alpha: alpha.to_vec(),
            total_length: graph.total_length(),
        })
    }

    pub fn alpha(&self) -> &[Complex64] {
        &self.alpha
    }

    pub fn set_alpha(&mut self, alpha: &[Complex64]) -> Result<()> {
        if alpha.len() != self.alpha.len() {
            return Err(Error::AlphaLength { expected: self.alpha.len(), got: alpha.len() });
        }
        self.alpha.copy_from_slice(alpha);
        Ok(())
    }

    pub fn dimension(&self) -> usize {
        2 * self.lengths.len()
    }

    pub fn total_length(&self) -> f64 {
        self.total_length
    }

    /// Assembles the system, switching to the exponential edge basis once
    /// `Im √λ · ℓ_max` reaches [`EXP_BASIS_THRESHOLD`].
    pub fn assemble(&self, lambda: Complex64) -> Result<SecularSystem> {
        let p = SpectralPoint::new(lambda)?;
        let longest = self.lengths.iter().copied().fold(0.0, f64::max);
        let basis = if p.im_sqrt.abs() * longest >= EXP_BASIS_THRESHOLD { Basis::Exponential } else { Basis::Trigonometric };
        self.assemble_in(&p, basis)
    }

    pub(crate) fn assemble_in(&self, p: &SpectralPoint, basis: Basis) -> Result<SecularSystem> {
        let lambda = p.lambda;
        let edges: Vec<EdgeBasis> = self.lengths.iter().map(|&l| EdgeBasis::new(p, l, basis)).collect();
        let n = self.dimension();
        let mut a = CMatrix::zeros(n, n);
        let mut da = CMatrix::zeros(n, n);
        let mut alpha_rows = Vec::with_capacity(self.alpha.len());

        // (column, value, d/dλ value) triples
        let trace = |e: Endpoint| -> [(usize, Complex64, Complex64); 2] {
            let t = &edges[e.edge].trace[e.side as usize];
            [(2 * e.edge, t[0].0, t[0].1), (2 * e.edge + 1, t[1].0, t[1].1)]
        };
        // derivative of f_e at the endpoint, pointing into the vertex
        let flux = |e: Endpoint| -> [(usize, Complex64, Complex64); 2] {
            let t = &edges[e.edge].flux[e.side as usize];
            [(2 * e.edge, t[0].0, t[0].1), (2 * e.edge + 1, t[1].0, t[1].1)]
        };

        for (r, spec) in self.rows.iter().enumerate() {
            match spec {
                RowSpec::Continuity { first, other } => {
                    for (col, v, dv) in trace(*first) {
                        a[(r, col)] += v;
                        da[(r, col)] += dv;
                    }
                    for (col, v, dv) in trace(*other) {
                        a[(r, col)] -= v;
                        da[(r, col)] -= dv;
                    }
                }
                RowSpec::Flux { ends, alpha } => {
                    for &e in ends {
                        for (col, v, dv) in flux(e) {
                            a[(r, col)] += v;
                            da[(r, col)] += dv;
                        }
                    }
                    if let Some(j) = *alpha {
                        let al = self.alpha[j];
                        let tr = trace(ends[0]);
                        for (col, v, dv) in tr {
                            a[(r, col)] += al * v;
                            da[(r, col)] += al * dv;
                        }
                        alpha_rows.push((r, tr.iter().map(|&(c, v, _)| (c, v)).collect()));
                    }
                }
                RowSpec::Dirichlet { first } => {
                    for (col, v, dv) in trace(*first) {
                        a[(r, col)] += v;
                        da[(r, col)] += dv;
                    }
                }
            }
        }
        debug_assert!(alpha_rows.iter().zip(&self.alpha_slots).all(|((r, _), s)| r == s));
        let (log_correction, dlog_correction) = match basis {
            Basis::Trigonometric => (ZERO, ZERO),
            Basis::Exponential => {
                // A_exp = A_trig · diag(J_e) with det J_e = -2i√λ e^{i√λ ℓ_e}
                let s = decaying_root(p);
                let m = self.lengths.len() as f64;
                let i = Complex64::i();
                (
                    -m * (-2.0 * i * s).ln() - i * s * self.total_length,
                    -m / (2.0 * lambda) - i * self.total_length / (2.0 * s),
                )
            }
        };
        Ok(SecularSystem { lambda, matrix: a, dlambda: da, alpha_rows, log_correction, dlog_correction })
    }

    pub fn sample(&self, lambda: Complex64) -> Result<DetSample> {
        let sys = self.assemble(lambda)?;
        Ok(DetSample { det: sys.log_det(), hadamard_log: sys.hadamard_log() })
    }

    /// Determinant sample together with `(log det)'`, from one
    /// factorisation. The derivative is `None` at an exact zero.
    pub fn sample_with_derivative(&self, lambda: Complex64) -> Result<(DetSample, Option<Complex64>)> {
        let sys = self.assemble(lambda)?;
        let lu = sys.matrix.clone().lu();
        let det = sys.corrected(linalg::log_det_lu(&lu));
        let ld = lu
            .solve(&sys.dlambda)
            .map(|x| x.trace() + sys.dlog_correction)
            .filter(|t| t.re.is_finite() && t.im.is_finite());
        Ok((DetSample { det, hadamard_log: sys.hadamard_log() }, ld))
    }

    pub fn log_det(&self, lambda: Complex64) -> Result<LogDet> {
        Ok(self.sample(lambda)?.det)
    }

    /// `d/dλ log det = tr(A⁻¹ A_λ)`; `None` at an exact zero of the
    /// determinant.
    pub fn log_derivative(&self, lambda: Complex64) -> Result<Option<Complex64>> {
        let sys = self.assemble(lambda)?;
        Ok(sys.log_derivative())
    }
}

impl SecularSystem {
    fn corrected(&self, d: LogDet) -> LogDet {
        LogDet {
            log_magnitude: d.log_magnitude + self.log_correction.re,
            phase: linalg::wrap_phase(d.phase + self.log_correction.im),
        }
    }

    /// `log det` of the secular matrix in the trigonometric basis,
    /// whichever basis was used to assemble.
    pub fn log_det(&self) -> LogDet {
        self.corrected(linalg::log_det(&self.matrix))
    }

    /// Hadamard bound of the assembled matrix, shifted like `log_det` so
    /// that their difference is the scale-free size of the assembled one.
    pub fn hadamard_log(&self) -> f64 {
        linalg::hadamard_log(&self.matrix) + self.log_correction.re
    }

    pub fn log_derivative(&self) -> Option<Complex64> {
        let x = self.matrix.clone().lu().solve(&self.dlambda)?;
        let t = x.trace() + self.dlog_correction;
        (t.re.is_finite() && t.im.is_finite()).then_some(t)
    }

    /// `tr(A⁻¹ ∂A/∂α_j)` for every Robin parameter, and `tr(A⁻¹ A_λ)`.
    pub fn parameter_derivatives(&self) -> Option<(Vec<Complex64>, Complex64)> {
        let lu = self.matrix.clone().lu();
        let x = lu.solve(&self.dlambda)?;
        let n = self.matrix.nrows();
        let mut out = Vec::with_capacity(self.alpha_rows.len());
        for (row, entries) in &self.alpha_rows {
            // ∂A/∂α_j = e_row ⊗ w, so tr(A⁻¹ e_row wᵀ) = wᵀ A⁻¹ e_row
            let mut e = nalgebra::DVector::<Complex64>::zeros(n);
            e[*row] = ONE;
            let y = lu.solve(&e)?;
            out.push(entries.iter().map(|&(c, v)| v * y[c]).sum());
        }
        let t = x.trace() + self.dlog_correction;
        (t.re.is_finite() && t.im.is_finite()).then_some((out, t))
    }
}
