//! Entire edge basis `C(x; λ) = cos(√λ x)`, `S(x; λ) = sin(√λ x) / √λ` and
//! the 2×2 edge Dirichlet-to-Neumann block built from them.

use num_complex::Complex64;

use crate::error::{Error, Result};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Below this value of `|√λ x|` the basis is summed from its power series
/// in `w = λ x²`, which keeps `λ = 0` a regular point.
const SERIES_RADIUS: f64 = 1.0;
const SERIES_TERMS: usize = 18;

/// Beyond this value of `|Im √λ ℓ|` the DtN entries use exponentially
/// factored forms of `cot` and `csc`.
const FACTORED_THRESHOLD: f64 = 1.0;

/// Relative size of `S(ℓ; λ)` below which `λ` counts as an edge pole.
pub const POLE_TOLERANCE: f64 = 1e-10;

/// A spectral parameter together with its principal square root.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralPoint {
    pub lambda: Complex64,
    pub sqrt_lambda: Complex64,
    pub im_sqrt: f64,
}

impl SpectralPoint {
    pub fn new(lambda: Complex64) -> Result<Self> {
        if !lambda.re.is_finite() || !lambda.im.is_finite() {
            return Err(Error::NonFiniteSpectralParameter(lambda));
        }
        let sqrt_lambda = lambda.sqrt();
        Ok(SpectralPoint { lambda, sqrt_lambda, im_sqrt: sqrt_lambda.im })
    }
}

/// Basis values at one point and their λ-derivatives.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeKernel {
    pub c: Complex64,
    pub s: Complex64,
    pub dc_dlambda: Complex64,
    pub ds_dlambda: Complex64,
}

impl EdgeKernel {
    /// `C'(x) = -λ S(x)`.
    pub fn c_prime(&self, lambda: Complex64) -> Complex64 {
        -lambda * self.s
    }

    /// `S'(x) = C(x)`.
    pub fn s_prime(&self) -> Complex64 {
        self.c
    }
}

/// Evaluates `C`, `S` and their λ-derivatives at `x`.
pub fn eval_kernel(lambda: Complex64, x: f64) -> Result<EdgeKernel> {
    let p = SpectralPoint::new(lambda)?;
    Ok(eval_at(&p, x))
}

pub(crate) fn eval_at(p: &SpectralPoint, x: f64) -> EdgeKernel {
    let lambda = p.lambda;
    let z = p.sqrt_lambda * x;
    if z.norm() < SERIES_RADIUS {
        return series(lambda, x);
    }
    let c = z.cos();
    let s = z.sin() / p.sqrt_lambda;
    EdgeKernel {
        c,
        s,
        dc_dlambda: -0.5 * x * s,
        ds_dlambda: (x * c - s) / (2.0 * lambda),
    }
}

fn series(lambda: Complex64, x: f64) -> EdgeKernel {
    let w = -lambda * x * x;
    // term_n = w^n / (2n)!  and  w^n / (2n+1)!
    let mut even = ONE;
    let mut odd = ONE;
    let mut c = ONE;
    let mut s_over_x = ONE;
    // Σ_{n≥1} n (-1)^n λ^{n-1} x^{2n-2} / (2n+1)!  =  -Σ n w^{n-1} / (2n+1)!
    let mut ds_acc = Complex64::new(0.0, 0.0);
    let mut wpow = ONE;
    let mut inv_fact = 1.0;
    for n in 1..SERIES_TERMS {
        let nf = n as f64;
        even *= w / ((2.0 * nf - 1.0) * (2.0 * nf));
        odd *= w / ((2.0 * nf) * (2.0 * nf + 1.0));
        inv_fact /= (2.0 * nf) * (2.0 * nf + 1.0);
        c += even;
        s_over_x += odd;
        ds_acc -= nf * wpow * inv_fact;
        wpow *= w;
    }
    let s = s_over_x * x;
    EdgeKernel {
        c,
        s,
        dc_dlambda: -0.5 * x * s,
        ds_dlambda: ds_acc * x * x * x,
    }
}

/// The DtN entries of a single edge: the matrix is `[[a, b], [b, a]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeDtn {
    pub a: Complex64,
    pub b: Complex64,
}

impl EdgeDtn {
    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        [[self.a, self.b], [self.b, self.a]]
    }
}

/// Edge DtN block for an edge of length `ell`:
/// `a = -√λ cot(√λ ℓ)`, `b = √λ csc(√λ ℓ)`.
///
/// It maps the endpoint values of the solution of `-f'' = λ f` to minus
/// the inward derivatives at those endpoints.
pub fn edge_dtn(lambda: Complex64, ell: f64) -> Result<EdgeDtn> {
    let p = SpectralPoint::new(lambda)?;
    edge_dtn_at(&p, ell)
}

pub(crate) fn edge_dtn_at(p: &SpectralPoint, ell: f64) -> Result<EdgeDtn> {
    let z = p.sqrt_lambda * ell;
    if z.im.abs() > FACTORED_THRESHOLD {
        let (cot, csc) = factored_cot_csc(z);
        return Ok(EdgeDtn { a: -p.sqrt_lambda * cot, b: p.sqrt_lambda * csc });
    }
    let k = eval_at(p, ell);
    if k.s.norm() < POLE_TOLERANCE * k.c.norm().max(1.0) {
        let n = (p.sqrt_lambda.re * ell / std::f64::consts::PI).round().abs().max(1.0);
        return Err(Error::EdgePole {
            edge: None,
            lambda: p.lambda,
            nearest_pole: (n * std::f64::consts::PI / ell).powi(2),
        });
    }
    Ok(EdgeDtn { a: -k.c / k.s, b: ONE / k.s })
}

/// `cot z` and `csc z` for `|Im z|` large, written in terms of
/// `e^{2iz}` (Im z > 0) so that nothing overflows.
fn factored_cot_csc(z: Complex64) -> (Complex64, Complex64) {
    if z.im < 0.0 {
        let (cot, csc) = factored_cot_csc(-z);
        return (-cot, -csc);
    }
    let i = Complex64::i();
    let p = (i * z).exp();
    let q = p * p;
    let cot = -i * (ONE + q) / (ONE - q);
    let csc = -2.0 * i * p / (ONE - q);
    (cot, csc)
}
