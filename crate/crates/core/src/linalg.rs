//! Small dense complex linear algebra helpers on top of nalgebra.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

/// Determinant kept as `log|det|` and `arg det`, so that huge or tiny
/// determinants never overflow.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogDet {
    /// `-inf` when the determinant is exactly zero.
    pub log_magnitude: f64,
    /// In `(-π, π]`.
    pub phase: f64,
}

impl LogDet {
    pub fn is_zero(&self) -> bool {
        self.log_magnitude == f64::NEG_INFINITY
    }

    /// The determinant itself; may overflow for large magnitudes.
    pub fn value(&self) -> Complex64 {
        Complex64::from_polar(self.log_magnitude.exp(), self.phase)
    }

    /// `det · e^{-shift}`.
    pub fn scaled(&self, shift: f64) -> Complex64 {
        Complex64::from_polar((self.log_magnitude - shift).exp(), self.phase)
    }
}

/// Log-determinant via LU with partial pivoting.
pub fn log_det(m: &CMatrix) -> LogDet {
    assert!(m.is_square(), "determinant of a non-square matrix");
    if m.nrows() == 0 {
        return LogDet { log_magnitude: 0.0, phase: 0.0 };
    }
    log_det_lu(&m.clone().lu())
}

pub type CLu = nalgebra::LU<Complex64, nalgebra::Dyn, nalgebra::Dyn>;

/// Log-determinant read off an existing factorisation.
pub fn log_det_lu(lu: &CLu) -> LogDet {
    let sign: Complex64 = lu.p().determinant();
    let u = lu.u();
    if u.nrows() == 0 {
        return LogDet { log_magnitude: 0.0, phase: 0.0 };
    }
    let mut log_magnitude = 0.0;
    let mut phase = sign.arg();
    for i in 0..u.nrows() {
        let d = u[(i, i)];
        if d == Complex64::new(0.0, 0.0) {
            return LogDet { log_magnitude: f64::NEG_INFINITY, phase: 0.0 };
        }
        log_magnitude += d.norm().ln();
        phase += d.arg();
    }
    LogDet { log_magnitude, phase: wrap_phase(phase) }
}

/// Maps an angle to `(-π, π]`.
pub fn wrap_phase(x: f64) -> f64 {
    use std::f64::consts::PI;
    let mut y = x.rem_euclid(2.0 * PI);
    if y > PI {
        y -= 2.0 * PI;
    }
    y
}

/// `Σ_i ln ‖row_i‖₂`, the log of Hadamard's bound `|det| ≤ Π ‖row_i‖`.
pub fn hadamard_log(m: &CMatrix) -> f64 {
    m.row_iter()
        .map(|r| r.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().ln())
        .sum()
}

pub fn norm_1(m: &CMatrix) -> f64 {
    m.column_iter()
        .map(|c| c.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Reciprocal 1-norm condition number; `0` for singular input.
pub fn rcond(m: &CMatrix) -> f64 {
    if m.nrows() == 0 {
        return 1.0;
    }
    let Some(inv) = m.clone().try_inverse() else {
        return 0.0;
    };
    let r = 1.0 / (norm_1(m) * norm_1(&inv));
    if r.is_finite() {
        r
    } else {
        0.0
    }
}

/// Eigenvalues of a small dense complex matrix (shifted Schur iteration).
pub fn eigenvalues(m: &CMatrix) -> Result<Vec<Complex64>> {
    if m.nrows() == 0 {
        return Ok(Vec::new());
    }
    let schur = nalgebra::Schur::try_new(m.clone(), f64::EPSILON, 10_000)
        .ok_or(Error::EigenNoConvergence)?;
    let ev = schur.eigenvalues().ok_or(Error::EigenNoConvergence)?;
    Ok(ev.iter().copied().collect())
}
