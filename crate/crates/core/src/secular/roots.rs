use num_complex::Complex64;
use rayon::prelude::*;

use super::contour::{count_with_nudge, winding_number, Region};
use super::system::SecularFunction;
use crate::error::{Error, Result};

pub const NEWTON_MAX_ITER: usize = 50;

/// Split fractions tried in turn; off-centre so that symmetric spectra do
/// not put roots on the cuts.
const SPLITS: [(f64, f64); 4] = [(0.4871, 0.5129), (0.5129, 0.4619), (0.4619, 0.5371), (0.5371, 0.4871)];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootResult {
    pub lambda: Complex64,
    /// Winding count of the enclosing box.
    pub multiplicity: usize,
    /// `|det| / Π‖row‖` at `lambda`.
    pub residual: f64,
}

/// All roots of the secular determinant inside `region`, sorted by
/// `(Re, Im)`. Clusters that cannot be separated at box size `tol` are
/// returned as one root with the combined multiplicity.
pub fn find_roots_with(f: &SecularFunction, region: &Region, tol: f64) -> Result<Vec<RootResult>> {
    let rep = count_with_nudge(f, region)?;
    let mut roots = solve_box(f, &rep.region, rep.count, tol, 0)?;
    sort_roots(&mut roots);
    Ok(roots)
}

pub fn sort_roots(roots: &mut [RootResult]) {
    roots.sort_by(|a, b| a.lambda.re.total_cmp(&b.lambda.re).then(a.lambda.im.total_cmp(&b.lambda.im)));
}

fn solve_box(f: &SecularFunction, b: &Region, count: usize, tol: f64, depth: usize) -> Result<Vec<RootResult>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let c = b.center();
    let size = b.width().max(b.height());
    if let Some(z) = newton(f, c, count, tol) {
        if b.expand(tol * (1.0 + z.norm())).contains(z) {
            if count == 1 {
                return Ok(vec![root_at(f, z, 1)]);
            }
            let h = cluster_radius(z, count, tol);
            if h < 0.25 * size {
                if let Ok(w) = winding_number(f, &Region::around(z, h)) {
                    if w == count {
                        return Ok(vec![root_at(f, z, count)]);
                    }
                }
            }
        }
    }
    if size < tol * (1.0 + c.norm()) || depth > 200 {
        let z = newton(f, c, count, tol).filter(|z| b.contains(*z)).unwrap_or(c);
        return Ok(vec![root_at(f, z, count)]);
    }
    let mut last_err = None;
    for (fx, fy) in SPLITS {
        // elongated boxes are only cut across their long side, so a thin
        // strip around the real axis is never sliced along the axis itself
        let kids: Vec<Region> = if b.width() > 4.0 * b.height() {
            b.split_x(fx).to_vec()
        } else if b.height() > 4.0 * b.width() {
            b.split_y(fy).to_vec()
        } else {
            b.split(fx, fy).to_vec()
        };
        let counts: Vec<Result<usize>> = kids.par_iter().map(|k| winding_number(f, k)).collect();
        let counts: Vec<usize> = match counts.into_iter().collect::<Result<Vec<_>>>() {
            Ok(v) => v,
            Err(e) => {
                last_err = Some(e);
                continue;
            }
        };
        if counts.iter().sum::<usize>() != count {
            last_err = Some(Error::IllConditionedContour { budget: super::contour::SAMPLE_BUDGET });
            continue;
        }
        let parts: Vec<Result<Vec<RootResult>>> = kids
            .par_iter()
            .zip(counts.par_iter())
            .map(|(k, &n)| solve_box(f, k, n, tol, depth + 1))
            .collect();
        let mut out = Vec::new();
        for p in parts {
            out.extend(p?);
        }
        return Ok(out);
    }
    Err(last_err.expect("at least one split was attempted"))
}

/// Half-width of the box used to confirm a cluster of `w` roots found by
/// modified Newton: such a root is only located to about `ε^{1/w}`.
fn cluster_radius(z: Complex64, w: usize, tol: f64) -> f64 {
    let scale = 1.0 + z.norm();
    (10.0 * tol).max(100.0 * f64::EPSILON.powf(1.0 / w as f64)) * scale
}

fn root_at(f: &SecularFunction, z: Complex64, multiplicity: usize) -> RootResult {
    let residual = f.sample(z).map(|s| s.normalized()).unwrap_or(f64::NAN);
    RootResult { lambda: z, multiplicity, residual }
}

/// Newton iteration on `det`, with step `w / (log det)'` to keep
/// quadratic convergence at a root of multiplicity `w`.
pub fn newton(f: &SecularFunction, z0: Complex64, w: usize, tol: f64) -> Option<Complex64> {
    let mut z = z0;
    for _ in 0..NEWTON_MAX_ITER {
        let Ok(sys) = f.assemble(z) else { return None };
        let Some(ld) = sys.log_derivative() else { return Some(z) };
        let step = w as f64 / ld;
        if !(step.re.is_finite() && step.im.is_finite()) {
            return Some(z);
        }
        z -= step;
        if step.norm() < tol * (1.0 + z.norm()) {
            return Some(z);
        }
    }
    None
}
