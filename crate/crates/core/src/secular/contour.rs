use std::f64::consts::PI;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_complex::Complex64;
use rayon::prelude::*;

use super::system::SecularFunction;
use crate::error::{Error, Result};
use crate::linalg::wrap_phase;

/// Total number of determinant evaluations allowed on one contour.
pub const SAMPLE_BUDGET: usize = 200_000;

/// Relative shift applied to a region whose boundary passes through a
/// root.
pub const NUDGE: f64 = 1e-6;

/// Closed axis-aligned rectangle in the complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Region {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Region {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self> {
        let finite = [re_min, re_max, im_min, im_max].iter().all(|x| x.is_finite());
        if !finite || re_min >= re_max || im_min >= im_max {
            return Err(Error::DegenerateRegion);
        }
        Ok(Region { re_min, re_max, im_min, im_max })
    }

    /// Square of half-width `h` around `z`.
    pub fn around(z: Complex64, h: f64) -> Self {
        Region { re_min: z.re - h, re_max: z.re + h, im_min: z.im - h, im_max: z.im + h }
    }

    pub fn width(&self) -> f64 {
        self.re_max - self.re_min
    }

    pub fn height(&self) -> f64 {
        self.im_max - self.im_min
    }

    pub fn diameter(&self) -> f64 {
        self.width().hypot(self.height())
    }

    pub fn center(&self) -> Complex64 {
        Complex64::new(0.5 * (self.re_min + self.re_max), 0.5 * (self.im_min + self.im_max))
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }

    pub fn expand(&self, margin: f64) -> Self {
        Region {
            re_min: self.re_min - margin,
            re_max: self.re_max + margin,
            im_min: self.im_min - margin,
            im_max: self.im_max + margin,
        }
    }

    /// Counter-clockwise corners starting at the lower left.
    pub fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.re_min, self.im_min),
            Complex64::new(self.re_max, self.im_min),
            Complex64::new(self.re_max, self.im_max),
            Complex64::new(self.re_min, self.im_max),
        ]
    }

    /// Left and right parts cut at fraction `fx` of the width.
    pub fn split_x(&self, fx: f64) -> [Region; 2] {
        let xm = self.re_min + fx * self.width();
        [Region { re_max: xm, ..*self }, Region { re_min: xm, ..*self }]
    }

    /// Lower and upper parts cut at fraction `fy` of the height.
    pub fn split_y(&self, fy: f64) -> [Region; 2] {
        let ym = self.im_min + fy * self.height();
        [Region { im_max: ym, ..*self }, Region { im_min: ym, ..*self }]
    }

    /// Four children cut at fractions `fx`, `fy` of the width and height.
    pub fn split(&self, fx: f64, fy: f64) -> [Region; 4] {
        let xm = self.re_min + fx * self.width();
        let ym = self.im_min + fy * self.height();
        [
            Region { re_max: xm, im_max: ym, ..*self },
            Region { re_min: xm, im_max: ym, ..*self },
            Region { re_max: xm, im_min: ym, ..*self },
            Region { re_min: xm, im_min: ym, ..*self },
        ]
    }
}

/// Winding count of the secular determinant around `region`, plus where
/// the region ended up after any nudging.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CountReport {
    pub count: usize,
    pub region: Region,
    /// How many times the boundary had to be pushed outwards because a
    /// root sat on it.
    pub nudges: u32,
}

/// Argument-principle count. Fails with [`Error::RootOnBoundary`] if the
/// boundary passes through a root.
pub fn winding_number(f: &SecularFunction, region: &Region) -> Result<usize> {
    let used = AtomicUsize::new(0);
    let corners = region.corners();
    let mut total = 0.0;
    for i in 0..4 {
        total += segment_phase_change(f, corners[i], corners[(i + 1) % 4], &used)?;
    }
    let w = total / (2.0 * PI);
    let r = w.round();
    if (w - r).abs() > 0.1 {
        // a half-integer winding means the contour cut through a zero
        return Err(Error::RootOnBoundary(region.center()));
    }
    if r < 0.0 {
        return Err(Error::IllConditionedContour { budget: SAMPLE_BUDGET });
    }
    Ok(r as usize)
}

/// Counts roots in `region`, pushing the boundary outwards by
/// `NUDGE · diameter` when a root lies on it.
pub fn count_with_nudge(f: &SecularFunction, region: &Region) -> Result<CountReport> {
    let mut r = *region;
    for nudges in 0..4 {
        match winding_number(f, &r) {
            Ok(count) => return Ok(CountReport { count, region: r, nudges }),
            Err(Error::RootOnBoundary(_)) => r = r.expand(NUDGE * region.diameter() * (nudges + 1) as f64),
            Err(e) => return Err(e),
        }
    }
    Err(Error::RootOnBoundary(region.center()))
}

/// Phase of the determinant and the local phase speed `|(log det)'|`.
#[derive(Clone, Copy)]
struct Node {
    z: Complex64,
    phase: f64,
    speed: f64,
}

fn node_at(f: &SecularFunction, z: Complex64) -> Result<Node> {
    let (s, ld) = f.sample_with_derivative(z)?;
    match ld {
        Some(ld) if !s.det.is_zero() => Ok(Node { z, phase: s.det.phase, speed: ld.norm() }),
        _ => Err(Error::RootOnBoundary(z)),
    }
}

/// Bound on the local phase speed: the determinant is a sum of products
/// of `e^{±i√λ ℓ_e}`, so `arg det` moves at most about `|G| |d√λ|`.
fn initial_nodes(f: &SecularFunction, a: Complex64, b: Complex64) -> Vec<Complex64> {
    const PRE: usize = 64;
    let speed = 2.0 * f.total_length();
    let mut nodes = Vec::new();
    let mut prev = a.sqrt();
    for i in 0..PRE {
        let za = a + (b - a) * (i as f64 / PRE as f64);
        let zb = a + (b - a) * ((i + 1) as f64 / PRE as f64);
        let s = zb.sqrt();
        let ds = (s - prev).norm().min((s + prev).norm());
        prev = s;
        let pieces = ((speed * ds) / (PI / 4.0)).ceil().max(1.0) as usize;
        for k in 0..pieces {
            nodes.push(za + (zb - za) * (k as f64 / pieces as f64));
        }
    }
    nodes.push(b);
    nodes
}

fn segment_phase_change(
    f: &SecularFunction,
    a: Complex64,
    b: Complex64,
    used: &AtomicUsize,
) -> Result<f64> {
    let nodes = initial_nodes(f, a, b);
    if used.fetch_add(nodes.len(), Ordering::Relaxed) + nodes.len() > SAMPLE_BUDGET {
        return Err(Error::IllConditionedContour { budget: SAMPLE_BUDGET });
    }
    let nodes: Vec<Node> = nodes.par_iter().map(|&z| node_at(f, z)).collect::<Result<_>>()?;
    let min_len = 1e-13 * (1.0 + a.norm().max(b.norm()));
    let mut total = 0.0;
    for w in nodes.windows(2) {
        total += refine(f, w[0], w[1], min_len, used)?;
    }
    Ok(total)
}

/// Accepts a piece once the wrapped phase increment is below `π/2` and
/// the local phase speed at both ends could not have produced a full extra
/// turn; the second test catches clusters of zeros close to the contour,
/// where an increment of `2π ± δ` would otherwise wrap to `±δ`.
fn refine(f: &SecularFunction, lo: Node, hi: Node, min_len: f64, used: &AtomicUsize) -> Result<f64> {
    let mut stack = vec![(lo, hi)];
    let mut total = 0.0;
    while let Some((a, b)) = stack.pop() {
        let d = wrap_phase(b.phase - a.phase);
        let len = (b.z - a.z).norm();
        if d.abs() < PI / 2.0 && len * a.speed.max(b.speed) < PI {
            total += d;
            continue;
        }
        if len < min_len {
            return Err(Error::RootOnBoundary(0.5 * (a.z + b.z)));
        }
        if used.fetch_add(1, Ordering::Relaxed) + 1 > SAMPLE_BUDGET {
            return Err(Error::IllConditionedContour { budget: SAMPLE_BUDGET });
        }
        let m = node_at(f, 0.5 * (a.z + b.z))?;
        // right half first so the left half is summed first
        stack.push((m, b));
        stack.push((a, m));
    }
    Ok(total)
}
