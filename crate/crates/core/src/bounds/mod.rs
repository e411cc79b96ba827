//! Enclosures for the spectrum: the numerical-range region, real- and
//! imaginary-part bounds, the vertex trace inequality, the star model and
//! negative-eigenvalue counting.

mod estimates;
mod range;
mod test_function;
mod trace;

pub use estimates::{
    count_negative_eigenvalues, first_eigenvalue_upper_bound, imag_part_bound, real_part_lower_bound,
    star_secular_solve, two_sided_bounds, ImagCheck, NegativeCount, StarSolution, NEGATIVE_STRIP,
};
pub use range::{Membership, RangeRegion};
pub use test_function::{rayleigh_quotient, Norms, TestFunction, DEFAULT_NODES};
pub use trace::{trace_inequality_check, TraceCheck, TraceMode};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::graph::MetricGraph;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RangeSample {
    pub quotient: Complex64,
    pub membership: Membership,
}

/// Rayleigh quotients of `count` random test functions together with
/// their membership in the enclosing region. Sample `i` uses its own
/// generator seeded from `seed + i`, so the output does not depend on the
/// number of worker threads.
pub fn sample_numerical_range(
    graph: &MetricGraph,
    region: &RangeRegion,
    count: usize,
    seed: u64,
) -> Result<Vec<RangeSample>> {
    let alpha = graph.alpha();
    (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            let f = TestFunction::random(graph, DEFAULT_NODES, &mut rng);
            let quotient = rayleigh_quotient(graph, &alpha, &f)?;
            Ok(RangeSample { quotient, membership: region.membership(quotient) })
        })
        .collect()
}
