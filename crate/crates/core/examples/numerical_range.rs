//! Random Rayleigh quotients on the cycle-with-pendant graph and the
//! region that must contain them.

use robin_graph::bounds::{sample_numerical_range, RangeRegion};
use robin_graph::{fixtures, Complex64};

fn main() -> robin_graph::Result<()> {
    for alpha in [Complex64::new(1.0, 1.0), Complex64::new(-2.0, 5.0), Complex64::new(-10.0, 0.0)] {
        let g = fixtures::with_uniform_alpha(&fixtures::f4_cycle_pendant(), alpha);
        let region = RangeRegion::for_graph(&g)?;
        let samples = sample_numerical_range(&g, &region, 2000, 7)?;
        let outside = samples.iter().filter(|s| !s.membership.member).count();
        let min_re = samples.iter().map(|s| s.quotient.re).fold(f64::INFINITY, f64::min);
        let max_im = samples.iter().map(|s| s.quotient.im.abs()).fold(0.0, f64::max);
        println!("alpha = {alpha}: {} quotients, {outside} outside, min Re {min_re:.3}, max |Im| {max_im:.3}", samples.len());
        // constant test function
        let ones = robin_graph::bounds::TestFunction::constant(&g, 16, Complex64::new(1.0, 0.0));
        let q = robin_graph::bounds::rayleigh_quotient(&g, &g.alpha(), &ones)?;
        println!("  constant function: {q:.6} (member: {})", region.contains(q));
    }
    Ok(())
}
