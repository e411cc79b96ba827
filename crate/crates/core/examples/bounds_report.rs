//! Lowest eigenvalue of the star against the closed-form bounds, and the
//! negative eigenvalue count for strongly attractive coupling.

use robin_graph::bounds::{count_negative_eigenvalues, star_secular_solve, two_sided_bounds};
use robin_graph::secular::{find_roots, Region};
use robin_graph::{fixtures, Complex64, VertexCondition};

fn main() -> robin_graph::Result<()> {
    println!("{:>6} {:>14} {:>14} {:>14}", "alpha", "lower", "lambda_1", "upper");
    for a in [-1.0, -5.0, -10.0, -30.0] {
        let g = fixtures::star(&[1.0; 3], Complex64::new(a, 0.0), VertexCondition::Standard);
        let (lo, hi) = two_sided_bounds(&g)?;
        let roots = find_roots(&g, &Region::new(lo - 1.0, 0.5, -1.0, 1.0)?, 1e-12)?;
        println!("{a:>6} {lo:>14.6} {:>14.6} {hi:>14.6}", roots[0].lambda.re);
    }

    let s = star_secular_solve(-30.0, 1.0, 3).expect("alpha below -D/l");
    println!("\nDirichlet-leaf star, alpha = -30: lambda = {:.10}, bound {}", s.lambda, s.upper_bound);

    let path = fixtures::with_uniform_alpha(&fixtures::f2_path(), Complex64::new(-12.0, 0.0));
    let n = count_negative_eigenvalues(&path, 1e-10)?;
    println!("path, alpha = -12: {} negative eigenvalues (predicted {:?})", n.count, n.predicted);
    for r in n.roots {
        println!("  {:.12} (x{})", r.lambda.re, r.multiplicity);
    }
    Ok(())
}
