//! Spectrum of the interval with conjugate imaginary couplings `∓it`: the
//! Dirichlet eigenvalues `n²π²` plus one extra eigenvalue `t²`.

use robin_graph::fixtures;
use robin_graph::secular::{find_roots, Region};

fn main() -> robin_graph::Result<()> {
    for t in [1.0, 3.0, 7.5] {
        let g = fixtures::pt_interval(1.0, t);
        let roots = find_roots(&g, &Region::new(0.5, 100.0, -5.0, 5.0)?, 1e-10)?;
        println!("t = {t}");
        for r in roots {
            println!("  {:>22.14}  (x{}, residual {:.1e})", r.lambda, r.multiplicity, r.residual);
        }
    }
    Ok(())
}
