//! Eigenvalues are attracted to the spectrum with Dirichlet conditions at
//! the Robin vertices as the couplings grow along the imaginary axis.

use robin_graph::secular::{dirichlet_spectrum, find_roots, DirichletMode, Region};
use robin_graph::{fixtures, Complex64};

fn main() -> robin_graph::Result<()> {
    let g = fixtures::f4_cycle_pendant();
    let window = Region::new(0.5, 40.0, -8.0, 8.0)?;
    let dir = dirichlet_spectrum(&g, DirichletMode::RobinVertices, &window, 1e-12)?;
    println!("Dirichlet at the Robin vertices:");
    for r in &dir {
        println!("  {:.10}", r.lambda.re);
    }
    for s in [10.0, 100.0, 1000.0] {
        let gs = fixtures::with_uniform_alpha(&g, Complex64::new(0.0, s));
        let roots = find_roots(&gs, &window, 1e-12)?;
        let worst = roots
            .iter()
            .map(|r| dir.iter().map(|d| (d.lambda - r.lambda).norm()).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max);
        println!("alpha = {s}i: {} eigenvalues, farthest {worst:.3e} from the Dirichlet set", roots.len());
    }
    Ok(())
}
