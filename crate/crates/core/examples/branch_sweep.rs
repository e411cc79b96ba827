//! Counts the branches that diverge when one Robin parameter of the path
//! moves left and the other moves up the imaginary axis.

use std::f64::consts::PI;

use robin_graph::continuation::{count_divergent, ParameterPath, TraceConfig};
use robin_graph::secular::Region;
use robin_graph::{fixtures, Complex64};

fn main() -> robin_graph::Result<()> {
    let g = fixtures::f2_path();
    let base = vec![Complex64::new(0.3, 0.1), Complex64::new(0.5, -0.05)];
    let path = ParameterPath::new(base, vec![1.0, 1.0], vec![1.2 * PI, 0.5 * PI])?;
    let config = TraceConfig { t_end: 5.0e4, conv_tol: 1e-2, ..Default::default() };
    let count = count_divergent(
        &g,
        &path,
        &Region::new(-20.0, 40.0, -10.0, 10.0)?,
        &Region::new(-5.0, 400.0, -5.0, 5.0)?,
        &config,
    )?;
    for b in &count.branches {
        let last = b.last();
        println!("{:>24.6} -> {:>28.6} at t = {:<8} {}", b.origin.lambda, last.lambda, last.t, b.status.label());
    }
    println!("{} divergent, {} predicted", count.divergent, count.predicted);
    Ok(())
}
