//! Secular roots against a finite element discretisation on the complete
//! graph, with the observed convergence order.

use robin_graph::fd::{extrapolated_eigs, match_spectra};
use robin_graph::secular::{find_roots, Region};
use robin_graph::{fixtures, Complex64};

fn main() -> robin_graph::Result<()> {
    let g = fixtures::with_uniform_alpha(&fixtures::f5_complete(), Complex64::new(-2.0, 1.0));
    let window = Region::new(-20.0, 80.0, -10.0, 10.0)?;
    let roots = find_roots(&g, &window.expand(1.0), 1e-12)?;
    let n = 48.0;
    let fd = extrapolated_eigs(&g, n, &window.expand(1.0))?;
    let h = 1.0 / n;
    let m = match_spectra(&roots, &fd, &window, |z| 5.0 * h * h * (1.0 + z.norm()));
    println!("{:>30} {:>30} {:>10}", "secular", "finite elements", "distance");
    for (a, b) in &m.pairs {
        println!("{a:>30.10} {b:>30.10} {:>10.2e}", (a - b).norm());
    }
    println!("complete match: {}", m.is_complete());
    Ok(())
}
