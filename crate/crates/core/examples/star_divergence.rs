//! One eigenvalue of the equilateral 3-star runs off to `-∞` as the centre
//! coupling `α → -∞`, following `λ ≈ -α²/9`.

use robin_graph::continuation::{fit_divergence_law, trace_branch, ParameterPath, TraceConfig};
use robin_graph::secular::{find_roots, Region};
use robin_graph::{fixtures, Complex64};

fn main() -> robin_graph::Result<()> {
    let g = fixtures::with_uniform_alpha(&fixtures::f3_star(), Complex64::new(0.0, 0.0));
    let start = find_roots(&g, &Region::new(-1.0, 1.0, -1.0, 1.0)?, 1e-12)?[0];
    let path = ParameterPath::uniform(g.alpha(), 1.0, std::f64::consts::PI);
    let config = TraceConfig { t_end: 30.0, checkpoints: vec![10.0, 20.0], stop_when_divergent: false, ..Default::default() };
    let branch = trace_branch(&g, &path, &start, &config, &[])?;

    println!("{:>6} {:>22} {:>22} {:>10}", "alpha", "lambda", "-alpha^2/9", "error");
    for t in [10.0, 20.0, 30.0] {
        let s = branch.at(t).expect("checkpoint");
        let a = s.alpha[0];
        let lead = -a * a / 9.0;
        println!("{:>6.1} {:>22.10} {:>22.10} {:>10.2e}", a.re, s.lambda.re, lead.re, (s.lambda - lead).norm());
    }
    let fit = fit_divergence_law(&g, &branch, 0)?;
    println!("fitted c = {:.6}, error decay rate = {:.4} ({} samples)", fit.coefficient, fit.rate, fit.samples_used);
    Ok(())
}
