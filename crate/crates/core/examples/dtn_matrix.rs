//! The Dirichlet-to-Neumann matrix on the two Robin vertices of the path,
//! its eigenvalues, and how quickly it approaches `i√λ D` for large
//! `Im √λ`.

use robin_graph::{dtn, fixtures, Complex64};

fn main() -> robin_graph::Result<()> {
    let g = fixtures::f2_path();
    let lambda = Complex64::new(5.0, 2.0);
    let m = dtn::reduced_dtn(&g, lambda)?;
    println!("M({lambda}) =");
    for i in 0..m.matrix.nrows() {
        let row: Vec<String> = (0..m.matrix.ncols()).map(|j| format!("{:>28.12}", m.matrix[(i, j)])).collect();
        println!("  {}", row.join(" "));
    }
    println!("eigenvalues: {:?}", dtn::reduced_eigenvalues(&g, lambda)?);

    println!("\n{:>6} {:>14}", "Im √λ", "‖M - i√λD‖");
    for y in [4.0, 8.0, 12.0, 16.0] {
        let s = Complex64::new(0.0, y);
        println!("{y:>6} {:>14.4e}", dtn::asymptotic_deviation(&g, s * s)?);
    }
    Ok(())
}
