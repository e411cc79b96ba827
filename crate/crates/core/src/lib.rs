//! Eigenvalues of Laplacians on compact metric graphs with complex Robin
//! (δ-type) vertex conditions.
//!
//! The crate is organised around one entire secular function per graph:
//! the determinant of the 2m×2m system expressing the vertex conditions in
//! the edge basis `cos(√λ x)`, `sin(√λ x)/√λ`. Its zeros are the
//! eigenvalues, counted and located with the argument principle. Around it
//! sit
//!
//! - [`dtn`]: the Dirichlet-to-Neumann matrix `M(λ)` on the Robin vertices,
//!   whose condition `det(M(λ) - I_α) = 0` gives an independent check;
//! - [`continuation`]: tracking of eigenvalue branches as the Robin
//!   parameters move along straight lines;
//! - [`bounds`]: numerical-range enclosures, trace inequalities and simple
//!   eigenvalue bounds;
//! - [`fd`]: a linear finite element discretisation used as an oracle.
//!
//! ```
//! use robin_graph::{fixtures, secular::{find_roots, Region}};
//!
//! let g = fixtures::pt_interval(1.0, 3.0);
//! let roots = find_roots(&g, &Region::new(0.5, 50.0, -5.0, 5.0).unwrap(), 1e-10).unwrap();
//! assert_eq!(roots.len(), 3);
//! assert!((roots[0].lambda.re - 9.0).abs() < 1e-8);
//! ```

pub mod bounds;
pub mod cli;
pub mod continuation;
pub mod dtn;
pub mod error;
pub mod fd;
pub mod fixtures;
pub mod graph;
pub mod kernels;
pub mod linalg;
pub mod secular;

pub use error::{Error, Result};
pub use graph::{MetricGraph, VertexCondition};
pub use num_complex::Complex64;
