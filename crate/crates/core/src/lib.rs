//! Exact construction and verification of quadratic Poisson brackets that are
//! compatible with a finite-dimensional associative algebra.
//!
//! An algebra `A` with structure constants `e_i e_j = a_{ij}^k e_k` and an
//! antisymmetric `r ∈ A∧A` give the quadratic bracket `π(x) = [r, x⊗x]`.
//! The crate builds such brackets over exact rationals and checks the
//! identities that make them Poisson and multiplicative: Jacobi, the
//! multiplicativity identity, the derivation property of `δ = ad_r`, the
//! classical Yang–Baxter equation and ad-invariance of the Schouten bracket,
//! and the Lie-bialgebra structure carried by the linearization at the unit.
//!
//! ```
//! use quadpoisson::catalog::{get_algebra, CatalogAlgebra};
//! use quadpoisson::poisson::jacobiator;
//! use quadpoisson::scalar::ratio;
//! use quadpoisson::yang_baxter::{quadratic_from_r, RMatrix};
//!
//! let h = get_algebra(&CatalogAlgebra::Quaternions).unwrap();
//! let pi = quadratic_from_r(&h, &RMatrix::wedge(4, 2, 3), &ratio(1, 2)).unwrap();
//! assert!(jacobiator(&pi).is_zero());
//! ```

pub mod algebra;
pub mod bialgebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod numeric;
pub mod poisson;
pub mod poly;
pub mod random;
pub mod residual;
pub mod scalar;
pub mod yang_baxter;

pub use algebra::{Algebra, Tensor2, Tensor3, Vector};
pub use error::{Error, Result};
pub use poisson::{LinearTensor, PolyTensor, QuadraticTensor};
pub use residual::ResidualReport;
pub use scalar::Scalar;
pub use yang_baxter::RMatrix;
