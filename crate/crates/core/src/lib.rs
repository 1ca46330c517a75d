//! Decision procedures for graded algebras `A = T(V)/(R)` generated in degree
//! one with homogeneous relations of a single degree `N`, centred on the case
//! of one relation.
//!
//! Everything is computed with exact arithmetic. Most checks come in pairs: a
//! closed-form or criterion-based answer and an independent brute-force route
//! (quotient linear algebra, Koszul complex homology, word counting) that the
//! tests and the acceptance suite hold against each other.
//!
//! Generators are 0-indexed: `x_0, ..., x_{n-1}`.

pub mod classification;
pub mod distributivity;
pub mod error;
pub mod exactlin;
pub mod exec;
pub mod hilbert;
pub mod koszul;
pub mod monomial;
pub mod pbw;
pub mod presentation;
pub mod rewriting;
pub mod sample;

pub use error::{Error, Result};
pub use exactlin::{Field, Fp, Matrix, Subspace, Tensor, Word, Q};
pub use exec::Exec;
pub use presentation::Presentation;
