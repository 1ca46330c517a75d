//! Exact scalars, word-indexed tensors and the subspace lattice of `V^{⊗m}`.

mod echelon;
pub mod field;
pub mod matrix;
pub mod subspace;
pub mod tensor;
pub mod word;

pub(crate) use echelon::Echelon;
pub use field::{format_q, Field, Fp, Q};
pub use matrix::{substitute, Matrix};
pub use subspace::Subspace;
pub use tensor::Tensor;
pub use word::{ambient_dim, Word};
