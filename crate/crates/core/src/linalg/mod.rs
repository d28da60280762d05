//! Exact linear algebra over prime fields: matrices, canonical subspaces,
//! and the kernel/image/sum/intersection toolkit.

mod field;
mod matrix;
mod subspace;

pub use field::{FieldSpec, MAX_PRIME};
pub use matrix::{rref, Matrix, MatrixJson};
pub use subspace::{
    annihilator, enumerate_subspaces, image_basis, kernel_basis, subspace_contains, subspace_intersect,
    subspace_sum, Subspace, SubspaceJson,
};
pub(crate) use subspace::increment;
