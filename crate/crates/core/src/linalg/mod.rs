//! Dense complex linear algebra with an explicit tolerance policy.

mod eigen;
mod matrix;
mod subspace;
mod svd;

pub use eigen::{distinct_eigenvalues, distinct_eigenvalues_against, eigenvalues, EigenCluster};
pub use matrix::Matrix;
#[allow(unused_imports)]
pub(crate) use matrix::{dot, norm};
pub use subspace::{
    generalized_kernel, generalized_kernel_against, image_basis, image_basis_against, intersect, kernel_basis,
    kernel_basis_against, rank, rank_against, Subspace,
};
pub(crate) use svd::solve_with;
pub use svd::{least_squares, svd, Svd};
