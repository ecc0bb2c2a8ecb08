//! Exact arithmetic for the algebra of partial permutations.
//!
//! The crate models the semigroup of partial permutations, its semigroup
//! algebra, and the invariant subalgebra spanned by the conjugacy-class sums
//! `A_ρ`. On top of that it computes the structure constants of class
//! convolution, the Farahat–Higman polynomials for the centres of the
//! symmetric-group algebras, the semigroup of fillings, evaluations of
//! shifted symmetric functions, and checks of degree filtrations.
//!
//! All arithmetic is exact (`BigInt` / `BigRational`). The heavy enumeration
//! kernels run on rayon when the `parallel` feature is enabled (the default)
//! and fall back to plain iterators otherwise.

pub mod characters;
pub mod class_algebra;
pub mod error;
pub mod fillings;
pub mod filtrations;
pub mod golden;
pub mod numbers;
mod par;
pub mod partial_perm;
pub mod partitions;
pub mod semigroup_algebra;
pub mod verify;

pub use class_algebra::{BinomialPolynomial, ClassVector};
pub use error::{Error, Result};
pub use fillings::Filling;
pub use partial_perm::PartialPermutation;
pub use partitions::Partition;
