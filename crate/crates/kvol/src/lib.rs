//! k-dimensional volume in Euclidean n-space through the inner product on
//! k-vectors.
//!
//! The crate builds the space of k-vectors over E^n in coordinates over the
//! lexicographically ordered subset basis, equips it with the lifted inner
//! product (computed both as a coordinate dot product and as a Gram
//! determinant), and uses it to measure parallelopipeds and box-covered
//! regions of affine subspaces. On top of those volumes it verifies, by
//! construction and by randomized campaigns, the product formula
//!
//! ```text
//! Vol_k(A) Vol_k(B) = sum over J of Vol_k(proj_J(A)) Vol_k(proj_J(B))
//! ```
//!
//! for bodies A, B in parallel or identical k-dimensional affine subspaces
//! (J ranging over the k-element subsets of the coordinate axes), its
//! Pythagorean special case A = B, and the matching determinant identity for
//! k x n matrices.
//!
//! Modules:
//! - [`combinatorics`]: enumeration/ranking of the subset basis labels.
//! - [`linalg`]: dense matrix kernels, frames, orthonormalization.
//! - [`exterior`]: wedge coordinates and the two routes to the inner product.
//! - [`volume`]: parallelopiped volumes, projections, identity checks.
//! - [`measure`]: box covers of regions in affine subspaces, rasterization,
//!   and the product formula at the measurable-set level.
//! - [`report`]: the check-report type shared by every identity check.
//! - [`rng`]: a small deterministic generator for seeded campaigns.

#![forbid(unsafe_code)]

pub mod combinatorics;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod measure;
pub mod report;
pub mod rng;
pub mod volume;

pub use error::{Error, Result};
