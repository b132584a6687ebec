//! Exact main signless Laplacian eigenvalue counting and the desk-scale
//! classification of connected bicyclic graphs with exactly two of them.
//!
//! The signless Laplacian of a graph is `D + A`; an eigenvalue is *main*
//! when its eigenspace is not orthogonal to the all-ones vector. The crate
//! decides how many main eigenvalues a graph has exactly (walk-matrix rank
//! over the rationals, no tolerances), implements the 2-walk parabolic
//! characterization of the two-main case, cross-checks both against a
//! floating-point eigensolver, and verifies by exhaustive enumeration that
//! the connected bicyclic graphs with exactly two main eigenvalues are
//! precisely the named families `G1..G7` and `H(k)`.
//!
//! Entry points:
//! - [`graph::Graph`] plus [`graph6`] parsing/encoding,
//! - [`spectra::main_eigenvalue_count`] (exact) and
//!   [`jacobi::eigen_decompose`] (float cross-check),
//! - [`parabolic::check_parabolic`] and [`audit::audit_lemmas`],
//! - [`enumerate::verify_classification`] and
//!   [`enumerate::equivalence_sweep`].

pub mod analysis;
pub mod audit;
pub mod canon;
pub mod enumerate;
mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod jacobi;
pub mod parabolic;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::Graph;
