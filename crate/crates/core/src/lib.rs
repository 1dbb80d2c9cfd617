//! Bottom Schur functions in exact arithmetic.
//!
//! The bottom Schur function `ŝ_λ` is the part of the power-sum expansion of
//! `s_λ` whose terms `p_ν` have the fewest factors, `ℓ(ν) = rank(λ)`. This
//! crate computes it three independent ways:
//!
//! * [`characters::bottom_via_expansion`]: Murnaghan–Nakayama characters,
//!   then a length filter;
//! * [`snakes::bottom_via_intervals`]: signed sums over interval sets of the
//!   snake sequence;
//! * [`jacobi_trudi::bottom_via_jacobi_trudi`]: the determinant of the
//!   Jacobi–Trudi minor with every `h_0` row and column removed.
//!
//! On top of these sit the span-dimension computations, the
//! Littlewood–Richardson expansion into the basis `{ŝ_ν : ℓ(ν) = rank(ν)}`,
//! and the power-sum/augmented-monomial identity ([`analysis`]).

pub mod analysis;
pub mod characters;
pub mod error;
pub mod jacobi_trudi;
pub mod linalg;
pub mod lr;
pub mod partition;
pub mod snakes;
pub mod symfunc;

pub use error::{Error, Result};
pub use linalg::QMatrix;
pub use partition::{part, partitions_of, Cell, Partition};
pub use symfunc::{Basis, SymFn, Q};
