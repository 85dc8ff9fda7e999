//! Exact-arithmetic calculus of reduction operators.
//!
//! A reduction operator over a finite ordered generator set is an idempotent
//! linear map sending each generator to itself or to a combination of
//! strictly smaller generators. Subspaces and reduction operators determine
//! each other through the unique reduced basis, which induces a lattice on
//! operators; obstructions of a family measure its failure of confluence, and
//! joining the meet with the residual of the family yields the canonical
//! minimal complement that completes it.
//!
//! The same machinery runs over truncated word spaces, where the extensions
//! of a rule operator form the rewriting family of a presentation and
//! bounded-degree confluence is the Groebner property of the rule set, and
//! over partial orders, where meets may fail to exist and completability
//! becomes a search.
//!
//! All coefficients are arbitrary-precision rationals. Every value is
//! immutable after construction and every operation is a pure function, so
//! values may be freely shared across threads.

pub mod basis;
pub mod completion;
pub mod error;
pub mod gens;
pub mod general;
pub mod io;
pub mod lattice;
pub mod operator;
pub mod pairs;
pub mod presentation;
pub mod rewriting;
pub mod scalar;
pub mod vector;
pub mod words;

#[cfg(test)]
pub(crate) mod fixtures;

pub use basis::{reduce_basis, ReducedBasis};
pub use error::{Error, Result};
pub use gens::GenSet;
pub use lattice::OperatorFamily;
pub use operator::ReductionOperator;
pub use scalar::Scalar;
pub use vector::Vector;
