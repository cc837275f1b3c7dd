//! Finite crystallographic root systems, their Weyl groups, and the
//! distribution of generalized inversion and descent statistics.
//!
//! The crate is organised bottom-up:
//!
//! - [`rootsys`]: root systems of types A, B, C, D, G2 and their products,
//!   the root poset, heights and inner products.
//! - [`weyl`]: Weyl group elements, their action on roots, exhaustive
//!   enumeration and uniform sampling.
//! - [`stats`]: the indicator variables `X_β` and their sums `X_Ψ`, with
//!   exact moments by enumeration and Monte Carlo estimates.
//! - [`formulas`]: closed forms for covariances and variances in exact
//!   rational arithmetic.
//! - [`depgraph`]: dependency graphs on root sets.
//! - [`clt`]: standardization, Kolmogorov distance to the normal law and
//!   the dependency-graph convergence bounds.
//! - [`cli`]: the `weylstat` command line.

pub mod cli;
pub mod clt;
pub mod depgraph;
mod error;
pub mod exact;
pub mod formulas;
pub mod rng;
pub mod rootsys;
pub mod stats;
pub mod weyl;

pub use error::{Error, Result};
pub use exact::Rational;
pub use rootsys::{Component, Family, FamilySpec, Root, RootForm, RootId, RootSystem};
pub use weyl::WeylElement;

/// Default upper bound on the number of group elements enumerated exactly.
pub const DEFAULT_CAP: u128 = 10_000_000;
