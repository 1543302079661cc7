//! Exact set algebra on the real line and the ideal-relative operator layer
//! built on it.
//!
//! Sets are kept in a canonical normal form ([`RealSet`]) so equality is
//! structural. Five concrete topologies on ℝ live in [`topologies`], the
//! operators relative to an ideal of small sets in [`ideal_ops`], and a
//! brute-force checker over finite spaces in [`finite_oracle`].

pub mod finite_oracle;
pub mod ideal_ops;
pub mod maps_covers;
pub mod random;
pub mod realset;
pub mod topologies;

pub use ideal_ops::{IdealClassifyResult, IdealKind, IdealTopology, RealIdealSpace, SetAlgebra, Topology};
pub use realset::ext::{fmt_rational, int, parse_rational, rat, ExtRational, Rational};
pub use realset::simple::{Component, Interval, SimpleSet};
pub use realset::{CardinalityClass, DiscreteSet, Periodic, RealSet};
pub use topologies::{ClassifyResult, TopologyKind, TopologySpec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("validation error: {0}")]
    Validation(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("unknown operator `{0}`")]
    UnknownOperator(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
}
