//! Ground truth on finite spaces: every topology and every ideal on up to
//! five labelled points, operators computed from their definitions, and
//! exhaustive checking of the theorems and of the claims that fail in general.
//!
//! Points are labelled `0..n-1` and subsets are bitmasks.

mod brute;
mod functions;
mod space;
mod theorems;

pub use brute::{bf_operator, BfTable, BfValue, Operator};
pub use functions::{
    all_maps, image, inverse, is_bijection, is_compact, is_continuous, is_homeomorphism, is_ideal_closed_map,
    is_ideal_compact, is_ideal_continuous, is_ideal_homeomorphism, is_ideal_open_map, is_onto, map_property, preimage,
    MapProperty, PointMap,
};
pub use space::{
    bit, enumerate_ideals, enumerate_topologies, from_members, full, members, FiniteIdeal, FiniteIdealSpace,
    FiniteModelJson, FiniteSpace, Subset, MAX_N,
};
pub use theorems::{
    check_all, check_theorem, claim, fmt_set, search_counterexample, theorem, Claim, Instance, Kind, ModelDesc,
    Statement, TheoremReport, Witness, CLAIMS, MAX_MAP_N, MAX_SET_N, THEOREMS,
};
