//! Expression language and batch runners for the `ctopo` binary.

pub mod eval;
pub mod gen;
pub mod parser;
pub mod suites;
