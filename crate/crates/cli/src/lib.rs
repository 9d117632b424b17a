//! File format, report rendering and property-suite runner behind the
//! `nilcert` binary.

pub mod format;
pub mod fuzz;
pub mod report;

pub use format::{format_matrix, parse_matrix, ParseError};
