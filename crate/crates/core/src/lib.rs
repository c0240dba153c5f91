//! Exact zero forcing polynomials of small graphs.

pub mod analysis;
pub mod closed_forms;
pub mod error;
pub mod forcing;
pub mod forts;
pub mod graph;
pub mod poly;

pub use error::{Error, Result};
