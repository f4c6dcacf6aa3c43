//! File formats, parallel enumeration and the `qrigid` command line.

mod cli;
pub mod formula;
pub mod json;
pub mod parallel;

pub use cli::{run, Outcome};
