//! File formats, golden tables, self-tests and the command line for
//! [`brauer_core`].

pub mod checks;
pub mod cli;
pub mod expr;
pub mod goldens;
pub mod json;
