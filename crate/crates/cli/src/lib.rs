//! File formats, DOT export, seeded random layers, named check suites and the
//! `mlorder` command line for the `multilayer-order` crate.

pub mod cli;
pub mod dot;
pub mod formats;
pub mod random;
pub mod suites;
