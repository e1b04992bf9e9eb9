//! Command-line front end and file formats for `sfactor-core`.
//!
//! Adds what the `no_std` core leaves out: group table files, DOT and JSON
//! exports, rayon-parallel enumeration and scans, and the `sfactor` binary.

pub mod cli;
pub mod export;
pub mod parallel;
pub mod report;
pub mod source;
pub mod table;

pub use sfactor_core;
