//! Verification suites and table rendering behind the `atlas` binary.

pub mod context;
pub mod derive;
pub mod render;
pub mod report;
pub mod suites;
pub mod tables;
