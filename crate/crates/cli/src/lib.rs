//! Command-line front end: input documents, report rendering and dispatch.

pub mod document;
pub mod error;
pub mod format;
pub mod report;
pub mod run;

pub use run::run_cli;
