//! Command-line front end: request parsing, dispatch and report rendering.

pub mod commands;
pub mod report;
pub mod request;
