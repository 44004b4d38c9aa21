//! Command implementations and property suites behind the `ribbonlab` binary.

pub mod commands;
pub mod input;
pub mod sample;
pub mod suites;
