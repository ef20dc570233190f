//! Command-line front end for `wrm-core`.

pub mod args;
pub mod commands;
pub mod sample;
pub mod verify;
