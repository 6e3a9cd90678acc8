//! File formats and command implementations for the `adlv` tool.

pub mod commands;
pub mod groupfile;
pub mod json;
