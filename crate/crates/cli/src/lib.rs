//! Library half of the command-line tool: file format, example
//! generators and report shapes. The binary in `main.rs` wires these to
//! the argument parser.

pub mod error;
pub mod generate;
pub mod parse;
pub mod report;
