//! Problem files and the command pipeline of the `realgap` tool.

pub mod commands;
pub mod problem;

pub use commands::{run, Command, Options, Output, StageError};
pub use problem::{parse, ParseError, Problem};
