//! Library side of the `sixsplit` command: documents, commands and SVG
//! rendering.

pub mod commands;
pub mod document;
pub mod error;
pub mod json;
pub mod render;

pub use error::CliError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_BUG: i32 = 4;
