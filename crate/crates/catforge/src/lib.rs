//! File formats, parallel drivers and the command-line front end for
//! [`catforge_core`].

pub mod error;
pub mod input;
pub mod json;
pub mod parallel;
pub mod reproduce;

pub use error::{CliError, ExitStatus};
