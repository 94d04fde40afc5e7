//! File formats, parallel walkers and the `pira` command line on top of
//! [`pira_core`].

pub mod cli;
pub mod error;
pub mod formats;
pub mod io;
pub mod parallel;

pub use error::{PiraError, Result};
