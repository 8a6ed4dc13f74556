//! Verification runner, JSON reports and command-line front end for
//! [`yangw_core`].

pub mod config;
pub mod dump;
pub mod error;
pub mod json;
pub mod run;

pub use config::{Budget, CheckKind, ParamSet, RunConfig};
pub use error::{ConfigError, RunError};
pub use yangw_core as core;
