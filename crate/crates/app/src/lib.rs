//! Command-line tool and HTTP service over the Graceful game engine.

pub mod cli;
pub mod engine;
pub mod error;
pub mod family;
pub mod layout;
pub mod service;
pub mod session;

pub use engine::Engine;
pub use error::AppError;
pub use session::Session;

/// Node cap used when neither `--budget` nor `GRACEFUL_BUDGET` is given.
pub const DEFAULT_BUDGET: u64 = graceful_core::labeling::DEFAULT_BUDGET;
