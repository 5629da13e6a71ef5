pub mod cli;
pub mod constructors;
pub mod error;
pub mod geometry;
pub mod planegraph;
pub mod routing;
pub mod schnyder;
pub mod verify;

pub use error::{Error, Result};
