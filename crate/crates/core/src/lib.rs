pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod grouporders;
pub mod involutions;

pub use error::{Error, Result};
