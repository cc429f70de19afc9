pub mod bounds;
pub mod catalog;
pub mod code;
pub mod construct;
pub mod error;
pub mod field;

pub use error::{Error, Result};
