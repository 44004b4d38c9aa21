pub mod conormal;
pub mod error;
pub mod exact;
pub mod families;
pub mod fitting;
pub mod json;
pub mod poly;
pub mod rnc;
pub mod xg;

pub use error::{Error, Result};
