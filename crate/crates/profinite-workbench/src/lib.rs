pub mod error;
pub mod group;
pub mod hom;
pub mod perm;
pub mod pgroup;
pub mod stock;

pub use error::{Error, Result};
