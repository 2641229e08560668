pub mod biext;
pub mod cli;
pub mod ceresa;
pub mod error;
pub mod exact;
pub mod families;
pub mod filtration;
pub mod heights;
pub mod koszul;
pub mod selftest;

pub use error::{Error, Result};
