pub mod aq;
pub mod character;
pub mod descent;
pub mod error;
pub mod fs;
pub mod galois;
pub mod lattice;
pub mod root_core;

pub use error::{Error, Result};
pub use root_core::{CartanType, RootSystem, Series, Weight, WeylWord, Q};
