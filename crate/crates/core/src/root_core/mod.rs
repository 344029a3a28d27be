//! Root systems, weights and Weyl group arithmetic for products of simple types.

mod cartan;
mod freudenthal;
mod subsystem;
mod system;
mod weight;
mod weyl;

pub use cartan::{CartanType, Series, SimpleType};
pub use system::{Coweight, Root, RootSystem};
pub use subsystem::ReflectionSubgroup;
pub use weight::{Weight, Q};
pub use weyl::{WeylWord, DEFAULT_ORBIT_CAP};
