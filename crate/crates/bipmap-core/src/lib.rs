//! Exact generating functions of bipartite maps: truncated series, the
//! permutation census, the Tutte equation, Greek variables, topological
//! recursion, unrooting and closed-form fitting.
#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod calculus;
pub mod census;
pub mod closed;
pub mod degrees;
pub mod coords;
pub mod error;
pub mod fit;
pub mod gfield;
pub mod greek;
pub mod kernel;
pub mod linalg;
pub mod modp;
pub mod laurent;
pub mod partition;
pub mod quad;
pub mod rational;
pub mod series;
pub mod tabulated;
pub mod toprec;
pub mod unroot;
pub mod tutte;

pub use error::{Error, Result};
pub use partition::Partition;
pub use rational::Q;
pub use series::{Chart, Key, Series};
