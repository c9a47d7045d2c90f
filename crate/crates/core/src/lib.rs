//! High-precision characteristics of cyclic-group polygon systems: the
//! numbers, the geometry behind them, and tools to compare them with
//! measured constants. See the guide under `book/` for a walkthrough.

pub mod bignum;
pub mod characteristics;
pub mod cli;
pub mod electroweak;
pub mod error;
pub mod geometry;
pub mod kinematics;
pub mod primes;
pub mod report;
pub mod search;

pub use error::{Error, Result};

/// The guide's code samples, compiled and run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/precision.md")]
    pub struct Precision;
    #[doc = include_str!("../../../book/src/characteristics.md")]
    pub struct Characteristics;
    #[doc = include_str!("../../../book/src/geometry.md")]
    pub struct Geometry;
    #[doc = include_str!("../../../book/src/kinematics.md")]
    pub struct Kinematics;
    #[doc = include_str!("../../../book/src/electroweak.md")]
    pub struct Electroweak;
    #[doc = include_str!("../../../book/src/search.md")]
    pub struct Search;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
