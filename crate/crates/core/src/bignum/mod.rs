//! Decimal arbitrary-precision reals and the elementary functions the
//! polygon formulas need: π, sin/cos, tan, arccos and sqrt.

mod angle;
mod context;
mod elementary;
mod real;

pub use angle::{Angle, AngleRange};
pub use context::{NumericContext, Rounding, MIN_GUARD_DIGITS};
pub use elementary::{arccos, cos, pi, sin, sin_cos, sqrt, tan};
pub use real::BigReal;
