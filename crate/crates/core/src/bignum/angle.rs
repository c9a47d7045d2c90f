use std::fmt;

use crate::error::{Error, Result};

use super::context::NumericContext;
use super::elementary::pi;
use super::real::BigReal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AngleRange {
    /// `[0, π]`
    Principal,
    /// `[0, π/4]`
    Reduced,
}

/// A nonnegative radian measure tagged with the range it is known to lie in.
#[derive(Clone, Debug, PartialEq)]
pub struct Angle {
    radians: BigReal,
    range: AngleRange,
}

impl Angle {
    /// `π/n`, the half-angle subtended by one side of a regular `n`-gon.
    pub fn pi_over(n: u64, ctx: &NumericContext) -> Result<Angle> {
        if n == 0 {
            return Err(Error::Validation("π/n needs n ≥ 1".into()));
        }
        let radians = pi(ctx).div_int(n, ctx.working_places());
        let range = if n >= 4 {
            AngleRange::Reduced
        } else {
            AngleRange::Principal
        };
        Ok(Angle { radians, range })
    }

    /// Classifies `radians` against `π/4` and `π`.
    pub fn from_radians(radians: BigReal, ctx: &NumericContext) -> Result<Angle> {
        if radians.is_negative() {
            return Err(Error::Domain(format!("negative angle {radians}")));
        }
        let pi = pi(ctx);
        let slack = BigReal::ulp(ctx.working_places());
        if radians > &pi + &slack {
            return Err(Error::Domain(format!("angle {radians} exceeds π")));
        }
        let quarter = pi.div_int(4, ctx.working_places());
        let range = if radians <= quarter {
            AngleRange::Reduced
        } else {
            AngleRange::Principal
        };
        Ok(Angle { radians, range })
    }

    pub(crate) fn tagged(radians: BigReal, range: AngleRange) -> Angle {
        Angle { radians, range }
    }

    pub fn radians(&self) -> &BigReal {
        &self.radians
    }

    pub fn range(&self) -> AngleRange {
        self.range
    }

    pub fn into_radians(self) -> BigReal {
        self.radians
    }

    /// Whether the stored measure lies in the tagged range (to working precision).
    pub fn is_consistent(&self, ctx: &NumericContext) -> bool {
        if self.radians.is_negative() {
            return false;
        }
        let pi = pi(ctx);
        let slack = BigReal::ulp(ctx.working_places());
        let upper = match self.range {
            AngleRange::Principal => pi,
            AngleRange::Reduced => pi.div_int(4, ctx.working_places()),
        };
        self.radians <= upper + slack
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} rad", self.radians)
    }
}
