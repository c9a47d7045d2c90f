use crate::error::{Error, Result};

use super::real::BigReal;

/// Rounding applied when a value is displayed or narrowed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Rounding {
    #[default]
    HalfEven,
}

pub const MIN_GUARD_DIGITS: u32 = 10;

/// Precision contract for a computation.
///
/// Results produced under a context carry `requested_digits + guard_digits`
/// decimal places and are within `10^(−requested_digits)` of the exact value
/// for exact inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NumericContext {
    requested_digits: u32,
    guard_digits: u32,
    rounding: Rounding,
}

impl NumericContext {
    /// Context with the default guard: `10 + ceil(log10(term count))`, where
    /// the term count is that of the cosine series at `π/4`.
    pub fn new(requested_digits: u32) -> Result<Self> {
        if requested_digits == 0 {
            return Err(Error::Context("requested digits must be at least 1".into()));
        }
        let terms = series_terms(requested_digits + MIN_GUARD_DIGITS);
        let guard = MIN_GUARD_DIGITS + (terms as f64).log10().ceil() as u32;
        Self::with_guard(requested_digits, guard)
    }

    pub fn with_guard(requested_digits: u32, guard_digits: u32) -> Result<Self> {
        if requested_digits == 0 {
            return Err(Error::Context("requested digits must be at least 1".into()));
        }
        if guard_digits < MIN_GUARD_DIGITS {
            return Err(Error::Context(format!(
                "guard digits must be at least {MIN_GUARD_DIGITS}, got {guard_digits}"
            )));
        }
        Ok(NumericContext {
            requested_digits,
            guard_digits,
            rounding: Rounding::HalfEven,
        })
    }

    pub fn requested_digits(&self) -> u32 {
        self.requested_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn rounding(&self) -> Rounding {
        self.rounding
    }

    /// Decimal places carried by every result.
    pub fn working_places(&self) -> u32 {
        self.requested_digits + self.guard_digits
    }

    /// `10^(−requested_digits)`.
    pub fn tolerance(&self) -> BigReal {
        BigReal::ulp(self.requested_digits)
    }

    /// `10^(−requested_digits + slack)`, clamped so the exponent stays negative.
    pub fn loose_tolerance(&self, slack: u32) -> BigReal {
        BigReal::ulp(self.requested_digits.saturating_sub(slack).max(1))
    }

    /// Same guard policy with `extra` more requested digits.
    pub fn widened(&self, extra: u32) -> Self {
        NumericContext {
            requested_digits: self.requested_digits + extra,
            ..*self
        }
    }
}

/// Terms of the cosine Taylor series needed at `π/4` for `places` decimals.
fn series_terms(places: u32) -> u32 {
    let x = std::f64::consts::FRAC_PI_4;
    let target = -(places as f64) * std::f64::consts::LN_10;
    let mut log_term = 0.0;
    let mut n = 0u32;
    while log_term > target {
        n += 1;
        let k = 2.0 * n as f64;
        log_term += 2.0 * x.ln() - (k * (k - 1.0)).ln();
    }
    n.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_digits_and_thin_guard() {
        assert!(NumericContext::new(0).is_err());
        assert!(NumericContext::with_guard(12, 9).is_err());
        assert!(NumericContext::with_guard(12, 10).is_ok());
    }

    #[test]
    fn default_guard_tracks_series_length() {
        let ctx = NumericContext::new(12).unwrap();
        assert_eq!(ctx.guard_digits(), 12);
        assert_eq!(ctx.working_places(), 24);
        assert!(NumericContext::new(1000).unwrap().guard_digits() >= 13);
        assert_eq!(ctx.rounding(), Rounding::HalfEven);
    }

    #[test]
    fn term_count_is_monotone() {
        let mut last = 0;
        for places in [5, 10, 20, 50, 100, 500] {
            let n = series_terms(places);
            assert!(n >= last);
            last = n;
        }
    }
}
