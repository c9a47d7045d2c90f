use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// `10^k` as a big integer.
pub(crate) fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u8), k as usize)
}

/// Integer quotient `num / den` rounded half-to-even.
pub(crate) fn div_round_half_even(num: &BigInt, den: &BigInt) -> BigInt {
    assert!(!den.is_zero(), "division by zero");
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        return q;
    }
    let twice = r.abs() << 1usize;
    let away = match twice.cmp(&den.abs()) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => q.is_odd(),
    };
    if !away {
        return q;
    }
    if (num.sign() == Sign::Minus) != (den.sign() == Sign::Minus) {
        q - 1
    } else {
        q + 1
    }
}

/// Number of decimal digits in `|n|` (zero has one digit).
pub(crate) fn decimal_len(n: &BigInt) -> u32 {
    if n.is_zero() {
        return 1;
    }
    // bits * log10(2) is within one of the digit count; settle it exactly.
    let estimate = ((n.bits() as f64 - 1.0) * std::f64::consts::LOG10_2).floor() as u32 + 1;
    let abs = n.abs();
    if abs >= pow10(estimate) {
        estimate + 1
    } else {
        estimate
    }
}

/// Arbitrary-precision decimal real: the value is `units × 10^(−scale)`.
///
/// Every value carries an explicit number of decimal places. Addition,
/// subtraction and multiplication are exact; division and the elementary
/// functions round half-to-even to a caller-chosen number of places.
/// Equality and ordering compare numeric values, so `1.50 == 1.5`.
#[derive(Clone, Debug)]
pub struct BigReal {
    units: BigInt,
    scale: u32,
}

impl BigReal {
    pub fn zero() -> Self {
        Self::from_units(BigInt::zero(), 0)
    }

    pub fn one() -> Self {
        Self::from_units(BigInt::one(), 0)
    }

    pub fn from_units(units: BigInt, scale: u32) -> Self {
        BigReal { units, scale }
    }

    /// `10^(−places)`.
    pub fn ulp(places: u32) -> Self {
        Self::from_units(BigInt::one(), places)
    }

    pub fn units(&self) -> &BigInt {
        &self.units
    }

    /// Decimal places carried.
    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn signum(&self) -> i8 {
        match self.units.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.units.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.units.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.units.is_positive()
    }

    pub fn abs(&self) -> Self {
        Self::from_units(self.units.abs(), self.scale)
    }

    /// Re-expresses the value with exactly `places` decimals, rounding
    /// half-to-even when places are dropped.
    pub fn round_to(&self, places: u32) -> Self {
        match places.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Self::from_units(&self.units * pow10(places - self.scale), places),
            Ordering::Less => Self::from_units(
                div_round_half_even(&self.units, &pow10(self.scale - places)),
                places,
            ),
        }
    }

    /// Units of this value at `places` decimals (rounded half-to-even).
    pub(crate) fn units_at(&self, places: u32) -> BigInt {
        self.round_to(places).units
    }

    /// Quotient rounded half-to-even to `places` decimals, or `None` for a zero divisor.
    pub fn checked_div(&self, rhs: &BigReal, places: u32) -> Option<BigReal> {
        if rhs.is_zero() {
            return None;
        }
        let num = &self.units * pow10(places + rhs.scale);
        let den = &rhs.units * pow10(self.scale);
        Some(Self::from_units(div_round_half_even(&num, &den), places))
    }

    /// Quotient rounded half-to-even to `places` decimals.
    ///
    /// Panics on a zero divisor; use [`BigReal::checked_div`] when the divisor may vanish.
    pub fn div(&self, rhs: &BigReal, places: u32) -> BigReal {
        self.checked_div(rhs, places).expect("division by zero")
    }

    pub fn div_int(&self, rhs: u64, places: u32) -> BigReal {
        self.div(&BigReal::from(rhs), places)
    }

    pub fn mul_int(&self, rhs: u64) -> BigReal {
        Self::from_units(&self.units * BigInt::from(rhs), self.scale)
    }

    /// `x × 10^k`, exactly.
    pub fn mul_pow10(&self, k: u32) -> BigReal {
        if self.scale >= k {
            Self::from_units(self.units.clone(), self.scale - k)
        } else {
            Self::from_units(&self.units * pow10(k - self.scale), 0)
        }
    }

    /// `floor(log10 |x|)`, or `None` for zero.
    pub fn magnitude(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(decimal_len(&self.units) as i64 - 1 - self.scale as i64)
    }

    /// Digits before the decimal point of `|x|` (at least one).
    pub(crate) fn integer_digits(&self) -> u32 {
        match self.magnitude() {
            Some(m) if m >= 0 => m as u32 + 1,
            _ => 1,
        }
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.units.div_floor(&pow10(self.scale))
    }

    pub fn to_f64(&self) -> f64 {
        // Every decimal string parses to the nearest binary64.
        self.to_string().parse().unwrap_or(f64::NAN)
    }

    /// Exact decimal value of a finite `f64`, rounded to `places`.
    pub fn from_f64(value: f64, places: u32) -> Option<BigReal> {
        if !value.is_finite() {
            return None;
        }
        // value = ±m·2^e exactly
        let bits = value.to_bits();
        let negative = bits >> 63 == 1;
        let biased = ((bits >> 52) & 0x7ff) as i32;
        let fraction = bits & ((1u64 << 52) - 1);
        let (m, e) = if biased == 0 {
            (fraction, -1074)
        } else {
            (fraction | 1 << 52, biased - 1075)
        };
        let m = BigInt::from(m);
        let exact = if e >= 0 {
            BigReal::from_units(m << e as usize, 0)
        } else {
            // m·2^e = m·5^(−e)·10^e
            let k = (-e) as u32;
            BigReal::from_units(m * num_traits::pow(BigInt::from(5u8), k as usize), k)
        };
        let rounded = exact.round_to(places);
        Some(if negative { -rounded } else { rounded })
    }

    /// Fixed-point rendering with exactly `places` decimals, rounded half-to-even.
    pub fn to_fixed(&self, places: u32) -> String {
        self.round_to(places).to_string()
    }

    pub fn to_u64(&self) -> Option<u64> {
        if self.scale == 0 {
            self.units.to_u64()
        } else {
            let (q, r) = self.units.div_rem(&pow10(self.scale));
            if r.is_zero() {
                q.to_u64()
            } else {
                None
            }
        }
    }

    fn aligned(&self, other: &BigReal) -> (BigInt, BigInt, u32) {
        let scale = self.scale.max(other.scale);
        let a = if self.scale == scale {
            self.units.clone()
        } else {
            &self.units * pow10(scale - self.scale)
        };
        let b = if other.scale == scale {
            other.units.clone()
        } else {
            &other.units * pow10(scale - other.scale)
        };
        (a, b, scale)
    }
}

impl Default for BigReal {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for BigReal {
    fn from(value: i64) -> Self {
        Self::from_units(BigInt::from(value), 0)
    }
}

impl From<u64> for BigReal {
    fn from(value: u64) -> Self {
        Self::from_units(BigInt::from(value), 0)
    }
}

impl From<i32> for BigReal {
    fn from(value: i32) -> Self {
        Self::from_units(BigInt::from(value), 0)
    }
}

impl From<BigInt> for BigReal {
    fn from(value: BigInt) -> Self {
        Self::from_units(value, 0)
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for BigReal {}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigReal {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.scale == other.scale {
            return self.units.cmp(&other.units);
        }
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl FromStr for BigReal {
    type Err = Error;

    /// Accepts `[+-]digits[.digits][(e|E)[+-]digits]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = || Error::Validation(format!("`{s}` is not a decimal number"));
        let text = s.trim();
        let (negative, body) = match text.as_bytes().first() {
            Some(b'-') => (true, &text[1..]),
            Some(b'+') => (false, &text[1..]),
            _ => (false, text),
        };
        let (mantissa, exponent) = match body.find(['e', 'E']) {
            Some(at) => {
                let exp: i64 = body[at + 1..].parse().map_err(|_| invalid())?;
                (&body[..at], exp)
            }
            None => (body, 0),
        };
        let (int_part, frac_part) = match mantissa.find('.') {
            Some(at) => (&mantissa[..at], &mantissa[at + 1..]),
            None => (mantissa, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(invalid());
        }
        if !int_part
            .bytes()
            .chain(frac_part.bytes())
            .all(|b| b.is_ascii_digit())
        {
            return Err(invalid());
        }
        let digits = format!("{int_part}{frac_part}");
        let mut units: BigInt = digits.parse().map_err(|_| invalid())?;
        if negative {
            units = -units;
        }
        let scale = frac_part.len() as i64 - exponent;
        if scale.abs() > u32::MAX as i64 / 2 {
            return Err(invalid());
        }
        if scale >= 0 {
            Ok(Self::from_units(units, scale as u32))
        } else {
            Ok(Self::from_units(units * pow10((-scale) as u32), 0))
        }
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.units.abs().to_str_radix(10);
        let sign = if self.is_negative() { "-" } else { "" };
        if self.scale == 0 {
            return write!(f, "{sign}{digits}");
        }
        let scale = self.scale as usize;
        let padded = if digits.len() <= scale {
            format!("{}{}", "0".repeat(scale + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int_part, frac_part) = padded.split_at(padded.len() - scale);
        write!(f, "{sign}{int_part}.{frac_part}")
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::from_units(-self.units, self.scale)
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::from_units(-&self.units, self.scale)
    }
}

fn add_ref(a: &BigReal, b: &BigReal) -> BigReal {
    let (x, y, scale) = a.aligned(b);
    BigReal::from_units(x + y, scale)
}

fn sub_ref(a: &BigReal, b: &BigReal) -> BigReal {
    let (x, y, scale) = a.aligned(b);
    BigReal::from_units(x - y, scale)
}

fn mul_ref(a: &BigReal, b: &BigReal) -> BigReal {
    BigReal::from_units(&a.units * &b.units, a.scale + b.scale)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $func:ident) => {
        impl $trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                $func(self, rhs)
            }
        }
        impl $trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                $func(&self, &rhs)
            }
        }
        impl $trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                $func(&self, rhs)
            }
        }
        impl $trait<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                $func(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> BigReal {
        s.parse().unwrap()
    }

    #[test]
    fn parses_plain_and_exponent_forms() {
        assert_eq!(r("0.007297352533").to_string(), "0.007297352533");
        assert_eq!(r("2.7e-11").to_string(), "0.000000000027");
        assert_eq!(r("1.16639e-5"), r("0.0000116639"));
        assert_eq!(r("-80.33").to_string(), "-80.33");
        assert_eq!(r("1e3").to_string(), "1000");
        assert_eq!(r(".5"), r("0.5"));
        assert_eq!(r("+4."), BigReal::from(4i64));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "-", ".", "1.2.3", "abc", "1e", "1,5", "0x10"] {
            assert!(bad.parse::<BigReal>().is_err(), "{bad}");
        }
    }

    #[test]
    fn round_half_even_at_the_boundary() {
        assert_eq!(r("0.125").to_fixed(2), "0.12");
        assert_eq!(r("0.135").to_fixed(2), "0.14");
        assert_eq!(r("-0.125").to_fixed(2), "-0.12");
        assert_eq!(r("-0.1251").to_fixed(2), "-0.13");
        assert_eq!(r("2.5").to_fixed(0), "2");
        assert_eq!(r("3.5").to_fixed(0), "4");
        assert_eq!(r("1.5").to_fixed(3), "1.500");
    }

    #[test]
    fn value_equality_ignores_scale() {
        assert_eq!(r("1.50"), r("1.5"));
        assert!(r("0.1") < r("0.10001"));
        assert!(r("-2") < r("-1.999"));
    }

    #[test]
    fn arithmetic_is_exact() {
        assert_eq!(r("0.1") + r("0.2"), r("0.3"));
        assert_eq!(r("1.5") * r("-0.25"), r("-0.375"));
        assert_eq!(r("1") - r("0.0001"), r("0.9999"));
        assert_eq!(
            BigReal::one().div(&BigReal::from(3i64), 5).to_string(),
            "0.33333"
        );
        assert_eq!(
            BigReal::from(2i64).div(&BigReal::from(3i64), 5).to_string(),
            "0.66667"
        );
        assert!(BigReal::one().checked_div(&BigReal::zero(), 3).is_none());
    }

    #[test]
    fn magnitude_and_digits() {
        assert_eq!(r("0.00729").magnitude(), Some(-3));
        assert_eq!(r("137.036").magnitude(), Some(2));
        assert_eq!(r("1").magnitude(), Some(0));
        assert_eq!(BigReal::zero().magnitude(), None);
        assert_eq!(decimal_len(&pow10(40)), 41);
        assert_eq!(decimal_len(&(pow10(40) - 1)), 40);
    }

    #[test]
    fn f64_round_trip() {
        assert_eq!(r("0.1").to_f64(), 0.1);
        assert_eq!(BigReal::from_f64(0.5, 3).unwrap(), r("0.5"));
        assert!(BigReal::from_f64(f64::NAN, 3).is_none());
        assert_eq!(
            BigReal::from_f64(0.1, 30).unwrap(),
            r("0.100000000000000005551115123126")
        );
        assert_eq!(BigReal::from_f64(-1.5e3, 0).unwrap(), r("-1500"));
        assert_eq!(
            BigReal::from_f64(f64::MIN_POSITIVE, 400)
                .unwrap()
                .magnitude(),
            Some(-308)
        );
    }
}
