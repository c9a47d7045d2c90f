//! π and the trigonometric kernel.
//!
//! Internally everything runs on fixed-point big integers (`units × 10^−p`)
//! with a few digits beyond the context's working places. Each truncating
//! step loses at most one unit in the last place, so a fixed surplus of
//! internal digits absorbs the accumulated error of a whole series.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::angle::{Angle, AngleRange};
use super::context::NumericContext;
use super::real::{decimal_len, div_round_half_even, pow10, BigReal};

/// Internal digits beyond the working places.
const SURPLUS: u32 = 8;

/// `atan(1/x)` at scale `q`, by the alternating Gregory series.
fn atan_inverse(x: u32, q: u32) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = pow10(q) / &x;
    let mut sum = power.clone();
    let mut k = 1u32;
    loop {
        power /= &x2;
        if power.is_zero() {
            break;
        }
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    sum
}

/// π at scale `p`, from `π = 16·atan(1/5) − 4·atan(1/239)`.
pub(crate) fn pi_fixed(p: u32) -> BigInt {
    // Roughly 0.7·q terms of atan(1/5), each costing two truncations,
    // stay well inside ten extra digits for any practical q.
    let q = p + 10;
    let raw = atan_inverse(5, q) * 16 - atan_inverse(239, q) * 4;
    div_round_half_even(&raw, &pow10(q - p))
}

/// `(sin r, cos r)` at scale `p` by Taylor series, for `|r| ≲ π/4`.
fn sin_cos_series(r: &BigInt, p: u32) -> (BigInt, BigInt) {
    let one = pow10(p);
    let r2 = r * r / &one;

    let mut cos = one.clone();
    let mut term = one.clone();
    let mut k = 1u64;
    loop {
        term = -(&term * &r2 / &one) / BigInt::from((2 * k - 1) * (2 * k));
        if term.is_zero() {
            break;
        }
        cos += &term;
        k += 1;
    }

    let mut sin = r.clone();
    let mut term = r.clone();
    let mut k = 1u64;
    loop {
        term = -(&term * &r2 / &one) / BigInt::from((2 * k) * (2 * k + 1));
        if term.is_zero() {
            break;
        }
        sin += &term;
        k += 1;
    }
    (sin, cos)
}

/// `(sin x, cos x)` at scale `p` for any `x` given at scale `p`.
///
/// Reduces `x = k·π/2 + r` with `|r| ≤ π/4`, evaluates the series on `|r|`
/// and rotates by the quadrant `k mod 4`.
fn sin_cos_fixed(x: &BigInt, p: u32) -> (BigInt, BigInt) {
    // 0.785 < π/4: no reduction needed below it.
    let quarter_bound = BigInt::from(785) * pow10(p.saturating_sub(3));
    if x.abs() <= quarter_bound {
        return sin_cos_series(x, p);
    }
    let half_pi = pi_fixed(p) / 2;
    let k = div_round_half_even(x, &half_pi);
    let r = x - &k * &half_pi;
    let (mut s, c) = sin_cos_series(&r.abs(), p);
    if r.is_negative() {
        s = -s;
    }
    let quadrant = {
        let four = BigInt::from(4);
        let m = ((&k % &four) + &four) % &four;
        u8::try_from(m).unwrap_or(0)
    };
    match quadrant {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}

fn internal_places(x: &BigReal, ctx: &NumericContext) -> u32 {
    ctx.working_places() + SURPLUS + x.integer_digits()
}

fn clamp_unit(v: BigReal) -> BigReal {
    let one = BigReal::one();
    if v > one {
        one.round_to(v.scale())
    } else if v < -&one {
        (-one).round_to(v.scale())
    } else {
        v
    }
}

/// π to the context's working places.
pub fn pi(ctx: &NumericContext) -> BigReal {
    let places = ctx.working_places();
    BigReal::from_units(pi_fixed(places), places)
}

/// `(sin x, cos x)`, each within `10^(−requested_digits)` and clamped to `[−1, 1]`.
pub fn sin_cos(x: &BigReal, ctx: &NumericContext) -> (BigReal, BigReal) {
    let p = internal_places(x, ctx);
    let (s, c) = sin_cos_fixed(&x.units_at(p), p);
    let w = ctx.working_places();
    (
        clamp_unit(BigReal::from_units(s, p).round_to(w)),
        clamp_unit(BigReal::from_units(c, p).round_to(w)),
    )
}

pub fn cos(x: &BigReal, ctx: &NumericContext) -> BigReal {
    sin_cos(x, ctx).1
}

pub fn sin(x: &BigReal, ctx: &NumericContext) -> BigReal {
    sin_cos(x, ctx).0
}

/// `tan x = sin x / cos x`, with the internal precision widened by the
/// number of leading zeros of `cos x`.
///
/// Fails with [`Error::NearPole`] when `|cos x| < 10^(−requested_digits)`.
pub fn tan(x: &BigReal, ctx: &NumericContext) -> Result<BigReal> {
    let mut p = internal_places(x, ctx);
    let xs = x.units_at(p);
    let (mut s, mut c) = sin_cos_fixed(&xs, p);
    if c.abs() < pow10(p - ctx.requested_digits()) {
        return Err(Error::NearPole);
    }
    let zeros = p.saturating_sub(decimal_len(&c));
    if zeros > 0 {
        p += zeros + 2;
        (s, c) = sin_cos_fixed(&x.units_at(p), p);
    }
    let w = ctx.working_places();
    let q = div_round_half_even(&(s * pow10(w)), &c);
    Ok(BigReal::from_units(q, w))
}

/// Principal `arccos y ∈ [0, π]`.
///
/// Safeguarded Newton iteration on `cos t − y`: each step keeps a bracket
/// `[lo, hi]` around the root and falls back to bisection whenever the
/// Newton step leaves it or `sin t` vanishes.
pub fn arccos(y: &BigReal, ctx: &NumericContext) -> Result<Angle> {
    let w = ctx.working_places();
    let one = BigReal::one();
    let slack = BigReal::ulp(w);
    if y.abs() > &one + &slack {
        return Err(Error::Domain(format!(
            "arccos argument {y} outside [−1, 1]"
        )));
    }
    let y = if y > &one {
        one.clone()
    } else if y < &-&one {
        -&one
    } else {
        y.clone()
    };
    if y == one {
        return Ok(Angle::tagged(
            BigReal::zero().round_to(w),
            AngleRange::Reduced,
        ));
    }
    if y == -&one {
        return Ok(Angle::tagged(pi(ctx), AngleRange::Principal));
    }

    // Near |y| = 1 the derivative of arccos blows up like 1/sqrt(1 − |y|):
    // carry enough extra digits to absorb it.
    let gap = &one - y.abs();
    let extra = gap
        .magnitude()
        .map_or(0, |m| ((-m).max(0) as u32).div_ceil(2));
    let p = w + SURPLUS + 2 + extra;

    let target = y.units_at(p);
    let pi_p = pi_fixed(p);
    let mut lo = BigInt::zero();
    let mut hi = pi_p.clone();

    let mut t = {
        let tiny = BigReal::from_units(BigInt::one(), 8);
        if gap < tiny {
            // arccos(±(1 − g)) ≈ sqrt(2g) (mirrored through π for negative y).
            let root = (gap.units_at(2 * p) * BigInt::from(2)).sqrt();
            if y.is_negative() {
                &pi_p - root
            } else {
                root
            }
        } else {
            let seed = y.to_f64().clamp(-1.0, 1.0).acos();
            BigReal::from_f64(seed, p).map_or_else(|| &pi_p / 2, |v| v.units_at(p))
        }
    };

    let stop = BigInt::from(4);
    for _ in 0..(64 + 4 * p) {
        let (s, c) = sin_cos_fixed(&t, p);
        let f = &c - &target;
        if f.is_zero() {
            break;
        }
        // cos is decreasing on [0, π]: cos t > y means t is left of the root.
        if f.is_positive() {
            lo = t.clone();
        } else {
            hi = t.clone();
        }
        let newton = if s.is_positive() {
            Some(&t + div_round_half_even(&(&f * pow10(p)), &s))
        } else {
            None
        };
        let next = match newton {
            Some(n) if n > lo && n < hi => n,
            _ => (&lo + &hi) / 2,
        };
        let step = (&next - &t).abs();
        t = next;
        if step <= stop || &hi - &lo <= stop {
            break;
        }
    }

    let radians = BigReal::from_units(t, p).round_to(w);
    let radians = if radians.is_negative() {
        BigReal::zero().round_to(w)
    } else {
        radians
    };
    // y ≥ √2/2 ⇔ arccos y ≤ π/4.
    let range = if y.is_positive() && (&y * &y).round_to(w) * BigReal::from(2i64) >= one {
        AngleRange::Reduced
    } else {
        AngleRange::Principal
    };
    Ok(Angle::tagged(radians, range))
}

/// Nonnegative square root, rounded half-to-even to the working places.
pub fn sqrt(y: &BigReal, ctx: &NumericContext) -> Result<BigReal> {
    if y.is_negative() {
        return Err(Error::Domain(format!("square root of negative value {y}")));
    }
    let w = ctx.working_places();
    let p = w + 2;
    let root = y.units_at(2 * p).sqrt();
    Ok(BigReal::from_units(root, p).round_to(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> NumericContext {
        NumericContext::new(d).unwrap()
    }

    fn r(s: &str) -> BigReal {
        s.parse().unwrap()
    }

    const PI_60: &str = "3.141592653589793238462643383279502884197169399375105820974945";

    #[test]
    fn pi_matches_digit_table() {
        assert_eq!(pi(&ctx(2)).to_fixed(2), "3.14");
        assert_eq!(pi(&ctx(15)).to_fixed(15), "3.141592653589793");
        // Digit tables truncate; the next digits are 58209…, so rounding ends in 1.
        let table = r("3.14159265358979323846264338327950288419716939937510");
        let c50 = ctx(50);
        assert!((pi(&c50) - &table).abs() < c50.tolerance());
        assert!(pi(&c50).to_string().starts_with(&table.to_string()));
        assert_eq!(
            pi(&c50).to_fixed(50),
            "3.14159265358979323846264338327950288419716939937511"
        );
        assert_eq!(pi(&ctx(60)).to_fixed(60), PI_60);
    }

    #[test]
    fn trivial_cosines() {
        let c = ctx(30);
        assert_eq!(cos(&BigReal::zero(), &c), BigReal::one());
        let third = pi(&c).div_int(3, c.working_places());
        let v = cos(&third, &c);
        assert!((v - r("0.5")).abs() < c.tolerance());
        assert_eq!(
            cos(&third, &c).to_fixed(30),
            format!("0.5{}", "0".repeat(29))
        );
    }

    #[test]
    fn large_arguments_reduce() {
        let c = ctx(25);
        // cos(100) and sin(100) from a 40-digit reference.
        let cos100 = r("0.8623188722876839341019385139508425355100");
        let sin100 = r("-0.5063656411097587936565576104597854320650");
        let (s, co) = sin_cos(&BigReal::from(100i64), &c);
        assert!((co - cos100).abs() < c.tolerance());
        assert!((s - sin100).abs() < c.tolerance());
        let cm = cos(&BigReal::from(-100i64), &c);
        assert!((cm - r("0.8623188722876839341019385139508425355100")).abs() < c.tolerance());
    }

    #[test]
    fn tan_basics_and_pole() {
        let c = ctx(30);
        assert!(tan(&BigReal::zero(), &c).unwrap().is_zero());
        let quarter = pi(&c).div_int(4, c.working_places());
        let t = tan(&quarter, &c).unwrap();
        assert!((t - BigReal::one()).abs() < c.tolerance());
        let half = pi(&ctx(60)).div_int(2, 70);
        assert!(matches!(tan(&half, &c), Err(Error::NearPole)));
    }

    #[test]
    fn tan_close_to_pole_keeps_accuracy() {
        // x = π/2 − 10⁻⁸: tan x = cot(10⁻⁸) ≈ 10⁸ − 3.33e−9.
        let c = ctx(20);
        let x = pi(&ctx(60)).div_int(2, 70) - BigReal::ulp(8);
        let t = tan(&x, &c).unwrap();
        let expected = r("99999999.999999996666666666666666644444444457783989");
        assert!((t - expected).abs() < c.tolerance());
    }

    #[test]
    fn arccos_trivial_cases() {
        let c = ctx(30);
        assert!(arccos(&BigReal::one(), &c).unwrap().radians().is_zero());
        let third = pi(&c).div_int(3, c.working_places());
        let a = arccos(&r("0.5"), &c).unwrap();
        assert!((a.radians() - &third).abs() < c.tolerance());
        let a = arccos(&r("-1"), &c).unwrap();
        assert_eq!(a.radians(), &pi(&c));
        assert!(matches!(arccos(&r("1.01"), &c), Err(Error::Domain(_))));
        assert!(matches!(
            arccos(&r("-1.0000001"), &c),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn arccos_near_one_is_accurate() {
        let c = ctx(30);
        // arccos(1 − 10⁻²⁰) = sqrt(2)·10⁻¹⁰·(1 + 10⁻²⁰/12 + …)
        let y = BigReal::one() - BigReal::ulp(20);
        let a = arccos(&y, &c).unwrap();
        let expected = r("0.000000000141421356237309504880286723551");
        assert!(
            (a.radians() - expected).abs() < c.tolerance(),
            "{}",
            a.radians()
        );
        assert_eq!(a.range(), AngleRange::Reduced);
    }

    #[test]
    fn sqrt_cases() {
        let c = ctx(20);
        assert!(sqrt(&BigReal::zero(), &c).unwrap().is_zero());
        assert_eq!(sqrt(&BigReal::from(4i64), &c).unwrap(), BigReal::from(2i64));
        let s = sqrt(&BigReal::from(2i64), &c).unwrap();
        assert_eq!(s.to_fixed(20), "1.41421356237309504880");
        let s = sqrt(&r("0.787128961535"), &c).unwrap();
        assert_eq!(s.to_fixed(20), "0.88720288634280265173");
        assert!(matches!(sqrt(&r("-0.1"), &c), Err(Error::Domain(_))));
    }
}
