//! Characteristic values of a cyclic group of order `n₁n₂` relative to its
//! two prime-order subgroups.
//!
//! With `χ_n = π/n` and `N = n₁n₂`:
//!
//! * `β(N) = N·tan(π/N)/π`
//! * `α_n(N) = partner·cos(π/n)·tan(π/N)/π = cos(χ*_n)/n`
//! * `sin²θ_G = α_{n₁}(N)/α_{n₂}(N)`
//! * `α_{n₁,d} = α_{n₁}/n₂`, `α_{n₁,e} = α_{n₂}/n₁`, in the ratio `cos(χ_{n₁})/cos(χ_{n₂})`
//!
//! Values are computed from the product form; the `cos(χ*)/n` form is kept
//! as an independent verification route.

use std::fmt;

use crate::bignum::{arccos, cos, pi, sqrt, tan, Angle, AngleRange, BigReal, NumericContext};
use crate::error::{Error, Result};
use crate::primes::is_prime;

/// Ordered pair of subgroup orders with `n₂ ≤ n₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePair {
    n1: u64,
    n2: u64,
    prime_check: bool,
    swapped: bool,
}

impl PrimePair {
    /// Pair of distinct primes. Arguments may come in either order.
    pub fn new(a: u64, b: u64) -> Result<Self> {
        Self::with_check(a, b, true)
    }

    /// Any integers `≥ 2`; the formulas are defined there even though the
    /// group construction wants primes.
    pub fn relaxed(a: u64, b: u64) -> Result<Self> {
        Self::with_check(a, b, false)
    }

    pub fn with_check(a: u64, b: u64, prime_check: bool) -> Result<Self> {
        let (n1, n2, swapped) = if b > a { (b, a, true) } else { (a, b, false) };
        if n2 < 2 {
            return Err(Error::Validation(format!(
                "subgroup orders must be at least 2, got ({a}, {b})"
            )));
        }
        if n1.checked_mul(n2).is_none_or(|order| order < 6) {
            return Err(Error::Validation(format!(
                "group order n1·n2 must be at least 6 and fit in 64 bits, got ({a}, {b})"
            )));
        }
        if prime_check {
            for n in [n1, n2] {
                if !is_prime(n) {
                    return Err(Error::Validation(format!("{n} is not prime")));
                }
            }
            if n1 == n2 {
                return Err(Error::Validation(format!(
                    "prime subgroup orders must be distinct, got ({a}, {b})"
                )));
            }
        }
        Ok(PrimePair {
            n1,
            n2,
            prime_check,
            swapped,
        })
    }

    pub fn n1(&self) -> u64 {
        self.n1
    }

    pub fn n2(&self) -> u64 {
        self.n2
    }

    /// `n₁·n₂`
    pub fn order(&self) -> u64 {
        self.n1 * self.n2
    }

    pub fn prime_checked(&self) -> bool {
        self.prime_check
    }

    /// Whether the constructor received the orders as `(n₂, n₁)`.
    pub fn was_swapped(&self) -> bool {
        self.swapped
    }

    /// The other member of the pair, if `n` belongs to it.
    pub fn partner_of(&self, n: u64) -> Option<u64> {
        if n == self.n1 {
            Some(self.n2)
        } else if n == self.n2 {
            Some(self.n1)
        } else {
            None
        }
    }
}

impl fmt::Display for PrimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n1, self.n2)
    }
}

/// Shared trigonometric terms for one pair at one precision.
struct PairTerms {
    places: u32,
    pi: BigReal,
    cos_n1: BigReal,
    cos_n2: BigReal,
    tan_order: BigReal,
    order: u64,
}

impl PairTerms {
    fn new(n1: u64, n2: u64, ctx: &NumericContext) -> Result<Self> {
        let places = ctx.working_places();
        let pi = pi(ctx);
        let cos_n1 = cos(&pi.div_int(n1, places), ctx);
        let cos_n2 = cos(&pi.div_int(n2, places), ctx);
        let order = n1 * n2;
        let tan_order = tan(&pi.div_int(order, places), ctx)?;
        Ok(PairTerms {
            places,
            pi,
            cos_n1,
            cos_n2,
            tan_order,
            order,
        })
    }

    /// `partner·cos(π/n)·tan(π/N)/π`
    fn alpha(&self, partner: u64, cos_n: &BigReal) -> BigReal {
        (cos_n * &self.tan_order)
            .mul_int(partner)
            .div(&self.pi, self.places)
    }

    fn alpha_n1(&self, n2: u64) -> BigReal {
        self.alpha(n2, &self.cos_n1)
    }

    fn alpha_n2(&self, n1: u64) -> BigReal {
        self.alpha(n1, &self.cos_n2)
    }

    fn beta(&self) -> BigReal {
        self.tan_order
            .mul_int(self.order)
            .div(&self.pi, self.places)
    }

    fn chi(&self, n: u64) -> Angle {
        let range = if n >= 4 {
            AngleRange::Reduced
        } else {
            AngleRange::Principal
        };
        Angle::tagged(self.pi.div_int(n, self.places), range)
    }
}

fn degenerate(what: &str) -> Error {
    Error::DegeneratePair(format!(
        "{what} is undefined for a subgroup of order 2 (cos(π/2) = 0)"
    ))
}

/// `χ_n = π/n`.
pub fn chi(n: u64, ctx: &NumericContext) -> Result<Angle> {
    Angle::pi_over(n, ctx)
}

/// `β(n₁n₂) = n₁n₂·tan(π/(n₁n₂))/π`, always greater than one.
pub fn beta(pair: &PrimePair, ctx: &NumericContext) -> Result<BigReal> {
    let places = ctx.working_places();
    let pi = pi(ctx);
    let t = tan(&pi.div_int(pair.order(), places), ctx)?;
    Ok(t.mul_int(pair.order()).div(&pi, places))
}

/// `α_n(n·partner) = partner·cos(π/n)·tan(π/(n·partner))/π`.
pub fn alpha_characteristic(n: u64, partner: u64, ctx: &NumericContext) -> Result<BigReal> {
    check_orders(n, partner)?;
    let terms = PairTerms::new(n, partner, ctx)?;
    Ok(terms.alpha_n1(partner))
}

/// `α_n` by the second route `cos(π/n)·β(n·partner)/n`.
pub fn alpha_via_beta(n: u64, partner: u64, ctx: &NumericContext) -> Result<BigReal> {
    check_orders(n, partner)?;
    let terms = PairTerms::new(n, partner, ctx)?;
    Ok((&terms.cos_n1 * terms.beta()).div_int(n, ctx.working_places()))
}

fn check_orders(n: u64, partner: u64) -> Result<()> {
    if n < 2 || partner < 2 {
        return Err(Error::Validation(format!(
            "orders must be at least 2, got n = {n}, partner = {partner}"
        )));
    }
    if n.checked_mul(partner).is_none() {
        return Err(Error::Validation("group order overflows 64 bits".into()));
    }
    Ok(())
}

/// `χ*_n` from `cos(χ*_n) = n·α_n(n₁n₂)`, for `n` one of the pair's orders.
pub fn chi_star(n: u64, pair: &PrimePair, ctx: &NumericContext) -> Result<Angle> {
    let partner = pair
        .partner_of(n)
        .ok_or_else(|| Error::Validation(format!("{n} is not a subgroup order of {pair}")))?;
    if n == 2 {
        return Err(degenerate("χ*"));
    }
    let alpha = alpha_characteristic(n, partner, ctx)?;
    arccos(&alpha.mul_int(n), ctx)
}

/// The generalized mixing angle, stored through `sin²θ_G`.
#[derive(Clone, Debug, PartialEq)]
pub struct MixingAngle {
    sin2: BigReal,
}

impl MixingAngle {
    pub fn sin2(&self) -> &BigReal {
        &self.sin2
    }

    /// `cos²θ_G = 1 − sin²θ_G`
    pub fn cos2(&self) -> BigReal {
        BigReal::one() - &self.sin2
    }

    /// `θ_G ∈ [0, π/2]`, as `arccos(sqrt(cos²θ_G))`.
    pub fn theta(&self, ctx: &NumericContext) -> Result<Angle> {
        let cos2 = self.cos2();
        if cos2.is_negative() || self.sin2.is_negative() {
            return Err(Error::Domain(format!(
                "sin²θ = {} is outside [0, 1]",
                self.sin2
            )));
        }
        arccos(&sqrt(&cos2, ctx)?, ctx)
    }
}

/// `sin²θ_G = α_{n₁}(n₁n₂)/α_{n₂}(n₁n₂)`.
pub fn mixing_angle(pair: &PrimePair, ctx: &NumericContext) -> Result<MixingAngle> {
    if pair.n2() == 2 {
        return Err(degenerate("the mixing angle"));
    }
    let terms = PairTerms::new(pair.n1(), pair.n2(), ctx)?;
    let sin2 = terms
        .alpha_n1(pair.n2())
        .div(&terms.alpha_n2(pair.n1()), ctx.working_places());
    Ok(MixingAngle { sin2 })
}

/// `cos(π/a)/cos(π/b)` for arbitrary orders; `b = 2` is degenerate.
pub fn cos_ratio(a: u64, b: u64, ctx: &NumericContext) -> Result<BigReal> {
    check_orders(a, b)?;
    if b == 2 {
        return Err(degenerate("cos(π/a)/cos(π/b)"));
    }
    let places = ctx.working_places();
    let pi = pi(ctx);
    let ca = cos(&pi.div_int(a, places), ctx);
    let cb = cos(&pi.div_int(b, places), ctx);
    Ok(ca.div(&cb, places))
}

/// `α_{n₁,d}/α_{n₁,e} = cos(χ_{n₁})/cos(χ_{n₂})`.
pub fn characteristic_ratio(pair: &PrimePair, ctx: &NumericContext) -> Result<BigReal> {
    cos_ratio(pair.n1(), pair.n2(), ctx)
}

/// `(α_{n₁,d}, α_{n₁,e}) = (α_{n₁}/n₂, α_{n₂}/n₁)`.
pub fn sub_quantum_characteristics(
    pair: &PrimePair,
    ctx: &NumericContext,
) -> Result<(BigReal, BigReal)> {
    let terms = PairTerms::new(pair.n1(), pair.n2(), ctx)?;
    let places = ctx.working_places();
    Ok((
        terms.alpha_n1(pair.n2()).div_int(pair.n2(), places),
        terms.alpha_n2(pair.n1()).div_int(pair.n1(), places),
    ))
}

/// The four dimensionless characteristics, without the angle machinery.
#[derive(Clone, Debug)]
pub struct CoreValues {
    pub alpha_n1: BigReal,
    pub alpha_n2: BigReal,
    pub sin2_theta_g: Option<BigReal>,
    pub ratio_d_e: Option<BigReal>,
}

/// One pass over the shared trigonometric terms; used by the pair scan.
pub fn core_values(pair: &PrimePair, ctx: &NumericContext) -> Result<CoreValues> {
    let places = ctx.working_places();
    let terms = PairTerms::new(pair.n1(), pair.n2(), ctx)?;
    let alpha_n1 = terms.alpha_n1(pair.n2());
    let alpha_n2 = terms.alpha_n2(pair.n1());
    let (sin2_theta_g, ratio_d_e) = if pair.n2() >= 3 {
        (
            Some(alpha_n1.div(&alpha_n2, places)),
            Some(terms.cos_n1.div(&terms.cos_n2, places)),
        )
    } else {
        (None, None)
    };
    Ok(CoreValues {
        alpha_n1,
        alpha_n2,
        sin2_theta_g,
        ratio_d_e,
    })
}

/// Every characteristic of one pair at one precision.
///
/// Fields that need `cos(π/n₂) ≠ 0` are `None` when `n₂ = 2`.
#[derive(Clone, Debug)]
pub struct CharacteristicSet {
    pub pair: PrimePair,
    pub chi_n1: Angle,
    pub chi_n2: Angle,
    pub chi_n1n2: Angle,
    pub beta: BigReal,
    pub alpha_n1: BigReal,
    pub alpha_n2: BigReal,
    pub chi_star_n1: Angle,
    pub chi_star_n2: Option<Angle>,
    pub alpha_n1_d: BigReal,
    pub alpha_n1_e: BigReal,
    pub sin2_theta_g: Option<BigReal>,
    pub ratio_d_e: Option<BigReal>,
    pub precision: NumericContext,
}

pub fn compute_set(pair: &PrimePair, ctx: &NumericContext) -> Result<CharacteristicSet> {
    let (n1, n2) = (pair.n1(), pair.n2());
    let places = ctx.working_places();
    let terms = PairTerms::new(n1, n2, ctx)?;
    let alpha_n1 = terms.alpha_n1(n2);
    let alpha_n2 = terms.alpha_n2(n1);
    let chi_star_n1 = arccos(&alpha_n1.mul_int(n1), ctx)?;
    let (chi_star_n2, sin2_theta_g, ratio_d_e) = if n2 >= 3 {
        (
            Some(arccos(&alpha_n2.mul_int(n2), ctx)?),
            Some(alpha_n1.div(&alpha_n2, places)),
            Some(terms.cos_n1.div(&terms.cos_n2, places)),
        )
    } else {
        (None, None, None)
    };
    Ok(CharacteristicSet {
        pair: *pair,
        chi_n1: terms.chi(n1),
        chi_n2: terms.chi(n2),
        chi_n1n2: terms.chi(terms.order),
        beta: terms.beta(),
        alpha_n1_d: alpha_n1.div_int(n2, places),
        alpha_n1_e: alpha_n2.div_int(n1, places),
        alpha_n1,
        alpha_n2,
        chi_star_n1,
        chi_star_n2,
        sin2_theta_g,
        ratio_d_e,
        precision: *ctx,
    })
}

impl CharacteristicSet {
    /// `|cos(χ*_n)/cos(χ_n) − β|` for `n₁` and, when defined, `n₂`.
    pub fn beta_cross_residuals(&self) -> (BigReal, Option<BigReal>) {
        let ctx = &self.precision;
        let places = ctx.working_places();
        let residual = |star: &Angle, chi: &Angle| {
            let ratio = cos(star.radians(), ctx).div(&cos(chi.radians(), ctx), places);
            (ratio - &self.beta).abs()
        };
        let first = residual(&self.chi_star_n1, &self.chi_n1);
        let second = self
            .chi_star_n2
            .as_ref()
            .map(|star| residual(star, &self.chi_n2));
        (first, second)
    }

    /// `|n·α_n − cos(χ*_n)|` for `n₁` and, when defined, `n₂`.
    pub fn chi_star_residuals(&self) -> (BigReal, Option<BigReal>) {
        let ctx = &self.precision;
        let first =
            (self.alpha_n1.mul_int(self.pair.n1()) - cos(self.chi_star_n1.radians(), ctx)).abs();
        let second = self
            .chi_star_n2
            .as_ref()
            .map(|star| (self.alpha_n2.mul_int(self.pair.n2()) - cos(star.radians(), ctx)).abs());
        (first, second)
    }
}
