//! Quantized circular orbits and their fit with the polygon construction.
//!
//! Speeds are fractions of the speed of light (`c = 1`). A speed quantum
//! `α` fixes `n_max`, the largest integer with `n_max·α < 1`; the orbit at
//! `v_c = n_max·α` then defines `χ*` through `cos χ* = n_max·α`, an outer
//! radius `r_0` with `r_0·cos χ* = r_c`, and the radial quantum
//! `l_c = r_c/n_max`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::bignum::{arccos, cos, pi, Angle, BigReal, NumericContext};
use crate::characteristics::{alpha_characteristic, beta, chi_star, PrimePair};
use crate::error::{Error, Result};
use crate::geometry::{build_system, IdentityCheck};

/// Largest integer `n` with `n·α < 1`, decided exactly on the decimal digits.
pub fn n_max_from_alpha(alpha: &BigReal) -> Result<u64> {
    if !alpha.is_positive() || *alpha >= BigReal::one() {
        return Err(Error::Domain(format!(
            "speed quantum must lie in (0, 1), got {alpha}"
        )));
    }
    // α = u·10^(−s):  n·u < 10^s  ⇔  n ≤ (10^s − 1) div u
    let limit: BigInt = num_traits::pow(BigInt::from(10u8), alpha.scale() as usize) - 1;
    let n = limit.div_floor(alpha.units());
    n.to_u64()
        .ok_or_else(|| Error::Domain(format!("speed quantum {alpha} is too small")))
}

#[derive(Clone, Debug)]
pub struct OrbitSystem {
    /// Speed quantum as a fraction of `c`.
    pub alpha: BigReal,
    pub n_max: u64,
    pub v_q: BigReal,
    /// Orbit speed `n_max·α`.
    pub v_c: BigReal,
    pub chi_star: Angle,
    /// `π/n_max`
    pub chi_nmax: Angle,
    /// Outer radius, the input scale.
    pub r_0: BigReal,
    /// Orbit radius `r_0·cos χ*`.
    pub r_c_orbit: BigReal,
    /// Radial quantum `r_c/n_max`.
    pub l_c: BigReal,
    /// `r_0·cos(π/n_max)`
    pub r_b_proj: BigReal,
}

impl OrbitSystem {
    /// The circumference `2π·r_c` splits into `2·n_max` segments of `π·l_c`.
    pub fn circumferential_quantum(&self, ctx: &NumericContext) -> BigReal {
        (pi(ctx) * &self.l_c).round_to(ctx.working_places())
    }

    pub fn circumferential_quantum_number(&self) -> u64 {
        2 * self.n_max
    }
}

pub fn build_orbit(alpha: &BigReal, r_0: &BigReal, ctx: &NumericContext) -> Result<OrbitSystem> {
    let n_max = n_max_from_alpha(alpha)?;
    if !r_0.is_positive() {
        return Err(Error::Domain(format!(
            "outer radius must be positive, got {r_0}"
        )));
    }
    let places = ctx.working_places();
    let v_c = alpha.mul_int(n_max);
    let chi_star = arccos(&v_c, ctx)?;
    let chi_nmax = Angle::pi_over(n_max, ctx)?;
    let r_c_orbit = (r_0 * cos(chi_star.radians(), ctx)).round_to(places);
    let l_c = r_c_orbit.div_int(n_max, places);
    let r_b_proj = (r_0 * cos(chi_nmax.radians(), ctx)).round_to(places);
    Ok(OrbitSystem {
        alpha: alpha.clone(),
        n_max,
        v_q: alpha.clone(),
        v_c,
        chi_star,
        chi_nmax,
        r_0: r_0.clone(),
        r_c_orbit,
        l_c,
        r_b_proj,
    })
}

/// `|r_c/r_0 − v_c|`: a point on the outer circle co-rotating with the orbit moves at `c`.
pub fn light_speed_check(orbit: &OrbitSystem, ctx: &NumericContext) -> BigReal {
    (orbit.r_c_orbit.div(&orbit.r_0, ctx.working_places()) - &orbit.v_c).abs()
}

/// Which subgroup's circumscribed circle plays the outer radius `r_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subgroup {
    N1,
    N2,
}

impl Subgroup {
    pub fn order(self, pair: &PrimePair) -> u64 {
        match self {
            Subgroup::N1 => pair.n1(),
            Subgroup::N2 => pair.n2(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Subgroup::N1 => "n1",
            Subgroup::N2 => "n2",
        }
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct ConsistencyReport {
    pub pair: PrimePair,
    pub choice: Subgroup,
    pub order: u64,
    pub tolerance: BigReal,
    pub checks: Vec<IdentityCheck>,
}

impl ConsistencyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Identifies the orbit with one subgroup of the polygon system (`r_0` with
/// that subgroup's circumscribed radius, `l_c` with its quantum length) and
/// checks every resulting coincidence to `10^(−digits+2)`.
pub fn marry_with_geometry(
    orbit: &OrbitSystem,
    pair: &PrimePair,
    choice: Subgroup,
    ctx: &NumericContext,
) -> Result<ConsistencyReport> {
    let order = choice.order(pair);
    if orbit.n_max != order {
        return Err(Error::Mismatch {
            n_max: orbit.n_max,
            expected: order,
            n1: pair.n1(),
            n2: pair.n2(),
        });
    }
    let partner = pair.partner_of(order).unwrap_or(order);
    let places = ctx.working_places();
    let tolerance = ctx.loose_tolerance(2);
    let entry = |label: &str, relation: &str, residual: BigReal| {
        IdentityCheck::new(label, relation, residual, &tolerance, ctx)
    };
    let mut checks = Vec::new();

    let relation = "α = α_n(n1n2)";
    checks.push(match alpha_characteristic(order, partner, ctx) {
        Ok(a) => entry("alpha", relation, &orbit.alpha - a),
        Err(e) => IdentityCheck::failed("alpha", relation, &e, ctx),
    });

    // Scale the polygon system so the chosen circumscribed radius equals r_0.
    let r_b = (&orbit.r_0 * cos(orbit.chi_nmax.radians(), ctx)).round_to(places);
    match build_system(pair, &r_b, ctx) {
        Ok(system) => {
            let (l_n, r_outer) = match choice {
                Subgroup::N1 => (&system.l_n1, &system.r_d),
                Subgroup::N2 => (&system.l_n2, &system.r_e),
            };
            checks.push(entry(
                "r_0",
                "r_0 = circumscribed radius of P_n",
                r_outer - &orbit.r_0,
            ));
            checks.push(entry("l_c", "l_c = l_n", &orbit.l_c - l_n));
            checks.push(entry(
                "r_c",
                "orbit radius = threading radius",
                &orbit.r_c_orbit - &system.r_c,
            ));
        }
        Err(e) => checks.push(IdentityCheck::failed("l_c", "l_c = l_n", &e, ctx)),
    }

    let relation = "χ* (orbit) = χ*_n (polygons)";
    checks.push(match chi_star(order, pair, ctx) {
        Ok(star) => entry(
            "chi_star",
            relation,
            orbit.chi_star.radians() - star.radians(),
        ),
        Err(e) => IdentityCheck::failed("chi_star", relation, &e, ctx),
    });

    let orbit_ratio =
        cos(orbit.chi_star.radians(), ctx).div(&cos(orbit.chi_nmax.radians(), ctx), places);
    let relation = "cos χ*/cos χ_nmax = β(n1n2)";
    checks.push(match beta(pair, ctx) {
        Ok(b) => entry("beta", relation, &orbit_ratio - b),
        Err(e) => IdentityCheck::failed("beta", relation, &e, ctx),
    });

    if partner >= 3 && partner != order {
        let relation = "cos χ*/cos χ_nmax = cos χ*_m/cos χ_m (other subgroup)";
        checks.push(
            match (chi_star(partner, pair, ctx), Angle::pi_over(partner, ctx)) {
                (Ok(star), Ok(chi)) => {
                    let other = cos(star.radians(), ctx).div(&cos(chi.radians(), ctx), places);
                    entry("beta_cross", relation, &orbit_ratio - other)
                }
                (Err(e), _) | (_, Err(e)) => IdentityCheck::failed("beta_cross", relation, &e, ctx),
            },
        );
    }

    Ok(ConsistencyReport {
        pair: *pair,
        choice,
        order,
        tolerance,
        checks,
    })
}
