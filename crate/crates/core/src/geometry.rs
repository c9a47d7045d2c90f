//! The eight concentric objects built around the `n₁n₂`-gon and the scalar
//! identities that tie them together.
//!
//! All three polygons `P_{n₁n₂}`, `P_{n₁}` and `P_{n₂}` share the inscribed
//! circle of radius `r_b`, which is the input scale. The other objects are
//! the circumscribed circle of `P_{n₁n₂}` (`r_a`), the threading circle whose
//! circumference equals the perimeter of `P_{n₁n₂}` (`r_c`), and the
//! circumscribed circles of `P_{n₁}` (`r_d`) and `P_{n₂}` (`r_e`).

use std::fmt;

use crate::bignum::{cos, pi, tan, BigReal, NumericContext};
use crate::characteristics::{alpha_characteristic, chi_star, PrimePair};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ConcentricSystem {
    pub pair: PrimePair,
    /// Common inscribed circle `C_{n₁n₂,b}`.
    pub r_b: BigReal,
    /// Circumscribed circle of `P_{n₁n₂}`.
    pub r_a: BigReal,
    /// Threading circle `C_{n₁n₂,c}`.
    pub r_c: BigReal,
    /// Circumscribed circle of `P_{n₁}`.
    pub r_d: BigReal,
    /// Circumscribed circle of `P_{n₂}`.
    pub r_e: BigReal,
    /// Perimeter of `P_{n₁n₂}`.
    pub perimeter: BigReal,
    pub l_n1: BigReal,
    pub l_n2: BigReal,
    pub l_n1n2: BigReal,
}

impl ConcentricSystem {
    /// Side counts of the three polygons, outermost last.
    pub fn polygon_sides(&self) -> [u64; 3] {
        [self.pair.order(), self.pair.n1(), self.pair.n2()]
    }
}

/// Builds the system around an inscribed circle of radius `r_b`.
///
/// The quantum lengths `l_{n₁}` and `l_{n₂}` come from the subgroup radii
/// (`l_{n₁} = r_d·n₂·cos(π/n₁)·tan(π/N)/π`), and `l_{n₁n₂}` from `r_b`, so
/// the identities checked by [`verify_identities`] are not tautological.
pub fn build_system(
    pair: &PrimePair,
    r_b: &BigReal,
    ctx: &NumericContext,
) -> Result<ConcentricSystem> {
    if !r_b.is_positive() {
        return Err(Error::Domain(format!(
            "inscribed radius must be positive, got {r_b}"
        )));
    }
    if pair.n2() == 2 {
        return Err(Error::DegeneratePair(
            "the circumscribed circle of a 2-gon is unbounded".into(),
        ));
    }
    let places = ctx.working_places();
    let (n1, n2, order) = (pair.n1(), pair.n2(), pair.order());
    let pi = pi(ctx);
    let cos_n1 = cos(&pi.div_int(n1, places), ctx);
    let cos_n2 = cos(&pi.div_int(n2, places), ctx);
    let cos_order = cos(&pi.div_int(order, places), ctx);
    let tan_order = tan(&pi.div_int(order, places), ctx)?;

    let r_d = r_b.div(&cos_n1, places);
    let r_e = r_b.div(&cos_n2, places);
    let r_a = r_b.div(&cos_order, places);
    let perimeter = (&tan_order * r_b).mul_int(2 * order).round_to(places);
    let r_c = perimeter.div(&(&pi * BigReal::from(2i64)), places);
    let l_n1n2 = (r_b * &tan_order).div(&pi, places);
    let l_n1 = (&r_d * &cos_n1 * &tan_order).mul_int(n2).div(&pi, places);
    let l_n2 = (&r_e * &cos_n2 * &tan_order).mul_int(n1).div(&pi, places);

    Ok(ConcentricSystem {
        pair: *pair,
        r_b: r_b.clone(),
        r_a,
        r_c,
        r_d,
        r_e,
        perimeter,
        l_n1,
        l_n2,
        l_n1n2,
    })
}

/// One numerically checked relation.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub label: String,
    pub relation: String,
    /// Absolute residual of the relation.
    pub residual: BigReal,
    /// Residual in units of `10^(−requested_digits)`.
    pub residual_units: BigReal,
    pub passed: bool,
}

impl IdentityCheck {
    pub(crate) fn new(
        label: &str,
        relation: &str,
        residual: BigReal,
        tolerance: &BigReal,
        ctx: &NumericContext,
    ) -> Self {
        let residual = residual.abs();
        let passed = residual <= *tolerance;
        Self::with_outcome(label, relation, residual, passed, ctx)
    }

    pub(crate) fn with_outcome(
        label: &str,
        relation: &str,
        residual: BigReal,
        passed: bool,
        ctx: &NumericContext,
    ) -> Self {
        let residual_units = residual.mul_pow10(ctx.requested_digits());
        IdentityCheck {
            label: label.to_string(),
            relation: relation.to_string(),
            residual,
            residual_units,
            passed,
        }
    }

    pub(crate) fn failed(label: &str, relation: &str, why: &Error, ctx: &NumericContext) -> Self {
        Self::with_outcome(
            label,
            &format!("{relation} [{why}]"),
            BigReal::zero(),
            false,
            ctx,
        )
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        write!(
            f,
            "{} {}: {} (residual {})",
            verdict, self.label, self.relation, self.residual
        )
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub pair: PrimePair,
    pub swapped: bool,
    pub tolerance: BigReal,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn max_residual(&self) -> BigReal {
        self.checks
            .iter()
            .map(|c| c.residual.clone())
            .max()
            .unwrap_or_default()
    }
}

/// Checks every scalar relation of the construction; failures are report
/// entries, never errors.
pub fn verify_identities(
    system: &ConcentricSystem,
    ctx: &NumericContext,
    tolerance: &BigReal,
) -> IdentityReport {
    let places = ctx.working_places();
    let pair = &system.pair;
    let (n1, n2, order) = (pair.n1(), pair.n2(), pair.order());
    let pi = pi(ctx);
    let cos_n1 = cos(&pi.div_int(n1, places), ctx);
    let cos_n2 = cos(&pi.div_int(n2, places), ctx);
    let entry = |label: &str, relation: &str, residual: BigReal| {
        IdentityCheck::new(label, relation, residual, tolerance, ctx)
    };
    let mut checks = vec![
        entry(
            "i",
            "r_d·cos(χ_n1) = r_b",
            &system.r_d * &cos_n1 - &system.r_b,
        ),
        entry(
            "ii",
            "r_e·cos(χ_n2) = r_b",
            &system.r_e * &cos_n2 - &system.r_b,
        ),
    ];

    for (label, relation, n, radius) in [
        ("iii", "r_d·cos(χ*_n1) = r_c", n1, &system.r_d),
        ("iv", "r_e·cos(χ*_n2) = r_c", n2, &system.r_e),
    ] {
        checks.push(match chi_star(n, pair, ctx) {
            Ok(star) => entry(
                label,
                relation,
                radius * cos(star.radians(), ctx) - &system.r_c,
            ),
            Err(e) => IdentityCheck::failed(label, relation, &e, ctx),
        });
    }

    let threading = "r_c = n1n2·r_b·tan(π/(n1n2))/π";
    checks.push(match tan(&pi.div_int(order, places), ctx) {
        Ok(t) => entry(
            "v",
            threading,
            (&system.r_b * t).mul_int(order).div(&pi, places) - &system.r_c,
        ),
        Err(e) => IdentityCheck::failed("v", threading, &e, ctx),
    });

    checks.push(entry(
        "vi.a",
        "l_n1 = n2·l_n1n2",
        &system.l_n1 - system.l_n1n2.mul_int(n2),
    ));
    checks.push(entry(
        "vi.b",
        "l_n2 = n1·l_n1n2",
        &system.l_n2 - system.l_n1n2.mul_int(n1),
    ));
    let quantized = (system.l_n1.mul_int(n1) - &system.r_c)
        .abs()
        .max((system.l_n2.mul_int(n2) - &system.r_c).abs());
    checks.push(entry("vi.c", "r_c = n1·l_n1 = n2·l_n2", quantized));

    for (label, relation, n, partner, length, radius) in [
        (
            "vii.a",
            "α_n1 = l_n1/r_d",
            n1,
            n2,
            &system.l_n1,
            &system.r_d,
        ),
        (
            "vii.b",
            "α_n2 = l_n2/r_e",
            n2,
            n1,
            &system.l_n2,
            &system.r_e,
        ),
    ] {
        checks.push(match alpha_characteristic(n, partner, ctx) {
            Ok(alpha) => entry(label, relation, length.div(radius, places) - alpha),
            Err(e) => IdentityCheck::failed(label, relation, &e, ctx),
        });
    }

    checks.push(ordering_check(system, tolerance, ctx));

    IdentityReport {
        pair: *pair,
        swapped: pair.was_swapped(),
        tolerance: tolerance.clone(),
        checks,
    }
}

/// `r_b < r_c < r_a < r_d < r_e` (with `r_d = r_e` when `n₁ = n₂`). The
/// residual is the smallest consecutive gap.
fn ordering_check(
    system: &ConcentricSystem,
    tolerance: &BigReal,
    ctx: &NumericContext,
) -> IdentityCheck {
    let s = system;
    let gaps = [&s.r_c - &s.r_b, &s.r_a - &s.r_c, &s.r_d - &s.r_a];
    let strict = gaps.iter().all(|g| g.is_positive());
    let outer = &s.r_e - &s.r_d;
    let (outer_ok, relation) = if s.pair.n1() == s.pair.n2() {
        (outer.abs() <= *tolerance, "r_b < r_c < r_a < r_d = r_e")
    } else {
        (outer.is_positive(), "r_b < r_c < r_a < r_d < r_e")
    };
    let smallest = gaps
        .into_iter()
        .chain(std::iter::once(outer))
        .min()
        .unwrap_or_default();
    IdentityCheck::with_outcome("viii", relation, smallest, strict && outer_ok, ctx)
}
