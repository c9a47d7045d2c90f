//! Electroweak couplings read off a pair's characteristics, and their
//! comparison with measured values.
//!
//! With `(n₁, n₂)` fixed, `α_{n₁}` plays the fine structure constant,
//! `α_{n₂}` plays `g²/4π` and `sin²θ_G` plays the weak mixing angle.
//! The rest follows from `e = g·sin θ_W`, `M_Z/M_W = 1/cos θ_W`.

use std::fmt;

use crate::bignum::{pi, sqrt, BigReal, NumericContext};
use crate::characteristics::{core_values, PrimePair};
use crate::error::{Error, Result};
use crate::report::{fixed, fixed_opt, Table};
use crate::search::{reference_constants, ConstantRecord};

#[derive(Clone, Debug)]
pub struct ElectroweakPrediction {
    pub pair: PrimePair,
    pub alpha_fs: BigReal,
    pub g2_over_4pi: BigReal,
    pub sin2_theta_w: BigReal,
    pub cos_theta_w: BigReal,
    /// `|g′|/e = 1/cos θ_W`; the sign is a convention and is not stored.
    pub g_prime_over_e: BigReal,
    /// `g_Z/e = (|g′|/e)/(2√2)`
    pub g_z_over_e: BigReal,
    /// `(g²/4π)/8`
    pub alpha_w: BigReal,
    pub mz_over_mw: BigReal,
}

pub fn predict(pair: &PrimePair, ctx: &NumericContext) -> Result<ElectroweakPrediction> {
    if pair.n2() < 3 {
        return Err(Error::DegeneratePair(format!(
            "the weak mixing angle needs n2 >= 3, got {pair}"
        )));
    }
    let places = ctx.working_places();
    let values = core_values(pair, ctx)?;
    let sin2 = values.sin2_theta_g.expect("n2 >= 3 has a mixing angle");
    let cos_theta_w = sqrt(&(BigReal::one() - &sin2), ctx)?;
    let mz_over_mw = BigReal::one().div(&cos_theta_w, places);
    let g_z_over_e = mz_over_mw.div(&sqrt(&BigReal::from(8i64), ctx)?, places);
    Ok(ElectroweakPrediction {
        pair: *pair,
        alpha_fs: values.alpha_n1,
        alpha_w: values.alpha_n2.div_int(8, places),
        g2_over_4pi: values.alpha_n2,
        sin2_theta_w: sin2,
        cos_theta_w,
        g_prime_over_e: mz_over_mw.clone(),
        g_z_over_e,
        mz_over_mw,
    })
}

/// `g²/4π = √2·M_W²·G_F/π`, with `M_W` in GeV/c² and `G_F` in GeV⁻².
pub fn fermi_coupling(m_w: &BigReal, g_f: &BigReal, ctx: &NumericContext) -> Result<BigReal> {
    if !m_w.is_positive() {
        return Err(Error::Domain(format!("M_W must be positive, got {m_w}")));
    }
    if g_f.is_negative() {
        return Err(Error::Domain(format!("G_F must be nonnegative, got {g_f}")));
    }
    let places = ctx.working_places();
    let root2 = sqrt(&BigReal::from(2i64), ctx)?;
    Ok((root2 * m_w * m_w * g_f).div(&pi(ctx), places))
}

#[derive(Clone, Debug)]
pub struct MeasuredInputs {
    /// GeV/c²
    pub m_w: BigReal,
    /// GeV⁻²
    pub g_f: BigReal,
    pub alpha_measured: ConstantRecord,
    pub g2_4pi_measured: ConstantRecord,
    pub sin2_measured: ConstantRecord,
    pub mz_mw_measured: ConstantRecord,
    /// How the mass ratio was given, e.g. `1/0.881` when read as `M_W/M_Z`.
    pub mz_mw_label: String,
}

impl MeasuredInputs {
    /// The bundled table of values quoted with the original result.
    pub fn reference_defaults(ctx: &NumericContext) -> Result<Self> {
        Self::from_records(&reference_constants(), ctx)
    }

    /// Needs `alpha`, `g2_over_4pi`, `sin2_theta_w`, `m_w`, `g_f` and either
    /// `mz_over_mw` or `mw_over_mz`.
    pub fn from_records(records: &[ConstantRecord], ctx: &NumericContext) -> Result<Self> {
        let find = |name: &str| records.iter().find(|r| r.name == name);
        let need = |name: &str| {
            find(name)
                .cloned()
                .ok_or_else(|| Error::Validation(format!("constants table has no `{name}` row")))
        };
        let (mz_mw_measured, mz_mw_label) = match (find("mz_over_mw"), find("mw_over_mz")) {
            (Some(r), _) => (r.clone(), r.value.to_string()),
            (None, Some(r)) => {
                if !r.value.is_positive() {
                    return Err(Error::Validation(format!(
                        "mw_over_mz must be positive, got {}",
                        r.value
                    )));
                }
                let places = ctx.working_places();
                let value = BigReal::one().div(&r.value, places);
                // σ(1/x) = σ/x²
                let uncertainty = r.uncertainty.div(&(&r.value * &r.value), places);
                let label = format!("1/{}", r.value);
                let record = ConstantRecord {
                    name: "mz_over_mw".into(),
                    value,
                    uncertainty,
                    unit: r.unit.clone(),
                    source: format!("reciprocal of {}", r.name),
                };
                (record, label)
            }
            (None, None) => {
                return Err(Error::Validation(
                    "constants table has neither `mz_over_mw` nor `mw_over_mz`".into(),
                ))
            }
        };
        let inputs = MeasuredInputs {
            m_w: need("m_w")?.value,
            g_f: need("g_f")?.value,
            alpha_measured: need("alpha")?,
            g2_4pi_measured: need("g2_over_4pi")?,
            sin2_measured: need("sin2_theta_w")?,
            mz_mw_measured,
            mz_mw_label,
        };
        inputs.validate()?;
        Ok(inputs)
    }

    fn validate(&self) -> Result<()> {
        let records = [
            &self.alpha_measured,
            &self.g2_4pi_measured,
            &self.sin2_measured,
            &self.mz_mw_measured,
        ];
        if !self.m_w.is_positive() || self.g_f.is_negative() {
            return Err(Error::Validation(
                "m_w must be positive and g_f nonnegative".into(),
            ));
        }
        for r in records {
            if !r.value.is_positive() {
                return Err(Error::Validation(format!("`{}` must be positive", r.name)));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct ComparisonRow {
    pub quantity: String,
    pub theory: BigReal,
    pub measured: BigReal,
    /// Where the measured number comes from, as shown in reports.
    pub measured_label: String,
    /// 1σ of the measured value, if one is stated.
    pub uncertainty: Option<BigReal>,
    /// `theory − measured`
    pub signed_diff: BigReal,
    pub abs_diff: BigReal,
    /// `|Δ|/|measured|`
    pub rel_diff: Option<BigReal>,
    /// `(theory − measured)/σ`
    pub sigma_diff: Option<BigReal>,
}

pub fn compare_values(
    quantity: &str,
    theory: &BigReal,
    measured: &BigReal,
    measured_label: &str,
    uncertainty: Option<&BigReal>,
    ctx: &NumericContext,
) -> ComparisonRow {
    let places = ctx.working_places();
    let signed_diff = theory - measured;
    let abs_diff = signed_diff.abs();
    let uncertainty = uncertainty.filter(|u| u.is_positive()).cloned();
    ComparisonRow {
        quantity: quantity.to_string(),
        theory: theory.clone(),
        measured: measured.clone(),
        measured_label: measured_label.to_string(),
        rel_diff: (!measured.is_zero()).then(|| abs_diff.div(&measured.abs(), places)),
        sigma_diff: uncertainty.as_ref().map(|u| signed_diff.div(u, places)),
        uncertainty,
        signed_diff,
        abs_diff,
    }
}

fn compare_record(
    quantity: &str,
    theory: &BigReal,
    record: &ConstantRecord,
    ctx: &NumericContext,
) -> ComparisonRow {
    let label = format!("{} ({})", record.value, record.name);
    compare_values(
        quantity,
        theory,
        &record.value,
        &label,
        Some(&record.uncertainty),
        ctx,
    )
}

#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub pair: PrimePair,
    pub rows: Vec<ComparisonRow>,
    pub notes: Vec<String>,
}

impl ComparisonReport {
    pub fn row(&self, quantity: &str, label_contains: &str) -> Option<&ComparisonRow> {
        self.rows
            .iter()
            .find(|r| r.quantity == quantity && r.measured_label.contains(label_contains))
    }

    pub fn table(&self, digits: u32) -> String {
        let mut table = Table::new([
            "quantity",
            "theory",
            "measured",
            "from",
            "sigma",
            "diff",
            "abs_diff",
            "rel_diff",
            "sigma_diff",
        ]);
        for r in &self.rows {
            table.push([
                r.quantity.clone(),
                fixed(&r.theory, digits),
                fixed(&r.measured, digits),
                r.measured_label.clone(),
                fixed_opt(r.uncertainty.as_ref(), digits),
                fixed(&r.signed_diff, digits),
                fixed(&r.abs_diff, digits),
                fixed_opt(r.rel_diff.as_ref(), digits),
                fixed_opt(r.sigma_diff.as_ref(), digits),
            ]);
        }
        table.render()
    }
}

/// Rows: α; g²/4π against the quoted value, against `√2·M_W²·G_F/π` and
/// against `α/sin²θ_W` from the measured pair; sin²θ_W; `M_Z/M_W`.
pub fn compare(
    pred: &ElectroweakPrediction,
    measured: &MeasuredInputs,
    ctx: &NumericContext,
) -> Result<ComparisonReport> {
    let places = ctx.working_places();
    let alpha = &measured.alpha_measured;
    let sin2 = &measured.sin2_measured;

    let fermi = fermi_coupling(&measured.m_w, &measured.g_f, ctx)?;
    let fermi_label = format!(
        "sqrt(2) M_W^2 G_F / pi, M_W = {}, G_F = {}",
        measured.m_w, measured.g_f
    );

    let from_mixing = alpha.value.div(&sin2.value, places);
    // relative errors add in quadrature for a quotient
    let rel_a = alpha.uncertainty.div(&alpha.value, places);
    let rel_s = sin2.uncertainty.div(&sin2.value, places);
    let rel = sqrt(&(&rel_a * &rel_a + &rel_s * &rel_s), ctx)?;
    let from_mixing_sigma = (&from_mixing * &rel).round_to(places);
    let mixing_label = format!("{} / {} (alpha / sin2_theta_w)", alpha.value, sin2.value);

    let g2 = compare_record(
        "g2_over_4pi",
        &pred.g2_over_4pi,
        &measured.g2_4pi_measured,
        ctx,
    );
    let rows = vec![
        compare_record("alpha", &pred.alpha_fs, alpha, ctx),
        g2.clone(),
        compare_values(
            "g2_over_4pi",
            &pred.g2_over_4pi,
            &fermi,
            &fermi_label,
            None,
            ctx,
        ),
        compare_values(
            "g2_over_4pi",
            &pred.g2_over_4pi,
            &from_mixing,
            &mixing_label,
            Some(&from_mixing_sigma),
            ctx,
        ),
        compare_record("sin2_theta_w", &pred.sin2_theta_w, sin2, ctx),
        compare_values(
            "mz_over_mw",
            &pred.mz_over_mw,
            &measured.mz_mw_measured.value,
            &measured.mz_mw_label,
            Some(&measured.mz_mw_measured.uncertainty),
            ctx,
        ),
    ];

    let rel_text = g2
        .rel_diff
        .as_ref()
        .map_or_else(|| "-".to_string(), |r| r.to_fixed(6));
    let notes = vec![
        "g' is reported as the magnitude |g'|/e = 1/cos(theta_W); with the usual sign convention g' = -e/cos(theta_W).".to_string(),
        format!(
            "g2_over_4pi vs {}: absolute difference {} (read as parts in 10^4), relative difference {}.",
            measured.g2_4pi_measured.value,
            g2.abs_diff.to_fixed(6),
            rel_text
        ),
    ];
    Ok(ComparisonReport {
        pair: pred.pair,
        rows,
        notes,
    })
}

impl fmt::Display for ElectroweakPrediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: alpha = {}, g2/4pi = {}, sin2(theta_W) = {}",
            self.pair, self.alpha_fs, self.g2_over_4pi, self.sin2_theta_w
        )
    }
}
