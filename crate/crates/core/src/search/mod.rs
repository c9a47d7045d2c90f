//! Scanning subgroup-order pairs against a table of measured constants.

mod constants;
mod report;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bignum::{BigReal, NumericContext};
use crate::characteristics::{core_values, PrimePair};
use crate::error::{Error, Result};
use crate::primes::primes_up_to;

pub use constants::{
    load_constants, parse_constants, reference_constants, ConstantRecord, DIMENSIONLESS, HEADER,
    REFERENCE_CONSTANTS_CSV,
};
pub use report::{matches_json, matches_table};

/// Default working precision of a scan, in decimal digits.
pub const DEFAULT_SCAN_DIGITS: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CharacteristicKind {
    AlphaN1,
    AlphaN2,
    Sin2ThetaG,
    RatioDE,
}

impl CharacteristicKind {
    pub const ALL: [CharacteristicKind; 4] = [
        CharacteristicKind::AlphaN1,
        CharacteristicKind::AlphaN2,
        CharacteristicKind::Sin2ThetaG,
        CharacteristicKind::RatioDE,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CharacteristicKind::AlphaN1 => "alpha_n1",
            CharacteristicKind::AlphaN2 => "alpha_n2",
            CharacteristicKind::Sin2ThetaG => "sin2_theta_g",
            CharacteristicKind::RatioDE => "ratio_d_e",
        }
    }
}

impl fmt::Display for CharacteristicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CharacteristicKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CharacteristicKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Validation(format!("unknown characteristic kind `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct ScanBounds {
    pub max_n1: u64,
    pub max_n2: u64,
    pub prime_only: bool,
    /// Acceptance threshold in units of the target's 1σ.
    pub sigma_threshold: BigReal,
    /// Acceptance threshold on `|Δ|/|target|` for targets without uncertainty.
    pub relative_tolerance: BigReal,
    pub kinds: Vec<CharacteristicKind>,
}

impl ScanBounds {
    /// Prime pairs, 3σ, relative tolerance `10⁻³`, all four kinds.
    pub fn new(max_n1: u64, max_n2: u64) -> Result<Self> {
        let bounds = ScanBounds {
            max_n1,
            max_n2,
            prime_only: true,
            sigma_threshold: BigReal::from(3i64),
            relative_tolerance: BigReal::ulp(3),
            kinds: CharacteristicKind::ALL.to_vec(),
        };
        bounds.validate()?;
        Ok(bounds)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_n1 < 3 || self.max_n2 < 3 {
            return Err(Error::Validation(format!(
                "scan bounds must be at least 3, got max_n1 = {}, max_n2 = {}",
                self.max_n1, self.max_n2
            )));
        }
        if self.max_n2 > self.max_n1 {
            return Err(Error::Validation(format!(
                "max_n2 = {} exceeds max_n1 = {}",
                self.max_n2, self.max_n1
            )));
        }
        if self.sigma_threshold.is_negative() || self.relative_tolerance.is_negative() {
            return Err(Error::Validation(
                "scan thresholds must be nonnegative".into(),
            ));
        }
        if self.kinds.is_empty() {
            return Err(Error::Validation("no characteristic kinds selected".into()));
        }
        Ok(())
    }
}

/// All pairs `n₂ < n₁` within the bounds, ascending by `(n₁, n₂)`.
pub fn enumerate_pairs(bounds: &ScanBounds) -> Result<Vec<PrimePair>> {
    bounds.validate()?;
    let candidates: Vec<u64> = if bounds.prime_only {
        primes_up_to(bounds.max_n1)
    } else {
        (2..=bounds.max_n1).collect()
    };
    let mut pairs = Vec::new();
    for (i, &n1) in candidates.iter().enumerate() {
        for &n2 in candidates[..i]
            .iter()
            .take_while(|&&n2| n2 <= bounds.max_n2)
        {
            pairs.push(PrimePair::with_check(n1, n2, bounds.prime_only)?);
        }
    }
    Ok(pairs)
}

#[derive(Clone, Debug)]
pub struct MatchResult {
    pub pair: PrimePair,
    pub kind: CharacteristicKind,
    pub computed: BigReal,
    pub target: ConstantRecord,
    pub abs_diff: BigReal,
    /// `|Δ|/|target|`, absent for a zero target.
    pub rel_diff: Option<BigReal>,
    /// `|Δ|/σ`, absent when the target has no stated uncertainty.
    pub sigma_diff: Option<BigReal>,
    /// 1-based position within the target's ranking.
    pub rank: usize,
}

impl MatchResult {
    fn sort_key(&self) -> &BigReal {
        self.sigma_diff.as_ref().unwrap_or(&self.abs_diff)
    }

    fn accepted(&self, bounds: &ScanBounds) -> bool {
        match (&self.sigma_diff, &self.rel_diff) {
            (Some(sigma), _) => *sigma <= bounds.sigma_threshold,
            (None, Some(rel)) => *rel <= bounds.relative_tolerance,
            (None, None) => self.abs_diff <= bounds.relative_tolerance,
        }
    }
}

fn evaluate(
    pair: &PrimePair,
    kinds: &[CharacteristicKind],
    ctx: &NumericContext,
) -> Result<Vec<(CharacteristicKind, BigReal)>> {
    let values = core_values(pair, ctx)?;
    Ok(kinds
        .iter()
        .filter_map(|&kind| {
            let value = match kind {
                CharacteristicKind::AlphaN1 => Some(values.alpha_n1.clone()),
                CharacteristicKind::AlphaN2 => Some(values.alpha_n2.clone()),
                CharacteristicKind::Sin2ThetaG => values.sin2_theta_g.clone(),
                CharacteristicKind::RatioDE => values.ratio_d_e.clone(),
            };
            value.map(|v| (kind, v))
        })
        .collect())
}

/// Every candidate within the bounds, ranked per target (targets keep their
/// input order). Nothing is filtered out.
pub fn rank_all(
    targets: &[ConstantRecord],
    bounds: &ScanBounds,
    ctx: &NumericContext,
) -> Result<Vec<MatchResult>> {
    let targets: Vec<&ConstantRecord> = targets.iter().filter(|t| t.is_matchable()).collect();
    if targets.is_empty() {
        return Err(Error::Validation(
            "no dimensionless target to match against".into(),
        ));
    }
    let pairs = enumerate_pairs(bounds)?;
    let evaluated: Vec<(PrimePair, Vec<(CharacteristicKind, BigReal)>)> = pairs
        .par_iter()
        .map(|pair| evaluate(pair, &bounds.kinds, ctx).map(|values| (*pair, values)))
        .collect::<Result<_>>()?;

    let places = ctx.working_places();
    let mut out = Vec::new();
    for target in targets {
        let mut ranked: Vec<MatchResult> = evaluated
            .iter()
            .flat_map(|(pair, values)| {
                values.iter().map(move |(kind, computed)| {
                    let abs_diff = (computed - &target.value).abs();
                    let rel_diff = (!target.value.is_zero())
                        .then(|| abs_diff.div(&target.value.abs(), places));
                    let sigma_diff = target
                        .has_uncertainty()
                        .then(|| abs_diff.div(&target.uncertainty, places));
                    MatchResult {
                        pair: *pair,
                        kind: *kind,
                        computed: computed.clone(),
                        target: target.clone(),
                        abs_diff,
                        rel_diff,
                        sigma_diff,
                        rank: 0,
                    }
                })
            })
            .collect();
        ranked.sort_by(|a, b| {
            a.sort_key().cmp(b.sort_key()).then_with(|| {
                (a.pair.n1(), a.pair.n2(), a.kind).cmp(&(b.pair.n1(), b.pair.n2(), b.kind))
            })
        });
        for (i, m) in ranked.iter_mut().enumerate() {
            m.rank = i + 1;
        }
        out.extend(ranked);
    }
    Ok(out)
}

/// Candidates within `sigma_threshold` (or the relative tolerance for
/// targets without uncertainty), ranked per target. An empty result is a
/// valid outcome; errors are reserved for invalid inputs.
pub fn scan(
    targets: &[ConstantRecord],
    bounds: &ScanBounds,
    ctx: &NumericContext,
) -> Result<Vec<MatchResult>> {
    // Acceptance is monotone in the ranking key, so the accepted entries are
    // a prefix of each target's ranking and keep their ranks.
    let mut all = rank_all(targets, bounds, ctx)?;
    all.retain(|m| m.accepted(bounds));
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bounds(n1: u64, n2: u64) -> ScanBounds {
        ScanBounds::new(n1, n2).unwrap()
    }

    fn pairs(b: &ScanBounds) -> Vec<(u64, u64)> {
        enumerate_pairs(b)
            .unwrap()
            .iter()
            .map(|p| (p.n1(), p.n2()))
            .collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(
            pairs(&bounds(7, 7)),
            vec![(3, 2), (5, 2), (5, 3), (7, 2), (7, 3), (7, 5)]
        );
        assert_eq!(pairs(&bounds(3, 3)), vec![(3, 2)]);
        assert_eq!(pairs(&bounds(200, 200)).len(), 1035);
        assert_eq!(
            pairs(&bounds(11, 3)),
            vec![(3, 2), (5, 2), (5, 3), (7, 2), (7, 3), (11, 2), (11, 3)]
        );
    }

    #[test]
    fn relaxed_enumeration_counts_all_integers() {
        let mut b = bounds(6, 6);
        b.prime_only = false;
        // C(5, 2) pairs from {2, …, 6}
        assert_eq!(pairs(&b).len(), 10);
    }

    #[test]
    fn invalid_bounds() {
        assert!(ScanBounds::new(2, 2).is_err());
        assert!(ScanBounds::new(10, 20).is_err());
        let mut b = bounds(10, 5);
        b.kinds.clear();
        assert!(b.validate().is_err());
    }

    #[test]
    fn kinds_round_trip_names() {
        for kind in CharacteristicKind::ALL {
            assert_eq!(kind.as_str().parse::<CharacteristicKind>().unwrap(), kind);
        }
        assert!("alpha".parse::<CharacteristicKind>().is_err());
    }

    #[test]
    fn scan_requires_a_matchable_target() {
        let ctx = NumericContext::new(12).unwrap();
        let mut t = ConstantRecord::new("m", BigReal::from(80i64), BigReal::zero());
        t.unit = "GeV".into();
        assert!(scan(&[t], &bounds(10, 5), &ctx).is_err());
        assert!(scan(&[], &bounds(10, 5), &ctx).is_err());
    }

    #[test]
    fn exact_target_ranks_first() {
        let ctx = NumericContext::new(DEFAULT_SCAN_DIGITS).unwrap();
        let target = ConstantRecord::new(
            "g",
            "0.034280626357".parse().unwrap(),
            "1e-12".parse().unwrap(),
        );
        let found = scan(&[target], &bounds(150, 50), &ctx).unwrap();
        let top = &found[0];
        assert_eq!(
            (top.pair.n1(), top.pair.n2(), top.kind),
            (137, 29, CharacteristicKind::AlphaN2)
        );
        assert_eq!(top.rank, 1);
    }

    #[test]
    fn zero_uncertainty_uses_relative_tolerance() {
        let ctx = NumericContext::new(DEFAULT_SCAN_DIGITS).unwrap();
        let target = ConstantRecord::new("g", "0.033882".parse().unwrap(), BigReal::zero());
        let found = scan(&[target], &bounds(60, 20), &ctx).unwrap();
        assert!(found.iter().all(|m| m.sigma_diff.is_none()));
        assert!(found
            .iter()
            .all(|m| m.rel_diff.as_ref().unwrap() <= &BigReal::ulp(3)));
        for w in found.windows(2) {
            assert!(w[0].abs_diff <= w[1].abs_diff);
        }
    }
}
