use serde_json::{json, Value};

use super::MatchResult;
use crate::report::{fixed, fixed_opt, json_num, json_opt, Table};

pub fn matches_table(results: &[MatchResult], digits: u32) -> String {
    let mut table = Table::new([
        "target",
        "rank",
        "n1",
        "n2",
        "kind",
        "computed",
        "value",
        "sigma",
        "abs_diff",
        "rel_diff",
        "sigma_diff",
    ]);
    for m in results {
        table.push([
            m.target.name.clone(),
            m.rank.to_string(),
            m.pair.n1().to_string(),
            m.pair.n2().to_string(),
            m.kind.to_string(),
            fixed(&m.computed, digits),
            m.target.value.to_string(),
            m.target.uncertainty.to_string(),
            fixed(&m.abs_diff, digits),
            fixed_opt(m.rel_diff.as_ref(), digits),
            fixed_opt(m.sigma_diff.as_ref(), digits),
        ]);
    }
    table.render()
}

/// One object per match; numbers are decimal strings.
pub fn matches_json(results: &[MatchResult], digits: u32) -> Value {
    Value::Array(
        results
            .iter()
            .map(|m| {
                json!({
                    "pair": { "n1": m.pair.n1(), "n2": m.pair.n2() },
                    "characteristic_kind": m.kind.as_str(),
                    "computed": json_num(&m.computed, digits),
                    "target": {
                        "name": m.target.name,
                        "value": m.target.value.to_string(),
                        "uncertainty": m.target.uncertainty.to_string(),
                        "unit": m.target.unit,
                        "source": m.target.source,
                    },
                    "abs_diff": json_num(&m.abs_diff, digits),
                    "rel_diff": json_opt(m.rel_diff.as_ref(), digits),
                    "sigma_diff": json_opt(m.sigma_diff.as_ref(), digits),
                    "rank": m.rank,
                })
            })
            .collect(),
    )
}
