//! Plain-text tables and JSON helpers shared by the report renderers.

use serde_json::Value;

use crate::bignum::BigReal;

/// Left-aligned text table with two-space column gaps.
#[derive(Clone, Debug, Default)]
pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        let mut row: Vec<String> = row.into_iter().map(Into::into).collect();
        row.resize(self.headers.len(), String::new());
        self.rows.push(row);
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn render(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&self.headers).chain(&self.rows) {
            let mut line = String::new();
            for (i, (cell, w)) in row.iter().zip(&widths).enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(cell);
                line.extend(std::iter::repeat_n(' ', w - cell.chars().count()));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// `x` rounded half-even to `digits` places.
pub fn fixed(x: &BigReal, digits: u32) -> String {
    x.to_fixed(digits)
}

pub fn fixed_opt(x: Option<&BigReal>, digits: u32) -> String {
    x.map_or_else(|| "-".to_string(), |v| fixed(v, digits))
}

pub fn json_num(x: &BigReal, digits: u32) -> Value {
    Value::String(fixed(x, digits))
}

pub fn json_opt(x: Option<&BigReal>, digits: u32) -> Value {
    x.map_or(Value::Null, |v| json_num(v, digits))
}

/// Pretty JSON with a trailing newline; stable under parse and re-render.
pub fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_align() {
        let mut t = Table::new(["a", "long header"]);
        t.push(["wide cell", "x"]);
        t.push(["y"]);
        assert_eq!(t.render(), "a          long header\nwide cell  x\ny\n");
    }

    #[test]
    fn json_round_trips() {
        let v = serde_json::json!({"b": "1.50", "a": [1, null]});
        let text = render_json(&v);
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(render_json(&back), text);
        assert!(text.find("\"b\"").unwrap() < text.find("\"a\"").unwrap());
    }
}
