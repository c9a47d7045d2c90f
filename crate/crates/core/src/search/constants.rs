use std::path::Path;

use crate::bignum::BigReal;
use crate::error::{Error, Result};

/// The measured values quoted alongside the original (137, 29) result.
pub const REFERENCE_CONSTANTS_CSV: &str = include_str!("../../data/reference_constants.csv");

pub const HEADER: [&str; 5] = ["name", "value", "uncertainty", "unit", "source"];

pub const DIMENSIONLESS: &str = "dimensionless";

/// A measured constant with its 1σ uncertainty (zero when none is stated).
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantRecord {
    pub name: String,
    pub value: BigReal,
    pub uncertainty: BigReal,
    pub unit: String,
    pub source: String,
}

impl ConstantRecord {
    pub fn new(name: &str, value: BigReal, uncertainty: BigReal) -> Self {
        ConstantRecord {
            name: name.to_string(),
            value,
            uncertainty,
            unit: DIMENSIONLESS.to_string(),
            source: String::new(),
        }
    }

    /// Only dimensionless constants can be compared with characteristics.
    pub fn is_matchable(&self) -> bool {
        self.unit == DIMENSIONLESS
    }

    pub fn has_uncertainty(&self) -> bool {
        self.uncertainty.is_positive()
    }
}

pub fn load_constants(path: impl AsRef<Path>) -> Result<Vec<ConstantRecord>> {
    let text = std::fs::read_to_string(path)?;
    parse_constants(&text)
}

/// Parses `name,value,uncertainty,unit,source` CSV. Blank lines and lines
/// starting with `#` are skipped; the header is required once any row exists.
pub fn parse_constants(text: &str) -> Result<Vec<ConstantRecord>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());

    let mut records: Vec<ConstantRecord> = Vec::new();
    let mut header_seen = false;
    for row in reader.records() {
        let row = row.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = row.position().map_or(0, |p| p.line());
        let parse_err = |message: String| Error::Parse { line, message };

        if !header_seen {
            let fields: Vec<&str> = row.iter().collect();
            if fields != HEADER {
                return Err(parse_err(format!(
                    "expected header `{}`, found `{}`",
                    HEADER.join(","),
                    fields.join(",")
                )));
            }
            header_seen = true;
            continue;
        }
        if row.len() != HEADER.len() {
            return Err(parse_err(format!("expected 5 fields, found {}", row.len())));
        }
        let name = row[0].to_string();
        if name.is_empty() {
            return Err(parse_err("empty constant name".into()));
        }
        let value: BigReal = row[1]
            .parse()
            .map_err(|_| parse_err(format!("`{}` is not a decimal value", &row[1])))?;
        let uncertainty: BigReal = if row[2].is_empty() {
            BigReal::zero()
        } else {
            row[2]
                .parse()
                .map_err(|_| parse_err(format!("`{}` is not a decimal uncertainty", &row[2])))?
        };
        if uncertainty.is_negative() {
            return Err(parse_err(format!("negative uncertainty {uncertainty}")));
        }
        if records.iter().any(|r| r.name == name) {
            return Err(Error::DuplicateName { line, name });
        }
        records.push(ConstantRecord {
            name,
            value,
            uncertainty,
            unit: row[3].to_string(),
            source: row[4].to_string(),
        });
    }
    Ok(records)
}

pub fn reference_constants() -> Vec<ConstantRecord> {
    parse_constants(REFERENCE_CONSTANTS_CSV).expect("bundled constants file is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_row_with_uncertainty() {
        let text = "name,value,uncertainty,unit,source\nalpha,0.007297352533,2.7e-11,dimensionless,codata\n";
        let rows = parse_constants(text).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].value, "0.007297352533".parse().unwrap());
        assert_eq!(rows[0].uncertainty, "0.000000000027".parse().unwrap());
        assert!(rows[0].is_matchable());
        assert!(rows[0].has_uncertainty());
    }

    #[test]
    fn empty_input_is_empty_list() {
        assert!(parse_constants("").unwrap().is_empty());
        assert!(parse_constants("\n# nothing here\n").unwrap().is_empty());
        assert!(parse_constants("name,value,uncertainty,unit,source\n")
            .unwrap()
            .is_empty());
    }

    #[test]
    fn dimensionful_rows_are_kept_but_unmatchable() {
        let text = "name,value,uncertainty,unit,source\nm_w,80.33,0,GeV,pdg\n";
        let rows = parse_constants(text).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(!rows[0].is_matchable());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "name,value,uncertainty,unit,source\n# comment\na,0.1,0,dimensionless,x\nb,zero,0,dimensionless,x\n";
        match parse_constants(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
        let text = "name,value,uncertainty,unit,source\na,0.1,0,dimensionless,x\na,0.2,0,dimensionless,y\n";
        match parse_constants(text) {
            Err(Error::DuplicateName { line, name }) => {
                assert_eq!(line, 3);
                assert_eq!(name, "a");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_constants("a,b,c\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        let text = "name,value,uncertainty,unit,source\na,0.1,-1,dimensionless,x\n";
        assert!(matches!(
            parse_constants(text),
            Err(Error::Parse { line: 2, .. })
        ));
        let text = "name,value,uncertainty,unit,source\na,0.1,0\n";
        assert!(matches!(
            parse_constants(text),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn bundled_file_parses() {
        let rows = reference_constants();
        assert_eq!(rows.len(), 6);
        assert_eq!(rows.iter().filter(|r| r.is_matchable()).count(), 4);
    }
}
