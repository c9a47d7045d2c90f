#![allow(dead_code)]

use std::path::PathBuf;

use cyclic_alpha::bignum::{BigReal, NumericContext};

pub fn ctx(d: u32) -> NumericContext {
    NumericContext::new(d).unwrap()
}

pub fn r(s: &str) -> BigReal {
    s.parse().unwrap()
}

/// Compares `actual` with a frozen file under tests/golden; UPDATE_GOLDEN=1 rewrites it.
pub fn check_golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let frozen = std::fs::read_to_string(&path).unwrap_or_else(|e| {
        panic!(
            "{}: {e} (run with UPDATE_GOLDEN=1 to create)",
            path.display()
        )
    });
    if frozen != actual {
        let line = frozen
            .lines()
            .zip(actual.lines())
            .position(|(a, b)| a != b)
            .map_or_else(|| "line count".to_string(), |i| format!("line {}", i + 1));
        panic!(
            "{} differs from the current output at {line}",
            path.display()
        );
    }
}
