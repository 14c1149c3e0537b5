//! Shared fixture loading for integration tests.

use std::path::PathBuf;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// Parse a `key<TAB>value` fixture file, skipping `#` comments.
pub fn load_pairs(name: &str) -> Vec<(String, f64)> {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture file");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut it = l.split('\t');
            let k = it.next().expect("fixture key").to_string();
            let v = it.next().expect("fixture value").parse().expect("fixture f64");
            (k, v)
        })
        .collect()
}

/// Fixture rows keyed by f64 (heights or indices).
pub fn load_table(name: &str) -> Vec<(f64, f64)> {
    load_pairs(name)
        .into_iter()
        .map(|(k, v)| (k.parse().expect("numeric fixture key"), v))
        .collect()
}

/// The first 100 zero ordinates from the oracle.
pub fn oracle_zeros() -> Vec<f64> {
    load_table("zeros.tsv").into_iter().map(|(_, g)| g).collect()
}
