//! Zero tables against the oracle fixtures, plus ingestion and persistence.

mod common;

use common::oracle_zeros;
use gramlaw::zeros::{ingest_table, load_table, save_table, verify_count, Source, ZeroTable};
use gramlaw::Error;
use std::io::Write;

#[test]
fn computed_table_matches_first_100_oracle_zeros() {
    let table = ZeroTable::compute_through_index(100).unwrap();
    for (i, want) in oracle_zeros().iter().enumerate() {
        let n = (i + 1) as u64;
        let got = table.gamma(n).unwrap();
        assert!(
            (got - want).abs() < 1e-9 * want,
            "gamma_{n} = {got}, oracle {want}"
        );
    }
}

#[test]
fn ingest_fixture_zeros() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeros.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# first three ordinates").unwrap();
    for g in &oracle_zeros()[..3] {
        writeln!(f, "{:.12}", g).unwrap();
    }
    drop(f);

    let table = ingest_table(&path, 0.0, 1).unwrap();
    assert!(table.is_certified());
    assert_eq!(table.source(), Source::Ingested);
    assert_eq!(table.index_count(), 3);
    assert!((table.gamma(1).unwrap() - 14.1347251417).abs() < 1e-6);

    // agreement with a computed table within the coarser precision
    let computed = ZeroTable::compute_through_index(3).unwrap();
    let tol = table.precision().max(computed.precision());
    for n in 1..=3 {
        assert!((table.gamma(n).unwrap() - computed.gamma(n).unwrap()).abs() < tol);
    }
}

#[test]
fn ingest_with_offset() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rel.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    for g in &oracle_zeros()[..3] {
        writeln!(f, "{:.12}", g - 10.0).unwrap();
    }
    drop(f);
    let table = ingest_table(&path, 10.0, 1).unwrap();
    assert!(table.is_certified());
    assert!((table.gamma(2).unwrap() - 21.0220396388).abs() < 1e-6);
}

#[test]
fn ingest_empty_file_is_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.txt");
    std::fs::write(&path, "# nothing here\n\n").unwrap();
    match ingest_table(&path, 0.0, 1) {
        Err(Error::EmptyInput) => {}
        other => panic!("expected EmptyInput, got {other:?}"),
    }
}

#[test]
fn ingest_out_of_order_is_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "14.134725\n25.010858\n21.022040\n").unwrap();
    match ingest_table(&path, 0.0, 1) {
        Err(Error::NonMonotone { line }) => assert_eq!(line, 3),
        other => panic!("expected NonMonotone, got {other:?}"),
    }
}

#[test]
fn ingest_garbage_line_reports_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("garbage.txt");
    std::fs::write(&path, "14.134725\nnot-a-number\n").unwrap();
    match ingest_table(&path, 0.0, 1) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("expected Parse, got {other:?}"),
    }
}

#[test]
fn ingest_misindexed_fails_certification() {
    // claiming the three first zeros start at index 2 must be caught
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("shifted.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    for g in &oracle_zeros()[..3] {
        writeln!(f, "{:.12}", g).unwrap();
    }
    drop(f);
    match ingest_table(&path, 0.0, 2) {
        Err(Error::Certification { .. }) => {}
        other => panic!("expected Certification, got {other:?}"),
    }
}

#[test]
fn save_load_roundtrip_on_disk() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.tsv");
    let mut table = ZeroTable::compute_through_index(20).unwrap();
    save_table(&table, &path).unwrap();
    let mut back = load_table(&path).unwrap();
    assert_eq!(back.zeros(), table.zeros());
    assert!(back.is_certified());
    // both tables still certify at the same height
    assert_eq!(
        verify_count(&mut table, 50.0).unwrap(),
        verify_count(&mut back, 50.0).unwrap()
    );
}

#[test]
fn ingested_partial_range_certifies() {
    // a table that does not start at index 1: zeros 21..=30 from the oracle
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mid.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    for g in &oracle_zeros()[20..30] {
        writeln!(f, "{:.12}", g).unwrap();
    }
    drop(f);
    let table = ingest_table(&path, 0.0, 21).unwrap();
    assert!(table.is_certified());
    assert_eq!(table.first_index(), 21);
    assert_eq!(table.last_index(), 30);
    // global count semantics at the top of the table
    assert_eq!(table.count_upto(table.max_height()).unwrap(), 30);
}
