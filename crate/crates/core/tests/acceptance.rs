//! Runs every acceptance criterion at full range and prints one line each.

use debruijn_mis::selftest::{run_criterion, Level, CRITERIA};
use debruijn_mis::Limits;

fn run(id: u8) {
    let result = run_criterion(id, Level::Full, &Limits::default());
    println!("{result}");
    assert!(result.passed, "{result}");
}

#[test]
fn criterion_01_counts_and_orbit_table() {
    run(1);
}

#[test]
fn criterion_02_oracle_equals_enumeration() {
    run(2);
}

#[test]
fn criterion_03_diameter_five() {
    run(3);
}

#[test]
fn criterion_04_loopless_bijection() {
    run(4);
}

#[test]
fn criterion_05_decomposition_round_trip() {
    run(5);
}

#[test]
fn criterion_06_stabilizers() {
    run(6);
}

#[test]
fn criterion_07_structural_facts() {
    run(7);
}

#[test]
fn criterion_08_orbit_disjointness() {
    run(8);
}

#[test]
fn criterion_09_comma_free() {
    run(9);
}

#[test]
fn criterion_10_generating_functions() {
    run(10);
}

#[test]
fn criterion_11_diameter_two() {
    run(11);
}

#[test]
fn every_criterion_has_a_test() {
    assert_eq!(CRITERIA.len(), 11);
    assert!(CRITERIA
        .iter()
        .enumerate()
        .all(|(i, (id, _))| *id as usize == i + 1));
}
