//! Whole-population checks over small alphabets.

use std::collections::BTreeSet;

use debruijn_mis::codes::{codes_from_lmis, count_code_classes};
use debruijn_mis::count::count_mis;
use debruijn_mis::enumerate::{enumerate_all, enumerate_orbit_reps};
use debruijn_mis::graph::DeBruijnGraph;
use debruijn_mis::group::{expand_orbit, stabilizer};
use debruijn_mis::oracle::{brute_force_count, oracle_enumerate};
use debruijn_mis::sets::{m_value, mis_size, validate_mis};
use debruijn_mis::{decompose_step, Kind, Limits, OpTag};
use num_bigint::BigUint;

#[test]
fn cycle_partition_for_small_alphabets() {
    for d in 1..=6usize {
        let g = DeBruijnGraph::new(d, 3, false).unwrap();
        let sizes: Vec<usize> = g.cycles().iter().map(|c| c.len()).collect();
        assert_eq!(
            sizes.iter().filter(|&&n| n == 3).count(),
            (d * d * d - d) / 3
        );
        assert_eq!(sizes.iter().filter(|&&n| n == 1).count(), d);
        let covered: BTreeSet<_> = g.cycles().iter().flatten().cloned().collect();
        assert_eq!(covered.len(), d * d * d);
        assert_eq!(g.edge_count(), d.pow(4));
        let dropped = DeBruijnGraph::new(d, 3, true).unwrap();
        assert_eq!(dropped.edge_count(), d.pow(4) - d);
    }
    let g = DeBruijnGraph::new(2, 5, false).unwrap();
    let mut sizes: Vec<usize> = g.cycles().iter().map(|c| c.len()).collect();
    sizes.sort();
    assert_eq!(sizes, [1, 1, 5, 5, 5, 5, 5, 5]);
}

#[test]
fn oracle_sets_have_the_expected_size() {
    let limits = Limits::default();
    for d in 1..=4 {
        for kind in [Kind::WithLoops, Kind::Loopless] {
            let sets = oracle_enumerate(d, 3, kind, &limits).unwrap();
            assert!(sets.iter().all(|s| s.len() == mis_size(d, kind)));
            assert!(sets.iter().all(|s| validate_mis(s, kind).is_ok()));
        }
    }
}

#[test]
fn oracle_matches_plain_brute_force() {
    let limits = Limits::default();
    for (d, diameter) in [(2, 3), (3, 3), (4, 2), (2, 5), (3, 2)] {
        for kind in [Kind::WithLoops, Kind::Loopless] {
            let sets = oracle_enumerate(d, diameter, kind, &limits).unwrap();
            let (size, count) = brute_force_count(d, diameter, kind).unwrap();
            assert_eq!(
                (sets[0].len(), sets.len() as u64),
                (size, count),
                "B({d},{diameter}) {kind:?}"
            );
        }
    }
}

#[test]
fn five_digit_population_matches_count() {
    let limits = Limits::default();
    let table = count_mis(5).unwrap();
    let all = enumerate_all(5, Kind::WithLoops, &limits).unwrap();
    assert_eq!(BigUint::from(all.len()), *table.a(5));
    let distinct: BTreeSet<_> = all.iter().collect();
    assert_eq!(distinct.len(), all.len());
}

#[test]
fn orbit_size_is_index_of_stabilizer() {
    let limits = Limits::default();
    for d in 1..=5usize {
        let fact: u128 = (1..=d as u128).product();
        for (rep, _) in enumerate_orbit_reps(d).unwrap() {
            let orbit = expand_orbit(&rep, &limits).unwrap().len() as u128;
            assert_eq!(orbit * stabilizer(&rep, &limits).unwrap().order(), fact);
        }
    }
}

#[test]
fn one_step_decomposition_reduces_the_alphabet() {
    let limits = Limits::default();
    for d in 3..=4 {
        for s in enumerate_all(d, Kind::WithLoops, &limits).unwrap() {
            let step = decompose_step(&s).unwrap();
            let growth = step.op.growth();
            assert_eq!(step.previous.alphabet() + growth, d);
            let a = s.distinguished_loop().unwrap();
            assert_eq!(m_value(s.set(), a), 0);
            if matches!(step.op, OpTag::F | OpTag::FPrime) {
                assert_eq!(growth, 1);
            }
        }
    }
}

#[test]
fn code_classes_against_lower_bound() {
    let limits = Limits::default();
    let classes: Vec<usize> = (2..=4)
        .map(|d| count_code_classes(d, &limits).unwrap())
        .collect();
    assert_eq!(classes, [4, 10, 28]);
    for (d, n) in (2..=4).zip(&classes) {
        assert!(*n >= 1 << d);
    }
    for d in 1..=4 {
        let table = count_mis(4).unwrap();
        let codes = codes_from_lmis(d, &limits).unwrap();
        assert_eq!(BigUint::from(codes.len()), *table.a(d));
    }
}
