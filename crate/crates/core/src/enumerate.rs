//! Enumeration of all maximum independent sets of `B(d,3)` through orbit
//! representatives.

use std::collections::BTreeMap;

use crate::construct::{apply_op, to_loopless, Base, ConstructionTrace, OpTag};
use crate::error::{Error, Result};
use crate::group::expand_orbit;
use crate::limits::Limits;
use crate::sets::{Kind, MaxIndepSet};

/// Largest alphabet [`enumerate_all`] expands by default.
pub const DEFAULT_POPULATION_D: usize = 5;

/// One trace-built representative per orbit over `d` digits, sorted by trace.
///
/// Representatives over `d` digits are `f`, `f′` of those over `d − 1` and
/// `g`, `g′` of those over `d − 2`; no two of them share an orbit.
pub fn enumerate_orbit_reps(d: usize) -> Result<Vec<(MaxIndepSet, ConstructionTrace)>> {
    if d == 0 {
        return Err(Error::invalid("alphabet size must be at least 1"));
    }
    let mut by_d: BTreeMap<usize, Vec<(MaxIndepSet, Vec<OpTag>, Base)>> = BTreeMap::new();
    by_d.insert(1, vec![(Base::B1.set(), vec![], Base::B1)]);
    let b1 = Base::B1.set();
    by_d.insert(
        2,
        vec![
            (apply_op(OpTag::F, &b1)?, vec![OpTag::F], Base::B1),
            (apply_op(OpTag::FPrime, &b1)?, vec![OpTag::FPrime], Base::B1),
            (Base::B2.set(), vec![], Base::B2),
        ],
    );
    for n in 3..=d {
        let mut reps = Vec::new();
        for op in OpTag::ALL {
            for (set, ops, base) in &by_d[&(n - op.growth())] {
                let mut ops = ops.clone();
                ops.push(op);
                reps.push((apply_op(op, set)?, ops, *base));
            }
        }
        by_d.insert(n, reps);
        by_d.remove(&(n - 2));
    }
    let mut out: Vec<_> = by_d
        .remove(&d)
        .expect("level d was built")
        .into_iter()
        .map(|(set, ops, base)| (set, ConstructionTrace::canonical(base, ops)))
        .collect();
    out.sort_by(|x, y| x.1.cmp(&y.1));
    Ok(out)
}

/// Every maximum independent set of the given kind over `d` digits, sorted.
///
/// With loops: the union of all orbits. Loop-less: the image of that
/// population under [`to_loopless`].
pub fn enumerate_all(d: usize, kind: Kind, limits: &Limits) -> Result<Vec<MaxIndepSet>> {
    enumerate_all_bounded(d, kind, limits, DEFAULT_POPULATION_D)
}

pub fn enumerate_all_bounded(
    d: usize,
    kind: Kind,
    limits: &Limits,
    max_d: usize,
) -> Result<Vec<MaxIndepSet>> {
    if d > max_d {
        return Err(Error::Budget {
            what: "alphabet size for full enumeration",
            needed: d as u128,
            limit: max_d as u128,
        });
    }
    let mut all = Vec::new();
    for (rep, _) in enumerate_orbit_reps(d)? {
        all.extend(expand_orbit(&rep, limits)?);
    }
    if kind == Kind::Loopless {
        all = all.iter().map(to_loopless).collect::<Result<_>>()?;
    }
    all.sort();
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::stabilizer;

    #[test]
    fn orbit_rep_counts() {
        assert_eq!(enumerate_orbit_reps(1).unwrap().len(), 1);
        assert_eq!(enumerate_orbit_reps(2).unwrap().len(), 3);
        let reps = enumerate_orbit_reps(3).unwrap();
        assert_eq!(reps.len(), 8);
        let limits = Limits::default();
        let trivial = reps
            .iter()
            .filter(|(s, _)| stabilizer(s, &limits).unwrap().k() == 0)
            .count();
        assert_eq!(trivial, 6);
        assert_eq!(enumerate_orbit_reps(4).unwrap().len(), 22);
    }

    #[test]
    fn population_sizes() {
        let limits = Limits::default();
        assert_eq!(enumerate_all(2, Kind::WithLoops, &limits).unwrap().len(), 6);
        assert_eq!(
            enumerate_all(3, Kind::WithLoops, &limits).unwrap().len(),
            42
        );
        assert_eq!(enumerate_all(3, Kind::Loopless, &limits).unwrap().len(), 42);
        assert!(matches!(
            enumerate_all(6, Kind::WithLoops, &limits),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn populations_are_sorted_and_distinct() {
        let all = enumerate_all(3, Kind::Loopless, &Limits::default()).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
