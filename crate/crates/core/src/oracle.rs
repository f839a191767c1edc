//! Exhaustive enumeration of maximum independent sets of `B(d, D)` for
//! small graphs.
//!
//! This search knows nothing about the extension operators: it branches over
//! the θ-orbits in order, choosing for each orbit one of its independent
//! subsets (or nothing), and keeps every set of the largest size seen. A
//! branch is cut when even taking the best still-available subset of every
//! remaining orbit cannot reach the current maximum.

use crate::error::{Error, Result};
use crate::graph::DeBruijnGraph;
use crate::limits::Limits;
use crate::sets::{CandidateSet, Kind};
use crate::word::Word;

/// Largest graph the oracle accepts.
pub const MAX_ORACLE_NODES: u128 = 10_000;

struct Orbit {
    /// Independent subsets of the orbit's members, largest first.
    options: Vec<Vec<usize>>,
}

struct Search<'a> {
    orbits: &'a [Orbit],
    neighbours: &'a [Vec<usize>],
    blocked: Vec<u32>,
    chosen: Vec<usize>,
    best: usize,
    found: Vec<Vec<usize>>,
    visited: u64,
    budget: u64,
}

impl Search<'_> {
    fn free(&self, option: &[usize]) -> bool {
        option.iter().all(|&v| self.blocked[v] == 0)
    }

    fn bound(&self, from: usize) -> usize {
        self.orbits[from..]
            .iter()
            .map(|o| {
                o.options
                    .iter()
                    .find(|opt| self.free(opt))
                    .map_or(0, |opt| opt.len())
            })
            .sum()
    }

    fn run(&mut self, i: usize) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::Budget {
                what: "oracle search nodes",
                needed: self.visited as u128,
                limit: self.budget as u128,
            });
        }
        if i == self.orbits.len() {
            let size = self.chosen.len();
            if size > self.best {
                self.best = size;
                self.found.clear();
            }
            if size == self.best {
                let mut set = self.chosen.clone();
                set.sort_unstable();
                self.found.push(set);
            }
            return Ok(());
        }
        if self.chosen.len() + self.bound(i) < self.best {
            return Ok(());
        }
        let orbits = self.orbits;
        for option in &orbits[i].options {
            if !self.free(option) {
                continue;
            }
            for &v in option {
                self.chosen.push(v);
                for &u in &self.neighbours[v] {
                    self.blocked[u] += 1;
                }
            }
            let result = self.run(i + 1);
            for &v in option.iter().rev() {
                self.chosen.pop();
                for &u in &self.neighbours[v] {
                    self.blocked[u] -= 1;
                }
            }
            result?;
        }
        self.run(i + 1)
    }
}

/// All maximum independent sets of `B(d, D)`, sorted.
///
/// [`Kind::WithLoops`] searches the graph with its self-edges deleted;
/// [`Kind::Loopless`] searches the unmodified graph, where loops can never
/// be chosen.
pub fn oracle_enumerate(
    d: usize,
    diameter: usize,
    kind: Kind,
    limits: &Limits,
) -> Result<Vec<CandidateSet>> {
    let nodes = (d as u128).saturating_pow(diameter as u32);
    if nodes > MAX_ORACLE_NODES {
        return Err(Error::Budget {
            what: "oracle graph nodes",
            needed: nodes,
            limit: MAX_ORACLE_NODES,
        });
    }
    let graph = DeBruijnGraph::with_limits(d, diameter, kind == Kind::WithLoops, limits)?;
    let n = graph.node_count();
    let width = n / d;

    // neighbours[v]: every u with u → v or v → u, v itself excluded.
    let neighbours: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut adj: Vec<usize> = (0..d)
                .map(|c| (v % width) * d + c)
                .chain((0..d).map(|c| c * width + v / d))
                .filter(|&u| u != v)
                .collect();
            adj.sort_unstable();
            adj.dedup();
            adj
        })
        .collect();
    let self_adjacent = |v: usize| kind == Kind::Loopless && Word::unpack(v, d, diameter).is_loop();

    let orbits: Vec<Orbit> = graph
        .cycles()
        .iter()
        .map(|cycle| {
            let members: Vec<usize> = cycle
                .iter()
                .map(|w| w.pack(d))
                .filter(|&v| !self_adjacent(v))
                .collect();
            let mut options: Vec<Vec<usize>> = (1u32..(1 << members.len()))
                .map(|mask| {
                    members
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &v)| v)
                        .collect::<Vec<_>>()
                })
                .filter(|opt| {
                    opt.iter()
                        .all(|v| opt.iter().all(|u| !neighbours[*v].contains(u)))
                })
                .collect();
            options.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
            Orbit { options }
        })
        .collect();

    let mut search = Search {
        orbits: &orbits,
        neighbours: &neighbours,
        blocked: vec![0; n],
        chosen: Vec::new(),
        best: 0,
        found: Vec::new(),
        visited: 0,
        budget: limits.search,
    };
    search.run(0)?;

    let mut sets: Vec<CandidateSet> = search
        .found
        .into_iter()
        .map(|nodes| {
            let words = nodes
                .into_iter()
                .map(|v| Word::unpack(v, d, diameter))
                .collect();
            CandidateSet::from_trusted(d, diameter, words)
        })
        .collect();
    sets.sort();
    sets.dedup();
    Ok(sets)
}

/// Size and number of maximum independent sets of `B(d, D)` by plain
/// include/exclude branching over nodes, for graphs with at most 64 nodes.
///
/// Shares nothing with [`oracle_enumerate`] beyond the adjacency rule.
pub fn brute_force_count(d: usize, diameter: usize, kind: Kind) -> Result<(usize, u64)> {
    let nodes = (d as u128).saturating_pow(diameter as u32);
    if nodes > 64 {
        return Err(Error::Budget {
            what: "brute-force graph nodes",
            needed: nodes,
            limit: 64,
        });
    }
    let words: Vec<Word> = (0..nodes as usize)
        .map(|v| Word::unpack(v, d, diameter))
        .collect();
    let mut adj = vec![0u64; words.len()];
    let mut forbidden = 0u64;
    for (i, x) in words.iter().enumerate() {
        for (j, y) in words.iter().enumerate() {
            if x.digits()[1..] != y.digits()[..diameter - 1] {
                continue;
            }
            if i == j {
                if kind == Kind::Loopless {
                    forbidden |= 1 << i;
                }
            } else {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }

    fn go(i: usize, size: usize, blocked: u64, adj: &[u64], best: &mut (usize, u64)) {
        if size + (adj.len() - i) < best.0 {
            return;
        }
        if i == adj.len() {
            if size > best.0 {
                *best = (size, 0);
            }
            best.1 += 1;
            return;
        }
        if blocked & (1 << i) == 0 {
            go(i + 1, size + 1, blocked | adj[i], adj, best);
        }
        go(i + 1, size, blocked, adj, best);
    }

    let mut best = (0, 0);
    go(0, 0, forbidden, &adj, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_graphs() {
        let limits = Limits::default();
        let one = oracle_enumerate(1, 3, Kind::WithLoops, &limits).unwrap();
        assert_eq!(one, vec![CandidateSet::parse(1, "000")]);
        let none = oracle_enumerate(1, 3, Kind::Loopless, &limits).unwrap();
        assert_eq!(none, vec![CandidateSet::parse(1, "")]);
        assert_eq!(
            oracle_enumerate(2, 3, Kind::WithLoops, &limits)
                .unwrap()
                .len(),
            6
        );
    }

    #[test]
    fn brute_force_agrees_on_small_graphs() {
        let limits = Limits::default();
        for (d, diameter) in [(2, 3), (3, 2), (2, 4)] {
            for kind in [Kind::WithLoops, Kind::Loopless] {
                let sets = oracle_enumerate(d, diameter, kind, &limits).unwrap();
                let (size, count) = brute_force_count(d, diameter, kind).unwrap();
                assert_eq!(count as usize, sets.len());
                assert_eq!(size, sets[0].len());
            }
        }
        assert!(brute_force_count(3, 4, Kind::WithLoops).is_err());
    }

    #[test]
    fn rejects_large_graphs() {
        let err = oracle_enumerate(22, 3, Kind::WithLoops, &Limits::default()).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
        let tight = Limits {
            search: 10,
            ..Limits::default()
        };
        assert!(matches!(
            oracle_enumerate(3, 3, Kind::WithLoops, &tight),
            Err(Error::Budget { .. })
        ));
    }
}
