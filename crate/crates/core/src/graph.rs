//! De Bruijn graphs `B(d, D)`, the shift map θ and its cycle partition.
//!
//! Edges are never stored: `x → y` iff the last `D−1` digits of `x` equal
//! the first `D−1` digits of `y`. The θ-orbit partition is computed once at
//! construction because enumeration walks it constantly.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::word::Word;

/// Largest supported alphabet; digits are stored as `u8`.
pub const MAX_ALPHABET: usize = 255;

/// Left rotation of a word. Applied `D` times it is the identity.
pub fn theta(w: &Word) -> Word {
    w.theta()
}

/// Edge `x → y` of the unmodified graph (self-loops on `x…x` included).
pub fn adjacent(x: &Word, y: &Word) -> bool {
    x.overlaps(y)
}

/// The θ-orbit of `w`, sorted. Its size is 1 exactly when `w` is a loop.
pub fn cycle_of(w: &Word) -> Vec<Word> {
    let mut members = BTreeSet::new();
    let mut cur = w.clone();
    while members.insert(cur.clone()) {
        cur = cur.theta();
    }
    members.into_iter().collect()
}

#[derive(Debug, Clone)]
pub struct DeBruijnGraph {
    d: usize,
    diameter: usize,
    self_loops_removed: bool,
    cycles: Vec<Vec<Word>>,
}

impl DeBruijnGraph {
    /// Builds `B(d, D)` under the default node budget.
    pub fn new(d: usize, diameter: usize, drop_self_loops: bool) -> Result<Self> {
        Self::with_limits(d, diameter, drop_self_loops, &Limits::default())
    }

    pub fn with_limits(
        d: usize,
        diameter: usize,
        drop_self_loops: bool,
        limits: &Limits,
    ) -> Result<Self> {
        if d == 0 || d > MAX_ALPHABET {
            return Err(Error::invalid(format!(
                "alphabet size must be in 1..={MAX_ALPHABET}, got {d}"
            )));
        }
        if diameter == 0 {
            return Err(Error::invalid("diameter must be at least 1"));
        }
        limits.check_nodes(node_count(d, diameter))?;
        let n = node_count(d, diameter) as usize;
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for key in 0..n {
            if seen[key] {
                continue;
            }
            let orbit = cycle_of(&Word::unpack(key, d, diameter));
            for member in &orbit {
                seen[member.pack(d)] = true;
            }
            cycles.push(orbit);
        }
        Ok(DeBruijnGraph {
            d,
            diameter,
            self_loops_removed: drop_self_loops,
            cycles,
        })
    }

    pub fn alphabet(&self) -> usize {
        self.d
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn self_loops_removed(&self) -> bool {
        self.self_loops_removed
    }

    pub fn node_count(&self) -> usize {
        node_count(self.d, self.diameter) as usize
    }

    /// Every node in lexicographic order.
    pub fn nodes(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.node_count()).map(move |k| Word::unpack(k, self.d, self.diameter))
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.diameter && w.digits().iter().all(|&c| (c as usize) < self.d)
    }

    /// The θ-orbits, each sorted, listed by smallest member.
    pub fn cycles(&self) -> &[Vec<Word>] {
        &self.cycles
    }

    pub fn has_edge(&self, x: &Word, y: &Word) -> bool {
        if self.self_loops_removed && x == y {
            return false;
        }
        adjacent(x, y)
    }

    /// Out-neighbours of `x` in lexicographic order.
    pub fn successors(&self, x: &Word) -> Vec<Word> {
        let tail = &x.digits()[1..];
        (0..self.d as u8)
            .map(|c| Word::new(tail.iter().copied().chain(std::iter::once(c))))
            .filter(|y| !(self.self_loops_removed && y == x))
            .collect()
    }

    /// All edges, sorted by source then target.
    pub fn edges(&self) -> impl Iterator<Item = (Word, Word)> + '_ {
        self.nodes()
            .flat_map(move |x| self.successors(&x).into_iter().map(move |y| (x.clone(), y)))
    }

    pub fn edge_count(&self) -> usize {
        let all = self.node_count() * self.d;
        if self.self_loops_removed {
            all - self.d
        } else {
            all
        }
    }

    /// Graphviz rendering. Highlighted nodes are filled; with `bold_theta`
    /// the edges `w → θ(w)` are drawn bold. Output is byte-stable.
    pub fn export_dot(
        &self,
        highlight: Option<&BTreeSet<Word>>,
        bold_theta: bool,
    ) -> Result<String> {
        if let Some(h) = highlight {
            if let Some(bad) = h.iter().find(|w| !self.contains(w)) {
                return Err(Error::invalid(format!(
                    "highlighted word {bad} is not a node of B({},{})",
                    self.d, self.diameter
                )));
            }
        }
        let label = |w: &Word| w.label(self.d);
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"B({},{})\" {{", self.d, self.diameter);
        let _ = writeln!(out, "  node [shape=ellipse];");
        for node in self.nodes() {
            let lit = highlight.is_some_and(|h| h.contains(&node));
            if lit {
                let _ = writeln!(
                    out,
                    "  \"{}\" [style=filled, fillcolor=gray];",
                    label(&node)
                );
            } else {
                let _ = writeln!(out, "  \"{}\";", label(&node));
            }
        }
        for (x, y) in self.edges() {
            let bold = bold_theta && x != y && y == x.theta();
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\"{};",
                label(&x),
                label(&y),
                if bold { " [style=bold]" } else { "" }
            );
        }
        out.push_str("}\n");
        Ok(out)
    }

    /// One `source target` pair per line, same order as [`Self::edges`].
    pub fn export_edge_list(&self) -> String {
        let mut out = String::new();
        for (x, y) in self.edges() {
            let _ = writeln!(out, "{} {}", x.label(self.d), y.label(self.d));
        }
        out
    }
}

fn node_count(d: usize, diameter: usize) -> u128 {
    (d as u128).saturating_pow(diameter as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&w("012")), w("120"));
        assert_eq!(theta(&w("000")), w("000"));
        assert_eq!(theta(&w("010")), w("100"));
    }

    #[test]
    fn adjacency_examples() {
        assert!(adjacent(&w("012"), &w("120")));
        assert!(adjacent(&w("110"), &w("100")));
        let g = DeBruijnGraph::new(2, 3, false).unwrap();
        assert!(g.has_edge(&w("000"), &w("000")));
        let g = DeBruijnGraph::new(2, 3, true).unwrap();
        assert!(!g.has_edge(&w("000"), &w("000")));
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(cycle_of(&w("010")), vec![w("001"), w("010"), w("100")]);
        assert_eq!(cycle_of(&w("111")), vec![w("111")]);
        assert_eq!(cycle_of(&w("101")), vec![w("011"), w("101"), w("110")]);
    }

    #[test]
    fn build_small_graphs() {
        let g = DeBruijnGraph::new(3, 3, false).unwrap();
        assert_eq!(g.node_count(), 27);
        assert_eq!(g.cycles().iter().filter(|c| c.len() == 3).count(), 8);
        assert_eq!(g.cycles().iter().filter(|c| c.len() == 1).count(), 3);

        let g = DeBruijnGraph::new(1, 3, false).unwrap();
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.cycles(), &[vec![w("000")]]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(
            DeBruijnGraph::new(0, 3, false),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            DeBruijnGraph::new(2, 0, false),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            DeBruijnGraph::new(200, 3, false),
            Err(Error::Budget { .. })
        ));
        let tight = Limits {
            nodes: 26,
            ..Limits::default()
        };
        assert!(DeBruijnGraph::with_limits(3, 3, false, &tight).is_err());
    }

    #[test]
    fn edge_counts() {
        for (d, diameter) in [(2, 3), (3, 3), (2, 5), (4, 2)] {
            let full = DeBruijnGraph::new(d, diameter, false).unwrap();
            let trimmed = DeBruijnGraph::new(d, diameter, true).unwrap();
            assert_eq!(full.edges().count(), d.pow(diameter as u32 + 1));
            assert_eq!(full.edge_count(), full.edges().count());
            assert_eq!(trimmed.edges().count(), full.edges().count() - d);
            assert_eq!(trimmed.edge_count(), trimmed.edges().count());
        }
    }

    #[test]
    fn dot_rejects_foreign_highlight() {
        let g = DeBruijnGraph::new(2, 3, false).unwrap();
        let h: BTreeSet<Word> = [w("020")].into_iter().collect();
        assert!(g.export_dot(Some(&h), false).is_err());
    }

    #[test]
    fn dot_labels_are_comma_separated_for_wide_alphabets() {
        let g = DeBruijnGraph::new(11, 1, false).unwrap();
        let dot = g.export_dot(None, false).unwrap();
        assert!(dot.contains("\"10\" -> \"10\""));
        let g = DeBruijnGraph::new(11, 2, false).unwrap();
        let dot = g.export_dot(None, false).unwrap();
        assert!(dot.contains("\"10,3\""));
    }
}
