//! The symmetric group acting on digits, and through digits on words and
//! sets of words.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::sets::{CandidateSet, MaxIndepSet};
use crate::word::Word;

/// A bijection of `{0,…,d−1}`; position `i` holds the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d as u8).collect(),
        }
    }

    pub fn transposition(d: usize, i: u8, j: u8) -> Self {
        let mut p = Self::identity(d);
        p.images.swap(i as usize, j as usize);
        p
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen
                .get_mut(x as usize)
                .ok_or_else(|| Error::invalid(format!("image {x} out of range in {images:?}")))?;
            if *slot {
                return Err(Error::invalid(format!("image {x} repeated in {images:?}")));
            }
            *slot = true;
        }
        Ok(Permutation { images })
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.images[x as usize]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different degree"
        );
        Permutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images }
    }

    /// The same permutation on a larger alphabet, fixing the added digits.
    pub fn extend(&self, d: usize) -> Permutation {
        assert!(d >= self.len());
        let mut images = self.images.clone();
        images.extend(self.len() as u8..d as u8);
        Permutation { images }
    }

    pub fn act_word(&self, w: &Word) -> Word {
        w.map_digits(|c| self.apply(c))
    }

    /// Pairs `(i, j)`, `i < j`, swapped by this permutation, when it is a
    /// product of disjoint transpositions.
    pub fn as_transpositions(&self) -> Option<Vec<(u8, u8)>> {
        let mut pairs = Vec::new();
        for (i, &x) in self.images.iter().enumerate() {
            let i = i as u8;
            if self.apply(x) != i {
                return None;
            }
            if i < x {
                pairs.push((i, x));
            }
        }
        Some(pairs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

/// Digitwise image of a set.
pub fn act(sigma: &Permutation, s: &CandidateSet) -> Result<CandidateSet> {
    if sigma.len() != s.alphabet() {
        return Err(Error::invalid(format!(
            "permutation of degree {} applied to a set over {} digits",
            sigma.len(),
            s.alphabet()
        )));
    }
    let words = s.words().iter().map(|w| sigma.act_word(w)).collect();
    Ok(CandidateSet::from_trusted(
        s.alphabet(),
        s.diameter(),
        words,
    ))
}

/// Digitwise image of a validated set. Relabelling preserves every property
/// checked by validation, so the loop bookkeeping is carried over.
pub fn act_mis(sigma: &Permutation, s: &MaxIndepSet) -> Result<MaxIndepSet> {
    let image = act(sigma, s.set())?;
    Ok(s.relabelled(image, |x| sigma.apply(x)))
}

fn fixes(sigma: &Permutation, s: &CandidateSet) -> bool {
    s.words().iter().all(|w| s.contains(&sigma.act_word(w)))
}

/// Generators and order of a stabilizer subgroup generated by disjoint
/// transpositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerDescription {
    pub d: usize,
    /// Sorted pairs `(i, j)` with `i < j`.
    pub generators: Vec<(u8, u8)>,
}

impl StabilizerDescription {
    /// Number of generators; the group has order `2^k`.
    pub fn k(&self) -> usize {
        self.generators.len()
    }

    pub fn order(&self) -> u128 {
        1u128 << self.k()
    }

    pub fn generators_disjoint(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.generators
            .iter()
            .all(|&(i, j)| seen.insert(i) && seen.insert(j))
    }
}

impl fmt::Display for StabilizerDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("trivial group (order 1)");
        }
        let gens = self
            .generators
            .iter()
            .map(|(i, j)| format!("({i} {j})"))
            .join(" ");
        write!(f, "<{gens}> (order {})", self.order())
    }
}

/// Stabilizer of `s` by testing every one of the `d!` permutations.
///
/// The transpositions found in the stabilizer are returned as generators;
/// an error is raised if they fail to generate the whole stabilizer or are
/// not pairwise disjoint: every maximum independent set has a stabilizer of
/// that shape, so anything else means the input or this crate is broken.
pub fn stabilizer(s: &MaxIndepSet, limits: &Limits) -> Result<StabilizerDescription> {
    let d = s.alphabet();
    limits.check_brute_force(d)?;
    let mut order: u128 = 0;
    let mut generators = Vec::new();
    for images in (0..d as u8).permutations(d) {
        let sigma = Permutation { images };
        if fixes(&sigma, s.set()) {
            order += 1;
            if let Some(pairs) = sigma.as_transpositions() {
                if let [pair] = pairs[..] {
                    generators.push(pair);
                }
            }
        }
    }
    if d == 0 {
        order = 1;
    }
    generators.sort_unstable();
    let desc = StabilizerDescription { d, generators };
    if !desc.generators_disjoint() || desc.order() != order {
        return Err(Error::internal(format!(
            "stabilizer of {s} has order {order} but its transpositions are {:?}",
            desc.generators
        )));
    }
    Ok(desc)
}

/// Lexicographically least `σ` (by image sequence) with `σ·s = t`, if any.
///
/// Digits are assigned in increasing order; a partial assignment is dropped
/// as soon as an image would change the digit's `m`-value or loop role, or a
/// fully assigned word of `s` lands outside `t`.
pub fn transporter(s: &MaxIndepSet, t: &MaxIndepSet) -> Option<Permutation> {
    let d = s.alphabet();
    if d != t.alphabet() || s.kind() != t.kind() || s.len() != t.len() {
        return None;
    }
    let role = |m: &MaxIndepSet, x: u8| -> (usize, u8) {
        let loop_role = if m.distinguished_loop() == Some(x) {
            2
        } else if m.is_loop_digit(x) {
            1
        } else {
            0
        };
        (m.m_value(x), loop_role)
    };
    let s_roles: Vec<_> = (0..d as u8).map(|x| role(s, x)).collect();
    let t_roles: Vec<_> = (0..d as u8).map(|x| role(t, x)).collect();
    if s_roles.iter().sorted().ne(t_roles.iter().sorted()) {
        return None;
    }
    // Words of `s` bucketed by largest digit: they become checkable once that
    // digit is assigned.
    let mut by_max: Vec<Vec<&Word>> = vec![Vec::new(); d];
    for word in s.words() {
        if let Some(m) = word.max_digit() {
            by_max[m as usize].push(word);
        }
    }

    struct Search<'a> {
        d: usize,
        s_roles: &'a [(usize, u8)],
        t_roles: &'a [(usize, u8)],
        by_max: &'a [Vec<&'a Word>],
        target: &'a MaxIndepSet,
        images: Vec<u8>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn run(&mut self, x: usize) -> bool {
            if x == self.d {
                return true;
            }
            for y in 0..self.d {
                if self.used[y] || self.s_roles[x] != self.t_roles[y] {
                    continue;
                }
                self.images[x] = y as u8;
                let images = &self.images;
                let consistent = self.by_max[x]
                    .iter()
                    .all(|w| self.target.contains(&w.map_digits(|c| images[c as usize])));
                if consistent {
                    self.used[y] = true;
                    if self.run(x + 1) {
                        return true;
                    }
                    self.used[y] = false;
                }
            }
            false
        }
    }

    let mut search = Search {
        d,
        s_roles: &s_roles,
        t_roles: &t_roles,
        by_max: &by_max,
        target: t,
        images: vec![0; d],
        used: vec![false; d],
    };
    search.run(0).then_some(Permutation {
        images: search.images,
    })
}

/// All distinct images `σ·s`, sorted.
pub fn expand_orbit(s: &MaxIndepSet, limits: &Limits) -> Result<Vec<MaxIndepSet>> {
    let d = s.alphabet();
    limits.check_expansion(d)?;
    let mut orbit = BTreeSet::new();
    for images in (0..d as u8).permutations(d) {
        orbit.insert(act_mis(&Permutation { images }, s)?);
    }
    Ok(orbit.into_iter().collect())
}

/// Lexicographically least member of the orbit of `s`. Only meant as a
/// cross-check for small alphabets.
pub fn lex_min_representative(s: &MaxIndepSet, limits: &Limits) -> Result<MaxIndepSet> {
    let orbit = expand_orbit(s, limits)?;
    Ok(orbit.into_iter().next().expect("orbit is never empty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{validate_mis, Kind};

    fn mis(d: usize, words: &str) -> MaxIndepSet {
        validate_mis(&CandidateSet::parse(d, words), Kind::WithLoops).unwrap()
    }

    #[test]
    fn permutation_algebra() {
        let p = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let q = Permutation::transposition(3, 0, 1);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert_eq!(p.compose(&q).images(), &[2, 1, 0]);
        assert_eq!(p.extend(5).images(), &[1, 2, 0, 3, 4]);
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
        assert_eq!(q.as_transpositions(), Some(vec![(0, 1)]));
        assert_eq!(p.as_transpositions(), None);
    }

    #[test]
    fn act_examples() {
        let s = CandidateSet::parse(2, "000 010 011");
        assert_eq!(act(&Permutation::identity(2), &s).unwrap(), s);
        let swap = Permutation::transposition(2, 0, 1);
        assert_eq!(
            act(&swap, &s).unwrap(),
            CandidateSet::parse(2, "111 101 100")
        );
        let b2 = CandidateSet::parse(2, "000 010 111");
        let image = act(&swap, &b2).unwrap();
        assert_eq!(image, CandidateSet::parse(2, "000 101 111"));
        assert_ne!(image, b2);
        assert!(act(&Permutation::identity(3), &s).is_err());
    }

    #[test]
    fn act_mis_moves_loop_roles() {
        let s = mis(2, "000 010 111");
        let t = act_mis(&Permutation::transposition(2, 0, 1), &s).unwrap();
        assert_eq!(t.distinguished_loop(), Some(1));
        assert_eq!(t.second_loop(), Some(0));
        assert_eq!(t, validate_mis(t.set(), Kind::WithLoops).unwrap());
    }

    #[test]
    fn stabilizer_examples() {
        let limits = Limits::default();
        assert_eq!(stabilizer(&mis(1, "000"), &limits).unwrap().k(), 0);
        assert_eq!(stabilizer(&mis(2, "000 010 011"), &limits).unwrap().k(), 0);
        assert_eq!(stabilizer(&mis(2, "000 010 111"), &limits).unwrap().k(), 0);
        let g = mis(3, "000 010 020 011 022 120 210 122 211");
        let stab = stabilizer(&g, &limits).unwrap();
        assert_eq!(stab.generators, vec![(1, 2)]);
        assert_eq!(stab.order(), 2);
    }

    #[test]
    fn transporter_examples() {
        let s = mis(2, "000 010 011");
        let t = mis(2, "111 101 100");
        assert_eq!(transporter(&s, &s), Some(Permutation::identity(2)));
        assert_eq!(
            transporter(&s, &t),
            Some(Permutation::transposition(2, 0, 1))
        );
        assert_eq!(transporter(&s, &mis(2, "000 010 110")), None);
    }

    #[test]
    fn orbit_sizes() {
        let limits = Limits::default();
        assert_eq!(expand_orbit(&mis(1, "000"), &limits).unwrap().len(), 1);
        assert_eq!(
            expand_orbit(&mis(2, "000 010 011"), &limits).unwrap().len(),
            2
        );
        let g = mis(3, "000 010 020 011 022 120 210 122 211");
        assert_eq!(expand_orbit(&g, &limits).unwrap().len(), 3);
        let tight = Limits {
            expansion_d: 2,
            ..Limits::default()
        };
        assert!(matches!(
            expand_orbit(&g, &tight),
            Err(Error::Budget { .. })
        ));
    }
}
