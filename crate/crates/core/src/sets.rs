//! Node sets of `B(d,3)`, validation as maximum independent sets, and the
//! structural predicates used by decomposition.
//!
//! Two kinds of maximum independent set are distinguished:
//!
//! * [`Kind::WithLoops`]: maximum independent sets of `B(d,3)` with the `d`
//!   self-edges deleted. These have `(d³−d)/3 + 1` words and one or two
//!   loops `xxx`.
//! * [`Kind::Loopless`]: maximum independent sets of the unmodified graph,
//!   which cannot contain a loop. These have `(d³−d)/3` words.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::ValidationError;
use crate::graph::MAX_ALPHABET;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    WithLoops,
    Loopless,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::WithLoops => "with-loops",
            Kind::Loopless => "loop-less",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A sorted set of words over the alphabet `{0,…,d−1}`, not yet known to be
/// independent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CandidateSet {
    d: usize,
    diameter: usize,
    words: BTreeSet<Word>,
}

impl CandidateSet {
    /// A set of length-3 words.
    pub fn new(d: usize, words: impl IntoIterator<Item = Word>) -> Result<Self, ValidationError> {
        Self::with_diameter(d, 3, words)
    }

    pub fn with_diameter(
        d: usize,
        diameter: usize,
        words: impl IntoIterator<Item = Word>,
    ) -> Result<Self, ValidationError> {
        let words: BTreeSet<Word> = words.into_iter().collect();
        for word in &words {
            if word.len() != diameter {
                return Err(ValidationError::WrongLength {
                    word: word.clone(),
                    expected: diameter,
                    found: word.len(),
                });
            }
            if let Some(&digit) = word.digits().iter().find(|&&c| c as usize >= d) {
                return Err(ValidationError::DigitOutOfRange {
                    word: word.clone(),
                    digit,
                    d,
                });
            }
        }
        Ok(CandidateSet { d, diameter, words })
    }

    /// Parses whitespace-separated word literals such as `"000 010 011"`.
    /// Panics on malformed input; meant for tests and examples.
    pub fn parse(d: usize, words: &str) -> Self {
        let words = words.split_whitespace().map(crate::word::w);
        Self::new(d, words).expect("malformed candidate set literal")
    }

    pub(crate) fn from_trusted(d: usize, diameter: usize, words: BTreeSet<Word>) -> Self {
        CandidateSet { d, diameter, words }
    }

    pub fn alphabet(&self) -> usize {
        self.d
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn into_words(self) -> BTreeSet<Word> {
        self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn contains_triple(&self, x: u8, y: u8, z: u8) -> bool {
        self.words.contains(&Word::triple(x, y, z))
    }

    /// Loop digits `x` with `x…x` in the set.
    pub fn loop_digits(&self) -> Vec<u8> {
        self.words
            .iter()
            .filter(|w| w.is_loop())
            .map(|w| w.digits()[0])
            .collect()
    }
}

impl fmt::Display for CandidateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, word) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&word.label(self.d))?;
        }
        f.write_str("}")
    }
}

/// `M_x(S)`: the digits `y` such that `x·y·x` is not in `S`.
pub fn m_set(s: &CandidateSet, x: u8) -> BTreeSet<u8> {
    (0..s.d as u8)
        .filter(|&y| !s.contains_triple(x, y, x))
        .collect()
}

/// `m_x(S) = |M_x(S)|`.
pub fn m_value(s: &CandidateSet, x: u8) -> usize {
    (0..s.d as u8)
        .filter(|&y| !s.contains_triple(x, y, x))
        .count()
}

/// First edge `u → v` between members, if any. With [`Kind::WithLoops`] the
/// self-edges `x…x → x…x` do not count.
pub fn find_dependence(s: &CandidateSet, kind: Kind) -> Option<(Word, Word)> {
    for u in &s.words {
        let tail = &u.digits()[1..];
        for c in 0..s.d as u8 {
            let v = Word::new(tail.iter().copied().chain(std::iter::once(c)));
            if kind == Kind::WithLoops && &v == u {
                continue;
            }
            if s.words.contains(&v) {
                return Some((u.clone(), v));
            }
        }
    }
    None
}

pub fn is_independent(s: &CandidateSet, kind: Kind) -> bool {
    find_dependence(s, kind).is_none()
}

/// Size of a maximum independent set of `B(d,3)` of the given kind.
pub fn mis_size(d: usize, kind: Kind) -> usize {
    let base = (d * d * d - d) / 3;
    match kind {
        Kind::WithLoops => base + 1,
        Kind::Loopless => base,
    }
}

/// Smallest-member representatives of the θ-orbits of size 3 in `B(d,3)`.
pub(crate) fn three_cycle_representatives(d: usize) -> impl Iterator<Item = Word> {
    let d = d as u8;
    (0..d).flat_map(move |x| {
        (0..d).flat_map(move |y| {
            (0..d).filter_map(move |z| {
                let word = Word::triple(x, y, z);
                let r1 = word.theta();
                let r2 = r1.theta();
                (!word.is_loop() && word < r1 && word < r2).then_some(word)
            })
        })
    })
}

/// A validated maximum independent set of `B(d,3)` together with its loop
/// bookkeeping. Only obtainable through [`validate_mis`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MaxIndepSet {
    set: CandidateSet,
    kind: Kind,
    loops: Vec<u8>,
    distinguished: Option<u8>,
    second: Option<u8>,
}

impl MaxIndepSet {
    pub fn set(&self) -> &CandidateSet {
        &self.set
    }

    pub fn into_set(self) -> CandidateSet {
        self.set
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        self.set.words()
    }

    pub fn alphabet(&self) -> usize {
        self.set.d
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// `L(S)`, sorted. Empty for loop-less sets.
    pub fn loops(&self) -> &[u8] {
        &self.loops
    }

    pub fn loop_count(&self) -> usize {
        self.loops.len()
    }

    pub fn is_loop_digit(&self, x: u8) -> bool {
        self.loops.contains(&x)
    }

    /// The loop `a` with `m_a(S) = 0`.
    pub fn distinguished_loop(&self) -> Option<u8> {
        self.distinguished
    }

    pub fn second_loop(&self) -> Option<u8> {
        self.second
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.set.contains(w)
    }

    pub fn contains_triple(&self, x: u8, y: u8, z: u8) -> bool {
        self.set.contains_triple(x, y, z)
    }

    pub fn m_set(&self, x: u8) -> BTreeSet<u8> {
        m_set(&self.set, x)
    }

    pub fn m_value(&self, x: u8) -> usize {
        m_value(&self.set, x)
    }

    /// `m_x(S)` for every digit, indexed by digit.
    pub fn m_profile(&self) -> Vec<usize> {
        (0..self.alphabet() as u8)
            .map(|x| self.m_value(x))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// `image` must be the digitwise image of this set under `f`.
    pub(crate) fn relabelled(&self, image: CandidateSet, f: impl Fn(u8) -> u8) -> MaxIndepSet {
        let mut loops: Vec<u8> = self.loops.iter().map(|&x| f(x)).collect();
        loops.sort_unstable();
        MaxIndepSet {
            set: image,
            kind: self.kind,
            loops,
            distinguished: self.distinguished.map(&f),
            second: self.second.map(&f),
        }
    }
}

impl fmt::Display for MaxIndepSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.set.fmt(f)
    }
}

/// Checks every defining property from scratch and returns the enriched set.
///
/// Order of checks: word shape, independence, cardinality, loop count,
/// distinguished loop, per-cycle contribution.
pub fn validate_mis(s: &CandidateSet, kind: Kind) -> Result<MaxIndepSet, ValidationError> {
    let d = s.alphabet();
    if let Some(word) = s.words().iter().find(|w| w.len() != 3) {
        return Err(ValidationError::WrongLength {
            word: word.clone(),
            expected: 3,
            found: word.len(),
        });
    }
    if d == 0 || d > MAX_ALPHABET {
        return Err(ValidationError::WrongCardinality {
            expected: 0,
            found: s.len(),
        });
    }
    if kind == Kind::Loopless {
        if let Some(word) = s.words().iter().find(|w| w.is_loop()) {
            return Err(ValidationError::LoopInLoopless { word: word.clone() });
        }
    }
    if let Some((from, to)) = find_dependence(s, kind) {
        return Err(ValidationError::Dependent { from, to });
    }
    let expected = mis_size(d, kind);
    if s.len() != expected {
        return Err(ValidationError::WrongCardinality {
            expected,
            found: s.len(),
        });
    }

    let loops = s.loop_digits();
    let (distinguished, second) = match kind {
        Kind::Loopless => (None, None),
        Kind::WithLoops => {
            if loops.is_empty() || loops.len() > 2 {
                return Err(ValidationError::LoopCount { found: loops.len() });
            }
            let zero: Vec<u8> = loops
                .iter()
                .copied()
                .filter(|&x| m_value(s, x) == 0)
                .collect();
            let [a] = zero[..] else {
                return Err(ValidationError::MissingDistinguishedLoop);
            };
            (Some(a), loops.iter().copied().find(|&x| x != a))
        }
    };

    let deficient = match (distinguished, second) {
        (Some(a), Some(b)) => Some(crate::graph::cycle_of(&Word::triple(b, a, b))[0].clone()),
        _ => None,
    };
    for rep in three_cycle_representatives(d) {
        let r1 = rep.theta();
        let r2 = r1.theta();
        let found = [&rep, &r1, &r2].iter().filter(|w| s.contains(w)).count();
        let expected = if Some(&rep) == deficient.as_ref() {
            0
        } else {
            1
        };
        if found != expected {
            return Err(ValidationError::CycleContribution {
                representative: rep,
                expected,
                found,
            });
        }
    }

    Ok(MaxIndepSet {
        set: s.clone(),
        kind,
        loops,
        distinguished,
        second,
    })
}

/// A failed structural assertion. None of these can occur for a genuine
/// maximum independent set; a finding means the set or the code producing it
/// is wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureViolation {
    /// More than one non-loop digit has `m = l+1`.
    SeveralNearMinimal { digits: Vec<u8> },
    /// Three non-loop digits have `m = l+2`.
    ThreeDoubles { digits: Vec<u8> },
    /// No digit has `m = l+1` but the digits with `m = l+2` are not exactly
    /// two digits `x, y` with `M_x = M_y = L ∪ {x, y}`.
    MissingPair { doubles: Vec<u8> },
    /// Two non-loop digits `y, z` with `m = l+2` while `yzy` or `zyz` is in
    /// the set.
    PairWordPresent { word: Word },
    /// Three non-loop digits `x, y, z` with `M_x = M_y = L ∪ {x,y,z}` and
    /// `M_z ∈ {L ∪ {x,z}, L ∪ {x,y,z}}`.
    ForbiddenTriple { x: u8, y: u8, z: u8 },
    /// A loop `u` and a non-loop digit `x` with `uxu` missing.
    LoopFrameMissing { loop_digit: u8, digit: u8 },
}

impl fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureViolation::SeveralNearMinimal { digits } => {
                write!(f, "several non-loop digits with m = l+1: {digits:?}")
            }
            StructureViolation::ThreeDoubles { digits } => {
                write!(f, "three or more non-loop digits with m = l+2: {digits:?}")
            }
            StructureViolation::MissingPair { doubles } => {
                write!(
                    f,
                    "no digit with m = l+1 and no valid pair with m = l+2 (found {doubles:?})"
                )
            }
            StructureViolation::PairWordPresent { word } => {
                write!(f, "{word} present although both its digits have m = l+2")
            }
            StructureViolation::ForbiddenTriple { x, y, z } => {
                write!(f, "digits ({x},{y},{z}) have the forbidden M-set pattern")
            }
            StructureViolation::LoopFrameMissing { loop_digit, digit } => {
                write!(
                    f,
                    "loop {loop_digit} present but {loop_digit}{digit}{loop_digit} missing"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StructureReport {
    pub violations: Vec<StructureViolation>,
}

impl StructureReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates the structural facts about `M_x` statistics that every maximum
/// independent set satisfies (with `l = |L|`, and `l = 0` for loop-less sets):
///
/// 1. at most one non-loop digit has `m = l+1`;
/// 2. no three non-loop digits have `m = l+2`;
/// 3. if no digit has `m = l+1` and `d ≥ 3`, exactly two digits `x, y` have
///    `m = l+2`, and `M_x = M_y = L ∪ {x, y}`;
/// 4. two non-loop digits `y, z` with `m = l+2` exclude `yzy` and `zyz`;
/// 5. no triple of non-loop digits has the M-set pattern
///    `M_x = M_y = L ∪ {x,y,z}`, `M_z ∈ {L ∪ {x,z}, L ∪ {x,y,z}}`;
/// 6. every loop `u` frames every non-loop digit: `uxu ∈ S`.
pub fn check_structure(s: &MaxIndepSet) -> StructureReport {
    let d = s.alphabet() as u8;
    let l = s.loop_count();
    let loops: BTreeSet<u8> = s.loops().iter().copied().collect();
    let m_sets: Vec<BTreeSet<u8>> = (0..d).map(|x| s.m_set(x)).collect();
    let non_loop: Vec<u8> = (0..d).filter(|x| !loops.contains(x)).collect();
    let with_m = |target: usize| -> Vec<u8> {
        non_loop
            .iter()
            .copied()
            .filter(|&x| m_sets[x as usize].len() == target)
            .collect()
    };
    let near = with_m(l + 1);
    let doubles = with_m(l + 2);
    let mut violations = Vec::new();

    if near.len() > 1 {
        violations.push(StructureViolation::SeveralNearMinimal {
            digits: near.clone(),
        });
    }
    if doubles.len() >= 3 {
        violations.push(StructureViolation::ThreeDoubles {
            digits: doubles.clone(),
        });
    }
    let any_near = (0..d).any(|x| m_sets[x as usize].len() == l + 1);
    if !any_near && d >= 3 {
        let ok = match doubles[..] {
            [x, y] => {
                let mut expected = loops.clone();
                expected.insert(x);
                expected.insert(y);
                m_sets[x as usize] == expected && m_sets[y as usize] == expected
            }
            _ => false,
        };
        if !ok {
            violations.push(StructureViolation::MissingPair {
                doubles: doubles.clone(),
            });
        }
    }
    for (i, &y) in doubles.iter().enumerate() {
        for &z in &doubles[i + 1..] {
            for (p, q) in [(y, z), (z, y)] {
                if s.contains_triple(p, q, p) {
                    violations.push(StructureViolation::PairWordPresent {
                        word: Word::triple(p, q, p),
                    });
                }
            }
        }
    }
    for &x in &non_loop {
        for &y in &non_loop {
            for &z in &non_loop {
                if x == y || y == z || x == z {
                    continue;
                }
                let with = |extra: &[u8]| -> BTreeSet<u8> {
                    loops.iter().copied().chain(extra.iter().copied()).collect()
                };
                let full = with(&[x, y, z]);
                if m_sets[x as usize] == full
                    && m_sets[y as usize] == full
                    && (m_sets[z as usize] == with(&[x, z]) || m_sets[z as usize] == full)
                {
                    violations.push(StructureViolation::ForbiddenTriple { x, y, z });
                }
            }
        }
    }
    for &u in &loops {
        for &x in &non_loop {
            if !s.contains_triple(u, x, u) {
                violations.push(StructureViolation::LoopFrameMissing {
                    loop_digit: u,
                    digit: x,
                });
            }
        }
    }
    StructureReport { violations }
}

/// Comma-freeness: for all ordered pairs `(x, y)` of members, including
/// `x = y`, no word straddling the boundary of the concatenation `xy` is a
/// member.
pub fn is_comma_free(s: &CandidateSet) -> bool {
    find_comma_violation(s).is_none()
}

/// First `(x, y, straddling word)` witnessing a comma-freeness failure.
pub fn find_comma_violation(s: &CandidateSet) -> Option<(Word, Word, Word)> {
    let n = s.diameter();
    let mut concat = Vec::with_capacity(2 * n);
    for x in s.words() {
        for y in s.words() {
            concat.clear();
            concat.extend_from_slice(x.digits());
            concat.extend_from_slice(y.digits());
            for offset in 1..n {
                let window = Word::new(concat[offset..offset + n].iter().copied());
                if s.contains(&window) {
                    return Some((x.clone(), y.clone(), window));
                }
            }
        }
    }
    None
}
