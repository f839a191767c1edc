//! The extension operators `f`, `f′` (one new digit) and `g`, `g′` (two new
//! digits), their inverses, and construction traces.
//!
//! Throughout, `a` is the distinguished loop of the input set (the loop with
//! `m_a = 0`), `b` the second loop if there is one, and `L` the set of loop
//! digits. Every operator output is re-validated before it is returned.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{act_mis, transporter, Permutation};
use crate::sets::{validate_mis, CandidateSet, Kind, MaxIndepSet};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OpTag {
    F,
    FPrime,
    G,
    GPrime,
}

impl OpTag {
    pub const ALL: [OpTag; 4] = [OpTag::F, OpTag::FPrime, OpTag::G, OpTag::GPrime];

    pub fn as_str(self) -> &'static str {
        match self {
            OpTag::F => "f",
            OpTag::FPrime => "f'",
            OpTag::G => "g",
            OpTag::GPrime => "g'",
        }
    }

    /// Number of digits the operator adds.
    pub fn growth(self) -> usize {
        match self {
            OpTag::F | OpTag::FPrime => 1,
            OpTag::G | OpTag::GPrime => 2,
        }
    }
}

impl fmt::Display for OpTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OpTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f" => Ok(OpTag::F),
            "f'" => Ok(OpTag::FPrime),
            "g" => Ok(OpTag::G),
            "g'" => Ok(OpTag::GPrime),
            other => Err(Error::Malformed(format!("unknown operator {other:?}"))),
        }
    }
}

fn require_with_loops(s: &MaxIndepSet, what: &str) -> Result<(u8, Option<u8>)> {
    match (s.kind(), s.distinguished_loop()) {
        (Kind::WithLoops, Some(a)) => Ok((a, s.second_loop())),
        _ => Err(Error::invalid(format!(
            "{what} needs a maximum independent set with loops"
        ))),
    }
}

/// Words of `s` containing `a`, other than `aaa` and `aba`: the words whose
/// copies, with `a` replaced by a new digit, join the image.
fn transferable(s: &MaxIndepSet, a: u8, b: Option<u8>) -> impl Iterator<Item = &Word> {
    let aaa = Word::triple(a, a, a);
    let aba = b.map(|b| Word::triple(a, b, a));
    s.words()
        .iter()
        .filter(move |w| w.contains_digit(a) && **w != aaa && Some(*w) != aba.as_ref())
}

fn finish(words: BTreeSet<Word>, d: usize, op: OpTag) -> Result<MaxIndepSet> {
    let candidate = CandidateSet::new(d, words)
        .map_err(|e| Error::internal(format!("{op} produced a malformed set: {e}")))?;
    validate_mis(&candidate, Kind::WithLoops)
        .map_err(|e| Error::internal(format!("{op} produced an invalid set: {e}")))
}

fn apply_one_digit(s: &MaxIndepSet, op: OpTag) -> Result<MaxIndepSet> {
    let (a, b) = require_with_loops(s, op.as_str())?;
    let d = s.alphabet();
    let n = d as u8;
    let loops = s.loops();
    let non_loops: Vec<u8> = (0..n).filter(|x| !s.is_loop_digit(*x)).collect();

    let mut words = s.words().clone();
    words.extend(transferable(s, a, b).map(|w| w.replace(a, n)));
    for &x in &non_loops {
        words.insert(Word::triple(a, x, n));
        words.insert(Word::triple(n, x, a));
    }
    for &u in loops {
        for &v in loops {
            words.insert(Word::triple(u, n, v));
        }
        words.insert(match op {
            OpTag::F => Word::triple(u, n, n),
            _ => Word::triple(n, n, u),
        });
    }
    finish(words, d + 1, op)
}

fn apply_two_digits(s: &MaxIndepSet, op: OpTag) -> Result<MaxIndepSet> {
    let (a, b) = require_with_loops(s, op.as_str())?;
    let d = s.alphabet();
    let (p, q) = (d as u8, d as u8 + 1);
    let fresh = [p, q];
    let loops = s.loops();
    let non_loops: Vec<u8> = (0..d as u8).filter(|x| !s.is_loop_digit(*x)).collect();

    let mut words = s.words().clone();
    for &y in &fresh {
        words.extend(transferable(s, a, b).map(|w| w.replace(a, y)));
        for &x in &non_loops {
            words.insert(Word::triple(a, x, y));
            words.insert(Word::triple(y, x, a));
        }
        for &u in loops {
            for &v in loops {
                words.insert(Word::triple(u, y, v));
            }
        }
    }
    for (y, z) in [(p, q), (q, p)] {
        for &x in &non_loops {
            words.insert(Word::triple(y, x, z));
        }
        for &u in loops {
            words.insert(match op {
                OpTag::G => Word::triple(y, z, u),
                _ => Word::triple(u, y, z),
            });
        }
    }
    for &y in &fresh {
        for &u in loops {
            words.insert(match op {
                OpTag::G => Word::triple(u, y, y),
                _ => Word::triple(y, y, u),
            });
        }
    }
    if op == OpTag::G {
        words.insert(Word::triple(p, q, q));
        words.insert(Word::triple(q, p, p));
    } else {
        words.insert(Word::triple(q, q, p));
        words.insert(Word::triple(p, p, q));
    }
    finish(words, d + 2, op)
}

/// `f(S)` over `d + 1` digits. The new digit `d` takes the role of `a` in
/// copies of the words containing `a`, and `u d d` is added for each loop
/// `u`.
pub fn apply_f(s: &MaxIndepSet) -> Result<MaxIndepSet> {
    apply_one_digit(s, OpTag::F)
}

/// `f′(S)`: as [`apply_f`] with `d d u` in place of `u d d`.
pub fn apply_f_prime(s: &MaxIndepSet) -> Result<MaxIndepSet> {
    apply_one_digit(s, OpTag::FPrime)
}

/// `g(S)` over `d + 2` digits.
pub fn apply_g(s: &MaxIndepSet) -> Result<MaxIndepSet> {
    apply_two_digits(s, OpTag::G)
}

/// `g′(S)`: as [`apply_g`] with the loop-attached words and the two words
/// on the new digits reversed.
pub fn apply_g_prime(s: &MaxIndepSet) -> Result<MaxIndepSet> {
    apply_two_digits(s, OpTag::GPrime)
}

pub fn apply_op(op: OpTag, s: &MaxIndepSet) -> Result<MaxIndepSet> {
    match op {
        OpTag::F | OpTag::FPrime => apply_one_digit(s, op),
        OpTag::G | OpTag::GPrime => apply_two_digits(s, op),
    }
}

/// `S ∩ B(d_new, 3)`, which is again maximum when every loop digit is below
/// `d_new`.
pub fn restrict(s: &MaxIndepSet, d_new: usize) -> Result<MaxIndepSet> {
    let d = s.alphabet();
    if d_new == 0 || d_new >= d {
        return Err(Error::invalid(format!(
            "cannot restrict from {d} to {d_new} digits"
        )));
    }
    if let Some(&u) = s.loops().iter().find(|&&u| u as usize >= d_new) {
        return Err(Error::invalid(format!(
            "loop {u} does not survive restriction to {d_new} digits"
        )));
    }
    let words = s
        .words()
        .iter()
        .filter(|w| w.digits().iter().all(|&c| (c as usize) < d_new))
        .cloned()
        .collect();
    let restricted = CandidateSet::from_trusted(d_new, 3, words);
    let out = validate_mis(&restricted, s.kind())
        .map_err(|e| Error::internal(format!("restriction of {s} to {d_new} digits: {e}")))?;
    if out.loops() != s.loops() {
        return Err(Error::internal("restriction changed the loop set"));
    }
    Ok(out)
}

/// One inverse step: `set = sigma · op(previous)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecomposeStep {
    pub op: OpTag,
    pub sigma: Permutation,
    pub previous: MaxIndepSet,
}

/// Peels off the last operator of a set over `d ≥ 3` digits.
///
/// If a unique non-loop digit `x` has `m_x = l + 1`, the set comes from `f`
/// or `f′` after moving `x` to the last position; otherwise exactly two
/// digits `y < z` have `m = l + 2` and the set comes from `g` or `g′` after
/// moving `y, z` to the last two positions.
pub fn decompose_step(s: &MaxIndepSet) -> Result<DecomposeStep> {
    require_with_loops(s, "decomposition")?;
    let d = s.alphabet();
    if d < 3 {
        return Err(Error::invalid(format!(
            "decompose_step needs d >= 3, got {d}"
        )));
    }
    let l = s.loop_count();
    let non_loop_with = |target: usize| -> Vec<u8> {
        (0..d as u8)
            .filter(|&x| !s.is_loop_digit(x) && s.m_value(x) == target)
            .collect()
    };
    let last = (d - 1) as u8;

    let near = non_loop_with(l + 1);
    let (op, normalize, previous) = match near[..] {
        [x] => {
            let pi = Permutation::transposition(d, x, last);
            let t = act_mis(&pi, s)?;
            let a = t
                .distinguished_loop()
                .expect("relabelled set keeps its loops");
            let forward = t.contains_triple(a, last, last);
            let backward = t.contains_triple(last, last, a);
            let op = match (forward, backward) {
                (true, false) => OpTag::F,
                (false, true) => OpTag::FPrime,
                _ => {
                    return Err(Error::internal(format!(
                        "{s}: expected exactly one of a·x·x, x·x·a for x = {x}"
                    )))
                }
            };
            (op, pi, restrict(&t, d - 1)?)
        }
        [] => {
            let doubles = non_loop_with(l + 2);
            let [y, z] = doubles[..] else {
                return Err(Error::internal(format!(
                    "{s}: no digit with m = l+1 and {} digits with m = l+2",
                    doubles.len()
                )));
            };
            let second_last = last - 1;
            let first = Permutation::transposition(d, z, last);
            let y_now = first.apply(y);
            let pi = Permutation::transposition(d, y_now, second_last).compose(&first);
            let t = act_mis(&pi, s)?;
            let (p, q) = (second_last, last);
            let op = if t.contains_triple(p, q, q) && t.contains_triple(q, p, p) {
                OpTag::G
            } else if t.contains_triple(q, q, p) && t.contains_triple(p, p, q) {
                OpTag::GPrime
            } else {
                return Err(Error::internal(format!(
                    "{s}: neither word pair on the two new digits is present"
                )));
            };
            (op, pi, restrict(&t, d - 2)?)
        }
        _ => {
            return Err(Error::internal(format!(
                "{s}: several non-loop digits with m = l+1: {near:?}"
            )))
        }
    };

    let rebuilt = apply_op(op, &previous)?;
    let sigma = normalize.inverse();
    if act_mis(&sigma, &rebuilt)?.set() != s.set() {
        return Err(Error::internal(format!(
            "{s} is not {sigma}·{op}(previous)"
        )));
    }
    Ok(DecomposeStep {
        op,
        sigma,
        previous,
    })
}

/// Seed of a construction trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Base {
    /// `{000}` over one digit.
    B1,
    /// `{000, 010, 111}` over two digits.
    B2,
}

impl Base {
    pub fn alphabet(self) -> usize {
        match self {
            Base::B1 => 1,
            Base::B2 => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Base::B1 => "B1",
            Base::B2 => "B2",
        }
    }

    pub fn set(self) -> MaxIndepSet {
        let words = match self {
            Base::B1 => vec![Word::triple(0, 0, 0)],
            Base::B2 => vec![
                Word::triple(0, 0, 0),
                Word::triple(0, 1, 0),
                Word::triple(1, 1, 1),
            ],
        };
        let set = CandidateSet::new(self.alphabet(), words).expect("base words are in range");
        validate_mis(&set, Kind::WithLoops).expect("base sets are maximum independent sets")
    }
}

impl FromStr for Base {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B1" => Ok(Base::B1),
            "B2" => Ok(Base::B2),
            other => Err(Error::Malformed(format!("unknown base {other:?}"))),
        }
    }
}

/// A base set, operators in the order they are applied, and a final
/// relabelling. Each orbit of maximum independent sets has exactly one
/// `(base, ops)` pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConstructionTrace {
    pub base: Base,
    pub ops: Vec<OpTag>,
    pub final_perm: Permutation,
}

impl ConstructionTrace {
    /// A trace with the identity as final permutation.
    pub fn canonical(base: Base, ops: Vec<OpTag>) -> Self {
        let d = base.alphabet() + ops.iter().map(|op| op.growth()).sum::<usize>();
        ConstructionTrace {
            base,
            ops,
            final_perm: Permutation::identity(d),
        }
    }

    /// Alphabet size of the constructed set.
    pub fn alphabet(&self) -> usize {
        self.base.alphabet() + self.ops.iter().map(|op| op.growth()).sum::<usize>()
    }

    /// Same base and operators, i.e. same orbit.
    pub fn same_orbit_as(&self, other: &ConstructionTrace) -> bool {
        self.base == other.base && self.ops == other.ops
    }

    /// Stabilizer generators implied by the trace: every `g`/`g′` contributes
    /// the transposition of the two digits it introduced, `f`/`f′` contribute
    /// nothing, and the final permutation conjugates the result.
    pub fn stabilizer(&self) -> crate::group::StabilizerDescription {
        let mut n = self.base.alphabet() as u8;
        let mut pairs = Vec::new();
        for op in &self.ops {
            if matches!(op, OpTag::G | OpTag::GPrime) {
                pairs.push((n, n + 1));
            }
            n += op.growth() as u8;
        }
        let mut generators: Vec<(u8, u8)> = pairs
            .into_iter()
            .map(|(i, j)| {
                let (x, y) = (self.final_perm.apply(i), self.final_perm.apply(j));
                (x.min(y), x.max(y))
            })
            .collect();
        generators.sort_unstable();
        crate::group::StabilizerDescription {
            d: self.alphabet(),
            generators,
        }
    }
}

impl fmt::Display for ConstructionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base.as_str())?;
        for op in &self.ops {
            write!(f, " {op}")?;
        }
        write!(f, " {}", self.final_perm)
    }
}

/// Applies the operators to the base and then the final permutation.
pub fn construct(trace: &ConstructionTrace) -> Result<MaxIndepSet> {
    if trace.final_perm.len() != trace.alphabet() {
        return Err(Error::Malformed(format!(
            "trace builds a set over {} digits but its permutation has degree {}",
            trace.alphabet(),
            trace.final_perm.len()
        )));
    }
    let mut set = trace.base.set();
    for &op in &trace.ops {
        set = apply_op(op, &set)?;
    }
    act_mis(&trace.final_perm, &set)
}

/// The unique trace of the orbit of `s`, with a final permutation mapping the
/// trace's canonical set onto `s`.
pub fn decompose(s: &MaxIndepSet) -> Result<ConstructionTrace> {
    require_with_loops(s, "decomposition")?;
    let d = s.alphabet();
    let mut sigmas = Vec::new();
    let mut ops_rev = Vec::new();
    let mut current = s.clone();
    while current.alphabet() >= 3 {
        let step = decompose_step(&current)?;
        ops_rev.push(step.op);
        sigmas.push(step.sigma);
        current = step.previous;
    }

    let (base, seed_ops, seed_sigma) = match current.alphabet() {
        1 => (Base::B1, vec![], Permutation::identity(1)),
        2 => {
            let b1 = Base::B1.set();
            let candidates = [
                (Base::B1, vec![OpTag::F], apply_f(&b1)?),
                (Base::B1, vec![OpTag::FPrime], apply_f_prime(&b1)?),
                (Base::B2, vec![], Base::B2.set()),
            ];
            candidates
                .into_iter()
                .find_map(|(base, ops, rep)| transporter(&rep, &current).map(|p| (base, ops, p)))
                .ok_or_else(|| {
                    Error::internal(format!("{current} matches no orbit over two digits"))
                })?
        }
        other => {
            return Err(Error::internal(format!(
                "decomposition reached {other} digits"
            )))
        }
    };
    sigmas.push(seed_sigma);

    // The operators commute with relabelling (extended to fix new digits),
    // so the per-step permutations compose into one final permutation.
    let final_perm = sigmas.iter().fold(Permutation::identity(d), |acc, sigma| {
        acc.compose(&sigma.extend(d))
    });
    let mut ops = seed_ops;
    ops.extend(ops_rev.into_iter().rev());
    let trace = ConstructionTrace {
        base,
        ops,
        final_perm,
    };
    if construct(&trace)?.set() != s.set() {
        return Err(Error::internal(format!(
            "trace {trace} does not rebuild {s}"
        )));
    }
    Ok(trace)
}

/// The bijection onto loop-less maximum independent sets.
///
/// One loop: drop `aaa`. Two loops: drop `aaa, bbb, aba` and add `aab, bba`
/// when `a < b`, or `baa, abb` when `a > b`.
pub fn to_loopless(s: &MaxIndepSet) -> Result<MaxIndepSet> {
    let (a, b) = require_with_loops(s, "to_loopless")?;
    let mut words = s.words().clone();
    words.remove(&Word::triple(a, a, a));
    if let Some(b) = b {
        words.remove(&Word::triple(b, b, b));
        words.remove(&Word::triple(a, b, a));
        if a < b {
            words.insert(Word::triple(a, a, b));
            words.insert(Word::triple(b, b, a));
        } else {
            words.insert(Word::triple(b, a, a));
            words.insert(Word::triple(a, b, b));
        }
    }
    let candidate = CandidateSet::from_trusted(s.alphabet(), 3, words);
    validate_mis(&candidate, Kind::Loopless)
        .map_err(|e| Error::internal(format!("loop-less image of {s} is invalid: {e}")))
}

/// Inverse of [`to_loopless`].
///
/// A digit `x` with `m_x = 1` gets its loop back. Otherwise the two digits
/// `x < y` with `m = 2` become the loops: if `xxy, yyx` are present the
/// smaller digit is distinguished (add `xxx, yyy, xyx`, drop `xxy, yyx`),
/// if `yxx, xyy` are present the larger one is (add `xxx, yyy, yxy`, drop
/// `yxx, xyy`).
pub fn from_loopless(t: &MaxIndepSet) -> Result<MaxIndepSet> {
    if t.kind() != Kind::Loopless {
        return Err(Error::invalid(
            "from_loopless needs a loop-less maximum independent set",
        ));
    }
    let d = t.alphabet() as u8;
    let with_m =
        |target: usize| -> Vec<u8> { (0..d).filter(|&x| t.m_value(x) == target).collect() };
    let mut words = t.words().clone();
    let ones = with_m(1);
    match ones[..] {
        [x] => {
            words.insert(Word::triple(x, x, x));
        }
        [] => {
            let twos = with_m(2);
            let [x, y] = twos[..] else {
                return Err(Error::invalid(format!(
                    "{t}: no digit with m = 1 and {} digits with m = 2",
                    twos.len()
                )));
            };
            let (drop, distinguished_word) =
                if t.contains_triple(x, x, y) && t.contains_triple(y, y, x) {
                    (
                        [Word::triple(x, x, y), Word::triple(y, y, x)],
                        Word::triple(x, y, x),
                    )
                } else if t.contains_triple(y, x, x) && t.contains_triple(x, y, y) {
                    (
                        [Word::triple(y, x, x), Word::triple(x, y, y)],
                        Word::triple(y, x, y),
                    )
                } else {
                    return Err(Error::invalid(format!(
                        "{t}: neither {{xxy, yyx}} nor {{yxx, xyy}} present for x={x}, y={y}"
                    )));
                };
            for w in &drop {
                words.remove(w);
            }
            words.insert(Word::triple(x, x, x));
            words.insert(Word::triple(y, y, y));
            words.insert(distinguished_word);
        }
        _ => {
            return Err(Error::invalid(format!(
                "{t}: several digits with m = 1: {ones:?}"
            )));
        }
    }
    let candidate = CandidateSet::from_trusted(t.alphabet(), 3, words);
    let s = validate_mis(&candidate, Kind::WithLoops)
        .map_err(|e| Error::internal(format!("preimage of {t} is invalid: {e}")))?;
    if to_loopless(&s)?.set() != t.set() {
        return Err(Error::internal(format!(
            "preimage of {t} does not map back"
        )));
    }
    Ok(s)
}
