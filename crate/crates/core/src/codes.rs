//! Comma-free codes of word length 3.

use std::fmt;

use crate::enumerate::enumerate_all;
use crate::error::{Error, Result};
use crate::group::transporter;
use crate::limits::Limits;
use crate::sets::{find_comma_violation, find_dependence, CandidateSet, Kind, MaxIndepSet};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    LmisDerived,
    Classical,
    User,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::LmisDerived => "lmis-derived",
            Provenance::Classical => "classical",
            Provenance::User => "user",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "lmis-derived" => Some(Provenance::LmisDerived),
            "classical" => Some(Provenance::Classical),
            "user" => Some(Provenance::User),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CommaFreeCode {
    pub words: CandidateSet,
    pub provenance: Provenance,
}

impl CommaFreeCode {
    pub fn alphabet(&self) -> usize {
        self.words.alphabet()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Largest possible size of a comma-free code of length 3: `(d³−d)/3`.
pub fn max_code_size(d: usize) -> usize {
    (d * d * d - d) / 3
}

/// All words `x₁x₂x₃` with `x₁ < x₂ ≥ x₃`.
pub fn classical_code(d: usize) -> Result<CommaFreeCode> {
    if d < 2 {
        return Err(Error::invalid(format!(
            "classical code needs d >= 2, got {d}"
        )));
    }
    let n = d as u8;
    let words = (0..n)
        .flat_map(|x| (x + 1..n).flat_map(move |y| (0..=y).map(move |z| Word::triple(x, y, z))));
    let words = CandidateSet::new(d, words).expect("digits are in range");
    if let Some((x, y, inner)) = find_comma_violation(&words) {
        return Err(Error::internal(format!(
            "classical code: {inner} straddles {x}{y}"
        )));
    }
    Ok(CommaFreeCode {
        words,
        provenance: Provenance::Classical,
    })
}

/// Every loop-less maximum independent set over `d` digits, as a code.
pub fn codes_from_lmis(d: usize, limits: &Limits) -> Result<Vec<CommaFreeCode>> {
    enumerate_all(d, Kind::Loopless, limits)?
        .into_iter()
        .map(|t| {
            let words = t.into_set();
            if let Some((x, y, inner)) = find_comma_violation(&words) {
                return Err(Error::internal(format!(
                    "{words}: {inner} straddles {x}{y}"
                )));
            }
            Ok(CommaFreeCode {
                words,
                provenance: Provenance::LmisDerived,
            })
        })
        .collect()
}

/// Number of classes of loop-less maximum independent sets (hence maximum
/// comma-free codes from this construction) under relabelling of digits.
pub fn count_code_classes(d: usize, limits: &Limits) -> Result<usize> {
    let all = enumerate_all(d, Kind::Loopless, limits)?;
    let mut reps: Vec<MaxIndepSet> = Vec::new();
    for t in all {
        if !reps.iter().any(|r| transporter(r, &t).is_some()) {
            reps.push(t);
        }
    }
    Ok(reps.len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeReport {
    pub d: usize,
    pub size: usize,
    pub max_size: usize,
    pub comma_free: bool,
    /// `(x, y, w)`: `w` occurs straddling the concatenation `xy`.
    pub comma_witness: Option<(Word, Word, Word)>,
    pub maximum: bool,
    /// Independence in the unmodified graph.
    pub independent: bool,
    pub dependence_witness: Option<(Word, Word)>,
}

impl fmt::Display for CodeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "comma-free: {}", yn(self.comma_free))?;
        if let Some((x, y, w)) = &self.comma_witness {
            writeln!(f, "  {w} occurs inside {x}{y}")?;
        }
        writeln!(
            f,
            "maximum: {} ({} of {} words)",
            yn(self.maximum),
            self.size,
            self.max_size
        )?;
        write!(f, "independent: {}", yn(self.independent))?;
        if let Some((u, v)) = &self.dependence_witness {
            write!(f, "\n  edge {u} -> {v}")?;
        }
        Ok(())
    }
}

pub fn validate_code(c: &CandidateSet) -> CodeReport {
    let d = c.alphabet();
    let comma_witness = find_comma_violation(c);
    let dependence_witness = find_dependence(c, Kind::Loopless);
    let max_size = max_code_size(d);
    CodeReport {
        d,
        size: c.len(),
        max_size,
        comma_free: comma_witness.is_none(),
        comma_witness,
        maximum: c.len() == max_size,
        independent: dependence_witness.is_none(),
        dependence_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_small() {
        let c = classical_code(2).unwrap();
        assert_eq!(c.words, CandidateSet::parse(2, "010 011"));
        assert_eq!(classical_code(3).unwrap().len(), 8);
        assert!(classical_code(1).is_err());
    }

    #[test]
    fn witness_code() {
        let r = validate_code(&CandidateSet::parse(2, "100 110"));
        assert!(r.comma_free && r.maximum && !r.independent);
        let r = validate_code(&CandidateSet::parse(2, "010 101"));
        assert!(!r.comma_free);
        let r = validate_code(&classical_code(4).unwrap().words);
        assert!(r.comma_free && r.maximum);
    }

    #[test]
    fn lmis_codes_d2() {
        let codes = codes_from_lmis(2, &Limits::default()).unwrap();
        assert_eq!(codes.len(), 6);
        assert!(codes
            .iter()
            .any(|c| c.words == CandidateSet::parse(2, "001 110")));
    }
}
