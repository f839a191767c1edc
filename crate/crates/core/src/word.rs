use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

/// A node of a de Bruijn graph: a fixed-length string of digits.
///
/// The alphabet size is carried by context (the graph or set the word lives
/// in). Ordering is lexicographic on the digit sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(SmallVec<[u8; 8]>);

impl Word {
    pub fn new(digits: impl IntoIterator<Item = u8>) -> Self {
        Word(digits.into_iter().collect())
    }

    pub fn triple(x: u8, y: u8, z: u8) -> Self {
        Word::new([x, y, z])
    }

    /// The loop `x…x` of the given length.
    pub fn constant(x: u8, len: usize) -> Self {
        Word(SmallVec::from_elem(x, len))
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True for the constant words `x…x`, the fixed points of [`Word::theta`].
    pub fn is_loop(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// Left rotation by one position: `x₁x₂…x_D ↦ x₂…x_D x₁`.
    pub fn theta(&self) -> Word {
        let mut digits = self.0.clone();
        if !digits.is_empty() {
            digits.rotate_left(1);
        }
        Word(digits)
    }

    /// Replace every occurrence of `from` by `to`.
    pub fn replace(&self, from: u8, to: u8) -> Word {
        Word(
            self.0
                .iter()
                .map(|&c| if c == from { to } else { c })
                .collect(),
        )
    }

    pub fn contains_digit(&self, x: u8) -> bool {
        self.0.contains(&x)
    }

    pub fn max_digit(&self) -> Option<u8> {
        self.0.iter().copied().max()
    }

    pub fn map_digits(&self, f: impl Fn(u8) -> u8) -> Word {
        Word(self.0.iter().map(|&c| f(c)).collect())
    }

    /// Directed edge `self → other` of the unmodified de Bruijn graph:
    /// the suffix of `self` equals the prefix of `other`.
    pub fn overlaps(&self, other: &Word) -> bool {
        self.len() == other.len() && !self.is_empty() && self.0[1..] == other.0[..other.len() - 1]
    }

    /// Base-`d` integer key, most significant digit first, so the key order
    /// agrees with the lexicographic word order.
    pub fn pack(&self, d: usize) -> usize {
        self.0.iter().fold(0, |acc, &c| acc * d + c as usize)
    }

    pub fn unpack(mut key: usize, d: usize, len: usize) -> Word {
        let mut digits: SmallVec<[u8; 8]> = SmallVec::from_elem(0, len);
        for slot in digits.iter_mut().rev() {
            *slot = (key % d) as u8;
            key /= d;
        }
        Word(digits)
    }

    /// Label used in human-facing output: plain digits when every digit is a
    /// single decimal character, comma-separated otherwise.
    pub fn label(&self, d: usize) -> String {
        if d <= 10 {
            self.0.iter().map(|c| char::from(b'0' + c)).collect()
        } else {
            self.0
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl From<[u8; 3]> for Word {
    fn from(d: [u8; 3]) -> Self {
        Word::new(d)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.0.iter().any(|&c| c >= 10);
        f.write_str(&self.label(if wide { usize::MAX } else { 10 }))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse word {0:?}")]
pub struct ParseWordError(pub String);

impl FromStr for Word {
    type Err = ParseWordError;

    /// Accepts `"012"` (one decimal character per digit) or `"1,10,2"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || ParseWordError(s.to_string());
        if s.is_empty() {
            return Err(err());
        }
        if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<u8>().map_err(|_| err()))
                .collect::<Result<SmallVec<_>, _>>()
                .map(Word)
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|v| v as u8).ok_or_else(err))
                .collect::<Result<SmallVec<_>, _>>()
                .map(Word)
        }
    }
}

/// Shorthand for tests and examples: `w("010")`. Panics on malformed input.
pub fn w(s: &str) -> Word {
    s.parse().expect("malformed word literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!(w("012").digits(), &[0, 1, 2]);
        assert_eq!("1,10,2".parse::<Word>().unwrap().digits(), &[1, 10, 2]);
        assert_eq!(w("1,10,2").to_string(), "1,10,2");
        assert_eq!(w("120").to_string(), "120");
        assert!("0a1".parse::<Word>().is_err());
        assert!("".parse::<Word>().is_err());
    }

    #[test]
    fn pack_matches_lex_order() {
        let d = 3;
        let mut prev = None;
        for key in 0..27 {
            let word = Word::unpack(key, d, 3);
            assert_eq!(word.pack(d), key);
            if let Some(p) = prev {
                assert!(p < word);
            }
            prev = Some(word);
        }
    }

    #[test]
    fn replace_all_occurrences() {
        assert_eq!(w("010").replace(0, 2), w("212"));
        assert_eq!(w("111").replace(0, 2), w("111"));
    }

    #[test]
    fn overlap_rule() {
        assert!(w("012").overlaps(&w("120")));
        assert!(w("000").overlaps(&w("000")));
        assert!(w("110").overlaps(&w("100")));
        assert!(!w("100").overlaps(&w("110")));
        assert!(!w("01").overlaps(&w("012")));
    }
}
