//! Reading and writing sets and traces.
//!
//! Two formats are accepted. JSON documents look like
//!
//! ```json
//! {"d":3,"D":3,"kind":"with-loops","words":[[0,0,0],[0,1,0]],"trace":{"base":"B1","ops":["f","g"],"perm":[0,1,2]}}
//! ```
//!
//! and are always written compactly with a fixed key order and a trailing
//! newline. The compact text format has one word per line, written as its
//! digits (`010`), an optional `# d=3 kind=with-loops D=3` header, and `#`
//! comments; it is only available for `d ≤ 10`.

use serde::{Deserialize, Serialize};

use crate::construct::{Base, ConstructionTrace, OpTag};
use crate::error::{Error, Result};
use crate::group::Permutation;
use crate::sets::{validate_mis, CandidateSet, Kind, MaxIndepSet};
use crate::word::Word;

/// Largest alphabet the compact text format can express.
pub const COMPACT_MAX_D: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocKind {
    WithLoops,
    Loopless,
    Code,
}

impl DocKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DocKind::WithLoops => "with-loops",
            DocKind::Loopless => "loop-less",
            DocKind::Code => "code",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "with-loops" => Ok(DocKind::WithLoops),
            "loop-less" => Ok(DocKind::Loopless),
            "code" => Ok(DocKind::Code),
            other => Err(Error::Malformed(format!(
                "unknown kind {other:?} (expected with-loops, loop-less or code)"
            ))),
        }
    }

    /// The independent-set kind, if this is not a code.
    pub fn set_kind(self) -> Option<Kind> {
        match self {
            DocKind::WithLoops => Some(Kind::WithLoops),
            DocKind::Loopless => Some(Kind::Loopless),
            DocKind::Code => None,
        }
    }
}

impl From<Kind> for DocKind {
    fn from(kind: Kind) -> Self {
        match kind {
            Kind::WithLoops => DocKind::WithLoops,
            Kind::Loopless => DocKind::Loopless,
        }
    }
}

fn default_diameter() -> usize {
    3
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub base: String,
    pub ops: Vec<String>,
    pub perm: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetDocument {
    pub d: usize,
    #[serde(rename = "D", default = "default_diameter")]
    pub diameter: usize,
    pub kind: String,
    pub words: Vec<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

/// A parsed document plus any non-fatal remarks about its input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub doc: SetDocument,
    pub warnings: Vec<String>,
}

impl TraceDocument {
    pub fn from_trace(t: &ConstructionTrace) -> Self {
        TraceDocument {
            base: t.base.as_str().to_string(),
            ops: t.ops.iter().map(|op| op.as_str().to_string()).collect(),
            perm: t.final_perm.images().to_vec(),
        }
    }

    pub fn to_trace(&self) -> Result<ConstructionTrace> {
        let base: Base = self
            .base
            .parse()
            .map_err(|_| Error::Malformed(format!("unknown base {:?}", self.base)))?;
        let ops = self
            .ops
            .iter()
            .map(|s| {
                s.parse::<OpTag>()
                    .map_err(|_| Error::Malformed(format!("unknown operator {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let final_perm = Permutation::from_images(self.perm.clone())
            .map_err(|e| Error::Malformed(format!("trace permutation: {e}")))?;
        Ok(ConstructionTrace {
            base,
            ops,
            final_perm,
        })
    }
}

impl SetDocument {
    pub fn from_set(s: &CandidateSet, kind: DocKind) -> Self {
        SetDocument {
            d: s.alphabet(),
            diameter: s.diameter(),
            kind: kind.as_str().to_string(),
            words: s.words().iter().map(|w| w.digits().to_vec()).collect(),
            trace: None,
            provenance: None,
        }
    }

    pub fn from_mis(s: &MaxIndepSet, trace: Option<&ConstructionTrace>) -> Self {
        let mut doc = Self::from_set(s.set(), s.kind().into());
        doc.trace = trace.map(TraceDocument::from_trace);
        doc
    }

    pub fn doc_kind(&self) -> Result<DocKind> {
        DocKind::parse(&self.kind)
    }

    pub fn candidate_set(&self) -> Result<CandidateSet> {
        let words = self.words.iter().map(|w| Word::new(w.iter().copied()));
        Ok(CandidateSet::with_diameter(self.d, self.diameter, words)?)
    }

    /// Validates the document as a maximum independent set of its kind.
    pub fn to_mis(&self) -> Result<MaxIndepSet> {
        let kind = self.doc_kind()?.set_kind().ok_or_else(|| {
            Error::invalid("document holds a code, not a maximum independent set")
        })?;
        if self.diameter != 3 {
            return Err(Error::invalid(format!(
                "maximum independent sets are handled for D = 3 only, got D = {}",
                self.diameter
            )));
        }
        Ok(validate_mis(&self.candidate_set()?, kind)?)
    }

    pub fn construction_trace(&self) -> Result<Option<ConstructionTrace>> {
        self.trace.as_ref().map(TraceDocument::to_trace).transpose()
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string(self).expect("documents always serialize");
        out.push('\n');
        out
    }

    pub fn to_compact(&self) -> Result<String> {
        if self.d > COMPACT_MAX_D {
            return Err(Error::invalid(format!(
                "compact format needs d <= {COMPACT_MAX_D}, got {}",
                self.d
            )));
        }
        let mut out = format!("# d={} kind={} D={}\n", self.d, self.kind, self.diameter);
        for w in &self.words {
            out.extend(w.iter().map(|&c| char::from(b'0' + c)));
            out.push('\n');
        }
        Ok(out)
    }
}

/// Parses JSON (if the first non-blank character is `{`) or compact text.
pub fn parse_document(text: &str) -> Result<Parsed> {
    let mut parsed = if text.trim_start().starts_with('{') {
        let doc: SetDocument =
            serde_json::from_str(text).map_err(|e| Error::Malformed(format!("JSON: {e}")))?;
        Parsed {
            doc,
            warnings: Vec::new(),
        }
    } else {
        parse_compact(text)?
    };
    parsed.doc.doc_kind()?;
    let before = parsed.doc.words.clone();
    parsed.doc.words.sort();
    parsed.doc.words.dedup();
    if parsed.doc.words.len() != before.len() {
        parsed.warnings.push("duplicate words removed".to_string());
    } else if parsed.doc.words != before {
        parsed
            .warnings
            .push("words were not sorted; sorted on input".to_string());
    }
    Ok(parsed)
}

fn parse_compact(text: &str) -> Result<Parsed> {
    let mut d = None;
    let mut diameter = None;
    let mut kind = None;
    let mut words = Vec::new();
    let mut warnings = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(comment) = line.strip_prefix('#') {
            for field in comment.split_whitespace() {
                let Some((key, value)) = field.split_once('=') else {
                    continue;
                };
                let number = || {
                    value
                        .parse::<usize>()
                        .map_err(|_| Error::Malformed(format!("line {}: bad {key}={value}", n + 1)))
                };
                match key {
                    "d" => d = Some(number()?),
                    "D" => diameter = Some(number()?),
                    "kind" => kind = Some(value.to_string()),
                    _ => {}
                }
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let digits = line
            .chars()
            .map(|c| c.to_digit(10).map(|x| x as u8))
            .collect::<Option<Vec<u8>>>()
            .ok_or_else(|| Error::Malformed(format!("line {}: {line:?} is not a word", n + 1)))?;
        words.push(digits);
    }
    let d = match d {
        Some(d) => d,
        None => {
            let inferred = words
                .iter()
                .flatten()
                .copied()
                .max()
                .map_or(1, |m| m as usize + 1);
            warnings.push(format!("no d in header; assuming d={inferred}"));
            inferred
        }
    };
    if d > COMPACT_MAX_D {
        return Err(Error::Malformed(format!(
            "compact format needs d <= {COMPACT_MAX_D}, got {d}; use JSON"
        )));
    }
    Ok(Parsed {
        doc: SetDocument {
            d,
            diameter: diameter.unwrap_or(3),
            kind: kind.unwrap_or_else(|| DocKind::WithLoops.as_str().to_string()),
            words,
            trace: None,
            provenance: None,
        },
        warnings,
    })
}
