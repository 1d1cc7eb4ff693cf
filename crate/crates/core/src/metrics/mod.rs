//! Reference-based corpus metrics: BLEU and chrF++.
//!
//! Both metrics accumulate per-segment sufficient statistics that add up
//! into corpus statistics, so segments can be scored in any order or in
//! parallel and merged afterwards.

mod bleu;
mod chrf;
mod output;
mod tokenize;

use serde::Serialize;

use crate::corpus::{Language, ParsedSentence};

pub use bleu::{bleu, BleuDetails, BleuStats, MAX_NGRAM_ORDER};
pub use chrf::{chrf_pp, ChrfConfig, ChrfDetails, ChrfStats};
pub use output::{parse_system_outputs, score_subset, score_segments, SystemOutputs};
pub use tokenize::{tokenize_en_simple, tokenize_zh_char, Tokenizer};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MetricError {
    #[error("hypothesis/reference count mismatch: {hypotheses} vs {references}")]
    LengthMismatch { hypotheses: usize, references: usize },
    #[error("empty reference corpus")]
    EmptyReferences,
    #[error("pretokenized words {words:?} do not reproduce text {text:?}")]
    InvalidPretokenization { text: String, words: String },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("no system output for pair(s): {}", .0.join(", "))]
    MissingOutputs(Vec<String>),
}

/// One hypothesis or reference string, optionally with a word segmentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub text: String,
    pretokenized: Option<Vec<String>>,
}

impl Segment {
    pub fn new(text: impl Into<String>) -> Self {
        Segment { text: text.into(), pretokenized: None }
    }

    /// The words must reproduce `text` once whitespace is removed from both.
    pub fn with_words(text: impl Into<String>, words: Vec<String>) -> Result<Self, MetricError> {
        let text = text.into();
        let squash = |s: &str| s.chars().filter(|c| !c.is_whitespace()).collect::<String>();
        if squash(&text) != squash(&words.concat()) || words.iter().any(|w| w.is_empty() || w.contains(char::is_whitespace)) {
            return Err(MetricError::InvalidPretokenization { text, words: words.join(" ") });
        }
        Ok(Segment { text, pretokenized: Some(words) })
    }

    /// Reference segment from a parsed sentence: its surface text with the
    /// token forms as words.
    pub fn from_sentence(s: &ParsedSentence) -> Self {
        let words: Vec<String> = s.tokens().iter().map(|t| t.form.clone()).filter(|f| !f.is_empty()).collect();
        Segment::with_words(s.surface(), words.clone()).unwrap_or_else(|_| {
            let sep = if s.language() == Language::Zh { "" } else { " " };
            Segment { text: words.join(sep), pretokenized: Some(words) }
        })
    }

    pub fn pretokenized(&self) -> Option<&[String]> {
        self.pretokenized.as_deref()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Metric {
    #[serde(rename = "BLEU")]
    Bleu,
    #[serde(rename = "chrF++")]
    ChrfPp,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum MetricDetails {
    Bleu(BleuDetails),
    Chrf(ChrfDetails),
}

/// A corpus score on the 0–100 scale.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricScore {
    pub metric: Metric,
    pub value: f64,
    pub details: MetricDetails,
}

pub(crate) fn check_lengths(hyps: &[Segment], refs: &[Segment]) -> Result<(), MetricError> {
    if hyps.len() != refs.len() {
        return Err(MetricError::LengthMismatch { hypotheses: hyps.len(), references: refs.len() });
    }
    if refs.is_empty() {
        return Err(MetricError::EmptyReferences);
    }
    Ok(())
}
