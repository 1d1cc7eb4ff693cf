//! System-output files and subset-level scoring.

use std::collections::HashMap;

use super::{bleu, chrf_pp, ChrfConfig, MetricError, MetricScore, Segment, Tokenizer};
use crate::corpus::{Language, SentencePair};
use crate::text::{strip_bom, tsv_rows};

/// Translations keyed by pair id, in file order.
#[derive(Debug, Clone, Default)]
pub struct SystemOutputs {
    order: Vec<String>,
    segments: HashMap<String, Segment>,
}

impl SystemOutputs {
    pub fn get(&self, pair_id: &str) -> Option<&Segment> {
        self.segments.get(pair_id)
    }

    pub fn pair_ids(&self) -> impl Iterator<Item = &str> {
        self.order.iter().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn insert(&mut self, pair_id: impl Into<String>, segment: Segment) -> bool {
        let id = pair_id.into();
        if self.segments.contains_key(&id) {
            return false;
        }
        self.order.push(id.clone());
        self.segments.insert(id, segment);
        true
    }
}

/// Parse `pair_id TAB translation [TAB pretokenized]` rows. A first row
/// starting with `pair_id` is taken as a header.
pub fn parse_system_outputs(content: &str) -> Result<SystemOutputs, MetricError> {
    let mut out = SystemOutputs::default();
    for (line, fields) in tsv_rows(strip_bom(content)) {
        if out.is_empty() && fields.first() == Some(&"pair_id") {
            continue;
        }
        let malformed = |message: String| MetricError::Malformed { line, message };
        let segment = match fields[..] {
            [_, text] => Segment::new(text),
            [_, text, words] if words.trim().is_empty() => Segment::new(text),
            [_, text, words] => {
                Segment::with_words(text, words.split_whitespace().map(str::to_string).collect())
                    .map_err(|e| malformed(e.to_string()))?
            }
            _ => return Err(malformed(format!("expected 2 or 3 columns, found {}", fields.len()))),
        };
        if !out.insert(fields[0], segment) {
            return Err(malformed(format!("duplicate pair id {}", fields[0])));
        }
    }
    Ok(out)
}

/// BLEU and chrF++ for segments in `target` language: character BLEU and
/// word-segmented chrF++ into Chinese, punctuation-split tokens for both
/// into English.
pub fn score_segments(hypotheses: &[Segment], references: &[Segment], target: Language) -> Result<Vec<MetricScore>, MetricError> {
    let (bleu_tok, words) = match target {
        Language::Zh => (Tokenizer::ZhChar, Tokenizer::Pretokenized),
        Language::En => (Tokenizer::EnSimple, Tokenizer::EnSimple),
    };
    Ok(vec![
        bleu(hypotheses, references, bleu_tok)?,
        chrf_pp(hypotheses, references, ChrfConfig { words, ..ChrfConfig::default() })?,
    ])
}

/// Score one system over a subset of pairs against the human targets.
pub fn score_subset(pairs: &[&SentencePair], outputs: &SystemOutputs, target: Language) -> Result<Vec<MetricScore>, MetricError> {
    let missing: Vec<String> =
        pairs.iter().filter(|p| outputs.get(&p.pair_id).is_none()).map(|p| p.pair_id.clone()).collect();
    if !missing.is_empty() {
        return Err(MetricError::MissingOutputs(missing));
    }
    let references: Vec<Segment> = pairs.iter().map(|p| Segment::from_sentence(&p.target)).collect();
    let hypotheses: Vec<Segment> = pairs.iter().map(|p| outputs.get(&p.pair_id).cloned().expect("checked")).collect();
    score_segments(&hypotheses, &references, target)
}
