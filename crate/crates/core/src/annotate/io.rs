//! Annotation and correction files.

use std::collections::HashMap;

use super::{AnnotateError, Annotation, Side, StrategyLabel};
use crate::text::{strip_bom, tsv_rows};

const ANNOTATION_HEADER: [&str; 7] = ["pair_id", "side", "label", "strategy", "voice", "evidence", "verified"];
const CORRECTION_HEADER: [&str; 3] = ["pair_id", "side", "corrected_label"];

pub fn write_annotations(annotations: &[Annotation]) -> String {
    let mut out = ANNOTATION_HEADER.join("\t");
    out.push('\n');
    for a in annotations {
        let evidence = if a.evidence.is_empty() {
            "_".to_string()
        } else {
            a.evidence.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        };
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            a.pair_id, a.side, a.label, a.strategy, a.voice, evidence, a.verified
        ));
    }
    out
}

/// Parse an annotation file. Strategy and voice columns must agree with the
/// label.
pub fn parse_annotations(content: &str) -> Result<Vec<Annotation>, AnnotateError> {
    let mut out = Vec::new();
    for (line, fields) in tsv_rows(strip_bom(content)) {
        if fields == ANNOTATION_HEADER {
            continue;
        }
        let malformed = |message: String| AnnotateError::Malformed { line, message };
        let [pair_id, side, label, strategy, voice, evidence, verified] = fields[..] else {
            return Err(malformed(format!("expected 7 columns, found {}", fields.len())));
        };
        let side: Side = side.parse().map_err(|s| malformed(format!("unknown side {s}")))?;
        let label: StrategyLabel = label.parse().map_err(|name| AnnotateError::UnknownLabel { line, name })?;
        let mut a = Annotation::with_label(pair_id, side, label);
        if a.strategy.as_str() != strategy || a.voice.as_str() != voice {
            return Err(malformed(format!("{label} implies {} / {}, found {strategy} / {voice}", a.strategy, a.voice)));
        }
        if evidence != "_" && !evidence.is_empty() {
            a.evidence = evidence
                .split(',')
                .map(|i| i.trim().parse().map_err(|_| malformed(format!("bad evidence index {i:?}"))))
                .collect::<Result<_, _>>()?;
        }
        a.verified = verified.parse().map_err(|_| malformed(format!("bad verified flag {verified:?}")))?;
        out.push(a);
    }
    Ok(out)
}

/// A manual override of one annotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correction {
    pub pair_id: String,
    pub side: Side,
    pub label: StrategyLabel,
}

/// Parse `pair_id side corrected_label` rows; a header row is optional.
pub fn parse_corrections(content: &str) -> Result<Vec<Correction>, AnnotateError> {
    let mut out = Vec::new();
    for (line, fields) in tsv_rows(strip_bom(content)) {
        if fields == CORRECTION_HEADER {
            continue;
        }
        let [pair_id, side, label] = fields[..] else {
            return Err(AnnotateError::Malformed { line, message: format!("expected 3 columns, found {}", fields.len()) });
        };
        let side = side
            .parse()
            .map_err(|s| AnnotateError::Malformed { line, message: format!("unknown side {s}") })?;
        let label = label.parse().map_err(|name| AnnotateError::UnknownLabel { line, name })?;
        out.push(Correction { pair_id: pair_id.to_string(), side, label });
    }
    Ok(out)
}

/// Apply corrections, returning a new annotation set. Overridden rows get
/// re-derived strategy and voice and `verified = true`; evidence is cleared
/// when the label changes. Every correction must hit at least one row.
pub fn apply_corrections(annotations: &[Annotation], corrections: &[Correction]) -> Result<Vec<Annotation>, AnnotateError> {
    let mut index: HashMap<(&str, Side), Vec<usize>> = HashMap::new();
    for (i, a) in annotations.iter().enumerate() {
        index.entry((a.pair_id.as_str(), a.side)).or_default().push(i);
    }
    let mut out = annotations.to_vec();
    for c in corrections {
        let rows = index
            .get(&(c.pair_id.as_str(), c.side))
            .ok_or_else(|| AnnotateError::UnknownPair { pair_id: c.pair_id.clone(), side: c.side })?;
        for &i in rows {
            let current = &out[i];
            if current.language() != c.label.language() {
                return Err(AnnotateError::LabelLanguage {
                    pair_id: c.pair_id.clone(),
                    side: c.side,
                    label: c.label,
                    language: current.language(),
                });
            }
            let mut fixed = Annotation::with_label(&current.pair_id, c.side, c.label);
            if current.label == c.label {
                fixed.evidence = current.evidence.clone();
            }
            fixed.verified = true;
            out[i] = fixed;
        }
    }
    Ok(out)
}
