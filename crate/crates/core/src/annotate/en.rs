//! English passive-marker rules over the syntactic layer.

use super::taxonomy::StrategyLabel;
use super::RuleHit;
use crate::corpus::ParsedSentence;

/// Window after *get* for a `ccomp` participle.
pub const GET_WINDOW: usize = 4;
/// Window after *have* for a `ccomp` participle; at least one token must
/// separate them.
pub const HAVE_WINDOW: usize = 5;

fn marker_label(lemma: &str) -> Option<StrategyLabel> {
    match lemma.to_ascii_lowercase().as_str() {
        "be" => Some(StrategyLabel::Be),
        "get" => Some(StrategyLabel::Get),
        "have" => Some(StrategyLabel::Have),
        "become" => Some(StrategyLabel::Become),
        _ => None,
    }
}

/// Every firing site of every English rule, in token order.
pub(crate) fn passive_hits(s: &ParsedSentence) -> Vec<RuleHit> {
    let toks = s.tokens();
    let mut hits = Vec::new();
    for t in toks {
        let Some(label) = marker_label(&t.lemma) else { continue };

        if t.dep_label == "auxpass" {
            hits.push(RuleHit { label, marker: t.index, evidence: vec![t.index] });
        } else if t.dep_label == "aux" {
            let subject = toks
                .iter()
                .find(|x| x.dep_label == "nsubjpass" && x.dep_head == t.dep_head && t.dep_head != 0);
            if let Some(subj) = subject {
                hits.push(RuleHit { label, marker: t.index, evidence: vec![subj.index, t.index] });
            }
        }

        let window = match label {
            StrategyLabel::Get => Some(t.index + 1..=t.index + GET_WINDOW),
            StrategyLabel::Have => Some(t.index + 2..=t.index + HAVE_WINDOW),
            _ => None,
        };
        if let Some(window) = window {
            let participle = toks.iter().find(|v| {
                window.contains(&v.index) && v.pos == "VBN" && v.dep_label == "ccomp" && v.dep_head == t.index
            });
            if let Some(v) = participle {
                hits.push(RuleHit { label, marker: t.index, evidence: vec![t.index, v.index] });
            }
        }
    }
    hits
}
