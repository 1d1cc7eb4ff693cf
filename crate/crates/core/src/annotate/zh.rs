//! Chinese translation-strategy rules.
//!
//! Lexical and surface rules only look at forms and PoS tags. The ordering
//! rules (non-被 markers, 由, 将, notional passives) read the semantic layer
//! and report [`NotEvaluable`] when it is missing.

use regex::Regex;

use super::taxonomy::StrategyLabel;
use super::{NotEvaluable, RuleHit, ZhRule};
use crate::corpus::{ParsedSentence, ParsedToken};
use crate::text::is_punctuation_str;

const PAT: &str = "PAT";
const FOB: &str = "FOB";
const AGT: &str = "AGT";
const MRELA: &str = "mRELA";

/// Tokens after a light verb searched for the verbal noun.
pub const LIGHT_VERB_WINDOW: usize = 4;

const OTHER_MARKERS: &[(&str, StrategyLabel)] =
    &[("给", StrategyLabel::Gei), ("让", StrategyLabel::Rang), ("为", StrategyLabel::Wei)];

const LEXICAL: &[(&str, StrategyLabel)] = &[
    ("受", StrategyLabel::Shou),
    ("受到", StrategyLabel::Shou),
    ("遭", StrategyLabel::Zao),
    ("遭到", StrategyLabel::Zao),
    ("惨遭", StrategyLabel::Zao),
    ("挨", StrategyLabel::Ai),
    ("蒙", StrategyLabel::Meng),
];

const LIGHT_VERBS: &[(&str, StrategyLabel)] = &[
    ("得到", StrategyLabel::LvDedao),
    ("获", StrategyLabel::LvHuo),
    ("获得", StrategyLabel::LvHuo),
    ("得以", StrategyLabel::LvDeyi),
    ("经", StrategyLabel::LvJing),
    ("经过", StrategyLabel::LvJing),
    ("予", StrategyLabel::LvYu),
    ("予以", StrategyLabel::LvYu),
    ("给予", StrategyLabel::LvJiyu),
    ("加以", StrategyLabel::LvJiayi),
    ("进行", StrategyLabel::LvJinxing),
    ("实施", StrategyLabel::LvShishi),
    ("付诸", StrategyLabel::LvFuzhu),
];

const CAUSATIVES: &[(&str, StrategyLabel)] = &[("使", StrategyLabel::CausShi), ("令", StrategyLabel::CausLing)];

const CLAUSE_END: &[&str] = &[",", "，", ".", "。", "．"];

fn lookup(table: &[(&str, StrategyLabel)], form: &str) -> Option<StrategyLabel> {
    table.iter().find(|(f, _)| *f == form).map(|(_, l)| *l)
}

fn sem_is(t: &ParsedToken, label: &str) -> bool {
    t.sem_label() == Some(label)
}

fn is_fronted(t: &ParsedToken) -> bool {
    sem_is(t, PAT) || sem_is(t, FOB)
}

/// Semantic roots: tokens whose semantic head is 0.
fn sem_roots(s: &ParsedSentence) -> impl Iterator<Item = &ParsedToken> {
    s.tokens().iter().filter(|t| t.sem_head() == Some(0))
}

fn agents_of(s: &ParsedSentence, root: usize) -> Vec<usize> {
    s.tokens()
        .iter()
        .filter(|t| sem_is(t, AGT) && t.sem_head() == Some(root))
        .map(|t| t.index)
        .collect()
}

/// `fronted → marker → (AGT) → ROOT` with the fronted element headed by ROOT.
/// Agents of ROOT, if any, must sit between marker and ROOT.
fn fronted_marker_order(s: &ParsedSentence, marker: usize, label: StrategyLabel) -> Option<RuleHit> {
    for root in sem_roots(s).filter(|r| r.index > marker) {
        let agents = agents_of(s, root.index);
        if !agents.iter().all(|&a| a > marker && a < root.index) {
            continue;
        }
        let fronted = s
            .tokens()
            .iter()
            .find(|p| p.index < marker && is_fronted(p) && p.sem_head() == Some(root.index));
        if let Some(p) = fronted {
            let mut evidence = vec![p.index, marker];
            evidence.extend(agents);
            evidence.push(root.index);
            return Some(RuleHit { label, marker, evidence });
        }
    }
    None
}

pub(crate) fn marked_passive(s: &ParsedSentence) -> Result<Vec<RuleHit>, NotEvaluable> {
    let mut hits: Vec<RuleHit> = s
        .tokens()
        .iter()
        .filter(|t| t.form == "被")
        .filter_map(|t| {
            let label = match t.pos.as_str() {
                "LB" => StrategyLabel::BeiL,
                "SB" => StrategyLabel::BeiS,
                _ => return None,
            };
            Some(RuleHit { label, marker: t.index, evidence: vec![t.index] })
        })
        .collect();

    let candidates: Vec<(&ParsedToken, StrategyLabel)> = s
        .tokens()
        .iter()
        .filter_map(|t| lookup(OTHER_MARKERS, &t.form).map(|l| (t, l)))
        .collect();
    if !candidates.is_empty() {
        if !s.has_semantic_layer() {
            if hits.is_empty() {
                return Err(NotEvaluable(ZhRule::MarkedPassive));
            }
        } else {
            hits.extend(
                candidates
                    .into_iter()
                    .filter(|(t, _)| sem_is(t, MRELA))
                    .filter_map(|(t, label)| fronted_marker_order(s, t.index, label)),
            );
        }
    }
    Ok(hits)
}

pub(crate) fn lexical_passive(s: &ParsedSentence) -> Vec<RuleHit> {
    form_hits(s, LEXICAL)
}

pub(crate) fn causative(s: &ParsedSentence) -> Vec<RuleHit> {
    form_hits(s, CAUSATIVES)
}

fn form_hits(s: &ParsedSentence, table: &[(&str, StrategyLabel)]) -> Vec<RuleHit> {
    s.tokens()
        .iter()
        .filter_map(|t| lookup(table, &t.form).map(|label| RuleHit { label, marker: t.index, evidence: vec![t.index] }))
        .collect()
}

pub(crate) fn notional_passive(s: &ParsedSentence) -> Result<Vec<RuleHit>, NotEvaluable> {
    if !s.has_semantic_layer() {
        return Err(NotEvaluable(ZhRule::NotionalPassive));
    }
    if s.tokens().iter().any(|t| sem_is(t, AGT)) {
        return Ok(Vec::new());
    }
    let mut hits = Vec::new();
    for root in sem_roots(s) {
        let fronted = s.tokens().iter().filter(|p| {
            p.index < root.index && is_fronted(p) && p.sem_head() == Some(root.index)
        });
        for p in fronted {
            let blocked = s.tokens()[p.index..root.index - 1].iter().any(|t| sem_is(t, MRELA));
            if !blocked {
                hits.push(RuleHit {
                    label: StrategyLabel::Notional,
                    marker: p.index,
                    evidence: vec![p.index, root.index],
                });
            }
        }
    }
    Ok(hits)
}

pub(crate) fn topic_you(s: &ParsedSentence) -> Result<Vec<RuleHit>, NotEvaluable> {
    let markers: Vec<&ParsedToken> = s.tokens().iter().filter(|t| t.form == "由").collect();
    if markers.is_empty() {
        return Ok(Vec::new());
    }
    if !s.has_semantic_layer() {
        return Err(NotEvaluable(ZhRule::TopicYou));
    }
    Ok(markers
        .into_iter()
        .filter(|t| sem_is(t, MRELA))
        .filter_map(|t| fronted_marker_order(s, t.index, StrategyLabel::You))
        .collect())
}

pub(crate) fn topic_shi_de(s: &ParsedSentence) -> Vec<RuleHit> {
    let toks = s.tokens();
    toks.iter()
        .filter(|t| t.form == "是" && t.pos == "VC")
        .filter_map(|shi| {
            toks[shi.index..]
                .iter()
                .find(|de| {
                    de.form == "的"
                        && match s.token(de.index + 1) {
                            None => true,
                            Some(next) => CLAUSE_END.contains(&next.form.as_str()),
                        }
                })
                .map(|de| RuleHit {
                    label: StrategyLabel::ShiDe,
                    marker: shi.index,
                    evidence: vec![shi.index, de.index],
                })
        })
        .collect()
}

fn is_punct_token(t: &ParsedToken) -> bool {
    t.pos == "PU" || t.pos == "PUNCT" || is_punctuation_str(&t.form)
}

pub(crate) fn light_verb(s: &ParsedSentence, verb_tag: &Regex) -> Vec<RuleHit> {
    s.tokens()
        .iter()
        .filter_map(|lv| {
            let label = lookup(LIGHT_VERBS, &lv.form)?;
            let verb = s.tokens()[lv.index..]
                .iter()
                .take(LIGHT_VERB_WINDOW)
                .take_while(|t| !is_punct_token(t))
                .find(|t| verb_tag.is_match(&t.pos))?;
            Some(RuleHit { label, marker: lv.index, evidence: vec![lv.index, verb.index] })
        })
        .collect()
}

pub(crate) fn resultative(s: &ParsedSentence) -> Result<Vec<RuleHit>, NotEvaluable> {
    let mut hits: Vec<RuleHit> = s
        .tokens()
        .iter()
        .filter(|t| t.form == "把" && t.pos == "BA")
        .map(|t| RuleHit { label: StrategyLabel::ResBa, marker: t.index, evidence: vec![t.index] })
        .collect();

    let jiang: Vec<&ParsedToken> = s.tokens().iter().filter(|t| t.form == "将").collect();
    if jiang.is_empty() {
        return Ok(hits);
    }
    if !s.has_semantic_layer() {
        return if hits.is_empty() { Err(NotEvaluable(ZhRule::Resultative)) } else { Ok(hits) };
    }
    for m in jiang.into_iter().filter(|t| sem_is(t, MRELA)) {
        let found = sem_roots(s).filter(|r| r.index > m.index).find_map(|root| {
            let agents = agents_of(s, root.index);
            if !agents.iter().all(|&a| a < m.index) {
                return None;
            }
            s.tokens()
                .iter()
                .find(|p| {
                    p.index > m.index && p.index < root.index && sem_is(p, PAT) && p.sem_head() == Some(root.index)
                })
                .map(|p| {
                    let mut evidence = agents;
                    evidence.extend([m.index, p.index, root.index]);
                    RuleHit { label: StrategyLabel::ResJiang, marker: m.index, evidence }
                })
        });
        hits.extend(found);
    }
    Ok(hits)
}
