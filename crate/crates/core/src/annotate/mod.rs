//! Translation-strategy annotation.
//!
//! Each sentence gets exactly one [`StrategyLabel`]. Rules are tried in a
//! configurable precedence order; the first rule that fires decides the
//! label, ties inside a rule go to the earliest marker token. Sentences on
//! which nothing fires get `ZH_NA` / `EN_NA`.

mod en;
mod io;
mod taxonomy;
mod zh;

use std::fmt;
use std::str::FromStr;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::corpus::{Language, ParsedSentence};

pub use io::{
    apply_corrections, parse_annotations, parse_corrections, write_annotations, Correction,
};
pub use taxonomy::{strategy_of, voice_of, Strategy, StrategyLabel, Voice};

#[derive(Debug, thiserror::Error)]
pub enum AnnotateError {
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("line {line}: unknown label {name}")]
    UnknownLabel { line: usize, name: String },
    #[error("line {line}: malformed row: {message}")]
    Malformed { line: usize, message: String },
    #[error("correction for unknown pair {pair_id} ({side})")]
    UnknownPair { pair_id: String, side: Side },
    #[error("pair {pair_id} ({side}): label {label} does not match the sentence language {language}")]
    LabelLanguage { pair_id: String, side: Side, label: StrategyLabel, language: Language },
}

/// Which side of a sentence pair an annotation describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Source,
    Target,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Source => "source",
            Side::Target => "target",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "source" => Ok(Side::Source),
            "target" => Ok(Side::Target),
            other => Err(other.to_string()),
        }
    }
}

/// The Chinese rule groups that precedence orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZhRule {
    MarkedPassive,
    LexicalPassive,
    Resultative,
    TopicYou,
    TopicShiDe,
    LightVerb,
    Causative,
    NotionalPassive,
}

impl ZhRule {
    pub const DEFAULT_ORDER: [ZhRule; 8] = [
        ZhRule::MarkedPassive,
        ZhRule::LexicalPassive,
        ZhRule::Resultative,
        ZhRule::TopicYou,
        ZhRule::TopicShiDe,
        ZhRule::LightVerb,
        ZhRule::Causative,
        ZhRule::NotionalPassive,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ZhRule::MarkedPassive => "marked",
            ZhRule::LexicalPassive => "lexical",
            ZhRule::Resultative => "resultative",
            ZhRule::TopicYou => "you",
            ZhRule::TopicShiDe => "shi_de",
            ZhRule::LightVerb => "light_verb",
            ZhRule::Causative => "causative",
            ZhRule::NotionalPassive => "notional",
        }
    }

    /// The rule group that can produce `label`.
    pub fn for_label(label: StrategyLabel) -> Option<ZhRule> {
        use StrategyLabel as L;
        Some(match label {
            L::BeiL | L::BeiS | L::Gei | L::Rang | L::Wei => ZhRule::MarkedPassive,
            L::Shou | L::Zao | L::Ai | L::Meng => ZhRule::LexicalPassive,
            L::ResBa | L::ResJiang => ZhRule::Resultative,
            L::You => ZhRule::TopicYou,
            L::ShiDe => ZhRule::TopicShiDe,
            L::CausShi | L::CausLing => ZhRule::Causative,
            L::Notional => ZhRule::NotionalPassive,
            l if l.strategy() == Strategy::LightVerb => ZhRule::LightVerb,
            _ => return None,
        })
    }
}

impl fmt::Display for ZhRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ZhRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        Self::DEFAULT_ORDER.into_iter().find(|r| r.as_str() == s).ok_or_else(|| s.to_string())
    }
}

/// A rule that needs the semantic layer met a sentence without one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("rule not evaluable: {0} needs a semantic dependency layer")]
pub struct NotEvaluable(pub ZhRule);

/// One firing site of a rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleHit {
    pub label: StrategyLabel,
    /// The marker token the rule keys on.
    pub marker: usize,
    pub evidence: Vec<usize>,
}

pub const DEFAULT_VERB_TAG_PATTERN: &str = "^V";

#[derive(Debug, Clone)]
pub struct AnnotatorConfig {
    pub zh_precedence: Vec<ZhRule>,
    /// English passive labels in precedence order.
    pub en_precedence: Vec<StrategyLabel>,
    /// PoS tags counted as verbs by the light-verb rule.
    pub verb_tag: Regex,
}

impl Default for AnnotatorConfig {
    fn default() -> Self {
        AnnotatorConfig {
            zh_precedence: ZhRule::DEFAULT_ORDER.to_vec(),
            en_precedence: vec![StrategyLabel::Be, StrategyLabel::Get, StrategyLabel::Have, StrategyLabel::Become],
            verb_tag: Regex::new(DEFAULT_VERB_TAG_PATTERN).expect("valid default pattern"),
        }
    }
}

impl AnnotatorConfig {
    /// Parse `key = value` lines with keys `precedence.zh`, `precedence.en`
    /// and `verb_tag_pattern`. Missing keys keep their defaults; precedence
    /// lists must be permutations of the full rule set.
    pub fn parse(content: &str) -> Result<Self, AnnotateError> {
        let mut config = AnnotatorConfig::default();
        let entries = crate::text::parse_key_values(content)
            .map_err(|(line, message)| AnnotateError::Config { line, message })?;
        for (line, key, value) in entries {
            let err = |message: String| AnnotateError::Config { line, message };
            match key.as_str() {
                "precedence.zh" => {
                    let order = split_list(&value)
                        .map(|s| s.parse::<ZhRule>().map_err(|s| err(format!("unknown Chinese rule {s}"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    if !is_permutation(&order, &ZhRule::DEFAULT_ORDER) {
                        return Err(err("precedence.zh must list every Chinese rule exactly once".into()));
                    }
                    config.zh_precedence = order;
                }
                "precedence.en" => {
                    let passives = [StrategyLabel::Be, StrategyLabel::Get, StrategyLabel::Have, StrategyLabel::Become];
                    let order = split_list(&value)
                        .map(|s| {
                            s.to_ascii_uppercase()
                                .parse::<StrategyLabel>()
                                .ok()
                                .filter(|l| passives.contains(l))
                                .ok_or_else(|| err(format!("unknown English passive label {s}")))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    if !is_permutation(&order, &passives) {
                        return Err(err("precedence.en must list BE, GET, HAVE and BECOME exactly once".into()));
                    }
                    config.en_precedence = order;
                }
                "verb_tag_pattern" => {
                    config.verb_tag = Regex::new(&value).map_err(|e| err(format!("invalid pattern: {e}")))?;
                }
                other => return Err(err(format!("unknown key {other}"))),
            }
        }
        Ok(config)
    }

    pub fn load(path: impl AsRef<std::path::Path>) -> Result<Self, AnnotateError> {
        let content = std::fs::read_to_string(path.as_ref())
            .map_err(|e| AnnotateError::Config { line: 0, message: format!("{}: {e}", path.as_ref().display()) })?;
        Self::parse(&content)
    }
}

fn split_list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty())
}

fn is_permutation<T: PartialEq>(order: &[T], all: &[T]) -> bool {
    order.len() == all.len() && all.iter().all(|x| order.iter().filter(|y| *y == x).count() == 1)
}

/// The label chosen for one sentence, with supporting evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    pub label: StrategyLabel,
    /// Sorted, deduplicated token indices that fired the rule.
    pub evidence: Vec<usize>,
    /// Rules skipped because the semantic layer was missing.
    pub not_evaluable: Vec<ZhRule>,
}

/// Pick the earliest-marker label among `hits` and gather the evidence of
/// every site that produced that label.
fn resolve(hits: Vec<RuleHit>) -> Option<(StrategyLabel, Vec<usize>)> {
    let label = hits.iter().min_by_key(|h| h.marker)?.label;
    let mut evidence: Vec<usize> = hits.into_iter().filter(|h| h.label == label).flat_map(|h| h.evidence).collect();
    evidence.sort_unstable();
    evidence.dedup();
    Some((label, evidence))
}

fn first_label(hits: Result<Vec<RuleHit>, NotEvaluable>) -> Result<Option<StrategyLabel>, NotEvaluable> {
    Ok(resolve(hits?).map(|(l, _)| l))
}

/// 被 (LB/SB) or 给/让/为 in `PAT → mRELA → (AGT) → ROOT` order.
pub fn match_marked_passive(s: &ParsedSentence) -> Result<Option<StrategyLabel>, NotEvaluable> {
    first_label(zh::marked_passive(s))
}

/// 受(到), (惨)遭(到), 挨, 蒙 as whole tokens.
pub fn match_lexical_passive(s: &ParsedSentence) -> Option<StrategyLabel> {
    resolve(zh::lexical_passive(s)).map(|(l, _)| l)
}

pub fn match_notional_passive(s: &ParsedSentence) -> Result<Option<StrategyLabel>, NotEvaluable> {
    first_label(zh::notional_passive(s))
}

/// 由-topic or 是…的; when both fire the earlier marker wins. Fails only
/// when the 由 branch cannot be evaluated and 是…的 does not fire.
pub fn match_topic_sentence(s: &ParsedSentence) -> Result<Option<StrategyLabel>, NotEvaluable> {
    let shi_de = zh::topic_shi_de(s);
    match zh::topic_you(s) {
        Ok(mut hits) => {
            hits.extend(shi_de);
            Ok(resolve(hits).map(|(l, _)| l))
        }
        Err(e) if shi_de.is_empty() => Err(e),
        Err(_) => Ok(resolve(shi_de).map(|(l, _)| l)),
    }
}

pub fn match_light_verb(s: &ParsedSentence, verb_tag: &Regex) -> Option<StrategyLabel> {
    resolve(zh::light_verb(s, verb_tag)).map(|(l, _)| l)
}

pub fn match_causative(s: &ParsedSentence) -> Option<StrategyLabel> {
    resolve(zh::causative(s)).map(|(l, _)| l)
}

pub fn match_resultative(s: &ParsedSentence) -> Result<Option<StrategyLabel>, NotEvaluable> {
    first_label(zh::resultative(s))
}

/// Whether the English rule producing `label` fires anywhere in `s`.
pub fn english_rule_fires(s: &ParsedSentence, label: StrategyLabel) -> bool {
    en::passive_hits(s).iter().any(|h| h.label == label)
}

/// Applies the rule system with a fixed configuration. Pure: the output
/// depends only on the sentence.
#[derive(Debug, Clone, Default)]
pub struct Annotator {
    config: AnnotatorConfig,
}

impl Annotator {
    pub fn new(config: AnnotatorConfig) -> Self {
        Annotator { config }
    }

    pub fn config(&self) -> &AnnotatorConfig {
        &self.config
    }

    pub fn annotate(&self, s: &ParsedSentence) -> Labeling {
        match s.language() {
            Language::Zh => self.annotate_zh(s),
            Language::En => self.annotate_en(s),
        }
    }

    fn zh_rule(&self, rule: ZhRule, s: &ParsedSentence) -> Result<Vec<RuleHit>, NotEvaluable> {
        match rule {
            ZhRule::MarkedPassive => zh::marked_passive(s),
            ZhRule::LexicalPassive => Ok(zh::lexical_passive(s)),
            ZhRule::Resultative => zh::resultative(s),
            ZhRule::TopicYou => zh::topic_you(s),
            ZhRule::TopicShiDe => Ok(zh::topic_shi_de(s)),
            ZhRule::LightVerb => Ok(zh::light_verb(s, &self.config.verb_tag)),
            ZhRule::Causative => Ok(zh::causative(s)),
            ZhRule::NotionalPassive => zh::notional_passive(s),
        }
    }

    /// Whether `rule` fires on `s` (not-evaluable counts as not firing).
    pub fn zh_rule_fires(&self, rule: ZhRule, s: &ParsedSentence) -> bool {
        self.zh_rule(rule, s).is_ok_and(|hits| !hits.is_empty())
    }

    pub fn annotate_zh(&self, s: &ParsedSentence) -> Labeling {
        let mut not_evaluable = Vec::new();
        for &rule in &self.config.zh_precedence {
            match self.zh_rule(rule, s) {
                Ok(hits) => {
                    if let Some((label, evidence)) = resolve(hits) {
                        return Labeling { label, evidence, not_evaluable };
                    }
                }
                Err(NotEvaluable(rule)) => not_evaluable.push(rule),
            }
        }
        Labeling { label: StrategyLabel::ZhNa, evidence: Vec::new(), not_evaluable }
    }

    pub fn annotate_en(&self, s: &ParsedSentence) -> Labeling {
        let hits = en::passive_hits(s);
        for &label in &self.config.en_precedence {
            let of_label: Vec<RuleHit> = hits.iter().filter(|h| h.label == label).cloned().collect();
            if let Some((label, evidence)) = resolve(of_label) {
                return Labeling { label, evidence, not_evaluable: Vec::new() };
            }
        }
        Labeling { label: StrategyLabel::EnNa, evidence: Vec::new(), not_evaluable: Vec::new() }
    }
}

/// A sentence-level annotation attached to one side of a pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotation {
    pub pair_id: String,
    pub side: Side,
    pub label: StrategyLabel,
    pub strategy: Strategy,
    pub voice: Voice,
    pub evidence: Vec<usize>,
    pub verified: bool,
}

impl Annotation {
    pub fn new(pair_id: impl Into<String>, side: Side, labeling: &Labeling) -> Self {
        let mut a = Annotation::with_label(pair_id, side, labeling.label);
        a.evidence = labeling.evidence.clone();
        a
    }

    /// An annotation with derived strategy and voice and no evidence.
    pub fn with_label(pair_id: impl Into<String>, side: Side, label: StrategyLabel) -> Self {
        let strategy = strategy_of(label);
        Annotation {
            pair_id: pair_id.into(),
            side,
            label,
            strategy,
            voice: voice_of(strategy),
            evidence: Vec::new(),
            verified: false,
        }
    }

    pub fn language(&self) -> Language {
        self.label.language()
    }
}

#[cfg(test)]
mod tests;
