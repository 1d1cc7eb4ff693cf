//! Passive detection, pair cleaning and the four-way subset partition.
//!
//! *be* passives: a token with lemma `be` and dependency label `auxpass`
//! followed by a `VBN` no more than four tokens later. *bei* passives: the
//! token 被 tagged `LB` (with agent) or `SB` (without agent).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::{Direction, Language, ParsedSentence, Register, SentencePair};
use crate::text::is_punctuation;

/// Largest allowed distance from the *be* auxiliary to its participle.
pub const BE_PARTICIPLE_WINDOW: usize = 4;
/// Pairs whose English side has more words than this are dropped.
pub const MAX_ENGLISH_WORDS: usize = 100;
/// Inclusive bounds on Chinese characters per English word.
pub const MIN_LENGTH_RATIO: f64 = 0.5;
pub const MAX_LENGTH_RATIO: f64 = 2.2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Construction {
    Bei,
    Be,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PassiveMatch {
    pub construction: Construction,
    /// Index of 被 or of the *be* auxiliary.
    pub anchor_index: usize,
    /// Past participle (BE only).
    pub participle_index: Option<usize>,
    /// `LB` → true, `SB` → false (BEI only).
    pub with_agent: Option<bool>,
}

/// *be* passives in an English sentence, ordered by anchor. Returns an
/// empty list for a non-English sentence.
pub fn detect_be_passive(s: &ParsedSentence) -> Vec<PassiveMatch> {
    if s.language() != Language::En {
        return Vec::new();
    }
    s.tokens()
        .iter()
        .filter(|t| t.lemma.eq_ignore_ascii_case("be") && t.dep_label == "auxpass")
        .filter_map(|aux| {
            let window = aux.index + 1..=aux.index + BE_PARTICIPLE_WINDOW;
            let in_window = |i: usize| window.contains(&i) && s.token(i).is_some_and(|t| t.pos == "VBN");
            // the auxiliary's own head is the natural participle; otherwise the nearest VBN
            let participle = if in_window(aux.dep_head) {
                Some(aux.dep_head)
            } else {
                window.clone().find(|&i| in_window(i))
            }?;
            Some(PassiveMatch {
                construction: Construction::Be,
                anchor_index: aux.index,
                participle_index: Some(participle),
                with_agent: None,
            })
        })
        .collect()
}

/// *bei* passives in a Chinese sentence. Returns an empty list for a
/// non-Chinese sentence.
pub fn detect_bei_passive(s: &ParsedSentence) -> Vec<PassiveMatch> {
    if s.language() != Language::Zh {
        return Vec::new();
    }
    s.tokens()
        .iter()
        .filter(|t| t.form == "被")
        .filter_map(|t| {
            let with_agent = match t.pos.as_str() {
                "LB" => true,
                "SB" => false,
                _ => return None,
            };
            Some(PassiveMatch {
                construction: Construction::Bei,
                anchor_index: t.index,
                participle_index: None,
                with_agent: Some(with_agent),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CleaningReason {
    Ok,
    TooLong,
    RatioOutOfRange,
}

impl CleaningReason {
    pub fn as_str(self) -> &'static str {
        match self {
            CleaningReason::Ok => "OK",
            CleaningReason::TooLong => "TOO_LONG",
            CleaningReason::RatioOutOfRange => "RATIO_OUT_OF_RANGE",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleaningVerdict {
    pub keep: bool,
    pub reason: CleaningReason,
}

impl CleaningVerdict {
    fn from_reason(reason: CleaningReason) -> Self {
        CleaningVerdict { keep: reason == CleaningReason::Ok, reason }
    }
}

/// Tokens containing at least one letter or digit.
pub fn english_word_count(s: &ParsedSentence) -> usize {
    s.tokens().iter().filter(|t| t.form.chars().any(char::is_alphanumeric)).count()
}

/// Unicode scalars over token forms, excluding whitespace and punctuation.
pub fn chinese_char_count(s: &ParsedSentence) -> usize {
    s.tokens()
        .iter()
        .flat_map(|t| t.form.chars())
        .filter(|c| !c.is_whitespace() && !is_punctuation(*c))
        .count()
}

pub fn clean_pair(pair: &SentencePair) -> CleaningVerdict {
    clean_counts(chinese_char_count(pair.chinese()), english_word_count(pair.english()))
}

/// Verdict from raw lengths; zero English words counts as out of range.
pub fn clean_counts(zh_chars: usize, en_words: usize) -> CleaningVerdict {
    let reason = if en_words > MAX_ENGLISH_WORDS {
        CleaningReason::TooLong
    } else if en_words == 0 {
        CleaningReason::RatioOutOfRange
    } else {
        let ratio = zh_chars as f64 / en_words as f64;
        if (MIN_LENGTH_RATIO..=MAX_LENGTH_RATIO).contains(&ratio) {
            CleaningReason::Ok
        } else {
            CleaningReason::RatioOutOfRange
        }
    };
    CleaningVerdict::from_reason(reason)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubsetName {
    #[serde(rename = "ZH(bei)→EN")]
    ZhBeiToEn,
    #[serde(rename = "EN→ZH(bei)")]
    EnToZhBei,
    #[serde(rename = "ZH→EN(be)")]
    ZhToEnBe,
    #[serde(rename = "EN(be)→ZH")]
    EnBeToZh,
}

impl SubsetName {
    pub const ALL: [SubsetName; 4] =
        [SubsetName::ZhBeiToEn, SubsetName::EnToZhBei, SubsetName::ZhToEnBe, SubsetName::EnBeToZh];

    pub fn as_str(self) -> &'static str {
        match self {
            SubsetName::ZhBeiToEn => "ZH(bei)→EN",
            SubsetName::EnToZhBei => "EN→ZH(bei)",
            SubsetName::ZhToEnBe => "ZH→EN(be)",
            SubsetName::EnBeToZh => "EN(be)→ZH",
        }
    }

    /// ASCII name usable in file names.
    pub fn slug(self) -> &'static str {
        match self {
            SubsetName::ZhBeiToEn => "zh_bei-en",
            SubsetName::EnToZhBei => "en-zh_bei",
            SubsetName::ZhToEnBe => "zh-en_be",
            SubsetName::EnBeToZh => "en_be-zh",
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            SubsetName::ZhBeiToEn | SubsetName::ZhToEnBe => Direction::ZhToEn,
            SubsetName::EnToZhBei | SubsetName::EnBeToZh => Direction::EnToZh,
        }
    }

    /// The membership predicate.
    pub fn admits(self, pair: &SentencePair) -> bool {
        if pair.direction != self.direction() {
            return false;
        }
        match self {
            SubsetName::ZhBeiToEn => !detect_bei_passive(&pair.source).is_empty(),
            SubsetName::EnToZhBei => !detect_bei_passive(&pair.target).is_empty(),
            SubsetName::ZhToEnBe => !detect_be_passive(&pair.target).is_empty(),
            SubsetName::EnBeToZh => !detect_be_passive(&pair.source).is_empty(),
        }
    }
}

impl fmt::Display for SubsetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SubsetName {
    type Err = String;

    /// Display name or slug.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        SubsetName::ALL
            .into_iter()
            .find(|n| n.as_str() == s || n.slug() == s)
            .ok_or_else(|| s.to_string())
    }
}

/// Pair ids per subset, each in input order. A pair may belong to two subsets.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Partition {
    subsets: BTreeMap<SubsetName, Vec<String>>,
}

impl Partition {
    pub fn members(&self, name: SubsetName) -> &[String] {
        self.subsets.get(&name).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn insert(&mut self, name: SubsetName, pair_id: impl Into<String>) {
        self.subsets.entry(name).or_default().push(pair_id.into());
    }

    /// All (pair_id, subset) memberships, grouped by subset in canonical order.
    pub fn memberships(&self) -> impl Iterator<Item = (&str, SubsetName)> {
        SubsetName::ALL
            .into_iter()
            .flat_map(move |name| self.members(name).iter().map(move |id| (id.as_str(), name)))
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.values().all(Vec::is_empty)
    }
}

pub fn partition_subsets(pairs: &[SentencePair]) -> Partition {
    let mut partition = Partition::default();
    for pair in pairs {
        for name in SubsetName::ALL {
            if name.admits(pair) {
                partition.insert(name, pair.pair_id.clone());
            }
        }
    }
    partition
}

/// Counts by (subset, register, corpus).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Census {
    cells: BTreeMap<(SubsetName, Register, String), usize>,
}

impl Census {
    pub fn get(&self, subset: SubsetName, register: Register, corpus: &str) -> usize {
        self.cells.get(&(subset, register, corpus.to_string())).copied().unwrap_or(0)
    }

    pub fn subset_total(&self, subset: SubsetName) -> usize {
        self.cells.iter().filter(|((s, _, _), _)| *s == subset).map(|(_, n)| n).sum()
    }

    pub fn register_total(&self, subset: SubsetName, register: Register) -> usize {
        self.cells
            .iter()
            .filter(|((s, r, _), _)| *s == subset && *r == register)
            .map(|(_, n)| n)
            .sum()
    }

    pub fn corpus_total(&self, subset: SubsetName, corpus: &str) -> usize {
        self.cells
            .iter()
            .filter(|((s, _, c), _)| *s == subset && c == corpus)
            .map(|(_, n)| n)
            .sum()
    }

    /// Non-zero cells in (subset, register, corpus) order.
    pub fn cells(&self) -> impl Iterator<Item = (SubsetName, Register, &str, usize)> {
        self.cells.iter().map(|((s, r, c), n)| (*s, *r, c.as_str(), *n))
    }
}

/// Tabulate subset membership by register and corpus. Members missing from
/// `pairs` are ignored.
pub fn subset_census(partition: &Partition, pairs: &[SentencePair]) -> Census {
    let by_id: HashMap<&str, &SentencePair> = pairs.iter().map(|p| (p.pair_id.as_str(), p)).collect();
    let mut census = Census::default();
    for (id, subset) in partition.memberships() {
        if let Some(pair) = by_id.get(id) {
            *census.cells.entry((subset, pair.register, pair.corpus.clone())).or_insert(0) += 1;
        }
    }
    census
}

/// `pair_id TAB keep|drop TAB reason` rows with a header.
pub fn write_cleaning_report<'a>(verdicts: impl IntoIterator<Item = (&'a str, CleaningVerdict)>) -> String {
    let mut out = String::from("pair_id\tverdict\treason\n");
    for (id, v) in verdicts {
        let verdict = if v.keep { "keep" } else { "drop" };
        out.push_str(&format!("{id}\t{verdict}\t{}\n", v.reason.as_str()));
    }
    out
}

/// `pair_id TAB subset` rows with a header, one row per membership.
pub fn write_membership(partition: &Partition) -> String {
    let mut out = String::from("pair_id\tsubset\n");
    for (id, subset) in partition.memberships() {
        out.push_str(&format!("{id}\t{subset}\n"));
    }
    out
}

#[derive(Debug, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct MembershipError {
    pub line: usize,
    pub message: String,
}

pub fn parse_membership(content: &str) -> Result<Partition, MembershipError> {
    let mut partition = Partition::default();
    for (line, fields) in crate::text::tsv_rows(crate::text::strip_bom(content)) {
        if fields == ["pair_id", "subset"] {
            continue;
        }
        let [id, subset] = fields[..] else {
            return Err(MembershipError { line, message: format!("expected 2 columns, found {}", fields.len()) });
        };
        let subset = subset
            .parse()
            .map_err(|s| MembershipError { line, message: format!("unknown subset {s}") })?;
        partition.insert(subset, id);
    }
    Ok(partition)
}

/// `subset register corpus count` rows for every non-zero cell, followed by
/// one `TOTAL` row per subset (always present, so an empty census still
/// lists four zero totals).
pub fn write_census(census: &Census) -> String {
    let mut out = String::from("subset\tregister\tcorpus\tcount\n");
    for (subset, register, corpus, n) in census.cells() {
        out.push_str(&format!("{subset}\t{register}\t{corpus}\t{n}\n"));
    }
    for subset in SubsetName::ALL {
        out.push_str(&format!("{subset}\tTOTAL\tTOTAL\t{}\n", census.subset_total(subset)));
    }
    out
}
