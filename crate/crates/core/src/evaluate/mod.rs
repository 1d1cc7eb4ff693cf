//! Aggregation of annotations into proportion tables, voice/structure
//! consistency rates and strategy diversity counts.

mod report;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::annotate::{Annotation, Side, Strategy, StrategyLabel, Voice};
use crate::corpus::{Language, Register};

pub use report::{
    compare_report, render_csv, render_markdown, ColumnDiversity, Report, ScoreRow, SubsetReport, SystemColumn,
    SystemConsistency, HUMAN,
};

/// Slack allowed on percentage column totals.
pub const PERCENT_SLACK: f64 = 0.1;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("column {0} has no annotations")]
    EmptyColumn(String),
    #[error("column {column}: pair {pair_id} has a {found} label in a {expected} table")]
    WrongLanguage { column: String, pair_id: String, expected: Language, found: Language },
    #[error("pair sets differ; only in human: [{}]; only in system: [{}]", only_human.join(", "), only_system.join(", "))]
    PairSetMismatch { only_human: Vec<String>, only_system: Vec<String> },
    #[error("duplicate annotation for pair {0}")]
    DuplicateAnnotation(String),
    #[error("pair {pair_id}: human and system annotations disagree on {what}")]
    IncomparablePair { pair_id: String, what: String },
    #[error("no register known for pair {0}")]
    MissingRegister(String),
    #[error("no pairs to compare")]
    NoPairs,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProportionRow {
    pub voice: Voice,
    pub structure: &'static str,
    pub strategy: Strategy,
    /// Count per column.
    pub counts: Vec<usize>,
    /// Percentage per column, full precision.
    pub percentages: Vec<f64>,
}

/// Percentage of each structure per annotation source.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProportionTable {
    pub language: Language,
    pub columns: Vec<String>,
    pub totals: Vec<usize>,
    pub rows: Vec<ProportionRow>,
}

impl ProportionTable {
    pub fn percentage(&self, strategy: Strategy, column: usize) -> Option<f64> {
        self.rows.iter().find(|r| r.strategy == strategy).map(|r| r.percentages[column])
    }

    pub fn column_sum(&self, column: usize) -> f64 {
        self.rows.iter().map(|r| r.percentages[column]).sum()
    }
}

/// One column per `(name, annotations)` source; rows are the strategies of
/// `language` (eight for Chinese, BE/GET/HAVE/BECOME/N/A for English).
pub fn proportions(language: Language, columns: &[(String, &[Annotation])]) -> Result<ProportionTable, EvalError> {
    let strategies: Vec<Strategy> = Strategy::of_language(language).collect();
    let mut counts = vec![vec![0usize; columns.len()]; strategies.len()];
    let mut totals = Vec::with_capacity(columns.len());
    for (c, (name, annotations)) in columns.iter().enumerate() {
        if annotations.is_empty() {
            return Err(EvalError::EmptyColumn(name.clone()));
        }
        for a in annotations.iter() {
            if a.language() != language {
                return Err(EvalError::WrongLanguage {
                    column: name.clone(),
                    pair_id: a.pair_id.clone(),
                    expected: language,
                    found: a.language(),
                });
            }
            let row = strategies.iter().position(|s| *s == a.strategy).expect("strategy of table language");
            counts[row][c] += 1;
        }
        totals.push(annotations.len());
    }
    let rows = strategies
        .into_iter()
        .zip(counts)
        .map(|(strategy, counts)| {
            let percentages = counts.iter().zip(&totals).map(|(&n, &t)| 100.0 * n as f64 / t as f64).collect();
            ProportionRow { voice: strategy.voice(), structure: strategy.caption(), strategy, counts, percentages }
        })
        .collect();
    Ok(ProportionTable {
        language,
        columns: columns.iter().map(|(n, _)| n.clone()).collect(),
        totals,
        rows,
    })
}

/// What counts as "the same structure" when comparing two annotations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Granularity {
    Label,
    Strategy,
    /// Labels for English, strategies for Chinese.
    Auto,
}

impl std::str::FromStr for Granularity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "auto" => Ok(Granularity::Auto),
            "label" => Ok(Granularity::Label),
            "strategy" => Ok(Granularity::Strategy),
            other => Err(other.to_string()),
        }
    }
}

impl Granularity {
    fn resolve(self, language: Language) -> Granularity {
        match (self, language) {
            (Granularity::Auto, Language::En) => Granularity::Label,
            (Granularity::Auto, Language::Zh) => Granularity::Strategy,
            (g, _) => g,
        }
    }

    fn same(self, a: &Annotation, b: &Annotation) -> bool {
        match self {
            Granularity::Label | Granularity::Auto => a.label == b.label,
            Granularity::Strategy => a.strategy == b.strategy,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsistencyRow {
    /// `None` for the overall row.
    #[serde(serialize_with = "serialize_register_row")]
    pub register: Option<Register>,
    pub n: usize,
    pub voice_matches: usize,
    pub structure_matches: usize,
    pub voice_consistency: f64,
    pub structure_consistency: f64,
}

fn serialize_register_row<S: serde::Serializer>(r: &Option<Register>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(r.map(Register::as_str).unwrap_or("overall"))
}

impl ConsistencyRow {
    fn new(register: Option<Register>, n: usize, voice_matches: usize, structure_matches: usize) -> Self {
        ConsistencyRow {
            register,
            n,
            voice_matches,
            structure_matches,
            voice_consistency: voice_matches as f64 / n as f64,
            structure_consistency: structure_matches as f64 / n as f64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsistencySummary {
    pub granularity: Granularity,
    /// One row per register with data, in register order, then `overall`.
    pub rows: Vec<ConsistencyRow>,
    /// Registers without any pair.
    pub omitted: Vec<Register>,
}

impl ConsistencySummary {
    pub fn overall(&self) -> &ConsistencyRow {
        self.rows.last().expect("overall row")
    }

    pub fn register(&self, register: Register) -> Option<&ConsistencyRow> {
        self.rows.iter().find(|r| r.register == Some(register))
    }
}

fn index_by_pair<'a>(annotations: &'a [Annotation]) -> Result<BTreeMap<&'a str, &'a Annotation>, EvalError> {
    let mut map = BTreeMap::new();
    for a in annotations {
        if map.insert(a.pair_id.as_str(), a).is_some() {
            return Err(EvalError::DuplicateAnnotation(a.pair_id.clone()));
        }
    }
    Ok(map)
}

/// Compare system annotations to human ones pair by pair, stratified by
/// register. Pair sets must be identical.
pub fn consistency(
    human: &[Annotation],
    system: &[Annotation],
    registers: &HashMap<String, Register>,
    granularity: Granularity,
) -> Result<ConsistencySummary, EvalError> {
    let h = index_by_pair(human)?;
    let s = index_by_pair(system)?;
    let hk: BTreeSet<&str> = h.keys().copied().collect();
    let sk: BTreeSet<&str> = s.keys().copied().collect();
    if hk != sk {
        return Err(EvalError::PairSetMismatch {
            only_human: hk.difference(&sk).map(|x| x.to_string()).collect(),
            only_system: sk.difference(&hk).map(|x| x.to_string()).collect(),
        });
    }
    if h.is_empty() {
        return Err(EvalError::NoPairs);
    }

    let mut resolved = granularity;
    // register -> (n, voice, structure)
    let mut tally: BTreeMap<Register, (usize, usize, usize)> = BTreeMap::new();
    for (id, ha) in &h {
        let sa = s[id];
        if ha.side != sa.side || ha.language() != sa.language() {
            return Err(EvalError::IncomparablePair { pair_id: id.to_string(), what: "side or language".into() });
        }
        resolved = granularity.resolve(ha.language());
        let register = *registers.get(*id).ok_or_else(|| EvalError::MissingRegister(id.to_string()))?;
        let cell = tally.entry(register).or_default();
        cell.0 += 1;
        cell.1 += usize::from(ha.voice == sa.voice);
        cell.2 += usize::from(resolved.same(ha, sa));
    }

    let mut rows: Vec<ConsistencyRow> =
        tally.iter().map(|(r, &(n, v, st))| ConsistencyRow::new(Some(*r), n, v, st)).collect();
    let (n, v, st) = tally.values().fold((0, 0, 0), |acc, x| (acc.0 + x.0, acc.1 + x.1, acc.2 + x.2));
    rows.push(ConsistencyRow::new(None, n, v, st));
    let omitted = Register::ALL.into_iter().filter(|r| !tally.contains_key(r)).collect();
    Ok(ConsistencySummary { granularity: resolved, rows, omitted })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiversitySummary {
    pub distinct_labels: usize,
    pub label_universe: usize,
    pub distinct_strategies: usize,
    pub strategy_universe: usize,
}

/// Denominators for diversity counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Universe {
    pub language: Language,
    pub labels: usize,
    pub strategies: usize,
}

impl Universe {
    /// Every label and strategy the language defines.
    pub fn full(language: Language) -> Self {
        Universe {
            language,
            labels: StrategyLabel::of_language(language).count(),
            strategies: Strategy::of_language(language).count(),
        }
    }
}

/// Distinct labels and strategies used. A declared universe smaller than
/// what was observed is widened to the observed count.
pub fn diversity(annotations: &[Annotation], universe: Universe) -> DiversitySummary {
    let of_lang = annotations.iter().filter(|a| a.language() == universe.language);
    let labels: BTreeSet<StrategyLabel> = of_lang.clone().map(|a| a.label).collect();
    let strategies: BTreeSet<Strategy> = of_lang.map(|a| a.strategy).collect();
    DiversitySummary {
        distinct_labels: labels.len(),
        label_universe: universe.labels.max(labels.len()),
        distinct_strategies: strategies.len(),
        strategy_universe: universe.strategies.max(strategies.len()),
    }
}

/// Annotations restricted to one side.
pub fn side_of(annotations: &[Annotation], side: Side) -> Vec<Annotation> {
    annotations.iter().filter(|a| a.side == side).cloned().collect()
}
