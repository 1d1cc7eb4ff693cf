use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::{
    consistency, diversity, proportions, ConsistencySummary, DiversitySummary, EvalError, Granularity,
    ProportionTable, Universe,
};
use crate::annotate::{Annotation, Voice};
use crate::corpus::{Direction, Register, SentencePair};
use crate::extract::SubsetName;
use crate::metrics::{Metric, MetricScore};

/// Name of the reference annotation column.
pub const HUMAN: &str = "human";

/// One MT system's contribution to a subset report.
#[derive(Debug, Clone, Default)]
pub struct SystemColumn {
    pub name: String,
    /// Target-side annotations of the system's translations.
    pub annotations: Option<Vec<Annotation>>,
    pub scores: Option<Vec<MetricScore>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SystemConsistency {
    pub system: String,
    #[serde(flatten)]
    pub summary: ConsistencySummary,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ColumnDiversity {
    pub column: String,
    #[serde(flatten)]
    pub summary: DiversitySummary,
}

/// A row of the metric scorecard. `comet` is never computed here; it is
/// kept so externally produced values can be merged in.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoreRow {
    pub system: String,
    pub subset: SubsetName,
    pub direction: Direction,
    pub bleu: Option<f64>,
    pub chrf_pp: Option<f64>,
    pub comet: Option<f64>,
    pub details: Vec<MetricScore>,
}

impl ScoreRow {
    fn new(system: &str, subset: SubsetName, scores: &[MetricScore]) -> Self {
        let value = |m: Metric| scores.iter().find(|s| s.metric == m).map(|s| s.value);
        ScoreRow {
            system: system.to_string(),
            subset,
            direction: subset.direction(),
            bleu: value(Metric::Bleu),
            chrf_pp: value(Metric::ChrfPp),
            comet: None,
            details: scores.to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubsetReport {
    pub subset: SubsetName,
    pub direction: Direction,
    pub pairs: usize,
    pub source_proportions: Option<ProportionTable>,
    pub target_proportions: Option<ProportionTable>,
    pub consistency: Vec<SystemConsistency>,
    pub diversity: Vec<ColumnDiversity>,
    pub scorecard: Vec<ScoreRow>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub subsets: Vec<SubsetReport>,
}

impl Report {
    pub fn warnings(&self) -> impl Iterator<Item = &str> {
        self.subsets.iter().flat_map(|s| s.warnings.iter().map(String::as_str))
    }

    pub fn scorecard(&self) -> Vec<&ScoreRow> {
        self.subsets.iter().flat_map(|s| &s.scorecard).collect()
    }
}

/// Merge human and system annotations of one subset into proportions,
/// per-register consistency, diversity and scores. Columns follow the order
/// of `systems`, after the human column.
pub fn compare_report(
    subset: SubsetName,
    pairs: &[&SentencePair],
    human_source: &[Annotation],
    human_target: &[Annotation],
    systems: &[SystemColumn],
    granularity: Granularity,
) -> Result<SubsetReport, EvalError> {
    let direction = subset.direction();
    let mut report = SubsetReport {
        subset,
        direction,
        pairs: pairs.len(),
        source_proportions: None,
        target_proportions: None,
        consistency: Vec::new(),
        diversity: Vec::new(),
        scorecard: systems
            .iter()
            .filter_map(|s| s.scores.as_ref().map(|sc| ScoreRow::new(&s.name, subset, sc)))
            .collect(),
        warnings: Vec::new(),
    };
    if pairs.is_empty() {
        report.warnings.push(format!("{subset}: no pairs"));
        return Ok(report);
    }

    let source_lang = direction.source_language();
    let target_lang = direction.target_language();
    report.source_proportions = Some(proportions(source_lang, &[(HUMAN.to_string(), human_source)])?);

    let annotated: Vec<(&str, &[Annotation])> =
        systems.iter().filter_map(|s| s.annotations.as_deref().map(|a| (s.name.as_str(), a))).collect();
    let mut columns = vec![(HUMAN.to_string(), human_target)];
    columns.extend(annotated.iter().map(|(n, a)| (n.to_string(), *a)));
    report.target_proportions = Some(proportions(target_lang, &columns)?);

    let universe = Universe::full(target_lang);
    report.diversity = columns
        .iter()
        .map(|(name, a)| ColumnDiversity { column: name.clone(), summary: diversity(a, universe) })
        .collect();

    let registers: HashMap<String, Register> = pairs.iter().map(|p| (p.pair_id.clone(), p.register)).collect();
    for (name, annotations) in &annotated {
        let summary = consistency(human_target, annotations, &registers, granularity)?;
        for r in &summary.omitted {
            let w = format!("{subset}: no pairs in register {r}; omitted from consistency");
            if !report.warnings.contains(&w) {
                report.warnings.push(w);
            }
        }
        report.consistency.push(SystemConsistency { system: name.to_string(), summary });
    }
    Ok(report)
}

fn pct(x: f64) -> String {
    format!("{x:.1}")
}

fn opt(x: Option<f64>) -> String {
    x.map(pct).unwrap_or_default()
}

fn md_row(out: &mut String, cells: &[String]) {
    out.push('|');
    for c in cells {
        let _ = write!(out, " {} |", c.replace('|', "\\|"));
    }
    out.push('\n');
}

fn md_table(out: &mut String, header: &[String], rows: &[Vec<String>]) {
    md_row(out, header);
    md_row(out, &vec!["---".to_string(); header.len()]);
    for r in rows {
        md_row(out, r);
    }
    out.push('\n');
}

fn proportion_rows(t: &ProportionTable) -> (Vec<String>, Vec<Vec<String>>) {
    let mut header = vec!["Voice".to_string(), "Structure".to_string()];
    header.extend(t.columns.iter().cloned());
    let rows = t
        .rows
        .iter()
        .map(|r| {
            let voice = match r.voice {
                Voice::Passive => "Passive",
                Voice::Active => "Active",
            };
            let mut cells = vec![voice.to_string(), r.structure.to_string()];
            cells.extend(r.percentages.iter().map(|&p| pct(p)));
            cells
        })
        .collect();
    (header, rows)
}

fn consistency_rows(s: &SubsetReport) -> (Vec<String>, Vec<Vec<String>>) {
    let header = ["System", "Register", "n", "Voice (%)", "Structure (%)", "Granularity"].map(String::from).to_vec();
    let rows = s
        .consistency
        .iter()
        .flat_map(|c| {
            c.summary.rows.iter().map(move |r| {
                vec![
                    c.system.clone(),
                    r.register.map(|x| x.to_string()).unwrap_or_else(|| "overall".into()),
                    r.n.to_string(),
                    pct(100.0 * r.voice_consistency),
                    pct(100.0 * r.structure_consistency),
                    format!("{:?}", c.summary.granularity).to_lowercase(),
                ]
            })
        })
        .collect();
    (header, rows)
}

fn diversity_rows(s: &SubsetReport) -> (Vec<String>, Vec<Vec<String>>) {
    let header = ["Column", "Label div.", "Strategy div."].map(String::from).to_vec();
    let rows = s
        .diversity
        .iter()
        .map(|d| {
            vec![
                d.column.clone(),
                format!("{} / {}", d.summary.distinct_labels, d.summary.label_universe),
                format!("{} / {}", d.summary.distinct_strategies, d.summary.strategy_universe),
            ]
        })
        .collect();
    (header, rows)
}

fn score_rows(s: &SubsetReport) -> (Vec<String>, Vec<Vec<String>>) {
    let header = ["System", "Direction", "BLEU", "chrF++", "COMET"].map(String::from).to_vec();
    let rows = s
        .scorecard
        .iter()
        .map(|r| vec![r.system.clone(), r.direction.to_string(), opt(r.bleu), opt(r.chrf_pp), opt(r.comet)])
        .collect();
    (header, rows)
}

/// Human-readable tables, one decimal place.
pub fn render_markdown(report: &Report) -> String {
    let mut out = String::new();
    for s in &report.subsets {
        let _ = writeln!(out, "## {} ({} pairs)\n", s.subset, s.pairs);
        for w in &s.warnings {
            let _ = writeln!(out, "> warning: {w}\n");
        }
        if let Some(t) = &s.source_proportions {
            out.push_str("### Source structures (%)\n\n");
            let (h, r) = proportion_rows(t);
            md_table(&mut out, &h, &r);
        }
        if let Some(t) = &s.target_proportions {
            out.push_str("### Target structures (%)\n\n");
            let (h, r) = proportion_rows(t);
            md_table(&mut out, &h, &r);
        }
        if !s.consistency.is_empty() {
            out.push_str("### Consistency with human translation\n\n");
            let (h, r) = consistency_rows(s);
            md_table(&mut out, &h, &r);
        }
        if !s.diversity.is_empty() {
            out.push_str("### Diversity\n\n");
            let (h, r) = diversity_rows(s);
            md_table(&mut out, &h, &r);
        }
        if !s.scorecard.is_empty() {
            out.push_str("### Metrics\n\n");
            let (h, r) = score_rows(s);
            md_table(&mut out, &h, &r);
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for r in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let line: Vec<String> = r.iter().map(|c| csv_field(c)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// One CSV document per table, keyed by file name.
pub fn render_csv(report: &Report) -> Vec<(String, String)> {
    let mut files = Vec::new();
    for s in &report.subsets {
        let slug = s.subset.slug();
        if let Some(t) = &s.source_proportions {
            let (h, r) = proportion_rows(t);
            files.push((format!("{slug}.proportions.source.csv"), csv_table(&h, &r)));
        }
        if let Some(t) = &s.target_proportions {
            let (h, r) = proportion_rows(t);
            files.push((format!("{slug}.proportions.target.csv"), csv_table(&h, &r)));
        }
        if !s.consistency.is_empty() {
            let (h, r) = consistency_rows(s);
            files.push((format!("{slug}.consistency.csv"), csv_table(&h, &r)));
        }
        if !s.diversity.is_empty() {
            let (h, r) = diversity_rows(s);
            files.push((format!("{slug}.diversity.csv"), csv_table(&h, &r)));
        }
        if !s.scorecard.is_empty() {
            let (h, r) = score_rows(s);
            files.push((format!("{slug}.scores.csv"), csv_table(&h, &r)));
        }
    }
    files
}
