//! Command-line front end: `extract`, `annotate` and `evaluate`, each
//! reading the previous step's files from the output directory.
//!
//! Exit codes: 0 success, 1 internal or write failure, 2 load or
//! configuration error, 3 pair-set mismatch between human data and a
//! system. Errors print as a single `error[CODE]: message` line.

use std::collections::{BTreeMap, HashMap};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::annotate::{
    apply_corrections, parse_annotations, parse_corrections, write_annotations, Annotation, Annotator,
    AnnotatorConfig, Correction, Side,
};
use crate::corpus::{
    load_manifest, load_parsed_file, load_register_map, parse_parsed, Language, ParsedSentence, SentencePair,
    SentenceStore,
};
use crate::evaluate::{compare_report, render_csv, render_markdown, EvalError, Granularity, Report, SystemColumn};
use crate::extract::{
    clean_pair, parse_membership, partition_subsets, subset_census, write_census, write_cleaning_report,
    write_membership, Partition, SubsetName,
};
use crate::metrics::{parse_system_outputs, score_subset, MetricError, SystemOutputs};

pub const CLEANING_FILE: &str = "cleaning.tsv";
pub const SUBSETS_FILE: &str = "subsets.tsv";
pub const CENSUS_FILE: &str = "census.tsv";
pub const ANNOTATION_DIR: &str = "annotations";
pub const SCORECARD_FILE: &str = "scorecard.json";

#[derive(Debug, Parser)]
#[command(name = "passivelens", version, about = "Passive-voice translation strategy analysis for parallel corpora")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Clean pairs, assign subsets and count them.
    Extract(ConfigArg),
    /// Label both sides of every subset pair.
    Annotate(ConfigArg),
    /// Compare system translations with the human ones.
    Evaluate(EvaluateArgs),
}

#[derive(Debug, Args)]
pub struct ConfigArg {
    /// Run configuration file.
    #[arg(long)]
    pub config: PathBuf,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    #[command(flatten)]
    pub config: ConfigArg,
    /// System output TSV, as NAME=PATH. Repeatable; column order follows.
    #[arg(long = "system", value_name = "NAME=PATH", value_parser = parse_named)]
    pub systems: Vec<(String, PathBuf)>,
    /// Parsed system translations, as NAME=PATH. Repeatable.
    #[arg(long = "parsed", value_name = "NAME=PATH", value_parser = parse_named)]
    pub parsed: Vec<(String, PathBuf)>,
    /// Report format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Format as ValueEnum>::from_str(s, true)
    }
}

fn parse_named(s: &str) -> Result<(String, PathBuf), String> {
    match s.split_once('=') {
        Some((name, path)) if !name.trim().is_empty() && !path.trim().is_empty() => {
            Ok((name.trim().to_string(), PathBuf::from(path.trim())))
        }
        _ => Err(format!("expected NAME=PATH, found {s:?}")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Config,
    Load,
    PairSet,
    Io,
    Internal,
}

impl ErrorKind {
    pub fn code(self) -> &'static str {
        match self {
            ErrorKind::Config => "E_CONFIG",
            ErrorKind::Load => "E_LOAD",
            ErrorKind::PairSet => "E_PAIRSET",
            ErrorKind::Io => "E_IO",
            ErrorKind::Internal => "E_INTERNAL",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Config | ErrorKind::Load => 2,
            ErrorKind::PairSet => 3,
            ErrorKind::Io | ErrorKind::Internal => 1,
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    fn new(kind: ErrorKind, message: impl std::fmt::Display) -> Self {
        // keep the diagnostic on one line
        let message = message.to_string().split_whitespace().collect::<Vec<_>>().join(" ");
        CliError { kind, message }
    }

    fn config(message: impl std::fmt::Display) -> Self {
        CliError::new(ErrorKind::Config, message)
    }

    fn load(message: impl std::fmt::Display) -> Self {
        CliError::new(ErrorKind::Load, message)
    }

    pub fn line(&self) -> String {
        format!("error[{}]: {}", self.kind.code(), self.message)
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        let kind = match e {
            EvalError::PairSetMismatch { .. } => ErrorKind::PairSet,
            _ => ErrorKind::Internal,
        };
        CliError::new(kind, e)
    }
}

/// Paths and options of one run. Relative paths resolve against the
/// directory holding the config file.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub parsed: Vec<(Language, PathBuf)>,
    pub manifest: PathBuf,
    pub registers: PathBuf,
    pub annotator_config: Option<PathBuf>,
    pub corrections: Option<PathBuf>,
    pub output: PathBuf,
    pub subsets: Vec<SubsetName>,
    pub granularity: Granularity,
    pub format: Format,
    /// `(name, outputs, parsed translations)` in declaration order.
    pub systems: Vec<(String, Option<PathBuf>, Vec<PathBuf>)>,
}

impl RunConfig {
    /// Parse `key = value` lines. `parsed.zh` / `parsed.en` and
    /// `system.NAME.parsed` may repeat.
    pub fn parse(content: &str, base: &Path) -> Result<Self, CliError> {
        let entries = crate::text::parse_key_values(content)
            .map_err(|(line, message)| CliError::config(format!("line {line}: {message}")))?;
        let resolve = |v: &str| base.join(v);
        let mut parsed = Vec::new();
        let mut manifest = None;
        let mut registers = None;
        let mut annotator_config = None;
        let mut corrections = None;
        let mut output = None;
        let mut subsets = SubsetName::ALL.to_vec();
        let mut granularity = Granularity::Auto;
        let mut format = Format::Json;
        let mut systems: Vec<(String, Option<PathBuf>, Vec<PathBuf>)> = Vec::new();

        for (line, key, value) in entries {
            let err = |m: String| CliError::config(format!("line {line}: {m}"));
            match key.as_str() {
                "parsed.zh" => parsed.push((Language::Zh, resolve(&value))),
                "parsed.en" => parsed.push((Language::En, resolve(&value))),
                "manifest" => manifest = Some(resolve(&value)),
                "registers" => registers = Some(resolve(&value)),
                "annotator_config" => annotator_config = Some(resolve(&value)),
                "corrections" => corrections = Some(resolve(&value)),
                "output" => output = Some(resolve(&value)),
                "subsets" => {
                    subsets = value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(|s| s.parse().map_err(|s| err(format!("unknown subset {s}"))))
                        .collect::<Result<_, _>>()?;
                    subsets.sort();
                    subsets.dedup();
                }
                "consistency" => {
                    granularity = value.parse().map_err(|v| err(format!("unknown consistency granularity {v}")))?
                }
                "format" => format = value.parse().map_err(|v| err(format!("unknown format {v}")))?,
                k if k.starts_with("system.") => {
                    let rest = &k["system.".len()..];
                    let (name, is_parsed) = match rest.strip_suffix(".parsed") {
                        Some(n) => (n, true),
                        None => (rest, false),
                    };
                    if name.is_empty() {
                        return Err(err(format!("missing system name in {k}")));
                    }
                    let i = match systems.iter().position(|(n, _, _)| n == name) {
                        Some(i) => i,
                        None => {
                            systems.push((name.to_string(), None, Vec::new()));
                            systems.len() - 1
                        }
                    };
                    if is_parsed {
                        systems[i].2.push(resolve(&value));
                    } else if systems[i].1.replace(resolve(&value)).is_some() {
                        return Err(err(format!("system {name} declared twice")));
                    }
                }
                other => return Err(err(format!("unknown key {other}"))),
            }
        }
        let missing = |k: &str| CliError::config(format!("missing required key {k}"));
        Ok(RunConfig {
            parsed,
            manifest: manifest.ok_or_else(|| missing("manifest"))?,
            registers: registers.ok_or_else(|| missing("registers"))?,
            annotator_config,
            corrections,
            output: output.ok_or_else(|| missing("output"))?,
            subsets,
            granularity,
            format,
            systems,
        })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let content = std::fs::read_to_string(path)
            .map_err(|e| CliError::config(format!("cannot read config {}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new("."));
        let config = Self::parse(&content, base).map_err(|e| CliError::config(format!("{}: {}", path.display(), e.message)))?;
        config.validate()?;
        Ok(config)
    }

    /// Every referenced input must exist.
    pub fn validate(&self) -> Result<(), CliError> {
        let inputs = self
            .parsed
            .iter()
            .map(|(_, p)| p)
            .chain([&self.manifest, &self.registers])
            .chain(self.annotator_config.iter())
            .chain(self.corrections.iter())
            .chain(self.systems.iter().flat_map(|(_, o, p)| o.iter().chain(p)));
        for p in inputs {
            if !p.is_file() {
                return Err(CliError::load(format!("no such file: {}", p.display())));
            }
        }
        if self.parsed.is_empty() {
            return Err(CliError::config("no parsed.zh / parsed.en files configured"));
        }
        Ok(())
    }

    fn annotation_path(&self, subset: SubsetName, side: Side) -> PathBuf {
        self.output.join(ANNOTATION_DIR).join(format!("{}.{}.tsv", subset.slug(), side))
    }
}

/// Output collected during a command; written once at the end.
#[derive(Debug, Default)]
struct Run {
    files: BTreeMap<PathBuf, String>,
    warnings: Vec<String>,
    log: String,
    started: Option<Instant>,
}

impl Run {
    fn start() -> Self {
        Run { started: Some(Instant::now()), ..Run::default() }
    }

    fn log(&mut self, message: impl std::fmt::Display) {
        let ms = self.started.map(|t| t.elapsed().as_secs_f64() * 1000.0).unwrap_or(0.0);
        let _ = writeln!(self.log, "[{ms:9.1} ms] {message}");
    }

    fn warn(&mut self, message: String) {
        self.log(format!("warning: {message}"));
        self.warnings.push(message);
    }

    fn file(&mut self, path: PathBuf, content: String) {
        self.files.insert(path, content);
    }

    fn finish(mut self, output: &Path, command: &str) -> Result<Vec<String>, CliError> {
        let io = |p: &Path, e: std::io::Error| CliError::new(ErrorKind::Io, format!("cannot write {}: {e}", p.display()));
        self.log(format!("{command}: writing {} files", self.files.len()));
        for (path, content) in &self.files {
            if let Some(dir) = path.parent() {
                std::fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
            }
            std::fs::write(path, content).map_err(|e| io(path, e))?;
        }
        std::fs::create_dir_all(output).map_err(|e| io(output, e))?;
        let log_path = output.join(format!("{command}.log"));
        self.log(format!("{command}: done"));
        std::fs::write(&log_path, &self.log).map_err(|e| io(&log_path, e))?;
        Ok(self.warnings)
    }
}

fn load_corpus(config: &RunConfig, run: &mut Run) -> Result<Vec<SentencePair>, CliError> {
    let mut store = SentenceStore::new();
    for (lang, path) in &config.parsed {
        let sentences = load_parsed_file(path, *lang).map_err(CliError::load)?;
        run.log(format!("loaded {} {lang} sentences from {}", sentences.len(), path.display()));
        store.extend(sentences).map_err(|e| CliError::load(format!("{}: {e}", path.display())))?;
    }
    let registers = load_register_map(&config.registers).map_err(CliError::load)?;
    let pairs = load_manifest(&config.manifest, &registers, &store).map_err(CliError::load)?;
    run.log(format!("loaded {} pairs", pairs.len()));
    Ok(pairs)
}

fn load_partition(config: &RunConfig) -> Result<Partition, CliError> {
    let path = config.output.join(SUBSETS_FILE);
    let content = std::fs::read_to_string(&path)
        .map_err(|e| CliError::load(format!("cannot read {} (run extract first): {e}", path.display())))?;
    parse_membership(&content).map_err(|e| CliError::load(format!("{}: {e}", path.display())))
}

fn subset_pairs<'a>(partition: &Partition, subset: SubsetName, by_id: &HashMap<&str, &'a SentencePair>) -> Result<Vec<&'a SentencePair>, CliError> {
    partition
        .members(subset)
        .iter()
        .map(|id| {
            by_id
                .get(id.as_str())
                .copied()
                .ok_or_else(|| CliError::load(format!("subset {subset} lists unknown pair {id}")))
        })
        .collect()
}

pub fn cmd_extract(config: &RunConfig) -> Result<Vec<String>, CliError> {
    let mut run = Run::start();
    let pairs = load_corpus(config, &mut run)?;
    let verdicts: Vec<_> = pairs.iter().map(clean_pair).collect();
    let kept: Vec<SentencePair> =
        pairs.iter().zip(&verdicts).filter(|(_, v)| v.keep).map(|(p, _)| p.clone()).collect();
    run.log(format!("kept {} of {} pairs", kept.len(), pairs.len()));

    let full = partition_subsets(&kept);
    let mut partition = Partition::default();
    for subset in &config.subsets {
        for id in full.members(*subset) {
            partition.insert(*subset, id.clone());
        }
    }
    if partition.is_empty() {
        run.warn("no pair belongs to any selected subset".to_string());
    }
    let census = subset_census(&partition, &kept);

    run.file(
        config.output.join(CLEANING_FILE),
        write_cleaning_report(pairs.iter().zip(&verdicts).map(|(p, v)| (p.pair_id.as_str(), *v))),
    );
    run.file(config.output.join(SUBSETS_FILE), write_membership(&partition));
    run.file(config.output.join(CENSUS_FILE), write_census(&census));
    run.finish(&config.output, "extract")
}

fn load_annotator(config: &RunConfig) -> Result<Annotator, CliError> {
    let annotator_config = match &config.annotator_config {
        Some(path) => AnnotatorConfig::load(path).map_err(|e| CliError::config(format!("{}: {e}", path.display())))?,
        None => AnnotatorConfig::default(),
    };
    Ok(Annotator::new(annotator_config))
}

pub fn cmd_annotate(config: &RunConfig) -> Result<Vec<String>, CliError> {
    let mut run = Run::start();
    let pairs = load_corpus(config, &mut run)?;
    let by_id: HashMap<&str, &SentencePair> = pairs.iter().map(|p| (p.pair_id.as_str(), p)).collect();
    let partition = load_partition(config)?;
    let annotator = load_annotator(config)?;
    let corrections: Vec<Correction> = match &config.corrections {
        Some(path) => {
            let content = std::fs::read_to_string(path).map_err(|e| CliError::load(format!("{}: {e}", path.display())))?;
            parse_corrections(&content).map_err(|e| CliError::load(format!("{}: {e}", path.display())))?
        }
        None => Vec::new(),
    };
    let mut applied = vec![false; corrections.len()];

    let mut not_evaluable = 0usize;
    for &subset in &config.subsets {
        let members = subset_pairs(&partition, subset, &by_id)?;
        for side in [Side::Source, Side::Target] {
            let mut annotations = Vec::with_capacity(members.len());
            for pair in &members {
                let sentence = match side {
                    Side::Source => &pair.source,
                    Side::Target => &pair.target,
                };
                let labeling = annotator.annotate(sentence);
                if !labeling.not_evaluable.is_empty() {
                    not_evaluable += 1;
                }
                annotations.push(Annotation::new(&pair.pair_id, side, &labeling));
            }
            let ids: std::collections::HashSet<&str> = members.iter().map(|p| p.pair_id.as_str()).collect();
            let relevant: Vec<Correction> = corrections
                .iter()
                .enumerate()
                .filter(|(_, c)| c.side == side && ids.contains(c.pair_id.as_str()))
                .map(|(i, c)| {
                    applied[i] = true;
                    c.clone()
                })
                .collect();
            let annotations = apply_corrections(&annotations, &relevant).map_err(CliError::load)?;
            run.log(format!("{subset} {side}: {} annotations, {} corrections", annotations.len(), relevant.len()));
            run.file(config.annotation_path(subset, side), write_annotations(&annotations));
        }
    }
    if let Some(i) = applied.iter().position(|a| !a) {
        let c = &corrections[i];
        return Err(CliError::load(format!("correction for pair {} ({}) matches no annotated pair", c.pair_id, c.side)));
    }
    if not_evaluable > 0 {
        run.warn(format!("{not_evaluable} sentences lack a semantic layer needed by some rule"));
    }
    run.finish(&config.output, "annotate")
}

fn sniff_language(content: &str) -> Option<Language> {
    content.lines().find_map(|l| {
        let (key, value) = l.strip_prefix('#')?.split_once('=')?;
        (key.trim() == "lang").then(|| value.trim().parse().ok()).flatten()
    })
}

/// A system's outputs and parsed translations keyed by pair id.
#[derive(Default)]
struct SystemData {
    name: String,
    outputs: Option<SystemOutputs>,
    parsed: HashMap<String, Arc<ParsedSentence>>,
}

fn load_system(name: &str, outputs: Option<&Path>, parsed: &[PathBuf]) -> Result<SystemData, CliError> {
    let mut data = SystemData { name: name.to_string(), ..SystemData::default() };
    if let Some(path) = outputs {
        let content = std::fs::read_to_string(path).map_err(|e| CliError::load(format!("{}: {e}", path.display())))?;
        data.outputs = Some(parse_system_outputs(&content).map_err(|e| CliError::load(format!("{}: {e}", path.display())))?);
    }
    for path in parsed {
        let content = std::fs::read_to_string(path).map_err(|e| CliError::load(format!("{}: {e}", path.display())))?;
        let lang = sniff_language(&content)
            .ok_or_else(|| CliError::load(format!("{}: no `# lang = ...` comment", path.display())))?;
        for s in parse_parsed(&content, lang).map_err(|e| CliError::load(format!("{}: {e}", path.display())))? {
            let id = s.id().to_string();
            if data.parsed.insert(id.clone(), Arc::new(s)).is_some() {
                return Err(CliError::load(format!("{}: duplicate sentence id {id}", path.display())));
            }
        }
    }
    Ok(data)
}

pub fn cmd_evaluate(
    config: &RunConfig,
    extra_systems: &[(String, PathBuf)],
    extra_parsed: &[(String, PathBuf)],
    format: Format,
) -> Result<Vec<String>, CliError> {
    let mut run = Run::start();
    let pairs = load_corpus(config, &mut run)?;
    let by_id: HashMap<&str, &SentencePair> = pairs.iter().map(|p| (p.pair_id.as_str(), p)).collect();
    let partition = load_partition(config)?;
    let annotator = load_annotator(config)?;

    let mut declared = config.systems.clone();
    for (name, path) in extra_systems {
        match declared.iter_mut().find(|(n, _, _)| n == name) {
            Some(entry) => entry.1 = Some(path.clone()),
            None => declared.push((name.clone(), Some(path.clone()), Vec::new())),
        }
    }
    for (name, path) in extra_parsed {
        match declared.iter_mut().find(|(n, _, _)| n == name) {
            Some(entry) => entry.2.push(path.clone()),
            None => return Err(CliError::config(format!("--parsed for undeclared system {name}"))),
        }
    }
    let systems: Vec<SystemData> = declared
        .iter()
        .map(|(name, outputs, parsed)| load_system(name, outputs.as_deref(), parsed))
        .collect::<Result<_, _>>()?;
    run.log(format!("loaded {} systems", systems.len()));

    let mut report = Report { subsets: Vec::new() };
    for &subset in &config.subsets {
        let members = subset_pairs(&partition, subset, &by_id)?;
        let read = |side| -> Result<Vec<Annotation>, CliError> {
            let path = config.annotation_path(subset, side);
            let content = std::fs::read_to_string(&path)
                .map_err(|e| CliError::load(format!("cannot read {} (run annotate first): {e}", path.display())))?;
            parse_annotations(&content).map_err(|e| CliError::load(format!("{}: {e}", path.display())))
        };
        let human_source = read(Side::Source)?;
        let human_target = read(Side::Target)?;
        let target_lang = subset.direction().target_language();

        let mut columns = Vec::with_capacity(systems.len());
        for system in &systems {
            let scores = match &system.outputs {
                Some(outputs) if !members.is_empty() => Some(score_subset(&members, outputs, target_lang).map_err(|e| match e {
                    MetricError::MissingOutputs(ids) => CliError::new(
                        ErrorKind::PairSet,
                        format!("system {} has no output for {subset} pairs: {}", system.name, ids.join(", ")),
                    ),
                    e => CliError::new(ErrorKind::Internal, format!("system {}: {e}", system.name)),
                })?),
                _ => None,
            };
            let annotations = if system.parsed.is_empty() {
                None
            } else {
                let mut out = Vec::new();
                for pair in &members {
                    if let Some(s) = system.parsed.get(&pair.pair_id) {
                        if s.language() != target_lang {
                            return Err(CliError::load(format!(
                                "system {}: parse of {} is {}, expected {target_lang}",
                                system.name,
                                pair.pair_id,
                                s.language()
                            )));
                        }
                        out.push(Annotation::new(&pair.pair_id, Side::Target, &annotator.annotate(s)));
                    }
                }
                Some(out)
            };
            columns.push(SystemColumn { name: system.name.clone(), annotations, scores });
        }
        let r = compare_report(subset, &members, &human_source, &human_target, &columns, config.granularity)
            .map_err(|e| match e {
                EvalError::PairSetMismatch { .. } => CliError::new(ErrorKind::PairSet, format!("{subset}: {e}")),
                e => CliError::from(e),
            })?;
        for w in &r.warnings {
            run.warn(w.clone());
        }
        run.log(format!("{subset}: {} pairs compared", members.len()));
        report.subsets.push(r);
    }

    run.file(config.output.join(SCORECARD_FILE), to_json(&report.scorecard()));
    match format {
        Format::Json => run.file(config.output.join("report.json"), to_json(&report)),
        Format::Md => run.file(config.output.join("report.md"), render_markdown(&report)),
        Format::Csv => {
            for (name, content) in render_csv(&report) {
                run.file(config.output.join("report").join(name), content);
            }
        }
    }
    run.finish(&config.output, "evaluate")
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Run a parsed command line, returning warnings on success.
pub fn execute(cli: Cli) -> Result<Vec<String>, CliError> {
    match cli.command {
        Command::Extract(a) => cmd_extract(&RunConfig::load(&a.config)?),
        Command::Annotate(a) => cmd_annotate(&RunConfig::load(&a.config)?),
        Command::Evaluate(a) => {
            let config = RunConfig::load(&a.config.config)?;
            for (_, p) in a.systems.iter().chain(&a.parsed) {
                if !p.is_file() {
                    return Err(CliError::load(format!("no such file: {}", p.display())));
                }
            }
            let format = a.format.unwrap_or(config.format);
            cmd_evaluate(&config, &a.systems, &a.parsed, format)
        }
    }
}

/// Entry point for the binary: parse arguments, run, report, and return the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            if e.use_stderr() {
                let first = e.to_string();
                let first = first.lines().next().unwrap_or("").trim_start_matches("error: ");
                eprintln!("error[E_USAGE]: {first}");
            } else {
                let _ = e.print();
            }
            return code;
        }
    };
    match execute(cli) {
        Ok(warnings) => {
            for w in warnings {
                eprintln!("warning: {w}");
            }
            0
        }
        Err(e) => {
            eprintln!("{}", e.line());
            e.kind.exit_code()
        }
    }
}
