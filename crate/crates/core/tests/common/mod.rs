#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use passivelens::corpus::{load_manifest, load_parsed_file, load_register_map, SentenceStore};
use passivelens::{Language, ParsedSentence, SentencePair};

pub const PATH_KEYS: [&str; 6] = ["parsed.zh", "parsed.en", "manifest", "registers", "annotator_config", "corrections"];

pub fn mini_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join("mini")
}

pub fn golden(name: &str) -> String {
    read(&mini_dir().join("golden").join(name))
}

pub fn read(path: &Path) -> String {
    fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn human_sentences() -> Vec<ParsedSentence> {
    let dir = mini_dir();
    let mut out = load_parsed_file(dir.join("human.zh.conll"), Language::Zh).unwrap();
    out.extend(load_parsed_file(dir.join("human.en.conll"), Language::En).unwrap());
    out
}

pub fn mini_pairs() -> Vec<SentencePair> {
    let dir = mini_dir();
    let mut store = SentenceStore::new();
    store.extend(human_sentences()).unwrap();
    let registers = load_register_map(dir.join("registers.tsv")).unwrap();
    load_manifest(dir.join("manifest.tsv"), &registers, &store).unwrap()
}

/// Rows of a headed TSV file, header dropped.
pub fn tsv(content: &str) -> Vec<Vec<String>> {
    content.lines().skip(1).filter(|l| !l.is_empty()).map(|l| l.split('\t').map(str::to_string).collect()).collect()
}

pub fn golden_labels() -> HashMap<String, String> {
    tsv(&golden("labels.tsv")).into_iter().map(|r| (r[0].clone(), r[1].clone())).collect()
}

/// The bundled run configuration with absolute input paths, a different
/// output directory and optional overrides (`key = value` lines appended or
/// replacing the original key).
pub fn write_config(dir: &Path, output: &Path, overrides: &[(&str, &str)]) -> PathBuf {
    let mini = mini_dir();
    let mut lines = Vec::new();
    for line in read(&mini.join("run.conf")).lines() {
        let Some((key, value)) = line.split_once('=') else { continue };
        let (key, value) = (key.trim(), value.trim());
        if overrides.iter().any(|(k, _)| *k == key) {
            continue;
        }
        let value = if key == "output" {
            output.display().to_string()
        } else if PATH_KEYS.contains(&key) || key.starts_with("system.") {
            mini.join(value).display().to_string()
        } else {
            value.to_string()
        };
        lines.push(format!("{key} = {value}"));
    }
    for (k, v) in overrides {
        if !v.is_empty() {
            lines.push(format!("{k} = {v}"));
        }
    }
    let path = dir.join("run.conf");
    fs::write(&path, lines.join("\n") + "\n").unwrap();
    path
}

pub fn run(args: &[&str]) -> i32 {
    passivelens::cli::main_with_args(std::iter::once("passivelens").chain(args.iter().copied()))
}

/// extract → annotate → evaluate; returns the three exit codes.
pub fn pipeline(config: &Path) -> [i32; 3] {
    let c = config.to_str().unwrap();
    [run(&["extract", "--config", c]), run(&["annotate", "--config", c]), run(&["evaluate", "--config", c])]
}

/// Every file below `dir` except run logs, keyed by relative path.
pub fn snapshot(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    fn walk(root: &Path, dir: &Path, out: &mut BTreeMap<String, Vec<u8>>) {
        for entry in fs::read_dir(dir).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                walk(root, &path, out);
            } else if path.extension().is_none_or(|e| e != "log") {
                let rel = path.strip_prefix(root).unwrap().to_string_lossy().replace('\\', "/");
                out.insert(rel, fs::read(&path).unwrap());
            }
        }
    }
    let mut out = BTreeMap::new();
    walk(dir, dir, &mut out);
    out
}
