//! Alignment manifests and the (corpus, genre) → register mapping.

use std::collections::{BTreeMap, HashSet};
use std::path::Path;

use super::{CorpusError, Register, SentencePair, SentenceStore};
use crate::text::{strip_bom, tsv_rows};

const MANIFEST_HEADER: [&str; 6] = ["pair_id", "direction", "corpus", "genre", "src_id", "tgt_id"];
const REGISTER_HEADER: [&str; 3] = ["corpus", "genre", "register"];

/// Total mapping from (corpus, genre) to register. Lookups never fall back
/// to a default: an unmapped genre is an error at manifest load time.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RegisterMap {
    entries: BTreeMap<(String, String), Register>,
}

impl RegisterMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `false` (and leaves the map unchanged) if the key exists.
    pub fn insert(&mut self, corpus: impl Into<String>, genre: impl Into<String>, register: Register) -> bool {
        let key = (corpus.into(), genre.into());
        if self.entries.contains_key(&key) {
            return false;
        }
        self.entries.insert(key, register);
        true
    }

    pub fn get(&self, corpus: &str, genre: &str) -> Option<Register> {
        self.entries.get(&(corpus.to_string(), genre.to_string())).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str, Register)> {
        self.entries.iter().map(|((c, g), r)| (c.as_str(), g.as_str(), *r))
    }
}

pub fn load_register_map(path: impl AsRef<Path>) -> Result<RegisterMap, CorpusError> {
    let path = path.as_ref();
    let content = std::fs::read_to_string(path).map_err(|source| CorpusError::Io { path: path.to_path_buf(), source })?;
    parse_register_map(&content).map_err(|e| e.in_file(path))
}

/// Parse `corpus TAB genre TAB register` rows; a header row is optional.
pub fn parse_register_map(content: &str) -> Result<RegisterMap, CorpusError> {
    let mut map = RegisterMap::new();
    for (line, fields) in tsv_rows(strip_bom(content)) {
        if fields == REGISTER_HEADER {
            continue;
        }
        let [corpus, genre, register] = fields[..] else {
            return Err(CorpusError::Malformed { line, message: format!("expected 3 columns, found {}", fields.len()) });
        };
        let register: Register =
            register.parse().map_err(|name| CorpusError::UnknownRegister { line, name })?;
        if !map.insert(corpus.trim(), genre.trim(), register) {
            return Err(CorpusError::DuplicateRegisterKey {
                line,
                corpus: corpus.trim().to_string(),
                genre: genre.trim().to_string(),
            });
        }
    }
    Ok(map)
}

pub fn load_manifest(
    path: impl AsRef<Path>,
    registers: &RegisterMap,
    sentences: &SentenceStore,
) -> Result<Vec<SentencePair>, CorpusError> {
    let path = path.as_ref();
    let content = std::fs::read_to_string(path).map_err(|source| CorpusError::Io { path: path.to_path_buf(), source })?;
    parse_manifest(&content, registers, sentences).map_err(|e| e.in_file(path))
}

/// Parse a manifest with header `pair_id direction corpus genre src_id tgt_id`.
pub fn parse_manifest(
    content: &str,
    registers: &RegisterMap,
    sentences: &SentenceStore,
) -> Result<Vec<SentencePair>, CorpusError> {
    let mut rows = tsv_rows(strip_bom(content));
    match rows.next() {
        Some((_, header)) if header == MANIFEST_HEADER => {}
        Some((_, header)) => {
            return Err(CorpusError::BadHeader { expected: MANIFEST_HEADER.join("\t"), found: header.join("\t") })
        }
        None => return Ok(Vec::new()),
    }

    let mut seen = HashSet::new();
    let mut pairs = Vec::new();
    for (line, fields) in rows {
        let [pair_id, direction, corpus, genre, src_id, tgt_id] = fields[..] else {
            return Err(CorpusError::Malformed { line, message: format!("expected 6 columns, found {}", fields.len()) });
        };
        if !seen.insert(pair_id.to_string()) {
            return Err(CorpusError::DuplicatePairId { line, id: pair_id.to_string() });
        }
        let direction = direction
            .parse()
            .map_err(|value| CorpusError::InvalidDirection { line, value })?;
        let lookup = |id: &str| {
            sentences
                .get(id)
                .cloned()
                .ok_or_else(|| CorpusError::UnknownSentenceId { line, id: id.to_string() })
        };
        let source = lookup(src_id)?;
        let target = lookup(tgt_id)?;
        let register = registers.get(corpus, genre).ok_or_else(|| CorpusError::UnmappedGenre {
            line,
            corpus: corpus.to_string(),
            genre: genre.to_string(),
        })?;
        let pair = SentencePair {
            pair_id: pair_id.to_string(),
            direction,
            source,
            target,
            corpus: corpus.to_string(),
            genre: genre.to_string(),
            register,
        };
        check_languages(&pair, line)?;
        pairs.push(pair);
    }
    Ok(pairs)
}

fn check_languages(pair: &SentencePair, line: usize) -> Result<(), CorpusError> {
    let expect = [
        ("source", pair.source.language(), pair.direction.source_language()),
        ("target", pair.target.language(), pair.direction.target_language()),
    ];
    for (side, found, expected) in expect {
        if found != expected {
            return Err(CorpusError::DirectionMismatch {
                line,
                pair: pair.pair_id.clone(),
                message: format!("{side} sentence is {found} but direction {} needs {expected}", pair.direction),
            });
        }
    }
    Ok(())
}
