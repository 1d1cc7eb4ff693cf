//! Corpus data model: parsed tokens and sentences, aligned sentence pairs,
//! registers, and the loaders for the on-disk formats.

mod conll;
mod manifest;

use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use conll::{load_parsed_file, parse_parsed, write_parsed};
pub use manifest::{load_manifest, load_register_map, parse_manifest, parse_register_map, RegisterMap};

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    InFile {
        path: PathBuf,
        #[source]
        source: Box<CorpusError>,
    },
    #[error("line {line}: malformed line: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: sentence block has no `# id = ...` comment")]
    MissingId { line: usize },
    #[error("sentence {sentence}: dangling head {head} on token {token}")]
    DanglingHead { sentence: String, token: usize, head: usize },
    #[error("sentence {sentence}: token {token}: {message}")]
    InvalidToken { sentence: String, token: usize, message: String },
    #[error("sentence {sentence}: expected language {expected}, found {found}")]
    LanguageMismatch { sentence: String, expected: Language, found: Language },
    #[error("duplicate sentence id {0}")]
    DuplicateSentenceId(String),
    #[error("line {line}: unknown sentence id {id}")]
    UnknownSentenceId { line: usize, id: String },
    #[error("line {line}: duplicate pair id {id}")]
    DuplicatePairId { line: usize, id: String },
    #[error("line {line}: pair {pair}: {message}")]
    DirectionMismatch { line: usize, pair: String, message: String },
    #[error("line {line}: ({corpus}, {genre}) is not in the register map")]
    UnmappedGenre { line: usize, corpus: String, genre: String },
    #[error("line {line}: unknown register {name}")]
    UnknownRegister { line: usize, name: String },
    #[error("line {line}: duplicate register entry for ({corpus}, {genre})")]
    DuplicateRegisterKey { line: usize, corpus: String, genre: String },
    #[error("line {line}: invalid direction {value}")]
    InvalidDirection { line: usize, value: String },
    #[error("line {line}: invalid language {value}")]
    InvalidLanguage { line: usize, value: String },
    #[error("bad header: expected `{expected}`, found `{found}`")]
    BadHeader { expected: String, found: String },
}

impl CorpusError {
    pub(crate) fn in_file(self, path: impl Into<PathBuf>) -> Self {
        CorpusError::InFile { path: path.into(), source: Box::new(self) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Language {
    Zh,
    En,
}

impl Language {
    pub fn as_str(self) -> &'static str {
        match self {
            Language::Zh => "zh",
            Language::En => "en",
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Language {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "zh" => Ok(Language::Zh),
            "en" => Ok(Language::En),
            other => Err(other.to_string()),
        }
    }
}

/// A semantic dependency arc: relation label and 1-based head (0 = root).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemArc {
    pub head: usize,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParsedToken {
    /// 1-based position in the sentence.
    pub index: usize,
    pub form: String,
    pub lemma: String,
    /// Tag from the upstream tagger, matched literally.
    pub pos: String,
    /// 1-based syntactic head, 0 for the root.
    pub dep_head: usize,
    pub dep_label: String,
    pub sem: Option<SemArc>,
    pub misc: Option<String>,
}

impl ParsedToken {
    pub fn new(
        index: usize,
        form: impl Into<String>,
        lemma: impl Into<String>,
        pos: impl Into<String>,
        dep_head: usize,
        dep_label: impl Into<String>,
    ) -> Self {
        ParsedToken {
            index,
            form: form.into(),
            lemma: lemma.into(),
            pos: pos.into(),
            dep_head,
            dep_label: dep_label.into(),
            sem: None,
            misc: None,
        }
    }

    pub fn with_sem(mut self, head: usize, label: impl Into<String>) -> Self {
        self.sem = Some(SemArc { head, label: label.into() });
        self
    }

    pub fn sem_label(&self) -> Option<&str> {
        self.sem.as_ref().map(|s| s.label.as_str())
    }

    pub fn sem_head(&self) -> Option<usize> {
        self.sem.as_ref().map(|s| s.head)
    }
}

/// An immutable, validated sentence. Token indices are `1..=n` and every
/// head refers to an existing token or to 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParsedSentence {
    id: String,
    language: Language,
    tokens: Vec<ParsedToken>,
    text: Option<String>,
}

impl ParsedSentence {
    pub fn new(
        id: impl Into<String>,
        language: Language,
        tokens: Vec<ParsedToken>,
        text: Option<String>,
    ) -> Result<Self, CorpusError> {
        let id = id.into();
        let n = tokens.len();
        for (pos, token) in tokens.iter().enumerate() {
            let invalid = |message: &str| CorpusError::InvalidToken {
                sentence: id.clone(),
                token: token.index,
                message: message.to_string(),
            };
            if token.index != pos + 1 {
                return Err(invalid(&format!("expected index {}", pos + 1)));
            }
            if token.dep_head == token.index {
                return Err(invalid("token is its own head"));
            }
            if token.dep_head > n {
                return Err(CorpusError::DanglingHead {
                    sentence: id.clone(),
                    token: token.index,
                    head: token.dep_head,
                });
            }
            if let Some(sem) = &token.sem {
                if sem.head > n {
                    return Err(CorpusError::DanglingHead {
                        sentence: id.clone(),
                        token: token.index,
                        head: sem.head,
                    });
                }
            }
        }
        Ok(ParsedSentence { id, language, tokens, text })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn tokens(&self) -> &[ParsedToken] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Token at a 1-based index.
    pub fn token(&self, index: usize) -> Option<&ParsedToken> {
        index.checked_sub(1).and_then(|i| self.tokens.get(i))
    }

    pub fn raw_text(&self) -> Option<&str> {
        self.text.as_deref()
    }

    /// Surface text: the stored raw text, or the forms joined (without
    /// spaces for Chinese, with single spaces for English).
    pub fn surface(&self) -> String {
        if let Some(text) = &self.text {
            return text.clone();
        }
        let sep = match self.language {
            Language::Zh => "",
            Language::En => " ",
        };
        self.tokens.iter().map(|t| t.form.as_str()).collect::<Vec<_>>().join(sep)
    }

    /// True when at least one token carries a semantic arc.
    pub fn has_semantic_layer(&self) -> bool {
        self.tokens.iter().any(|t| t.sem.is_some())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "ZH→EN")]
    ZhToEn,
    #[serde(rename = "EN→ZH")]
    EnToZh,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::ZhToEn => "ZH→EN",
            Direction::EnToZh => "EN→ZH",
        }
    }

    pub fn source_language(self) -> Language {
        match self {
            Direction::ZhToEn => Language::Zh,
            Direction::EnToZh => Language::En,
        }
    }

    pub fn target_language(self) -> Language {
        match self {
            Direction::ZhToEn => Language::En,
            Direction::EnToZh => Language::Zh,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Direction {
    type Err = String;

    /// Accepts `ZH→EN`, `ZH->EN` and `ZH-EN` in any case.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('→', "-").replace("->", "-");
        match norm.as_str() {
            "ZH-EN" => Ok(Direction::ZhToEn),
            "EN-ZH" => Ok(Direction::EnToZh),
            _ => Err(s.to_string()),
        }
    }
}

/// The five text-type strata used for stratified reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Register {
    #[serde(rename = "A_PRESS")]
    Press,
    #[serde(rename = "B_OFFICIAL_DOCUMENT")]
    OfficialDocument,
    #[serde(rename = "C_ACADEMIC_PROSE")]
    AcademicProse,
    #[serde(rename = "D_GENERAL_PROSE")]
    GeneralProse,
    #[serde(rename = "E_LITERATURE")]
    Literature,
}

impl Register {
    pub const ALL: [Register; 5] = [
        Register::Press,
        Register::OfficialDocument,
        Register::AcademicProse,
        Register::GeneralProse,
        Register::Literature,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Register::Press => "A_PRESS",
            Register::OfficialDocument => "B_OFFICIAL_DOCUMENT",
            Register::AcademicProse => "C_ACADEMIC_PROSE",
            Register::GeneralProse => "D_GENERAL_PROSE",
            Register::Literature => "E_LITERATURE",
        }
    }
}

impl fmt::Display for Register {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Register {
    type Err = String;

    /// Canonical names; spaces are accepted in place of underscores.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace(' ', "_");
        Register::ALL
            .into_iter()
            .find(|r| r.as_str() == norm)
            .ok_or_else(|| s.to_string())
    }
}

/// An aligned source/target sentence pair with its provenance.
#[derive(Debug, Clone)]
pub struct SentencePair {
    pub pair_id: String,
    pub direction: Direction,
    pub source: Arc<ParsedSentence>,
    pub target: Arc<ParsedSentence>,
    pub corpus: String,
    pub genre: String,
    pub register: Register,
}

impl SentencePair {
    pub fn chinese(&self) -> &ParsedSentence {
        match self.direction {
            Direction::ZhToEn => &self.source,
            Direction::EnToZh => &self.target,
        }
    }

    pub fn english(&self) -> &ParsedSentence {
        match self.direction {
            Direction::ZhToEn => &self.target,
            Direction::EnToZh => &self.source,
        }
    }
}

/// Sentences indexed by id, shared between the pairs that reference them.
#[derive(Debug, Clone, Default)]
pub struct SentenceStore {
    sentences: HashMap<String, Arc<ParsedSentence>>,
}

impl SentenceStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, sentence: ParsedSentence) -> Result<(), CorpusError> {
        if self.sentences.contains_key(sentence.id()) {
            return Err(CorpusError::DuplicateSentenceId(sentence.id().to_string()));
        }
        self.sentences.insert(sentence.id().to_string(), Arc::new(sentence));
        Ok(())
    }

    pub fn extend(&mut self, sentences: Vec<ParsedSentence>) -> Result<(), CorpusError> {
        sentences.into_iter().try_for_each(|s| self.insert(s))
    }

    pub fn get(&self, id: &str) -> Option<&Arc<ParsedSentence>> {
        self.sentences.get(id)
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }
}
