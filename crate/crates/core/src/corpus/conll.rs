//! Reader and writer for the parsed-sentence format: CoNLL-style TAB
//! separated columns `INDEX FORM LEMMA POS DEPHEAD DEPREL SEMHEAD SEMREL MISC`,
//! `_` for absent values, `# id = ` / `# lang = ` / `# text = ` comments
//! before each block and a blank line after it.
//!
//! 12-column CoNLL-U extended with `SEMHEAD SEMREL` is accepted on input as
//! well; POS is then taken from XPOS, falling back to UPOS.

use std::fmt::Write as _;
use std::path::Path;

use super::{CorpusError, Language, ParsedSentence, ParsedToken, SemArc};
use crate::text::strip_bom;

const ABSENT: &str = "_";

pub fn load_parsed_file(path: impl AsRef<Path>, language: Language) -> Result<Vec<ParsedSentence>, CorpusError> {
    let path = path.as_ref();
    let content = std::fs::read_to_string(path).map_err(|source| CorpusError::Io { path: path.to_path_buf(), source })?;
    parse_parsed(&content, language).map_err(|e| e.in_file(path))
}

#[derive(Default)]
struct Block {
    id: Option<String>,
    lang: Option<Language>,
    text: Option<String>,
    tokens: Vec<ParsedToken>,
    start_line: usize,
}

impl Block {
    fn is_started(&self) -> bool {
        self.id.is_some() || !self.tokens.is_empty()
    }

    fn finish(self, language: Language) -> Result<ParsedSentence, CorpusError> {
        let id = self.id.ok_or(CorpusError::MissingId { line: self.start_line })?;
        if let Some(found) = self.lang {
            if found != language {
                return Err(CorpusError::LanguageMismatch { sentence: id, expected: language, found });
            }
        }
        ParsedSentence::new(id, language, self.tokens, self.text)
    }
}

pub fn parse_parsed(content: &str, language: Language) -> Result<Vec<ParsedSentence>, CorpusError> {
    let mut sentences = Vec::new();
    let mut block = Block::default();

    for (i, raw) in strip_bom(content).lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            if block.is_started() {
                sentences.push(std::mem::take(&mut block).finish(language)?);
            }
            continue;
        }
        if block.start_line == 0 {
            block.start_line = line_no;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some((key, value)) = comment.split_once('=') {
                let value = value.trim().to_string();
                match key.trim() {
                    "id" | "sent_id" => block.id = Some(value),
                    "lang" => {
                        let lang = value
                            .parse()
                            .map_err(|value| CorpusError::InvalidLanguage { line: line_no, value })?;
                        block.lang = Some(lang);
                    }
                    "text" => block.text = Some(value),
                    _ => {}
                }
            }
            continue;
        }
        if let Some(token) = parse_token_line(line, line_no)? {
            block.tokens.push(token);
        }
    }
    if block.is_started() {
        sentences.push(block.finish(language)?);
    }
    Ok(sentences)
}

fn parse_token_line(line: &str, line_no: usize) -> Result<Option<ParsedToken>, CorpusError> {
    let cols: Vec<&str> = line.split('\t').collect();
    let malformed = |message: String| CorpusError::Malformed { line: line_no, message };
    // (index, form, lemma, pos, head, deprel, semhead, semrel, misc)
    let fields = match cols.len() {
        9 => [cols[0], cols[1], cols[2], cols[3], cols[4], cols[5], cols[6], cols[7], cols[8]],
        12 => {
            // multiword ranges and empty nodes carry no head
            if cols[0].contains('-') || cols[0].contains('.') {
                return Ok(None);
            }
            let pos = if cols[4] != ABSENT { cols[4] } else { cols[3] };
            [cols[0], cols[1], cols[2], pos, cols[6], cols[7], cols[10], cols[11], cols[9]]
        }
        n => return Err(malformed(format!("expected 9 or 12 tab-separated columns, found {n}"))),
    };
    let [index, form, lemma, pos, head, deprel, sem_head, sem_rel, misc] = fields;

    let index: usize = index
        .parse()
        .ok()
        .filter(|&i| i >= 1)
        .ok_or_else(|| malformed(format!("invalid token index {index:?}")))?;
    let dep_head: usize = head.parse().map_err(|_| malformed(format!("invalid head {head:?}")))?;
    let sem = match (sem_head, sem_rel) {
        (ABSENT, ABSENT) => None,
        (ABSENT, _) | (_, ABSENT) => {
            return Err(malformed("semantic head and relation must be both present or both absent".into()))
        }
        (h, rel) => Some(SemArc {
            head: h.parse().map_err(|_| malformed(format!("invalid semantic head {h:?}")))?,
            label: rel.to_string(),
        }),
    };
    Ok(Some(ParsedToken {
        index,
        form: form.to_string(),
        lemma: lemma.to_string(),
        pos: pos.to_string(),
        dep_head,
        dep_label: deprel.to_string(),
        sem,
        misc: (misc != ABSENT).then(|| misc.to_string()),
    }))
}

/// Serialize sentences in the 9-column format accepted by [`parse_parsed`].
pub fn write_parsed(sentences: &[ParsedSentence]) -> String {
    let mut out = String::new();
    for s in sentences {
        let _ = writeln!(out, "# id = {}", s.id());
        let _ = writeln!(out, "# lang = {}", s.language());
        if let Some(text) = s.raw_text() {
            let _ = writeln!(out, "# text = {text}");
        }
        for t in s.tokens() {
            let (sem_head, sem_rel) = match &t.sem {
                Some(arc) => (arc.head.to_string(), arc.label.as_str()),
                None => (ABSENT.to_string(), ABSENT),
            };
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                t.index,
                t.form,
                t.lemma,
                t.pos,
                t.dep_head,
                t.dep_label,
                sem_head,
                sem_rel,
                t.misc.as_deref().unwrap_or(ABSENT)
            );
        }
        out.push('\n');
    }
    out
}
