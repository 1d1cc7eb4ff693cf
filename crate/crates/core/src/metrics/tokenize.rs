use super::Segment;
use crate::text::is_punctuation;

/// Tokenization policy applied before n-gram extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tokenizer {
    /// Whitespace split with punctuation detached; case preserved.
    EnSimple,
    /// One token per non-whitespace character.
    ZhChar,
    /// The segment's own word list, or a whitespace split if it has none.
    Pretokenized,
}

impl Tokenizer {
    pub fn tokenize(self, segment: &Segment) -> Vec<String> {
        match self {
            Tokenizer::EnSimple => tokenize_en_simple(&segment.text),
            Tokenizer::ZhChar => tokenize_zh_char(&segment.text),
            Tokenizer::Pretokenized => match segment.pretokenized() {
                Some(words) => words.to_vec(),
                None => segment.text.split_whitespace().map(str::to_string).collect(),
            },
        }
    }
}

pub fn tokenize_zh_char(text: &str) -> Vec<String> {
    text.chars().filter(|c| !c.is_whitespace()).map(String::from).collect()
}

/// Approximation of the usual MT-evaluation tokenizer: every punctuation
/// character becomes its own token, runs of other characters stay together.
pub fn tokenize_en_simple(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for chunk in text.split_whitespace() {
        let mut word = String::new();
        for c in chunk.chars() {
            if is_punctuation(c) {
                if !word.is_empty() {
                    out.push(std::mem::take(&mut word));
                }
                out.push(c.to_string());
            } else {
                word.push(c);
            }
        }
        if !word.is_empty() {
            out.push(word);
        }
    }
    out
}
