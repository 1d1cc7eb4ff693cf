//! Small character and TSV helpers shared by the loaders and the metrics.

/// Unicode punctuation test covering ASCII, Latin-1, general punctuation and
/// the CJK / fullwidth punctuation blocks.
pub fn is_punctuation(c: char) -> bool {
    c.is_ascii_punctuation()
        || matches!(c,
            '\u{00A1}' | '\u{00A7}' | '\u{00AB}' | '\u{00B6}' | '\u{00B7}' | '\u{00BB}' | '\u{00BF}'
            | '\u{2010}'..='\u{2027}'
            | '\u{2030}'..='\u{205E}'
            | '\u{3001}'..='\u{3003}'
            | '\u{3008}'..='\u{3011}'
            | '\u{3014}'..='\u{301F}'
            | '\u{30FB}'
            | '\u{FE10}'..='\u{FE19}'
            | '\u{FE30}'..='\u{FE4F}'
            | '\u{FF01}'..='\u{FF0F}'
            | '\u{FF1A}'..='\u{FF20}'
            | '\u{FF3B}'..='\u{FF40}'
            | '\u{FF5B}'..='\u{FF65}')
}

/// True when `s` is non-empty and made only of punctuation.
pub fn is_punctuation_str(s: &str) -> bool {
    !s.is_empty() && s.chars().all(is_punctuation)
}

/// Split a TSV line into fields, tolerating a trailing `\r`.
pub(crate) fn tsv_fields(line: &str) -> Vec<&str> {
    line.trim_end_matches('\r').split('\t').collect()
}

/// Iterate over the meaningful lines of a TSV file: skips blank lines and
/// `#` comments, yields 1-based line numbers.
pub(crate) fn tsv_rows(content: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    content.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, tsv_fields(line)))
        }
    })
}

/// Strip a UTF-8 byte-order mark if present.
pub(crate) fn strip_bom(content: &str) -> &str {
    content.strip_prefix('\u{FEFF}').unwrap_or(content)
}

/// Parse `key = value` lines. Blank lines and `#` comments are skipped;
/// keys may repeat. Errors carry the 1-based line number.
pub(crate) fn parse_key_values(content: &str) -> Result<Vec<(usize, String, String)>, (usize, String)> {
    let mut out = Vec::new();
    for (i, line) in strip_bom(content).lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = trimmed
            .split_once('=')
            .ok_or_else(|| (i + 1, format!("expected `key = value`, found {trimmed:?}")))?;
        let key = key.trim();
        if key.is_empty() {
            return Err((i + 1, "empty key".to_string()));
        }
        out.push((i + 1, key.to_string(), value.trim().to_string()));
    }
    Ok(out)
}
