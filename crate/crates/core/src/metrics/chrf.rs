//! chrF++: character n-gram (n = 1..6) and word n-gram (n = 1..2) F-beta
//! scores, averaged arithmetically over the orders for which both the
//! hypothesis and the reference corpus have n-grams. Statistics are summed
//! over the corpus before any ratio is taken.

use std::collections::HashMap;
use std::hash::Hash;
use std::ops::{Add, AddAssign};

use serde::Serialize;

use super::{check_lengths, Metric, MetricDetails, MetricError, MetricScore, Segment, Tokenizer};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChrfConfig {
    pub char_order: usize,
    pub word_order: usize,
    pub beta: f64,
    /// How words are obtained for the word n-grams.
    pub words: Tokenizer,
}

impl Default for ChrfConfig {
    fn default() -> Self {
        ChrfConfig { char_order: 6, word_order: 2, beta: 2.0, words: Tokenizer::Pretokenized }
    }
}

/// `[hyp n-grams, ref n-grams, matches]` per order, character orders first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ChrfStats {
    pub char_orders: Vec<[u64; 3]>,
    pub word_orders: Vec<[u64; 3]>,
}

fn order_stats<T: Eq + Hash>(hyp: &[T], reference: &[T], n: usize) -> [u64; 3] {
    fn counts<T: Eq + Hash>(items: &[T], n: usize) -> HashMap<&[T], u64> {
        let mut m = HashMap::new();
        for g in items.windows(n) {
            *m.entry(g).or_insert(0) += 1;
        }
        m
    }
    let h = counts(hyp, n);
    let r = counts(reference, n);
    let matches = h.iter().map(|(g, &c)| c.min(r.get(g).copied().unwrap_or(0))).sum();
    [
        hyp.len().saturating_sub(n - 1) as u64,
        reference.len().saturating_sub(n - 1) as u64,
        matches,
    ]
}

impl ChrfStats {
    pub fn from_segments(hyp: &Segment, reference: &Segment, config: &ChrfConfig) -> Self {
        let chars = |s: &Segment| s.text.chars().filter(|c| !c.is_whitespace()).collect::<Vec<char>>();
        let (hc, rc) = (chars(hyp), chars(reference));
        let (hw, rw) = (config.words.tokenize(hyp), config.words.tokenize(reference));
        ChrfStats {
            char_orders: (1..=config.char_order).map(|n| order_stats(&hc, &rc, n)).collect(),
            word_orders: (1..=config.word_order).map(|n| order_stats(&hw, &rw, n)).collect(),
        }
    }

    pub fn details(&self, beta: f64) -> ChrfDetails {
        let b2 = beta * beta;
        let f = |[hyp, reference, matches]: [u64; 3]| -> Option<f64> {
            if hyp == 0 || reference == 0 {
                return None;
            }
            let p = matches as f64 / hyp as f64;
            let r = matches as f64 / reference as f64;
            Some(if p + r == 0.0 { 0.0 } else { (1.0 + b2) * p * r / (b2 * p + r) })
        };
        let char_f: Vec<Option<f64>> = self.char_orders.iter().copied().map(f).collect();
        let word_f: Vec<Option<f64>> = self.word_orders.iter().copied().map(f).collect();
        let effective: Vec<f64> = char_f.iter().chain(&word_f).flatten().copied().collect();
        let score = if effective.is_empty() {
            0.0
        } else {
            100.0 * effective.iter().sum::<f64>() / effective.len() as f64
        };
        ChrfDetails { score, char_f, word_f, effective_order: effective.len(), stats: self.clone() }
    }
}

impl AddAssign<&ChrfStats> for ChrfStats {
    fn add_assign(&mut self, rhs: &ChrfStats) {
        fn merge(into: &mut Vec<[u64; 3]>, from: &[[u64; 3]]) {
            if into.len() < from.len() {
                into.resize(from.len(), [0; 3]);
            }
            for (a, b) in into.iter_mut().zip(from) {
                for k in 0..3 {
                    a[k] += b[k];
                }
            }
        }
        merge(&mut self.char_orders, &rhs.char_orders);
        merge(&mut self.word_orders, &rhs.word_orders);
    }
}

impl Add for ChrfStats {
    type Output = ChrfStats;

    fn add(mut self, rhs: ChrfStats) -> ChrfStats {
        self += &rhs;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChrfDetails {
    pub score: f64,
    /// Per-order F-beta in [0, 1]; `None` where the order is not effective.
    pub char_f: Vec<Option<f64>>,
    pub word_f: Vec<Option<f64>>,
    pub effective_order: usize,
    pub stats: ChrfStats,
}

pub fn chrf_pp(hypotheses: &[Segment], references: &[Segment], config: ChrfConfig) -> Result<MetricScore, MetricError> {
    check_lengths(hypotheses, references)?;
    let stats = hypotheses
        .iter()
        .zip(references)
        .map(|(h, r)| ChrfStats::from_segments(h, r, &config))
        .fold(ChrfStats::default(), Add::add);
    let details = stats.details(config.beta);
    Ok(MetricScore { metric: Metric::ChrfPp, value: details.score, details: MetricDetails::Chrf(details) })
}
