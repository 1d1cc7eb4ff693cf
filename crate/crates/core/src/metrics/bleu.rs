//! Corpus BLEU with clipped n-gram precisions (n = 1..4), geometric mean
//! and exponential brevity penalty. No smoothing: a zero precision gives a
//! zero score. Orders for which the hypothesis corpus has no n-grams at all
//! are left out of the mean (effective order).

use std::collections::HashMap;
use std::ops::{Add, AddAssign};

use serde::Serialize;

use super::{check_lengths, Metric, MetricDetails, MetricError, MetricScore, Segment, Tokenizer};

pub const MAX_NGRAM_ORDER: usize = 4;

/// Sufficient statistics for corpus BLEU. Forms a commutative monoid under `+`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BleuStats {
    pub matches: [u64; MAX_NGRAM_ORDER],
    pub totals: [u64; MAX_NGRAM_ORDER],
    pub hyp_len: u64,
    pub ref_len: u64,
}

fn ngram_counts(tokens: &[String], n: usize) -> HashMap<&[String], u64> {
    let mut counts = HashMap::new();
    for gram in tokens.windows(n) {
        *counts.entry(gram).or_insert(0) += 1;
    }
    counts
}

impl BleuStats {
    pub fn from_tokens(hyp: &[String], reference: &[String]) -> Self {
        let mut stats = BleuStats { hyp_len: hyp.len() as u64, ref_len: reference.len() as u64, ..Default::default() };
        for n in 1..=MAX_NGRAM_ORDER {
            let hyp_counts = ngram_counts(hyp, n);
            let ref_counts = ngram_counts(reference, n);
            stats.totals[n - 1] = hyp.len().saturating_sub(n - 1) as u64;
            stats.matches[n - 1] = hyp_counts
                .iter()
                .map(|(gram, &c)| c.min(ref_counts.get(gram).copied().unwrap_or(0)))
                .sum();
        }
        stats
    }

    pub fn details(&self) -> BleuDetails {
        let effective_order = self.totals.iter().take_while(|&&t| t > 0).count();
        let mut precisions = [0.0; MAX_NGRAM_ORDER];
        for n in 0..effective_order {
            precisions[n] = self.matches[n] as f64 / self.totals[n] as f64;
        }
        let brevity_penalty = if self.hyp_len == 0 {
            0.0
        } else if self.hyp_len >= self.ref_len {
            1.0
        } else {
            (1.0 - self.ref_len as f64 / self.hyp_len as f64).exp()
        };
        let score = if effective_order == 0 || precisions[..effective_order].iter().any(|&p| p == 0.0) {
            0.0
        } else {
            let log_mean = precisions[..effective_order].iter().map(|p| p.ln()).sum::<f64>() / effective_order as f64;
            100.0 * brevity_penalty * log_mean.exp()
        };
        BleuDetails { score, precisions, brevity_penalty, effective_order, stats: *self }
    }
}

impl Add for BleuStats {
    type Output = BleuStats;

    fn add(mut self, rhs: BleuStats) -> BleuStats {
        self += rhs;
        self
    }
}

impl AddAssign for BleuStats {
    fn add_assign(&mut self, rhs: BleuStats) {
        for n in 0..MAX_NGRAM_ORDER {
            self.matches[n] += rhs.matches[n];
            self.totals[n] += rhs.totals[n];
        }
        self.hyp_len += rhs.hyp_len;
        self.ref_len += rhs.ref_len;
    }
}

impl std::iter::Sum for BleuStats {
    fn sum<I: Iterator<Item = BleuStats>>(iter: I) -> Self {
        iter.fold(BleuStats::default(), Add::add)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BleuDetails {
    pub score: f64,
    /// Per-order precision in [0, 1]; zero beyond the effective order.
    pub precisions: [f64; MAX_NGRAM_ORDER],
    pub brevity_penalty: f64,
    pub effective_order: usize,
    pub stats: BleuStats,
}

pub fn bleu(hypotheses: &[Segment], references: &[Segment], tokenizer: Tokenizer) -> Result<MetricScore, MetricError> {
    check_lengths(hypotheses, references)?;
    let stats: BleuStats = hypotheses
        .iter()
        .zip(references)
        .map(|(h, r)| BleuStats::from_tokens(&tokenizer.tokenize(h), &tokenizer.tokenize(r)))
        .sum();
    let details = stats.details();
    Ok(MetricScore { metric: Metric::Bleu, value: details.score, details: MetricDetails::Bleu(details) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(s: &str) -> Segment {
        Segment::new(s)
    }

    #[test]
    fn identical_corpus_scores_100() {
        let refs = [seg("the cat sat on the mat"), seg("a b")];
        let s = bleu(&refs, &refs, Tokenizer::EnSimple).unwrap();
        assert_eq!(s.value, 100.0);
    }

    #[test]
    fn short_identical_segment_scores_100() {
        let refs = [seg("a b")];
        assert_eq!(bleu(&refs, &refs, Tokenizer::EnSimple).unwrap().value, 100.0);
    }

    #[test]
    fn brevity_example() {
        let s = bleu(&[seg("a b c d")], &[seg("a b c d e")], Tokenizer::EnSimple).unwrap();
        let MetricDetails::Bleu(d) = &s.details else { panic!() };
        assert_eq!(d.precisions, [1.0; 4]);
        assert_eq!(d.stats.matches, [4, 3, 2, 1]);
        assert_eq!(d.stats.totals, [4, 3, 2, 1]);
        assert!((d.brevity_penalty - (-0.25f64).exp()).abs() < 1e-15);
        assert!((s.value - 77.8800783).abs() < 1e-6, "{}", s.value);
    }

    #[test]
    fn empty_hypothesis_scores_zero() {
        let s = bleu(&[seg("")], &[seg("a b c")], Tokenizer::EnSimple).unwrap();
        assert_eq!(s.value, 0.0);
    }

    #[test]
    fn zero_precision_scores_zero() {
        let s = bleu(&[seg("a x b y")], &[seg("a b c d")], Tokenizer::EnSimple).unwrap();
        assert_eq!(s.value, 0.0);
    }

    #[test]
    fn clipping() {
        let st = BleuStats::from_tokens(
            &["the", "the", "the"].map(String::from),
            &["the", "cat"].map(String::from),
        );
        assert_eq!(st.matches[0], 1);
        assert_eq!(st.totals[0], 3);
    }

    #[test]
    fn errors() {
        assert_eq!(
            bleu(&[seg("a")], &[], Tokenizer::EnSimple).unwrap_err(),
            MetricError::LengthMismatch { hypotheses: 1, references: 0 }
        );
        assert_eq!(bleu(&[], &[], Tokenizer::EnSimple).unwrap_err(), MetricError::EmptyReferences);
    }
}
