mod common;

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use proptest::prelude::*;

use passivelens::annotate::{parse_annotations, write_annotations};
use passivelens::corpus::{parse_parsed, write_parsed};
use passivelens::evaluate::{consistency, diversity, proportions, Granularity, Universe};
use passivelens::extract::partition_subsets;
use passivelens::metrics::{bleu, chrf_pp, BleuStats, ChrfConfig, ChrfStats, Segment, Tokenizer};
use passivelens::{
    Annotation, Annotator, Direction, Language, ParsedSentence, ParsedToken, Register, SentencePair, Side,
    StrategyLabel,
};

fn language() -> impl Strategy<Value = Language> {
    prop_oneof![Just(Language::Zh), Just(Language::En)]
}

fn label_of(lang: Language) -> impl Strategy<Value = StrategyLabel> {
    let labels: Vec<StrategyLabel> = StrategyLabel::of_language(lang).collect();
    proptest::sample::select(labels)
}

fn register() -> impl Strategy<Value = Register> {
    proptest::sample::select(Register::ALL.to_vec())
}

/// A parse with `n` tokens, arbitrary heads, and an optional semantic layer.
fn parse(lang: Language) -> impl Strategy<Value = ParsedSentence> {
    (1usize..12, any::<bool>()).prop_flat_map(move |(n, sem)| {
        let token = (
            "[a-z被把将由给是的了]{1,3}",
            "[A-Z]{1,3}",
            0..=n,
            "[a-z]{1,6}",
            0..=n,
            "[A-Za-z]{1,5}",
        );
        proptest::collection::vec(token, n).prop_map(move |raw| {
            let tokens = raw
                .into_iter()
                .enumerate()
                .map(|(i, (form, pos, head, rel, sem_head, sem_rel))| {
                    let index = i + 1;
                    let head = if head == index { 0 } else { head };
                    let t = ParsedToken::new(index, form.clone(), form, pos, head, rel);
                    if sem {
                        t.with_sem(if sem_head == index { 0 } else { sem_head }, sem_rel)
                    } else {
                        t
                    }
                })
                .collect();
            ParsedSentence::new("s", lang, tokens, None).unwrap()
        })
    })
}

fn annotations(lang: Language, n: usize) -> impl Strategy<Value = Vec<Annotation>> {
    proptest::collection::vec(label_of(lang), n).prop_map(|labels| {
        labels
            .into_iter()
            .enumerate()
            .map(|(i, l)| Annotation::with_label(format!("p{i}"), Side::Target, l))
            .collect()
    })
}

fn text() -> impl Strategy<Value = String> {
    proptest::collection::vec(proptest::sample::select(vec!["a", "b", "ab", "ba", "c", "."]), 0..7)
        .prop_map(|w| w.join(" "))
}

fn segments(pairs: &[(String, String)]) -> (Vec<Segment>, Vec<Segment>) {
    (
        pairs.iter().map(|(h, _)| Segment::new(h.as_str())).collect(),
        pairs.iter().map(|(_, r)| Segment::new(r.as_str())).collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn parsed_format_round_trips(
        (lang, sentences) in language().prop_flat_map(|l| (Just(l), proptest::collection::vec(parse(l), 1..4))),
    ) {
        let sentences: Vec<ParsedSentence> = sentences
            .into_iter()
            .enumerate()
            .map(|(i, s)| ParsedSentence::new(format!("s{i}"), lang, s.tokens().to_vec(), None).unwrap())
            .collect();
        let text = write_parsed(&sentences);
        prop_assert_eq!(parse_parsed(&text, lang).unwrap(), sentences);
    }

    #[test]
    fn annotation_file_round_trips(anns in (1usize..20, language()).prop_flat_map(|(n, l)| annotations(l, n))) {
        let text = write_annotations(&anns);
        prop_assert_eq!(parse_annotations(&text).unwrap(), anns);
    }

    #[test]
    fn annotator_is_total_and_language_consistent(s in language().prop_flat_map(parse)) {
        let labeling = Annotator::default().annotate(&s);
        prop_assert_eq!(labeling.label.language(), s.language());
        prop_assert!(labeling.evidence.iter().all(|&i| i >= 1 && i <= s.len()));
    }

    #[test]
    fn bleu_statistics_are_additive(pairs in proptest::collection::vec((text(), text()), 1..8), cut in 0usize..8) {
        let cut = cut.min(pairs.len());
        let tok = |s: &str| passivelens::metrics::tokenize_en_simple(s);
        let stats = |ps: &[(String, String)]| -> BleuStats {
            ps.iter().map(|(h, r)| BleuStats::from_tokens(&tok(h), &tok(r))).sum()
        };
        prop_assert_eq!(stats(&pairs[..cut]) + stats(&pairs[cut..]), stats(&pairs));
        let (h, r) = segments(&pairs);
        let score = bleu(&h, &r, Tokenizer::EnSimple).unwrap().value;
        prop_assert_eq!(score, stats(&pairs).details().score);
        prop_assert!((0.0..=100.0).contains(&score));
    }

    #[test]
    fn chrf_statistics_are_additive(pairs in proptest::collection::vec((text(), text()), 1..8), cut in 0usize..8) {
        let cut = cut.min(pairs.len());
        let config = ChrfConfig::default();
        let stats = |ps: &[(String, String)]| -> ChrfStats {
            ps.iter()
                .map(|(h, r)| ChrfStats::from_segments(&Segment::new(h.as_str()), &Segment::new(r.as_str()), &config))
                .fold(ChrfStats::default(), |a, b| a + b)
        };
        prop_assert_eq!(stats(&pairs[..cut]) + stats(&pairs[cut..]), stats(&pairs));
        let (h, r) = segments(&pairs);
        let score = chrf_pp(&h, &r, config).unwrap().value;
        prop_assert!((0.0..=100.0).contains(&score));
    }

    #[test]
    fn corpus_scores_ignore_segment_order(pairs in proptest::collection::vec((text(), text()), 1..8), seed in any::<u64>()) {
        let mut shuffled = pairs.clone();
        let k = (seed as usize) % pairs.len();
        shuffled.rotate_left(k);
        shuffled.reverse();
        let (h1, r1) = segments(&pairs);
        let (h2, r2) = segments(&shuffled);
        prop_assert_eq!(bleu(&h1, &r1, Tokenizer::EnSimple).unwrap().value, bleu(&h2, &r2, Tokenizer::EnSimple).unwrap().value);
        let a = chrf_pp(&h1, &r1, ChrfConfig::default()).unwrap().value;
        let b = chrf_pp(&h2, &r2, ChrfConfig::default()).unwrap().value;
        prop_assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn consistency_is_symmetric_and_registers_sum_to_overall(
        (human, system, regs) in (1usize..30, language()).prop_flat_map(|(n, l)| {
            (annotations(l, n), annotations(l, n), proptest::collection::vec(register(), n))
        }),
        granularity in prop_oneof![Just(Granularity::Auto), Just(Granularity::Label), Just(Granularity::Strategy)],
    ) {
        let registers: HashMap<String, Register> =
            regs.iter().enumerate().map(|(i, r)| (format!("p{i}"), *r)).collect();
        let a = consistency(&human, &system, &registers, granularity).unwrap();
        let b = consistency(&system, &human, &registers, granularity).unwrap();
        prop_assert_eq!(&a, &b);
        let overall = a.overall();
        prop_assert_eq!(overall.n, human.len());
        let per_register: Vec<_> = a.rows.iter().filter(|r| r.register.is_some()).collect();
        prop_assert_eq!(per_register.iter().map(|r| r.n).sum::<usize>(), overall.n);
        prop_assert_eq!(per_register.iter().map(|r| r.voice_matches).sum::<usize>(), overall.voice_matches);
        prop_assert_eq!(per_register.iter().map(|r| r.structure_matches).sum::<usize>(), overall.structure_matches);
        let present: BTreeSet<Register> = regs.iter().copied().collect();
        prop_assert_eq!(per_register.len() + a.omitted.len(), Register::ALL.len());
        prop_assert_eq!(per_register.len(), present.len());
        for r in &a.rows {
            prop_assert!((0.0..=1.0).contains(&r.voice_consistency));
            prop_assert!((0.0..=1.0).contains(&r.structure_consistency));
        }
    }

    #[test]
    fn diversity_of_a_union_is_bounded(
        (lang, a, b) in (1usize..20, 1usize..20, language()).prop_flat_map(|(n, m, l)| (Just(l), annotations(l, n), annotations(l, m))),
    ) {
        let universe = Universe::full(lang);
        let da = diversity(&a, universe);
        let db = diversity(&b, universe);
        let union: Vec<Annotation> = a.iter().chain(&b).cloned().collect();
        let du = diversity(&union, universe);
        prop_assert!(du.distinct_labels >= da.distinct_labels.max(db.distinct_labels));
        prop_assert!(du.distinct_labels <= da.distinct_labels + db.distinct_labels);
        prop_assert!(du.distinct_strategies <= du.distinct_labels);
        prop_assert!(du.distinct_labels <= du.label_universe);
        prop_assert!(du.distinct_strategies <= du.strategy_universe);
    }

    #[test]
    fn proportions_ignore_order(
        (lang, mut anns) in (1usize..40, language()).prop_flat_map(|(n, l)| (Just(l), annotations(l, n))),
        k in any::<usize>(),
    ) {
        let before = proportions(lang, &[("c".into(), anns.as_slice())]).unwrap();
        let len = anns.len();
        anns.rotate_left(k % len);
        let after = proportions(lang, &[("c".into(), anns.as_slice())]).unwrap();
        prop_assert_eq!(before.rows.iter().map(|r| r.counts.clone()).collect::<Vec<_>>(),
                        after.rows.iter().map(|r| r.counts.clone()).collect::<Vec<_>>());
        prop_assert!((before.column_sum(0) - 100.0).abs() <= 0.1);
    }

    #[test]
    fn partition_membership_ignores_pair_order(k in any::<usize>()) {
        let pairs = common::mini_pairs();
        let mut rotated = pairs.clone();
        rotated.rotate_left(k % pairs.len());
        let sets = |ps: &[SentencePair]| -> BTreeSet<(String, String)> {
            partition_subsets(ps).memberships().map(|(id, s)| (id.to_string(), s.to_string())).collect()
        };
        prop_assert_eq!(sets(&pairs), sets(&rotated));
    }
}

#[test]
fn pair_in_two_subsets_is_counted_in_both() {
    let en = ParsedSentence::new(
        "e",
        Language::En,
        vec![
            ParsedToken::new(1, "It", "it", "PRP", 3, "nsubjpass"),
            ParsedToken::new(2, "was", "be", "VBD", 3, "auxpass"),
            ParsedToken::new(3, "broken", "break", "VBN", 0, "ROOT"),
        ],
        None,
    )
    .unwrap();
    let zh = ParsedSentence::new(
        "z",
        Language::Zh,
        vec![
            ParsedToken::new(1, "它", "它", "PN", 3, "nsubj"),
            ParsedToken::new(2, "被", "被", "SB", 3, "pass"),
            ParsedToken::new(3, "打破", "打破", "VV", 0, "ROOT"),
        ],
        None,
    )
    .unwrap();
    let pair = SentencePair {
        pair_id: "x".into(),
        direction: Direction::ZhToEn,
        source: Arc::new(zh),
        target: Arc::new(en),
        corpus: "c".into(),
        genre: "g".into(),
        register: Register::Press,
    };
    let partition = partition_subsets(&[pair]);
    assert_eq!(partition.memberships().count(), 2);
}
