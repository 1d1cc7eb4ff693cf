use super::*;
use crate::corpus::ParsedToken;

type Tok<'a> = (&'a str, &'a str, Option<(usize, &'a str)>);

fn zh(toks: &[Tok]) -> ParsedSentence {
    let tokens = toks
        .iter()
        .enumerate()
        .map(|(i, (form, pos, sem))| {
            let t = ParsedToken::new(i + 1, *form, *form, *pos, 0, "dep");
            match sem {
                Some((head, label)) => t.with_sem(*head, *label),
                None => t,
            }
        })
        .collect();
    ParsedSentence::new("z", Language::Zh, tokens, None).unwrap()
}

/// (form, lemma, pos, head, deprel)
fn en(toks: &[(&str, &str, &str, usize, &str)]) -> ParsedSentence {
    let tokens = toks
        .iter()
        .enumerate()
        .map(|(i, (form, lemma, pos, head, rel))| ParsedToken::new(i + 1, *form, *lemma, *pos, *head, *rel))
        .collect();
    ParsedSentence::new("e", Language::En, tokens, None).unwrap()
}

fn label_of(s: &ParsedSentence) -> StrategyLabel {
    Annotator::default().annotate(s).label
}

#[test]
fn bei_without_agent() {
    let s = zh(&[("他", "PN", None), ("被", "SB", None), ("打", "VV", None), ("了", "AS", None)]);
    assert_eq!(match_marked_passive(&s), Ok(Some(StrategyLabel::BeiS)));
    let l = Annotator::default().annotate(&s);
    assert_eq!(l.label, StrategyLabel::BeiS);
    assert_eq!(l.evidence, vec![2]);
}

#[test]
fn gei_in_patient_marker_agent_root_order() {
    let s = zh(&[
        ("书", "NN", Some((4, "PAT"))),
        ("给", "P", Some((3, "mRELA"))),
        ("他", "PN", Some((4, "AGT"))),
        ("弄丢", "VV", Some((0, "Root"))),
        ("了", "AS", Some((4, "mTIME"))),
    ]);
    assert_eq!(match_marked_passive(&s), Ok(Some(StrategyLabel::Gei)));
    let l = Annotator::default().annotate(&s);
    assert_eq!(l.label, StrategyLabel::Gei);
    assert_eq!(l.evidence, vec![1, 2, 3, 4]);
}

#[test]
fn gei_with_patient_after_root_does_not_match() {
    let s = zh(&[
        ("他", "PN", Some((3, "AGT"))),
        ("给", "P", Some((1, "mRELA"))),
        ("弄丢", "VV", Some((0, "Root"))),
        ("书", "NN", Some((3, "PAT"))),
    ]);
    assert_eq!(match_marked_passive(&s), Ok(None));
}

#[test]
fn rang_and_wei_markers() {
    let rang = zh(&[
        ("钱", "NN", Some((4, "PAT"))),
        ("让", "P", Some((3, "mRELA"))),
        ("小偷", "NN", Some((4, "AGT"))),
        ("偷走", "VV", Some((0, "Root"))),
    ]);
    assert_eq!(match_marked_passive(&rang), Ok(Some(StrategyLabel::Rang)));
    let wei = zh(&[
        ("他", "PN", Some((4, "PAT"))),
        ("为", "P", Some((3, "mRELA"))),
        ("人们", "NN", Some((4, "AGT"))),
        ("所知", "VV", Some((0, "Root"))),
    ]);
    assert_eq!(match_marked_passive(&wei), Ok(Some(StrategyLabel::Wei)));
}

#[test]
fn agent_before_patient_blocks_marker_rule() {
    let s = zh(&[
        ("他", "PN", Some((5, "AGT"))),
        ("书", "NN", Some((5, "PAT"))),
        ("给", "P", Some((4, "mRELA"))),
        ("我", "PN", Some((5, "DATV"))),
        ("寄", "VV", Some((0, "Root"))),
    ]);
    assert_eq!(match_marked_passive(&s), Ok(None));
}

#[test]
fn non_bei_marker_without_semantics_is_not_evaluable() {
    let s = zh(&[("书", "NN", None), ("给", "P", None), ("他", "PN", None), ("弄丢", "VV", None)]);
    assert_eq!(match_marked_passive(&s), Err(NotEvaluable(ZhRule::MarkedPassive)));
    let l = Annotator::default().annotate(&s);
    assert_eq!(l.label, StrategyLabel::ZhNa);
    assert!(l.not_evaluable.contains(&ZhRule::MarkedPassive));
    assert!(l.not_evaluable.contains(&ZhRule::NotionalPassive));
}

#[test]
fn bei_fires_without_semantics_even_with_other_markers() {
    let s = zh(&[("他", "PN", None), ("被", "LB", None), ("人", "NN", None), ("给", "P", None), ("骗", "VV", None)]);
    assert_eq!(match_marked_passive(&s), Ok(Some(StrategyLabel::BeiL)));
}

#[test]
fn lexical_passive_forms() {
    let s = zh(&[("他", "PN", None), ("遭到", "VV", None), ("批评", "NN", None)]);
    assert_eq!(match_lexical_passive(&s), Some(StrategyLabel::Zao));
    let none = zh(&[("他", "PN", None), ("来", "VV", None)]);
    assert_eq!(match_lexical_passive(&none), None);
    let both = zh(&[
        ("他", "PN", None),
        ("受到", "VV", None),
        ("表扬", "NN", None),
        ("又", "AD", None),
        ("遭", "VV", None),
        ("批评", "NN", None),
    ]);
    assert_eq!(match_lexical_passive(&both), Some(StrategyLabel::Shou));
    let reversed = zh(&[("他", "PN", None), ("遭", "VV", None), ("批评", "NN", None), ("受到", "VV", None)]);
    assert_eq!(match_lexical_passive(&reversed), Some(StrategyLabel::Zao));
    for (form, label) in [("受", StrategyLabel::Shou), ("惨遭", StrategyLabel::Zao), ("挨", StrategyLabel::Ai), ("蒙", StrategyLabel::Meng)] {
        assert_eq!(match_lexical_passive(&zh(&[(form, "VV", None)])), Some(label), "{form}");
    }
}

#[test]
fn notional_meal_is_ready() {
    let s = zh(&[("饭", "NN", Some((2, "PAT"))), ("烧好", "VV", Some((0, "Root"))), ("了", "AS", Some((2, "mTIME")))]);
    assert_eq!(match_notional_passive(&s), Ok(Some(StrategyLabel::Notional)));
    let l = Annotator::default().annotate(&s);
    assert_eq!(l.label, StrategyLabel::Notional);
    assert_eq!(l.evidence, vec![1, 2]);
}

#[test]
fn notional_blocked_by_agent() {
    let s = zh(&[
        ("饭", "NN", Some((3, "PAT"))),
        ("妈妈", "NN", Some((3, "AGT"))),
        ("烧好", "VV", Some((0, "Root"))),
        ("了", "AS", Some((3, "mTIME"))),
    ]);
    assert_eq!(match_notional_passive(&s), Ok(None));
}

#[test]
fn notional_blocked_by_relation_marker_topic_applies() {
    let s = zh(&[("大桥", "NN", Some((3, "PAT"))), ("由", "P", Some((3, "mRELA"))), ("设计", "VV", Some((0, "Root")))]);
    assert_eq!(match_notional_passive(&s), Ok(None));
    assert_eq!(match_topic_sentence(&s), Ok(Some(StrategyLabel::You)));
    assert_eq!(label_of(&s), StrategyLabel::You);
}

#[test]
fn notional_needs_semantics() {
    let s = zh(&[("饭", "NN", None), ("烧好", "VV", None)]);
    assert_eq!(match_notional_passive(&s), Err(NotEvaluable(ZhRule::NotionalPassive)));
}

#[test]
fn topic_you_with_agent() {
    let s = zh(&[
        ("大桥", "NN", Some((4, "FOB"))),
        ("由", "P", Some((3, "mRELA"))),
        ("他们", "PN", Some((4, "AGT"))),
        ("设计", "VV", Some((0, "Root"))),
    ]);
    assert_eq!(match_topic_sentence(&s), Ok(Some(StrategyLabel::You)));
}

#[test]
fn topic_you_without_semantics() {
    let s = zh(&[("大桥", "NN", None), ("由", "P", None), ("他们", "PN", None), ("设计", "VV", None)]);
    assert_eq!(match_topic_sentence(&s), Err(NotEvaluable(ZhRule::TopicYou)));
}

#[test]
fn shi_de_clause_final() {
    let s = zh(&[("这", "PN", None), ("是", "VC", None), ("他", "PN", None), ("写", "VV", None), ("的", "DEC", None), ("。", "PU", None)]);
    assert_eq!(match_topic_sentence(&s), Ok(Some(StrategyLabel::ShiDe)));
    let final_de = zh(&[("这", "PN", None), ("是", "VC", None), ("写", "VV", None), ("的", "DEC", None)]);
    assert_eq!(match_topic_sentence(&final_de), Ok(Some(StrategyLabel::ShiDe)));
}

#[test]
fn shi_de_mid_clause() {
    let s = zh(&[
        ("这", "PN", None),
        ("是", "VC", None),
        ("他", "PN", None),
        ("写", "VV", None),
        ("的", "DEC", None),
        ("书", "NN", None),
        ("。", "PU", None),
    ]);
    assert_eq!(match_topic_sentence(&s), Ok(None));
    let wrong_tag = zh(&[("是", "VV", None), ("写", "VV", None), ("的", "DEC", None), ("。", "PU", None)]);
    assert_eq!(match_topic_sentence(&wrong_tag), Ok(None));
}

#[test]
fn light_verb_window() {
    let v = Regex::new(DEFAULT_VERB_TAG_PATTERN).unwrap();
    let s = zh(&[("问题", "NN", None), ("得到", "VV", None), ("解决", "VV", None)]);
    assert_eq!(match_light_verb(&s, &v), Some(StrategyLabel::LvDedao));
    let comma = zh(&[("进行", "VV", None), ("，", "PU", None), ("调查", "VV", None)]);
    assert_eq!(match_light_verb(&comma, &v), None);
    let far = zh(&[
        ("加以", "VV", None),
        ("这些", "DT", None),
        ("新", "JJ", None),
        ("的", "DEG", None),
        ("问题", "NN", None),
        ("处理", "VV", None),
    ]);
    assert_eq!(match_light_verb(&far, &v), None);
    let at_four = zh(&[("加以", "VV", None), ("这些", "DT", None), ("新", "JJ", None), ("的", "DEG", None), ("处理", "VV", None)]);
    assert_eq!(match_light_verb(&at_four, &v), Some(StrategyLabel::LvJiayi));
}

#[test]
fn light_verb_tag_pattern_is_configurable() {
    let s = zh(&[("得到", "VV", None), ("解决", "NN", None)]);
    assert_eq!(match_light_verb(&s, &Regex::new("^V").unwrap()), None);
    assert_eq!(match_light_verb(&s, &Regex::new("^(V|NN)").unwrap()), Some(StrategyLabel::LvDedao));
}

#[test]
fn causative_whole_token() {
    let s = zh(&[("这", "PN", None), ("使", "VV", None), ("他", "PN", None), ("高兴", "VA", None)]);
    assert_eq!(match_causative(&s), Some(StrategyLabel::CausShi));
    assert_eq!(match_causative(&zh(&[("令", "VV", None)])), Some(StrategyLabel::CausLing));
    assert_eq!(match_causative(&zh(&[("他", "PN", None), ("走", "VV", None)])), None);
    assert_eq!(match_causative(&zh(&[("命令", "NN", None), ("下达", "VV", None)])), None);
}

#[test]
fn resultative_ba_and_jiang() {
    let ba = zh(&[("他", "PN", None), ("把", "BA", None), ("书", "NN", None), ("卖", "VV", None)]);
    assert_eq!(match_resultative(&ba), Ok(Some(StrategyLabel::ResBa)));
    let ba_p = zh(&[("他", "PN", None), ("把", "P", None), ("书", "NN", None), ("卖", "VV", None)]);
    assert_eq!(match_resultative(&ba_p), Ok(None));
    let jiang = zh(&[
        ("政府", "NN", Some((5, "AGT"))),
        ("将", "P", Some((3, "mRELA"))),
        ("计划", "NN", Some((5, "PAT"))),
        ("全面", "AD", Some((5, "mDEPD"))),
        ("推行", "VV", Some((0, "Root"))),
    ]);
    assert_eq!(match_resultative(&jiang), Ok(Some(StrategyLabel::ResJiang)));
    let l = Annotator::default().annotate(&jiang);
    assert_eq!(l.evidence, vec![1, 2, 3, 5]);
    let future = zh(&[("他", "PN", Some((3, "AGT"))), ("将", "AD", Some((3, "mTIME"))), ("离开", "VV", Some((0, "Root")))]);
    assert_eq!(match_resultative(&future), Ok(None));
    let bare = zh(&[("他", "PN", None), ("将", "P", None), ("书", "NN", None), ("卖", "VV", None)]);
    assert_eq!(match_resultative(&bare), Err(NotEvaluable(ZhRule::Resultative)));
}

#[test]
fn precedence_bei_over_light_verb() {
    let s = zh(&[("问题", "NN", None), ("被", "SB", None), ("得到", "VV", None), ("解决", "VV", None)]);
    let a = Annotator::default();
    assert!(a.zh_rule_fires(ZhRule::MarkedPassive, &s));
    assert!(a.zh_rule_fires(ZhRule::LightVerb, &s));
    assert_eq!(a.annotate(&s).label, StrategyLabel::BeiS);
}

#[test]
fn precedence_is_configurable() {
    let s = zh(&[("问题", "NN", None), ("被", "SB", None), ("得到", "VV", None), ("解决", "VV", None)]);
    let config = AnnotatorConfig::parse(
        "precedence.zh = light_verb, marked, lexical, resultative, you, shi_de, causative, notional\n",
    )
    .unwrap();
    assert_eq!(Annotator::new(config).annotate(&s).label, StrategyLabel::LvDedao);
}

#[test]
fn default_label_when_nothing_fires() {
    let s = zh(&[("他", "PN", Some((2, "AGT"))), ("走", "VV", Some((0, "Root"))), ("了", "AS", Some((2, "mTIME")))]);
    let l = Annotator::default().annotate(&s);
    assert_eq!(l.label, StrategyLabel::ZhNa);
    assert!(l.evidence.is_empty());
    let a = Annotation::new("p", Side::Target, &l);
    assert_eq!(a.strategy, Strategy::OtherActive);
    assert_eq!(a.voice, Voice::Active);
}

#[test]
fn degenerate_sentences() {
    let empty_zh = ParsedSentence::new("z", Language::Zh, vec![], None).unwrap();
    assert_eq!(label_of(&empty_zh), StrategyLabel::ZhNa);
    let empty_en = ParsedSentence::new("e", Language::En, vec![], None).unwrap();
    assert_eq!(label_of(&empty_en), StrategyLabel::EnNa);
    let punct = zh(&[("，", "PU", None), ("。", "PU", None)]);
    assert_eq!(label_of(&punct), StrategyLabel::ZhNa);
}

#[test]
fn gas_compressed_with_ba() {
    let s = zh(&[
        ("接下来", "AD", None),
        ("，", "PU", None),
        ("又", "AD", None),
        ("把", "BA", None),
        ("气体", "NN", None),
        ("快速", "AD", None),
        ("压缩", "VV", None),
        ("回", "VV", None),
        ("初始的", "JJ", None),
        ("体积", "NN", None),
        ("V_i", "NN", None),
        ("。", "PU", None),
    ]);
    let a = Annotation::new("p", Side::Target, &Annotator::default().annotate(&s));
    assert_eq!(a.label, StrategyLabel::ResBa);
    assert_eq!(a.strategy, Strategy::Resultative);
    assert_eq!(a.voice, Voice::Active);
}

#[test]
fn english_be_auxpass() {
    let s = en(&[
        ("They", "they", "PRP", 3, "nsubjpass"),
        ("were", "be", "VBD", 3, "auxpass"),
        ("struck", "strike", "VBN", 0, "ROOT"),
        ("down", "down", "RP", 3, "prt"),
    ]);
    let l = Annotator::default().annotate(&s);
    assert_eq!(l.label, StrategyLabel::Be);
    assert_eq!(l.evidence, vec![2]);
}

#[test]
fn english_get_ccomp() {
    let s = en(&[
        ("imperialists", "imperialist", "NNS", 2, "nsubj"),
        ("get", "get", "VB", 0, "ROOT"),
        ("struck", "strike", "VBN", 2, "ccomp"),
        ("down", "down", "RP", 3, "prt"),
        ("themselves", "themselves", "PRP", 3, "dobj"),
    ]);
    assert_eq!(label_of(&s), StrategyLabel::Get);
}

#[test]
fn english_have_needs_gap() {
    let s = en(&[
        ("I", "I", "PRP", 2, "nsubj"),
        ("have", "have", "VBP", 0, "ROOT"),
        ("it", "it", "PRP", 4, "nsubj"),
        ("repaired", "repair", "VBN", 2, "ccomp"),
    ]);
    assert_eq!(label_of(&s), StrategyLabel::Have);
    let adjacent = en(&[("I", "I", "PRP", 2, "nsubj"), ("have", "have", "VBP", 0, "ROOT"), ("repaired", "repair", "VBN", 2, "ccomp")]);
    assert_eq!(label_of(&adjacent), StrategyLabel::EnNa);
}

#[test]
fn english_aux_with_passive_subject() {
    let s = en(&[
        ("The", "the", "DT", 2, "det"),
        ("house", "house", "NN", 5, "nsubjpass"),
        ("has", "have", "VBZ", 5, "aux"),
        ("been", "be", "VBN", 5, "auxpass"),
        ("painted", "paint", "VBN", 0, "ROOT"),
    ]);
    assert!(english_rule_fires(&s, StrategyLabel::Have));
    assert!(english_rule_fires(&s, StrategyLabel::Be));
    assert_eq!(label_of(&s), StrategyLabel::Be);
    let have_first = AnnotatorConfig::parse("precedence.en = have, be, get, become").unwrap();
    assert_eq!(Annotator::new(have_first).annotate(&s).label, StrategyLabel::Have);
}

#[test]
fn english_become_auxpass() {
    let s = en(&[("He", "he", "PRP", 3, "nsubjpass"), ("became", "become", "VBD", 3, "auxpass"), ("trapped", "trap", "VBN", 0, "ROOT")]);
    assert_eq!(label_of(&s), StrategyLabel::Become);
}

#[test]
fn english_active() {
    let s = en(&[("I", "I", "PRP", 2, "nsubj"), ("am", "be", "VBP", 0, "ROOT"), ("happy", "happy", "JJ", 2, "acomp")]);
    assert_eq!(label_of(&s), StrategyLabel::EnNa);
}

#[test]
fn config_rejects_bad_input() {
    assert!(AnnotatorConfig::parse("precedence.zh = marked, lexical\n").is_err());
    assert!(AnnotatorConfig::parse("precedence.en = be, be, get, have\n").is_err());
    assert!(AnnotatorConfig::parse("verb_tag_pattern = ([\n").is_err());
    assert!(AnnotatorConfig::parse("colour = red\n").is_err());
    let ok = AnnotatorConfig::parse("# defaults\nverb_tag_pattern = ^VV$\n").unwrap();
    assert_eq!(ok.zh_precedence, ZhRule::DEFAULT_ORDER.to_vec());
    assert!(ok.verb_tag.is_match("VV") && !ok.verb_tag.is_match("VC"));
}

#[test]
fn every_chinese_label_has_a_rule_group() {
    for l in StrategyLabel::of_language(Language::Zh).filter(|l| *l != StrategyLabel::ZhNa) {
        assert!(ZhRule::for_label(l).is_some(), "{l}");
    }
    assert_eq!(ZhRule::for_label(StrategyLabel::ZhNa), None);
}
