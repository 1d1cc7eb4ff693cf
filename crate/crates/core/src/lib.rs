//! Passive-construction extraction, translation-strategy annotation and
//! MT evaluation over dependency-parsed Chinese–English parallel corpora.
//!
//! The pipeline is split into independent stages that hand off through
//! plain TSV/JSON files:
//!
//! * [`corpus`] reads parsed sentences, alignment manifests and register maps.
//! * [`extract`] finds *bei*/*be* passives, cleans pairs and builds subsets.
//! * [`annotate`] labels each sentence with a translation strategy.
//! * [`metrics`] scores system output with BLEU and chrF++.
//! * [`evaluate`] aggregates annotations into proportion, consistency and
//!   diversity reports.
//! * [`cli`] wires the stages together behind the `passivelens` binary.

pub mod annotate;
pub mod cli;
pub mod corpus;
pub mod evaluate;
pub mod extract;
pub mod metrics;
pub mod text;

pub use annotate::{Annotation, Annotator, Side, Strategy, StrategyLabel, Voice};
pub use corpus::{Direction, Language, ParsedSentence, ParsedToken, Register, RegisterMap, SentencePair};
pub use extract::{PassiveMatch, SubsetName};
