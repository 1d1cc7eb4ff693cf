//! Label → strategy → voice taxonomy.
//!
//! Chinese labels collapse into eight strategies of which only the syntactic
//! and lexical passives count as passive voice. English labels are their own
//! strategies; everything but N/A is passive.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::Language;

macro_rules! labels {
    ($( $variant:ident => $name:literal, $lang:ident, $strategy:ident; )*) => {
        /// Fine-grained translation-strategy label.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum StrategyLabel {
            $( $variant, )*
        }

        impl StrategyLabel {
            pub const ALL: &'static [StrategyLabel] = &[$( StrategyLabel::$variant, )*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $( StrategyLabel::$variant => $name, )*
                }
            }

            pub fn language(self) -> Language {
                match self {
                    $( StrategyLabel::$variant => Language::$lang, )*
                }
            }

            pub fn strategy(self) -> Strategy {
                match self {
                    $( StrategyLabel::$variant => Strategy::$strategy, )*
                }
            }
        }
    };
}

labels! {
    BeiL => "BEI_L", Zh, SyntacticPassive;
    BeiS => "BEI_S", Zh, SyntacticPassive;
    Gei => "GEI", Zh, SyntacticPassive;
    Rang => "RANG", Zh, SyntacticPassive;
    Wei => "WEI", Zh, SyntacticPassive;
    Shou => "SHOU", Zh, LexicalPassive;
    Zao => "ZAO", Zh, LexicalPassive;
    Ai => "AI", Zh, LexicalPassive;
    Meng => "MENG", Zh, LexicalPassive;
    Notional => "NOTIONAL", Zh, NotionalPassive;
    You => "YOU", Zh, TopicSentence;
    ShiDe => "SHI_DE", Zh, TopicSentence;
    LvDedao => "LV_DEDAO", Zh, LightVerb;
    LvHuo => "LV_HUO", Zh, LightVerb;
    LvDeyi => "LV_DEYI", Zh, LightVerb;
    LvJing => "LV_JING", Zh, LightVerb;
    LvYu => "LV_YU", Zh, LightVerb;
    LvJiyu => "LV_JIYU", Zh, LightVerb;
    LvJiayi => "LV_JIAYI", Zh, LightVerb;
    LvJinxing => "LV_JINXING", Zh, LightVerb;
    LvShishi => "LV_SHISHI", Zh, LightVerb;
    LvFuzhu => "LV_FUZHU", Zh, LightVerb;
    CausShi => "CAUS_SHI", Zh, Causative;
    CausLing => "CAUS_LING", Zh, Causative;
    ResJiang => "RES_JIANG", Zh, Resultative;
    ResBa => "RES_BA", Zh, Resultative;
    ZhNa => "ZH_NA", Zh, OtherActive;
    Be => "BE", En, Be;
    Get => "GET", En, Get;
    Have => "HAVE", En, Have;
    Become => "BECOME", En, Become;
    EnNa => "EN_NA", En, Active;
}

impl StrategyLabel {
    /// Labels of one language, in declaration order.
    pub fn of_language(language: Language) -> impl Iterator<Item = StrategyLabel> {
        Self::ALL.iter().copied().filter(move |l| l.language() == language)
    }

    /// The label assigned when no rule fires.
    pub fn default_for(language: Language) -> StrategyLabel {
        match language {
            Language::Zh => StrategyLabel::ZhNa,
            Language::En => StrategyLabel::EnNa,
        }
    }

    pub fn voice(self) -> Voice {
        self.strategy().voice()
    }
}

impl fmt::Display for StrategyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StrategyLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        Self::ALL.iter().copied().find(|l| l.as_str() == s).ok_or_else(|| s.to_string())
    }
}

impl Serialize for StrategyLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for StrategyLabel {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|s| serde::de::Error::custom(format!("unknown label {s}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Strategy {
    SyntacticPassive,
    LexicalPassive,
    NotionalPassive,
    TopicSentence,
    LightVerb,
    Causative,
    Resultative,
    OtherActive,
    Be,
    Get,
    Have,
    Become,
    Active,
}

impl Strategy {
    pub const ALL: [Strategy; 13] = [
        Strategy::SyntacticPassive,
        Strategy::LexicalPassive,
        Strategy::NotionalPassive,
        Strategy::TopicSentence,
        Strategy::LightVerb,
        Strategy::Causative,
        Strategy::Resultative,
        Strategy::OtherActive,
        Strategy::Be,
        Strategy::Get,
        Strategy::Have,
        Strategy::Become,
        Strategy::Active,
    ];

    pub fn of_language(language: Language) -> impl Iterator<Item = Strategy> {
        Self::ALL.into_iter().filter(move |s| s.language() == language)
    }

    pub fn language(self) -> Language {
        match self {
            Strategy::Be | Strategy::Get | Strategy::Have | Strategy::Become | Strategy::Active => Language::En,
            _ => Language::Zh,
        }
    }

    pub fn voice(self) -> Voice {
        match self {
            Strategy::SyntacticPassive
            | Strategy::LexicalPassive
            | Strategy::Be
            | Strategy::Get
            | Strategy::Have
            | Strategy::Become => Voice::Passive,
            _ => Voice::Active,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::SyntacticPassive => "SYNTACTIC_PASSIVE",
            Strategy::LexicalPassive => "LEXICAL_PASSIVE",
            Strategy::NotionalPassive => "NOTIONAL_PASSIVE",
            Strategy::TopicSentence => "TOPIC_SENTENCE",
            Strategy::LightVerb => "LIGHT_VERB",
            Strategy::Causative => "CAUSATIVE",
            Strategy::Resultative => "RESULTATIVE",
            Strategy::OtherActive => "OTHER_ACTIVE",
            Strategy::Be => "BE",
            Strategy::Get => "GET",
            Strategy::Have => "HAVE",
            Strategy::Become => "BECOME",
            Strategy::Active => "ACTIVE",
        }
    }

    /// Row caption used in proportion tables.
    pub fn caption(self) -> &'static str {
        match self {
            Strategy::SyntacticPassive => "Syntactic passive",
            Strategy::LexicalPassive => "Lexical passive",
            Strategy::NotionalPassive => "Notional passive",
            Strategy::TopicSentence => "Topic sentence",
            Strategy::LightVerb => "Light verb",
            Strategy::Causative => "Causative",
            Strategy::Resultative => "Resultative",
            Strategy::OtherActive | Strategy::Active => "N/A",
            Strategy::Be => "BE",
            Strategy::Get => "GET",
            Strategy::Have => "HAVE",
            Strategy::Become => "BECOME",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        Self::ALL.into_iter().find(|x| x.as_str() == s).ok_or_else(|| s.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Voice {
    Passive,
    Active,
}

impl Voice {
    pub fn as_str(self) -> &'static str {
        match self {
            Voice::Passive => "PASSIVE",
            Voice::Active => "ACTIVE",
        }
    }
}

impl fmt::Display for Voice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Voice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "PASSIVE" => Ok(Voice::Passive),
            "ACTIVE" => Ok(Voice::Active),
            other => Err(other.to_string()),
        }
    }
}

pub fn strategy_of(label: StrategyLabel) -> Strategy {
    label.strategy()
}

pub fn voice_of(strategy: Strategy) -> Voice {
    strategy.voice()
}
