//! Interview scenario files (TOML).
//!
//! ```toml
//! [personality]
//! openness = 0.5
//! conscientiousness = 0.5
//! extraversion = 0.5
//! agreeableness = 0.7
//! neuroticism = 0.5
//!
//! [[turns]]
//! question = "q1"
//! expected = { joy = 0.6 }
//! detected = { joy = 0.8, confident = 0.7 }
//!
//! [[turns]]
//! question = "q2"
//! expected = { joy = 0.6 }
//! detected = "interactive"
//! ```
//!
//! Optional sections: `initial_moods`, `interviewee_labels` (replaces the
//! default interviewee vocabulary), and `rules`, `placement`, `planner`
//! overriding the configuration file.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::Deserialize;

use crate::affect::{AffectKind, AffectLabel, AffectVector, LabelSet, Personality};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::planner::PlannerConfig;
use crate::rules::RuleConfig;

pub const INTERACTIVE: &str = "interactive";

#[derive(Debug, Clone, PartialEq)]
pub enum Detected {
    Scripted(AffectVector),
    Interactive,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawDetected {
    Marker(String),
    Scripted(AffectVector),
}

impl TryFrom<RawDetected> for Detected {
    type Error = String;

    fn try_from(raw: RawDetected) -> std::result::Result<Self, String> {
        match raw {
            RawDetected::Scripted(v) => Ok(Detected::Scripted(v)),
            RawDetected::Marker(m) if m == INTERACTIVE => Ok(Detected::Interactive),
            RawDetected::Marker(m) => Err(format!(
                "`detected` must be a table of intensities or \"{INTERACTIVE}\", got \"{m}\""
            )),
        }
    }
}

impl<'de> Deserialize<'de> for Detected {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        RawDetected::deserialize(d)?
            .try_into()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Turn {
    pub question: String,
    #[serde(default)]
    pub expected: AffectVector,
    pub detected: Detected,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub personality: Personality,
    #[serde(default)]
    pub initial_moods: AffectVector,
    #[serde(default)]
    pub interviewee_labels: Option<Vec<AffectLabel>>,
    #[serde(default)]
    pub rules: Option<RuleConfig>,
    #[serde(default)]
    pub placement: BTreeMap<String, f64>,
    #[serde(default)]
    pub planner: Option<PlannerConfig>,
    pub turns: Vec<Turn>,
}

impl Scenario {
    pub fn from_toml(text: &str, source_name: &str) -> Result<Self> {
        let scenario: Scenario = toml::from_str(text)
            .map_err(|e| Error::Config(format!("{source_name}: {}", e.to_string().trim_end())))?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Self::from_toml(&text, &path.display().to_string())
    }

    pub fn labels(&self) -> Result<LabelSet> {
        match &self.interviewee_labels {
            Some(labels) => LabelSet::new(labels.iter().cloned()),
            None => Ok(LabelSet::interviewee_default()),
        }
    }

    /// `base` with this scenario's overrides applied.
    pub fn effective_config(&self, base: &Config) -> Result<Config> {
        let mut cfg = base.clone();
        if let Some(rules) = self.rules {
            cfg.rules = rules;
        }
        if let Some(planner) = self.planner {
            cfg.planner = planner;
        }
        cfg.placement.extend(self.placement.iter().map(|(k, v)| (k.clone(), *v)));
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.turns.is_empty() {
            return Err(Error::validation("scenario has no turns"));
        }
        let labels = self.labels()?;
        LabelSet::recruiter().check(&self.initial_moods, AffectKind::Mood)?;
        for (i, turn) in self.turns.iter().enumerate() {
            let at = |e: Error| e.at_turn(i + 1);
            for name in turn.expected.labels() {
                if labels.get(name).is_none() {
                    return Err(at(Error::validation(format!(
                        "unknown interviewee affect `{name}` in expectations"
                    ))));
                }
            }
            if let Detected::Scripted(v) = &turn.detected {
                for name in v.labels() {
                    if labels.get(name).is_none() {
                        return Err(at(Error::validation(format!(
                            "unknown interviewee affect `{name}` in detections"
                        ))));
                    }
                }
            }
        }
        Ok(())
    }
}
