//! Threshold rules turning mood and personality into attitude intensities.
//!
//! Each attitude fires when either its personality condition or its mood
//! condition holds (mood and personality compensate each other), and then
//! takes the maximum of the contributing values. An attitude that does not
//! fire has intensity 0. All comparisons against the threshold are strict.

use serde::{Deserialize, Serialize};

use crate::affect::{recruiter, AffectKind, AffectVector, LabelSet, Personality};
use crate::error::{Error, Result};

pub const DEFAULT_THRESHOLD: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RuleConfig {
    pub threshold: f64,
}

impl Default for RuleConfig {
    fn default() -> Self {
        RuleConfig {
            threshold: DEFAULT_THRESHOLD,
        }
    }
}

impl RuleConfig {
    pub fn new(threshold: f64) -> Result<Self> {
        let cfg = RuleConfig { threshold };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.threshold > 0.0 && self.threshold < 1.0) {
            return Err(Error::validation(format!(
                "attitude threshold {} must lie strictly inside (0, 1)",
                self.threshold
            )));
        }
        Ok(())
    }
}

pub fn compute_attitudes(
    moods: &AffectVector,
    personality: &Personality,
    cfg: &RuleConfig,
) -> Result<AffectVector> {
    use recruiter::*;

    cfg.validate()?;
    LabelSet::recruiter().check(moods, AffectKind::Mood)?;

    let th = cfg.threshold;
    let above = |v: f64| v > th;
    let below = |v: f64| v < th;

    let exuberant = moods.get(EXUBERANT);
    let hostile = moods.get(HOSTILE);
    let relaxed = moods.get(RELAXED);
    let disdainful = moods.get(DISDAINFUL);

    let c = personality.conscientiousness();
    let e = personality.extraversion();
    let a = personality.agreeableness();
    let n = personality.neuroticism();

    let rule = |fires: bool, values: &[f64]| {
        if fires {
            values.iter().copied().fold(0.0, f64::max)
        } else {
            0.0
        }
    };

    let table = [
        (
            FRIENDLY,
            rule(above(a) || above(exuberant), &[exuberant, a]),
        ),
        (
            AGGRESSIVE,
            rule(
                (below(a) && above(n)) || above(hostile),
                &[hostile, n, 1.0 - a],
            ),
        ),
        (
            DOMINANT,
            rule((above(e) && above(n)) || above(hostile), &[hostile, n, e]),
        ),
        (
            SUPPORTIVE,
            rule((above(e) && above(a)) || above(relaxed), &[relaxed, a, e]),
        ),
        (
            INATTENTIVE,
            rule(below(c) || above(disdainful), &[disdainful, 1.0 - c]),
        ),
        (ATTENTIVE, rule(above(c) || above(relaxed), &[relaxed, c])),
        (GOSSIP, rule(above(e) || above(exuberant), &[exuberant, e])),
    ];

    let mut out = AffectVector::new();
    for (name, value) in table {
        out.set(name, value)?;
    }
    Ok(out)
}
