//! Annotated interactions and their preparation for sequence mining:
//! parsing, curve smoothing, attitude-variation detection, clustering of
//! variations and segmentation of the signal stream.

mod cluster;
mod curve;
mod format;
mod segment;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cluster::{cluster_variations, kmeans_1d, Centroids, KMeans1d};
pub use curve::{detect_variation_events, smooth_curve};
pub use format::{parse_corpus, parse_corpus_str, write_corpus};
pub use segment::segment_interaction;

/// Non-verbal channel of a signal. The declaration order is the tie-break
/// order for signals that start at the same instant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Modality {
    Gaze,
    Head,
    Eyebrow,
    Mouth,
    Gesture,
    Posture,
}

impl Modality {
    pub const ALL: [Modality; 6] = [
        Modality::Gaze,
        Modality::Head,
        Modality::Eyebrow,
        Modality::Mouth,
        Modality::Gesture,
        Modality::Posture,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Modality::Gaze => "gaze",
            Modality::Head => "head",
            Modality::Eyebrow => "eyebrow",
            Modality::Mouth => "mouth",
            Modality::Gesture => "gesture",
            Modality::Posture => "posture",
        }
    }
}

impl fmt::Display for Modality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Modality {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Modality::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::validation(format!("unknown modality `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dimension {
    Friendliness,
    Dominance,
}

impl Dimension {
    pub const ALL: [Dimension; 2] = [Dimension::Friendliness, Dimension::Dominance];

    pub fn as_str(&self) -> &'static str {
        match self {
            Dimension::Friendliness => "friendliness",
            Dimension::Dominance => "dominance",
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Dimension {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Dimension::ALL
            .into_iter()
            .find(|d| d.as_str() == s)
            .ok_or_else(|| Error::validation(format!("unknown attitude dimension `{s}`")))
    }
}

/// Size and direction of an attitude variation, ordered by centroid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VariationClass {
    LargeDecrease,
    SmallDecrease,
    SmallIncrease,
    LargeIncrease,
}

impl VariationClass {
    pub const ALL: [VariationClass; 4] = [
        VariationClass::LargeDecrease,
        VariationClass::SmallDecrease,
        VariationClass::SmallIncrease,
        VariationClass::LargeIncrease,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            VariationClass::LargeDecrease => "large-decrease",
            VariationClass::SmallDecrease => "small-decrease",
            VariationClass::SmallIncrease => "small-increase",
            VariationClass::LargeIncrease => "large-increase",
        }
    }

    /// Class of the `rank`-th centroid in ascending order.
    pub fn from_rank(rank: usize) -> Option<Self> {
        Self::ALL.get(rank).copied()
    }

    pub fn rank(&self) -> usize {
        *self as usize
    }
}

impl fmt::Display for VariationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for VariationClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VariationClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::validation(format!("unknown variation class `{s}`")))
    }
}

/// Signal labels allowed on each modality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    labels: BTreeMap<String, Modality>,
}

impl Default for Vocabulary {
    fn default() -> Self {
        use Modality::*;
        let table = [
            ("EyesAt", Gaze),
            ("EyesAway", Gaze),
            ("HeadAt", Head),
            ("HeadAway", Head),
            ("HeadShake", Head),
            ("HeadNod", Head),
            ("HeadTilt", Head),
            ("EyebrowUp", Eyebrow),
            ("EyebrowDown", Eyebrow),
            ("Smile", Mouth),
            ("GestComm", Gesture),
            ("GestAdaptor", Gesture),
            ("GestArmsCrossed", Gesture),
            ("PostureLeanBack", Posture),
            ("PostureLeanFront", Posture),
        ];
        Vocabulary {
            labels: table
                .into_iter()
                .map(|(l, m)| (l.to_string(), m))
                .collect(),
        }
    }
}

impl Vocabulary {
    pub fn new(labels: impl IntoIterator<Item = (String, Modality)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (label, modality) in labels {
            if label.is_empty() || label.contains(char::is_whitespace) || label.contains("->") {
                return Err(Error::validation(format!("invalid signal label `{label}`")));
            }
            if map.insert(label.clone(), modality).is_some() {
                return Err(Error::validation(format!("signal label `{label}` declared twice")));
            }
        }
        Ok(Vocabulary { labels: map })
    }

    pub fn modality_of(&self, label: &str) -> Option<Modality> {
        self.labels.get(label).copied()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.labels.contains_key(label)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignalEvent {
    pub label: String,
    pub modality: Modality,
    pub start: f64,
    pub end: f64,
}

impl SignalEvent {
    pub fn new(label: impl Into<String>, modality: Modality, start: f64, end: f64) -> Result<Self> {
        let label = label.into();
        if !(start.is_finite() && end.is_finite() && start < end) {
            return Err(Error::validation(format!(
                "signal `{label}` must start before it ends ({start} .. {end})"
            )));
        }
        Ok(SignalEvent {
            label,
            modality,
            start,
            end,
        })
    }
}

/// Time-ordered (timestamp, value) samples of one attitude dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct AttitudeCurve {
    pub dimension: Dimension,
    samples: Vec<(f64, f64)>,
}

impl AttitudeCurve {
    pub fn new(dimension: Dimension, samples: Vec<(f64, f64)>) -> Result<Self> {
        for w in samples.windows(2) {
            if !(w[1].0 > w[0].0) {
                return Err(Error::validation(format!(
                    "{dimension} timestamps must strictly increase ({} then {})",
                    w[0].0, w[1].0
                )));
            }
        }
        for &(t, v) in &samples {
            if !t.is_finite() || !(-1.0..=1.0).contains(&v) {
                return Err(Error::validation(format!(
                    "{dimension} sample ({t}, {v}) outside [-1, 1]"
                )));
            }
        }
        Ok(AttitudeCurve { dimension, samples })
    }

    pub fn empty(dimension: Dimension) -> Self {
        AttitudeCurve {
            dimension,
            samples: Vec::new(),
        }
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Linear interpolation; `None` outside the sampled range.
    pub fn value_at(&self, t: f64) -> Option<f64> {
        let s = &self.samples;
        let first = s.first()?;
        let last = s.last()?;
        if t < first.0 || t > last.0 {
            return None;
        }
        let idx = s.partition_point(|&(ts, _)| ts < t);
        if s[idx].0 == t {
            return Some(s[idx].1);
        }
        let (t0, v0) = s[idx - 1];
        let (t1, v1) = s[idx];
        Some(v0 + (v1 - v0) * (t - t0) / (t1 - t0))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InteractionAnnotation {
    pub id: String,
    pub duration: f64,
    pub signals: Vec<SignalEvent>,
    pub friendliness: AttitudeCurve,
    pub dominance: AttitudeCurve,
}

impl InteractionAnnotation {
    pub fn curve(&self, dimension: Dimension) -> &AttitudeCurve {
        match dimension {
            Dimension::Friendliness => &self.friendliness,
            Dimension::Dominance => &self.dominance,
        }
    }

    /// Checks time bounds, label vocabulary and per-modality overlaps.
    pub fn validate(&self, vocabulary: &Vocabulary) -> Result<()> {
        if !(self.duration.is_finite() && self.duration > 0.0) {
            return Err(Error::validation(format!(
                "interaction `{}` has non-positive duration",
                self.id
            )));
        }
        for s in &self.signals {
            match vocabulary.modality_of(&s.label) {
                None => {
                    return Err(Error::validation(format!("unknown signal label `{}`", s.label)))
                }
                Some(m) if m != s.modality => {
                    return Err(Error::validation(format!(
                        "signal `{}` belongs to {m}, not {}",
                        s.label, s.modality
                    )))
                }
                Some(_) => {}
            }
            if s.start < 0.0 || s.end > self.duration {
                return Err(Error::validation(format!(
                    "signal `{}` ({} .. {}) outside [0, {}]",
                    s.label, s.start, s.end, self.duration
                )));
            }
        }
        for curve in [&self.friendliness, &self.dominance] {
            if let Some(&(t, _)) = curve
                .samples()
                .iter()
                .find(|(t, _)| *t < 0.0 || *t > self.duration)
            {
                return Err(Error::validation(format!(
                    "{} sample at {t} outside [0, {}]",
                    curve.dimension, self.duration
                )));
            }
        }
        let overlaps = self.overlapping_signals();
        if !overlaps.is_empty() {
            let listed: Vec<String> = overlaps
                .iter()
                .map(|(a, b)| {
                    format!(
                        "{} [{}, {}] / {} [{}, {}]",
                        a.label, a.start, a.end, b.label, b.start, b.end
                    )
                })
                .collect();
            return Err(Error::validation(format!(
                "overlapping signals on the same modality: {}",
                listed.join("; ")
            )));
        }
        Ok(())
    }

    /// Pairs of consecutive same-modality signals that overlap in time.
    pub fn overlapping_signals(&self) -> Vec<(&SignalEvent, &SignalEvent)> {
        let mut by_modality: BTreeMap<Modality, Vec<&SignalEvent>> = BTreeMap::new();
        for s in &self.signals {
            by_modality.entry(s.modality).or_default().push(s);
        }
        let mut out = Vec::new();
        for list in by_modality.values_mut() {
            list.sort_by(|a, b| a.start.total_cmp(&b.start));
            for w in list.windows(2) {
                if w[1].start < w[0].end {
                    out.push((w[0], w[1]));
                }
            }
        }
        out
    }
}

/// Instant where an attitude curve begins a monotone change.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationEvent {
    pub timestamp: f64,
    pub dimension: Dimension,
    pub delta: f64,
    pub class: Option<VariationClass>,
}

/// Signals preceding one variation event.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    pub sequence: Vec<String>,
    pub terminating_event: VariationEvent,
}
