//! Affect vocabulary and the per-turn emotion and mood update of the
//! virtual recruiter.
//!
//! Every affect is a named intensity in `[0, 1]`. Recruiter affects come from
//! a closed vocabulary (see [`LabelSet::recruiter`]); interviewee affects come
//! from a configurable [`LabelSet`] because the detected and expected labels
//! depend on the perception front-end and on the scenario author.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Fraction of the gap between the current mood and its emotion target that is
/// closed on each question/answer cycle. With a sustained target of 1 from a
/// neutral start, the mood first exceeds 0.5 on the fifth cycle.
pub const MOOD_RATE: f64 = 0.13;

/// Detected negative affects above this level make the recruiter angry.
pub const ANGER_TRIGGER: f64 = 0.8;

/// Offset subtracted from a detected negative affect to obtain anger.
pub const ANGER_OFFSET: f64 = 0.5;

/// Below this level an emotion counts as absent for the bored mood.
pub const BOREDOM_FLOOR: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AffectKind {
    Emotion,
    Mood,
    Attitude,
}

impl fmt::Display for AffectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AffectKind::Emotion => "emotion",
            AffectKind::Mood => "mood",
            AffectKind::Attitude => "attitude",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Valence {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffectLabel {
    pub name: String,
    pub kind: AffectKind,
    pub valence: Valence,
}

impl AffectLabel {
    pub fn new(name: impl Into<String>, kind: AffectKind, valence: Valence) -> Self {
        AffectLabel {
            name: name.into(),
            kind,
            valence,
        }
    }
}

/// Recruiter affect names.
pub mod recruiter {
    pub const JOY: &str = "joy";
    pub const RELIEF: &str = "relief";
    pub const ADMIRATION: &str = "admiration";
    pub const HOPE: &str = "hope";
    pub const DISTRESS: &str = "distress";
    pub const DISAPPOINTMENT: &str = "disappointment";
    pub const ANGER: &str = "anger";
    pub const FEAR: &str = "fear";

    pub const RELAXED: &str = "relaxed";
    pub const EXUBERANT: &str = "exuberant";
    pub const HOSTILE: &str = "hostile";
    pub const BORED: &str = "bored";
    pub const DISDAINFUL: &str = "disdainful";

    pub const FRIENDLY: &str = "friendly";
    pub const SUPPORTIVE: &str = "supportive";
    pub const ATTENTIVE: &str = "attentive";
    pub const AGGRESSIVE: &str = "aggressive";
    pub const DOMINANT: &str = "dominant";
    pub const INATTENTIVE: &str = "inattentive";
    pub const GOSSIP: &str = "gossip";

    pub const EMOTIONS: [&str; 8] = [
        JOY,
        RELIEF,
        ADMIRATION,
        HOPE,
        DISTRESS,
        DISAPPOINTMENT,
        ANGER,
        FEAR,
    ];
    pub const MOODS: [&str; 5] = [RELAXED, EXUBERANT, HOSTILE, BORED, DISDAINFUL];
    pub const ATTITUDES: [&str; 7] = [
        FRIENDLY,
        SUPPORTIVE,
        ATTENTIVE,
        AGGRESSIVE,
        DOMINANT,
        INATTENTIVE,
        GOSSIP,
    ];
}

/// A vocabulary of affect labels keyed by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSet {
    labels: BTreeMap<String, AffectLabel>,
}

impl LabelSet {
    pub fn new(labels: impl IntoIterator<Item = AffectLabel>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for label in labels {
            if label.name.is_empty() {
                return Err(Error::validation("affect label with empty name"));
            }
            if let Some(prev) = map.insert(label.name.clone(), label) {
                return Err(Error::validation(format!(
                    "affect label `{}` declared twice",
                    prev.name
                )));
            }
        }
        Ok(LabelSet { labels: map })
    }

    /// The recruiter's emotions, moods and attitudes.
    pub fn recruiter() -> Self {
        use recruiter::*;
        use AffectKind::*;
        use Valence::*;
        let table = [
            (JOY, Emotion, Positive),
            (RELIEF, Emotion, Positive),
            (ADMIRATION, Emotion, Positive),
            (HOPE, Emotion, Positive),
            (DISTRESS, Emotion, Negative),
            (DISAPPOINTMENT, Emotion, Negative),
            (ANGER, Emotion, Negative),
            (FEAR, Emotion, Negative),
            (RELAXED, Mood, Positive),
            (EXUBERANT, Mood, Positive),
            (HOSTILE, Mood, Negative),
            (BORED, Mood, Negative),
            (DISDAINFUL, Mood, Negative),
            (FRIENDLY, Attitude, Positive),
            (SUPPORTIVE, Attitude, Positive),
            (ATTENTIVE, Attitude, Positive),
            (AGGRESSIVE, Attitude, Negative),
            (DOMINANT, Attitude, Negative),
            (INATTENTIVE, Attitude, Negative),
            (GOSSIP, Attitude, Negative),
        ];
        Self::new(table.map(|(n, k, v)| AffectLabel::new(n, k, v))).expect("static table")
    }

    /// Default interviewee vocabulary used when a scenario declares none.
    pub fn interviewee_default() -> Self {
        use AffectKind::*;
        use Valence::*;
        let table = [
            ("joy", Emotion, Positive),
            ("relief", Emotion, Positive),
            ("distress", Emotion, Negative),
            ("embarrassed", Emotion, Negative),
            ("agitated", Emotion, Negative),
            ("confident", Mood, Positive),
            ("focused", Mood, Positive),
            ("anxious", Mood, Negative),
            ("bored", Mood, Negative),
            ("friendly", Attitude, Positive),
            ("hostile", Attitude, Negative),
        ];
        Self::new(table.map(|(n, k, v)| AffectLabel::new(n, k, v))).expect("static table")
    }

    pub fn get(&self, name: &str) -> Option<&AffectLabel> {
        self.labels.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &AffectLabel> {
        self.labels.values()
    }

    pub fn names_of(&self, kind: AffectKind) -> impl Iterator<Item = &str> {
        self.labels
            .values()
            .filter(move |l| l.kind == kind)
            .map(|l| l.name.as_str())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Fails unless every label of `vector` is declared here with `kind`.
    pub fn check(&self, vector: &AffectVector, kind: AffectKind) -> Result<()> {
        for name in vector.labels() {
            match self.get(name) {
                None => return Err(Error::validation(format!("unknown affect label `{name}`"))),
                Some(l) if l.kind != kind => {
                    return Err(Error::validation(format!(
                        "`{name}` is a {}, expected a {kind}",
                        l.kind
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(())
    }
}

fn check_intensity(name: &str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::validation(format!(
            "intensity of `{name}` is {value}, outside [0, 1]"
        )));
    }
    Ok(())
}

/// Intensities by label name. A missing label has intensity 0.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct AffectVector {
    entries: BTreeMap<String, f64>,
}

impl AffectVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, f64)>) -> Result<Self> {
        let mut v = Self::new();
        for (name, value) in pairs {
            v.set(name, value)?;
        }
        Ok(v)
    }

    /// Zero intensity for each of `names`.
    pub fn zeros<'a>(names: impl IntoIterator<Item = &'a str>) -> Self {
        AffectVector {
            entries: names.into_iter().map(|n| (n.to_string(), 0.0)).collect(),
        }
    }

    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        check_intensity(name, value)?;
        self.entries.insert(name.to_string(), value);
        Ok(())
    }

    pub fn get(&self, name: &str) -> f64 {
        self.entries.get(name).copied().unwrap_or(0.0)
    }

    /// Raises `name` to at least `value`.
    fn raise(&mut self, name: &str, value: f64) {
        let slot = self.entries.entry(name.to_string()).or_insert(0.0);
        if value > *slot {
            *slot = value;
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_intensity(&self) -> f64 {
        self.entries.values().copied().fold(0.0, f64::max)
    }
}

impl<'de> Deserialize<'de> for AffectVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, f64>::deserialize(d)?;
        for (name, value) in &raw {
            check_intensity(name, *value).map_err(serde::de::Error::custom)?;
        }
        Ok(AffectVector { entries: raw })
    }
}

/// Interviewee affects reported by the perception front-end for one turn.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct DetectedAffects {
    pub emotions: AffectVector,
    pub moods: AffectVector,
    pub attitudes: AffectVector,
    pub turn_index: usize,
}

impl DetectedAffects {
    /// Splits a flat label→intensity vector by the kind declared in `labels`.
    pub fn from_flat(flat: &AffectVector, labels: &LabelSet, turn_index: usize) -> Result<Self> {
        let mut out = DetectedAffects {
            turn_index,
            ..Default::default()
        };
        for (name, value) in flat.iter() {
            let label = labels
                .get(name)
                .ok_or_else(|| Error::validation(format!("unknown interviewee affect `{name}`")))?;
            let target = match label.kind {
                AffectKind::Emotion => &mut out.emotions,
                AffectKind::Mood => &mut out.moods,
                AffectKind::Attitude => &mut out.attitudes,
            };
            target.set(name, value)?;
        }
        Ok(out)
    }

    pub fn validate(&self, labels: &LabelSet) -> Result<()> {
        labels.check(&self.emotions, AffectKind::Emotion)?;
        labels.check(&self.moods, AffectKind::Mood)?;
        labels.check(&self.attitudes, AffectKind::Attitude)
    }
}

/// Interviewee affects the scenario expects after a question.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExpectedAffects {
    pub entries: AffectVector,
    pub turn_index: usize,
}

impl ExpectedAffects {
    pub fn validate(&self, labels: &LabelSet) -> Result<()> {
        for name in self.entries.labels() {
            if labels.get(name).is_none() {
                return Err(Error::validation(format!(
                    "unknown interviewee affect `{name}` in expectations"
                )));
            }
        }
        Ok(())
    }
}

/// What the recruiter feels after a turn.
#[derive(Debug, Clone, PartialEq)]
pub struct RecruiterAffectState {
    pub emotions: AffectVector,
    pub moods: AffectVector,
    pub attitudes: AffectVector,
    pub turn_index: usize,
}

impl RecruiterAffectState {
    /// All recruiter affects at zero.
    pub fn neutral() -> Self {
        RecruiterAffectState {
            emotions: AffectVector::zeros(recruiter::EMOTIONS),
            moods: AffectVector::zeros(recruiter::MOODS),
            attitudes: AffectVector::zeros(recruiter::ATTITUDES),
            turn_index: 0,
        }
    }
}

#[derive(Debug, Deserialize)]
struct RawPersonality {
    openness: f64,
    conscientiousness: f64,
    extraversion: f64,
    agreeableness: f64,
    neuroticism: f64,
}

/// Five-factor personality. Fixed for the lifetime of a simulation.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(try_from = "RawPersonality")]
pub struct Personality {
    openness: f64,
    conscientiousness: f64,
    extraversion: f64,
    agreeableness: f64,
    neuroticism: f64,
}

impl TryFrom<RawPersonality> for Personality {
    type Error = Error;

    fn try_from(r: RawPersonality) -> Result<Self> {
        Personality::new(
            r.openness,
            r.conscientiousness,
            r.extraversion,
            r.agreeableness,
            r.neuroticism,
        )
    }
}

impl Personality {
    pub fn new(
        openness: f64,
        conscientiousness: f64,
        extraversion: f64,
        agreeableness: f64,
        neuroticism: f64,
    ) -> Result<Self> {
        for (name, v) in [
            ("openness", openness),
            ("conscientiousness", conscientiousness),
            ("extraversion", extraversion),
            ("agreeableness", agreeableness),
            ("neuroticism", neuroticism),
        ] {
            check_intensity(name, v)?;
        }
        Ok(Personality {
            openness,
            conscientiousness,
            extraversion,
            agreeableness,
            neuroticism,
        })
    }

    /// Every trait at `v`.
    pub fn uniform(v: f64) -> Result<Self> {
        Self::new(v, v, v, v, v)
    }

    pub fn openness(&self) -> f64 {
        self.openness
    }
    pub fn conscientiousness(&self) -> f64 {
        self.conscientiousness
    }
    pub fn extraversion(&self) -> f64 {
        self.extraversion
    }
    pub fn agreeableness(&self) -> f64 {
        self.agreeableness
    }
    pub fn neuroticism(&self) -> f64 {
        self.neuroticism
    }
}

/// Recruiter emotions from the congruence between what the scenario expected
/// and what was detected.
///
/// For each expected emotion or mood `e` (value `v_e`) and its detected value
/// `v_d`:
///
/// | valence of `e` | `v_d >= v_e`        | `v_d < v_e`                        |
/// |----------------|---------------------|------------------------------------|
/// | positive       | joy ≥ `v_d`         | disappointment ≥ `v_e - v_d`       |
/// | negative       | distress ≥ `v_d`    | relief ≥ `v_e - v_d`               |
///
/// Independently, any detected negative emotion or mood above
/// [`ANGER_TRIGGER`] raises anger to `v_d - ANGER_OFFSET`. Detected and
/// expected attitudes take no part.
pub fn update_emotions(
    detected: &DetectedAffects,
    expected: &ExpectedAffects,
    labels: &LabelSet,
) -> Result<AffectVector> {
    use recruiter::*;

    if detected.turn_index != expected.turn_index {
        return Err(Error::Contract(format!(
            "detected affects are for turn {} but expectations are for turn {}",
            detected.turn_index, expected.turn_index
        )));
    }
    detected.validate(labels)?;
    expected.validate(labels)?;

    let mut out = AffectVector::zeros(EMOTIONS);
    for (name, v_e) in expected.entries.iter() {
        let label = labels.get(name).expect("validated above");
        let v_d = match label.kind {
            AffectKind::Emotion => detected.emotions.get(name),
            AffectKind::Mood => detected.moods.get(name),
            AffectKind::Attitude => continue,
        };
        match (label.valence, v_d >= v_e) {
            (Valence::Positive, true) => out.raise(JOY, v_d),
            (Valence::Positive, false) => out.raise(DISAPPOINTMENT, v_e - v_d),
            (Valence::Negative, true) => out.raise(DISTRESS, v_d),
            (Valence::Negative, false) => out.raise(RELIEF, v_e - v_d),
        }
    }

    for (name, v_d) in detected.emotions.iter().chain(detected.moods.iter()) {
        let negative = labels.get(name).map(|l| l.valence) == Some(Valence::Negative);
        if negative && v_d > ANGER_TRIGGER {
            out.raise(ANGER, v_d - ANGER_OFFSET);
        }
    }
    Ok(out)
}

/// Emotions that pull each mood toward their strongest intensity. The bored
/// mood is handled separately.
pub const MOOD_SOURCES: [(&str, &[&str]); 4] = [
    (recruiter::HOSTILE, &[recruiter::ANGER, recruiter::FEAR]),
    (recruiter::EXUBERANT, &[recruiter::JOY, recruiter::ADMIRATION]),
    (recruiter::RELAXED, &[recruiter::RELIEF, recruiter::HOPE]),
    (recruiter::DISDAINFUL, &[recruiter::DISAPPOINTMENT]),
];

/// Target intensity each mood moves toward given this turn's emotions.
pub fn mood_targets(emotions: &AffectVector) -> AffectVector {
    let mut targets = AffectVector::zeros(recruiter::MOODS);
    for (mood, sources) in MOOD_SOURCES {
        let t = sources.iter().map(|e| emotions.get(e)).fold(0.0, f64::max);
        targets.raise(mood, t);
    }
    let idle = recruiter::EMOTIONS
        .iter()
        .all(|e| emotions.get(e) < BOREDOM_FLOOR);
    if idle {
        targets.raise(recruiter::BORED, 1.0);
    }
    targets
}

/// Moves every mood a fixed fraction ([`MOOD_RATE`]) of the way toward its
/// emotion target.
pub fn update_mood(previous_moods: &AffectVector, emotions: &AffectVector) -> Result<AffectVector> {
    let recruiter_labels = LabelSet::recruiter();
    recruiter_labels.check(previous_moods, AffectKind::Mood)?;
    recruiter_labels.check(emotions, AffectKind::Emotion)?;

    let targets = mood_targets(emotions);
    let mut out = AffectVector::new();
    for mood in recruiter::MOODS {
        let old = previous_moods.get(mood);
        let target = targets.get(mood);
        let new = old + MOOD_RATE * (target - old);
        debug_assert!((0.0..=1.0).contains(&new), "mood {mood} left [0,1]: {new}");
        out.set(mood, new)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn turn(
        expected: &[(&str, f64)],
        detected: &[(&str, f64)],
    ) -> (DetectedAffects, ExpectedAffects) {
        let labels = LabelSet::interviewee_default();
        let flat = AffectVector::from_pairs(detected.iter().copied()).unwrap();
        let d = DetectedAffects::from_flat(&flat, &labels, 3).unwrap();
        let e = ExpectedAffects {
            entries: AffectVector::from_pairs(expected.iter().copied()).unwrap(),
            turn_index: 3,
        };
        (d, e)
    }

    fn emotions_for(expected: &[(&str, f64)], detected: &[(&str, f64)]) -> AffectVector {
        let (d, e) = turn(expected, detected);
        update_emotions(&d, &e, &LabelSet::interviewee_default()).unwrap()
    }

    fn only(v: &AffectVector, name: &str, value: f64) {
        for (label, got) in v.iter() {
            let want = if label == name { value } else { 0.0 };
            assert!((got - want).abs() < 1e-12, "{label}: got {got}, want {want}");
        }
    }

    #[test]
    fn recruiter_vocabulary_matches_table() {
        let set = LabelSet::recruiter();
        assert_eq!(set.len(), 20);
        assert_eq!(set.names_of(AffectKind::Emotion).count(), 8);
        assert_eq!(set.names_of(AffectKind::Mood).count(), 5);
        assert_eq!(set.names_of(AffectKind::Attitude).count(), 7);
        let positive: Vec<_> = set
            .iter()
            .filter(|l| l.valence == Valence::Positive)
            .map(|l| l.name.as_str())
            .collect();
        assert_eq!(
            positive,
            [
                "admiration",
                "attentive",
                "exuberant",
                "friendly",
                "hope",
                "joy",
                "relaxed",
                "relief",
                "supportive"
            ]
        );
    }

    #[test]
    fn duplicate_labels_rejected() {
        let l = AffectLabel::new("joy", AffectKind::Emotion, Valence::Positive);
        assert!(LabelSet::new([l.clone(), l]).is_err());
    }

    #[test]
    fn congruent_positive_expectation() {
        only(&emotions_for(&[("joy", 0.6)], &[("joy", 0.8)]), "joy", 0.8);
    }

    #[test]
    fn empty_turn_feels_nothing() {
        let out = emotions_for(&[], &[]);
        assert_eq!(out.len(), 8);
        assert_eq!(out.max_intensity(), 0.0);
    }

    #[test]
    fn missed_positive_expectation_disappoints() {
        only(
            &emotions_for(&[("joy", 0.7)], &[("joy", 0.2)]),
            "disappointment",
            0.5,
        );
    }

    #[test]
    fn strong_negative_detection_angers() {
        let out = emotions_for(&[("distress", 0.5)], &[("distress", 0.9)]);
        assert!((out.get("distress") - 0.9).abs() < 1e-12);
        assert!((out.get("anger") - 0.4).abs() < 1e-12);
        assert_eq!(out.get("relief"), 0.0);
    }

    #[test]
    fn expected_attitudes_are_ignored() {
        only(&emotions_for(&[("friendly", 0.9)], &[]), "joy", 0.0);
    }

    #[test]
    fn mismatched_turns_are_a_contract_violation() {
        let (d, mut e) = turn(&[], &[]);
        e.turn_index = 4;
        let err = update_emotions(&d, &e, &LabelSet::interviewee_default()).unwrap_err();
        assert!(matches!(err, Error::Contract(_)));
    }

    #[test]
    fn out_of_range_intensity_rejected() {
        assert!(AffectVector::from_pairs([("joy", 1.2)]).is_err());
        assert!(AffectVector::from_pairs([("joy", f64::NAN)]).is_err());
        assert!(Personality::new(0.5, 0.5, -0.1, 0.5, 0.5).is_err());
    }

    #[test]
    fn unknown_interviewee_label_rejected() {
        let flat = AffectVector::from_pairs([("elated", 0.3)]).unwrap();
        assert!(DetectedAffects::from_flat(&flat, &LabelSet::interviewee_default(), 0).is_err());
    }

    /// Every (v_e, v_d) pair on a 0.1 grid for one positive and one negative
    /// label, checked against the rule table written out case by case.
    #[test]
    fn emotion_rules_exhaustive_grid() {
        let grid: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
        for label in ["joy", "distress"] {
            for &v_e in &grid {
                for &v_d in &grid {
                    let out = emotions_for(&[(label, v_e)], &[(label, v_d)]);
                    let mut want = BTreeMap::new();
                    if label == "joy" {
                        if v_d >= v_e {
                            want.insert("joy", v_d);
                        } else {
                            want.insert("disappointment", v_e - v_d);
                        }
                    } else {
                        if v_d >= v_e {
                            want.insert("distress", v_d);
                        } else {
                            want.insert("relief", v_e - v_d);
                        }
                        if v_d > 0.8 {
                            want.insert("anger", v_d - 0.5);
                        }
                    }
                    for e in recruiter::EMOTIONS {
                        let w = want.get(e).copied().unwrap_or(0.0);
                        assert_eq!(out.get(e), w, "{label} v_e={v_e} v_d={v_d} {e}");
                    }
                }
            }
        }
    }

    fn moods(pairs: &[(&str, f64)]) -> AffectVector {
        AffectVector::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn sustained_anger_turns_hostile_on_fifth_cycle() {
        let anger = moods(&[("anger", 1.0)]);
        let mut m = moods(&[("hostile", 0.0)]);
        let mut crossed = None;
        for cycle in 1..=10 {
            m = update_mood(&m, &anger).unwrap();
            if crossed.is_none() && m.get("hostile") >= 0.5 {
                crossed = Some(cycle);
            }
            if cycle == 4 {
                assert!(m.get("hostile") < 0.5);
            }
        }
        assert_eq!(crossed, Some(5));
    }

    #[test]
    fn moods_decay_without_emotion() {
        let m = update_mood(&moods(&[("hostile", 0.4)]), &AffectVector::new()).unwrap();
        assert!((m.get("hostile") - 0.348).abs() < 1e-12);
    }

    #[test]
    fn saturated_mood_is_a_fixed_point() {
        let m = update_mood(&moods(&[("relaxed", 1.0)]), &moods(&[("relief", 1.0)])).unwrap();
        assert_eq!(m.get("relaxed"), 1.0);
    }

    #[test]
    fn idle_turn_breeds_boredom() {
        let m = update_mood(&AffectVector::new(), &moods(&[("joy", 0.05)])).unwrap();
        assert!((m.get("bored") - MOOD_RATE).abs() < 1e-12);
        let m = update_mood(&AffectVector::new(), &moods(&[("joy", 0.1)])).unwrap();
        assert_eq!(m.get("bored"), 0.0);
    }

    #[test]
    fn mood_update_rejects_mixed_kinds() {
        assert!(update_mood(&moods(&[("anger", 0.2)]), &AffectVector::new()).is_err());
        assert!(update_mood(&AffectVector::new(), &moods(&[("hostile", 0.2)])).is_err());
    }

    fn unit() -> impl Strategy<Value = f64> {
        0.0..=1.0f64
    }

    proptest! {
        #[test]
        fn mood_update_contracts_toward_target(
            old in proptest::collection::vec(unit(), 5),
            emo in proptest::collection::vec(unit(), 8),
        ) {
            let prev = AffectVector::from_pairs(recruiter::MOODS.iter().copied().zip(old)).unwrap();
            let emotions = AffectVector::from_pairs(recruiter::EMOTIONS.iter().copied().zip(emo)).unwrap();
            let targets = mood_targets(&emotions);
            let next = update_mood(&prev, &emotions).unwrap();
            prop_assert_eq!(next.clone(), update_mood(&prev, &emotions).unwrap());
            for m in recruiter::MOODS {
                let (o, n, t) = (prev.get(m), next.get(m), targets.get(m));
                prop_assert!((0.0..=1.0).contains(&n));
                prop_assert!((n - t).abs() <= (o - t).abs() + 1e-15);
            }
        }

        #[test]
        fn raising_an_emotion_never_lowers_its_mood(
            old in proptest::collection::vec(unit(), 5),
            emo in proptest::collection::vec(0.1..=1.0f64, 8),
            which in 0usize..8,
            bump in unit(),
        ) {
            let prev = AffectVector::from_pairs(recruiter::MOODS.iter().copied().zip(old)).unwrap();
            let base = AffectVector::from_pairs(recruiter::EMOTIONS.iter().copied().zip(emo)).unwrap();
            let name = recruiter::EMOTIONS[which];
            let mut raised = base.clone();
            raised.set(name, (base.get(name) + bump).min(1.0)).unwrap();
            let a = update_mood(&prev, &base).unwrap();
            let b = update_mood(&prev, &raised).unwrap();
            for (mood, sources) in MOOD_SOURCES {
                if sources.contains(&name) {
                    prop_assert!(b.get(mood) >= a.get(mood));
                }
            }
        }

        #[test]
        fn emotions_stay_in_unit_interval(
            e in proptest::collection::vec(unit(), 3),
            d in proptest::collection::vec(unit(), 3),
        ) {
            let names = ["joy", "anxious", "embarrassed"];
            let exp: Vec<_> = names.iter().copied().zip(e).collect();
            let det: Vec<_> = names.iter().copied().zip(d).collect();
            let out = emotions_for(&exp, &det);
            for (_, v) in out.iter() {
                prop_assert!((0.0..=1.0).contains(&v));
            }
        }
    }
}
