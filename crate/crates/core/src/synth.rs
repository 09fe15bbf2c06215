//! Seeded synthetic corpora with planted precursor sequences.
//!
//! Each attitude curve is piecewise constant with occasional steps whose size
//! is drawn around one of four modes. Before most steps, a sequence of
//! signals characteristic of the (dimension, class) pair is played; the rest
//! of the signal stream is background activity.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::corpus::{
    AttitudeCurve, Dimension, InteractionAnnotation, Modality, SignalEvent, VariationClass,
    Vocabulary,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SynthConfig {
    pub seed: u64,
    pub interactions: usize,
    /// Seconds per interaction.
    pub duration: f64,
    /// Curve sampling period in seconds.
    pub sample_period: f64,
    /// Step size modes, one per class in ascending order.
    pub modes: [f64; 4],
    pub mode_sigma: f64,
    /// Uniform noise amplitude added to curve samples.
    pub noise: f64,
    /// Probability that a step is preceded by its planted sequence.
    pub plant_rate: f64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            seed: 7,
            interactions: 8,
            duration: 600.0,
            sample_period: 0.5,
            modes: [-0.8, -0.25, 0.25, 0.8],
            mode_sigma: 0.03,
            noise: 0.004,
            plant_rate: 0.8,
        }
    }
}

/// Planted precursor of each variation class.
pub fn planted_sequence(dimension: Dimension, class: VariationClass) -> &'static [&'static str] {
    use Dimension::*;
    use VariationClass::*;
    match (dimension, class) {
        (Friendliness, LargeDecrease) => &["EyesAt", "EyesAway", "EyebrowUp", "HeadShake"],
        (Friendliness, SmallDecrease) => &["EyesAway", "GestAdaptor"],
        (Friendliness, SmallIncrease) => &["HeadNod", "Smile"],
        (Friendliness, LargeIncrease) => &["EyesAt", "Smile", "HeadNod"],
        (Dominance, LargeDecrease) => &["HeadAway", "PostureLeanBack"],
        (Dominance, SmallDecrease) => &["HeadTilt", "EyebrowDown"],
        (Dominance, SmallIncrease) => &["GestComm", "HeadAt"],
        (Dominance, LargeIncrease) => &["HeadAt", "GestComm", "EyebrowUp", "Smile"],
    }
}

const BACKGROUND: [(Modality, &[&str], f64); 6] = [
    (Modality::Gaze, &["EyesAt", "EyesAway"], 6.0),
    (Modality::Head, &["HeadAt", "HeadAway", "HeadNod", "HeadTilt"], 12.0),
    (Modality::Eyebrow, &["EyebrowUp", "EyebrowDown"], 15.0),
    (Modality::Mouth, &["Smile"], 20.0),
    (Modality::Gesture, &["GestComm", "GestAdaptor", "GestArmsCrossed"], 12.0),
    (Modality::Posture, &["PostureLeanBack", "PostureLeanFront"], 60.0),
];

fn ms(t: f64) -> f64 {
    (t * 1000.0).round() / 1000.0
}

#[derive(Default)]
struct Timeline {
    busy: BTreeMap<Modality, Vec<(f64, f64)>>,
    signals: Vec<SignalEvent>,
}

impl Timeline {
    fn clash(&self, modality: Modality, start: f64, end: f64) -> Option<f64> {
        self.busy
            .get(&modality)?
            .iter()
            .find(|&&(s, e)| start < e && s < end)
            .map(|&(_, e)| e)
    }

    fn add(&mut self, label: &str, modality: Modality, start: f64, end: f64) -> bool {
        let (start, end) = (ms(start), ms(end));
        if !(start < end) || self.clash(modality, start, end).is_some() {
            return false;
        }
        self.busy.entry(modality).or_default().push((start, end));
        self.signals.push(SignalEvent {
            label: label.to_string(),
            modality,
            start,
            end,
        });
        true
    }
}

/// A step of the piecewise-constant curve: the value changes at `time`.
#[derive(Debug, Clone, Copy)]
struct Step {
    time: f64,
    class: VariationClass,
    delta: f64,
}

fn plan_steps(rng: &mut ChaCha8Rng, cfg: &SynthConfig, normal: &[Normal<f64>; 4]) -> Vec<Step> {
    let mut steps = Vec::new();
    let mut level = 0.0;
    let mut t = 15.0 + rng.random_range(0.0..10.0);
    while t < cfg.duration - 10.0 {
        let time = (t / cfg.sample_period).round() * cfg.sample_period;
        let draws: Vec<(VariationClass, f64)> = VariationClass::ALL
            .into_iter()
            .map(|c| (c, normal[c.rank()].sample(rng)))
            .filter(|(_, d)| (-1.0..=1.0).contains(&(level + d)))
            .collect();
        if !draws.is_empty() {
            let (class, delta) = draws[rng.random_range(0..draws.len())];
            level += delta;
            steps.push(Step { time, class, delta });
        }
        t += rng.random_range(25.0..45.0);
    }
    steps
}

fn curve_from_steps(
    rng: &mut ChaCha8Rng,
    dimension: Dimension,
    steps: &[Step],
    cfg: &SynthConfig,
) -> Result<AttitudeCurve> {
    let n = (cfg.duration / cfg.sample_period).floor() as usize;
    let mut samples = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let t = ms(i as f64 * cfg.sample_period);
        let level: f64 = steps.iter().filter(|s| s.time <= t).map(|s| s.delta).sum();
        let noise = if cfg.noise > 0.0 {
            rng.random_range(-cfg.noise..cfg.noise)
        } else {
            0.0
        };
        samples.push((t, ms((level + noise).clamp(-1.0, 1.0))));
    }
    AttitudeCurve::new(dimension, samples)
}

fn plant(rng: &mut ChaCha8Rng, timeline: &mut Timeline, vocab: &Vocabulary, labels: &[&str], step: f64) {
    let mut t = step - 9.0 + rng.random_range(0.0..1.0);
    for label in labels {
        let modality = vocab.modality_of(label).expect("planted labels are in the vocabulary");
        let duration = rng.random_range(0.6..1.2);
        timeline.add(label, modality, t, t + duration);
        t += duration + rng.random_range(0.1..0.5);
    }
}

fn background(rng: &mut ChaCha8Rng, timeline: &mut Timeline, duration: f64) {
    for (modality, labels, mean_gap) in BACKGROUND {
        let mut t = rng.random_range(0.0..mean_gap);
        while t < duration - 1.0 {
            let len = rng.random_range(0.5..3.0);
            let end = (t + len).min(duration);
            if let Some(free_at) = timeline.clash(modality, t, end) {
                t = free_at + 0.2;
                continue;
            }
            let label = labels[rng.random_range(0..labels.len())];
            timeline.add(label, modality, t, end);
            t = end + rng.random_range(0.2..2.0 * mean_gap);
        }
    }
}

/// Generates a corpus; the same configuration always yields the same corpus.
pub fn synthetic_corpus(cfg: &SynthConfig) -> Result<Vec<InteractionAnnotation>> {
    if !(cfg.duration > 30.0 && cfg.sample_period > 0.0 && cfg.mode_sigma >= 0.0) {
        return Err(Error::validation("synthetic corpus needs duration > 30 s and a positive sampling period"));
    }
    let normal = cfg.modes.map(|m| Normal::new(m, cfg.mode_sigma).expect("sigma checked above"));
    let vocab = Vocabulary::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(cfg.interactions);
    for i in 0..cfg.interactions {
        let mut timeline = Timeline::default();
        let mut curves = Vec::new();
        for dimension in Dimension::ALL {
            let steps = plan_steps(&mut rng, cfg, &normal);
            for s in &steps {
                if rng.random_bool(cfg.plant_rate) {
                    plant(&mut rng, &mut timeline, &vocab, planted_sequence(dimension, s.class), s.time);
                }
            }
            curves.push(curve_from_steps(&mut rng, dimension, &steps, cfg)?);
        }
        background(&mut rng, &mut timeline, cfg.duration);
        let mut signals = timeline.signals;
        signals.sort_by(|a, b| a.start.total_cmp(&b.start).then(a.modality.cmp(&b.modality)));
        let dominance = curves.pop().expect("two curves");
        let friendliness = curves.pop().expect("two curves");
        let annotation = InteractionAnnotation {
            id: format!("synth{:03}", i + 1),
            duration: cfg.duration,
            signals,
            friendliness,
            dominance,
        };
        annotation.validate(&vocab)?;
        out.push(annotation);
    }
    Ok(out)
}
