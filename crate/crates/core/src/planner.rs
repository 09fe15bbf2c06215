//! Choice of the signal sequence that best conveys an attitude change.

use std::collections::{BTreeSet, HashMap, VecDeque};

use log::warn;
use serde::{Deserialize, Serialize};

use crate::circumplex::AttitudePoint;
use crate::corpus::{Centroids, Dimension, VariationClass, Vocabulary};
use crate::error::{Error, Result};
use crate::seqmine::{Pattern, PatternSet, PatternStats};

pub const LEAN_BACK: &str = "PostureLeanBack";
pub const LEAN_FRONT: &str = "PostureLeanFront";
pub const SMILE: &str = "Smile";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttitudeDelta {
    pub d_friendliness: f64,
    pub d_dominance: f64,
}

impl AttitudeDelta {
    pub fn along(&self, dimension: Dimension) -> f64 {
        match dimension {
            Dimension::Friendliness => self.d_friendliness,
            Dimension::Dominance => self.d_dominance,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Posture {
    #[default]
    Neutral,
    LeanBack,
    LeanFront,
}

/// What the agent is currently displaying.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AgentContext {
    pub posture: Posture,
    pub smiling: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PlannerConfig {
    /// Deltas smaller than this in magnitude count as no variation.
    pub dead_zone: f64,
    /// Number of past turns in which repeated use is penalised.
    pub decay_window: usize,
}

impl Default for PlannerConfig {
    fn default() -> Self {
        PlannerConfig {
            dead_zone: 0.05,
            decay_window: 5,
        }
    }
}

impl PlannerConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.dead_zone >= 0.0 && self.dead_zone.is_finite()) {
            return Err(Error::validation(format!(
                "dead_zone {} must be a non-negative number",
                self.dead_zone
            )));
        }
        Ok(())
    }
}

/// Per-agent planner memory. Callers must not share it between agents.
#[derive(Debug, Clone, PartialEq)]
pub struct PlannerState {
    pub previous_point: AttitudePoint,
    pub context: AgentContext,
    pub decay_window: usize,
    history: VecDeque<Pattern>,
}

impl PlannerState {
    pub fn new(decay_window: usize) -> Self {
        PlannerState {
            previous_point: AttitudePoint::ORIGIN,
            context: AgentContext::default(),
            decay_window,
            history: VecDeque::new(),
        }
    }

    /// Times `pattern` was chosen during the last `decay_window` turns.
    pub fn recent_uses(&self, pattern: &Pattern) -> usize {
        self.history.iter().filter(|p| *p == pattern).count()
    }

    /// Repetition divisor `2^uses`.
    pub fn lambda(&self, pattern: &Pattern) -> f64 {
        2f64.powi(self.recent_uses(pattern) as i32)
    }

    /// Records one turn's choice (the empty pattern when nothing was shown).
    pub fn record(&mut self, chosen: Pattern) {
        self.history.push_back(chosen);
        while self.history.len() > self.decay_window {
            self.history.pop_front();
        }
    }
}

impl Default for PlannerState {
    fn default() -> Self {
        Self::new(PlannerConfig::default().decay_window)
    }
}

pub fn attitude_delta(current: &AttitudePoint, state: &PlannerState) -> AttitudeDelta {
    AttitudeDelta {
        d_friendliness: current.friendliness - state.previous_point.friendliness,
        d_dominance: current.dominance - state.previous_point.dominance,
    }
}

/// Target variation class per dimension; `None` means no variation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Targets {
    pub friendliness: Option<VariationClass>,
    pub dominance: Option<VariationClass>,
}

impl Targets {
    pub fn get(&self, dimension: Dimension) -> Option<VariationClass> {
        match dimension {
            Dimension::Friendliness => self.friendliness,
            Dimension::Dominance => self.dominance,
        }
    }
}

/// Nearest-centroid class of each component of `delta`.
pub fn classify_delta(
    delta: &AttitudeDelta,
    centroids: &Centroids,
    dead_zone: f64,
) -> Result<Targets> {
    let classify = |dimension: Dimension| -> Result<Option<VariationClass>> {
        let d = delta.along(dimension);
        if d.abs() < dead_zone {
            return Ok(None);
        }
        let c = centroids.get(dimension).ok_or_else(|| {
            Error::validation(format!("no variation centroids for {dimension}"))
        })?;
        let mut best = 0;
        for i in 1..c.len() {
            if (d - c[i]).abs() < (d - c[best]).abs() {
                best = i;
            }
        }
        Ok(VariationClass::from_rank(best))
    };
    Ok(Targets {
        friendliness: classify(Dimension::Friendliness)?,
        dominance: classify(Dimension::Dominance)?,
    })
}

/// Whether the agent can display `pattern` from its current state.
pub fn feasible(pattern: &Pattern, context: &AgentContext, vocabulary: &Vocabulary) -> bool {
    pattern.items().iter().all(|label| {
        if !vocabulary.contains(label) {
            warn!("unknown signal `{label}` treated as feasible");
        }
        match label.as_str() {
            LEAN_BACK => context.posture != Posture::LeanBack,
            LEAN_FRONT => context.posture != Posture::LeanFront,
            SMILE => !context.smiling,
            _ => true,
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    /// Empty when nothing should be displayed.
    pub pattern: Pattern,
    pub val: Option<f64>,
    pub diagnostic: Option<String>,
}

/// Picks the feasible pattern maximising
/// `conf_F * conf_D * lift_F * lift_D / lambda`.
///
/// A dimension without target variation contributes neutral factors. A
/// pattern lacking stats for a targeted class scores 0 and is not eligible.
/// Ties go to the larger lift product, then to the lexicographically smaller
/// pattern. The choice is recorded in `state` for the repetition penalty.
pub fn select_sequence(
    stats: &[PatternStats],
    targets: Targets,
    state: &mut PlannerState,
    vocabulary: &Vocabulary,
) -> Selection {
    let selection = choose(stats, targets, state, vocabulary);
    state.record(selection.pattern.clone());
    selection
}

fn choose(
    stats: &[PatternStats],
    targets: Targets,
    state: &PlannerState,
    vocabulary: &Vocabulary,
) -> Selection {
    let nothing = |why: &str| Selection {
        pattern: Pattern::empty(),
        val: None,
        diagnostic: Some(why.to_string()),
    };
    if targets.friendliness.is_none() && targets.dominance.is_none() {
        return nothing("no attitude variation to convey");
    }

    let mut index: HashMap<(&Pattern, Dimension, VariationClass), &PatternStats> = HashMap::new();
    for s in stats {
        index.insert((&s.pattern, s.dimension, s.class), s);
    }
    let candidates: BTreeSet<&Pattern> = stats.iter().map(|s| &s.pattern).collect();

    let factors = |p: &Pattern, dimension: Dimension| -> (f64, f64) {
        match targets.get(dimension) {
            None => (1.0, 1.0),
            Some(class) => index
                .get(&(p, dimension, class))
                .map(|s| (s.confidence, s.lift))
                .unwrap_or((0.0, 0.0)),
        }
    };

    let mut best: Option<(f64, f64, &Pattern)> = None;
    let mut infeasible = 0usize;
    for p in candidates {
        let (conf_f, lift_f) = factors(p, Dimension::Friendliness);
        let (conf_d, lift_d) = factors(p, Dimension::Dominance);
        let lift = lift_f * lift_d;
        let val = conf_f * conf_d * lift / state.lambda(p);
        if val <= 0.0 {
            continue;
        }
        if !feasible(p, &state.context, vocabulary) {
            infeasible += 1;
            continue;
        }
        let better = match best {
            None => true,
            Some((bv, bl, _)) => val > bv || (val == bv && lift > bl),
        };
        if better {
            best = Some((val, lift, p));
        }
    }

    match best {
        Some((val, _, p)) => Selection {
            pattern: p.clone(),
            val: Some(val),
            diagnostic: None,
        },
        None if infeasible > 0 => nothing(&format!(
            "all {infeasible} matching sequences conflict with the agent's current state"
        )),
        None => nothing("no mined sequence matches the target variation"),
    }
}

/// Applies the lasting effects of a displayed sequence to the context.
pub fn apply_displayed(context: &mut AgentContext, pattern: &Pattern) {
    for label in pattern.items() {
        match label.as_str() {
            LEAN_BACK => context.posture = Posture::LeanBack,
            LEAN_FRONT => context.posture = Posture::LeanFront,
            _ => {}
        }
    }
}

/// One planning step: difference with the previous attitude, class lookup,
/// selection, then the state moves on to `current`.
pub fn plan_turn(
    current: &AttitudePoint,
    patterns: &PatternSet,
    cfg: &PlannerConfig,
    state: &mut PlannerState,
    vocabulary: &Vocabulary,
) -> Result<Selection> {
    let delta = attitude_delta(current, state);
    let targets = classify_delta(&delta, &patterns.centroids, cfg.dead_zone)?;
    let selection = select_sequence(&patterns.stats, targets, state, vocabulary);
    apply_displayed(&mut state.context, &selection.pattern);
    state.previous_point = *current;
    Ok(selection)
}
