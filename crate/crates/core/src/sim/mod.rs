//! Turn-by-turn interview simulation: detected affects in, recruiter affects,
//! attitude point and signal sequence out.

mod compare;
mod scenario;
mod trace;

use std::io::{BufRead, Write};

use log::info;

use crate::affect::{
    recruiter, update_emotions, update_mood, AffectVector, DetectedAffects, ExpectedAffects,
    LabelSet,
};
use crate::circumplex::aggregate;
use crate::config::Config;
use crate::corpus::Vocabulary;
use crate::error::{Error, Result};
use crate::planner::{plan_turn, PlannerState};
use crate::rules::compute_attitudes;
use crate::seqmine::PatternSet;

pub use compare::{compare_traces, parse_reference, ComparisonReport, Reference, TurnAgreement};
pub use scenario::{Detected, Scenario, Turn, INTERACTIVE};
pub use trace::{header, read_trace_points, write_trace, TurnTrace};

/// Where detected affects come from.
pub enum Input<'a> {
    /// Only the values in the scenario; interactive turns are an error.
    Scripted,
    /// Interactive turns, or every turn when `every_turn` is set, are read
    /// from `reader` as `label=value` tokens, with prompts on `prompt`.
    Console {
        reader: &'a mut dyn BufRead,
        prompt: &'a mut dyn Write,
        every_turn: bool,
    },
}

/// Parses one line of `label=value` tokens separated by spaces or commas.
pub fn parse_detection_line(line: &str, labels: &LabelSet) -> Result<AffectVector> {
    let mut out = AffectVector::new();
    for token in line.split(|c: char| c == ',' || c.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        let (name, value) = token
            .split_once('=')
            .ok_or_else(|| Error::validation(format!("expected label=value, got `{token}`")))?;
        if labels.get(name).is_none() {
            return Err(Error::validation(format!("unknown interviewee affect `{name}`")));
        }
        let value: f64 = value
            .parse()
            .map_err(|_| Error::validation(format!("invalid intensity `{value}` for {name}")))?;
        out.set(name, value)?;
    }
    Ok(out)
}

fn read_detection(
    reader: &mut dyn BufRead,
    prompt: &mut dyn Write,
    labels: &LabelSet,
    turn: usize,
    question: &str,
) -> Result<AffectVector> {
    let names: Vec<&str> = labels.iter().map(|l| l.name.as_str()).collect();
    writeln!(prompt, "turn {turn} ({question}): detected affects as label=value")?;
    writeln!(prompt, "  labels: {}", names.join(" "))?;
    loop {
        write!(prompt, "> ")?;
        prompt.flush()?;
        let mut line = String::new();
        if reader.read_line(&mut line)? == 0 {
            return Err(Error::validation("input ended before the detected affects were given"));
        }
        match parse_detection_line(line.trim(), labels) {
            Ok(v) => return Ok(v),
            Err(e) => writeln!(prompt, "  {e}")?,
        }
    }
}

/// Runs every turn of `scenario`. Moods and planner memory carry over from
/// turn to turn; errors name the failing turn.
pub fn run_simulation(
    scenario: &Scenario,
    patterns: &PatternSet,
    base: &Config,
    mut input: Input<'_>,
) -> Result<Vec<TurnTrace>> {
    let cfg = scenario.effective_config(base)?;
    let labels = scenario.labels()?;
    let placements = cfg.placement_table()?;
    let vocabulary = Vocabulary::default();
    let mut state = PlannerState::new(cfg.planner.decay_window);
    let mut moods = AffectVector::zeros(recruiter::MOODS);
    for (name, v) in scenario.initial_moods.iter() {
        moods.set(name, v)?;
    }

    let mut out = Vec::with_capacity(scenario.turns.len());
    for (i, turn) in scenario.turns.iter().enumerate() {
        let n = i + 1;
        let step = |moods: &AffectVector, state: &mut PlannerState, input: &mut Input<'_>| -> Result<TurnTrace> {
            let flat = match (&turn.detected, input) {
                (Detected::Scripted(v), Input::Scripted) => v.clone(),
                (Detected::Scripted(v), Input::Console { every_turn: false, .. }) => v.clone(),
                (Detected::Interactive, Input::Scripted) => {
                    return Err(Error::validation(
                        "turn needs interactive input but none is available",
                    ))
                }
                (_, Input::Console { reader, prompt, .. }) => {
                    read_detection(*reader, *prompt, &labels, n, &turn.question)?
                }
            };
            let detected = DetectedAffects::from_flat(&flat, &labels, n)?;
            let expected = ExpectedAffects {
                entries: turn.expected.clone(),
                turn_index: n,
            };
            let emotions = update_emotions(&detected, &expected, &labels)?;
            let moods = update_mood(moods, &emotions)?;
            let attitudes = compute_attitudes(&moods, &scenario.personality, &cfg.rules)?;
            let point = aggregate(&attitudes, &placements)?;
            let selection = plan_turn(&point, patterns, &cfg.planner, state, &vocabulary)?;
            if let Some(d) = &selection.diagnostic {
                info!("turn {n}: {d}");
            }
            Ok(TurnTrace {
                turn: n,
                question: turn.question.clone(),
                emotions,
                moods,
                attitudes,
                point,
                sequence: selection.pattern,
                diagnostic: selection.diagnostic,
            })
        };
        let t = step(&moods, &mut state, &mut input).map_err(|e| e.at_turn(n))?;
        moods = t.moods.clone();
        out.push(t);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection_lines() {
        let labels = LabelSet::interviewee_default();
        let v = parse_detection_line("joy=0.8, anxious=0.2  distress=0", &labels).unwrap();
        assert_eq!(v.get("joy"), 0.8);
        assert_eq!(v.len(), 3);
        assert!(parse_detection_line("", &labels).unwrap().is_empty());
        assert!(parse_detection_line("joy", &labels).is_err());
        assert!(parse_detection_line("glee=0.3", &labels).is_err());
        assert!(parse_detection_line("joy=2", &labels).is_err());
    }
}
