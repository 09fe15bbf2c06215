//! Sign agreement between a simulated friendliness trajectory and an
//! annotated reference.
//!
//! Reference files:
//!
//! ```text
//! turn <index> <seconds>                 # when turn <index> ends
//! attitude friendliness <seconds> <value>
//! ```
//!
//! `attitude dominance` records are accepted and ignored. For each turn the
//! reference value is the annotated curve at the turn's time.

use std::collections::BTreeMap;
use std::fmt;

use crate::circumplex::AttitudePoint;
use crate::corpus::{AttitudeCurve, Dimension};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Reference {
    pub friendliness: AttitudeCurve,
    pub turn_times: BTreeMap<usize, f64>,
}

pub fn parse_reference(text: &str, source_name: &str) -> Result<Reference> {
    let mut samples = Vec::new();
    let mut sample_lines = Vec::new();
    let mut turn_times = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: String| Error::parse(source_name, line, msg);
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let num = |s: &str| -> Result<f64> {
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| err(format!("invalid number `{s}`")))
        };
        match fields[..] {
            ["turn", index, t] => {
                let index: usize = index
                    .parse()
                    .map_err(|_| err(format!("invalid turn index `{index}`")))?;
                if turn_times.insert(index, num(t)?).is_some() {
                    return Err(err(format!("turn {index} given twice")));
                }
            }
            ["attitude", dimension, t, v] => {
                let dimension: Dimension = dimension.parse().map_err(|e: Error| err(e.to_string()))?;
                if dimension == Dimension::Friendliness {
                    samples.push((num(t)?, num(v)?));
                    sample_lines.push(line);
                }
            }
            _ => {
                return Err(err(
                    "expected `turn <index> <seconds>` or `attitude <dimension> <seconds> <value>`"
                        .into(),
                ))
            }
        }
    }
    let friendliness = AttitudeCurve::new(Dimension::Friendliness, samples).map_err(|e| {
        Error::parse(source_name, sample_lines.first().copied().unwrap_or(1), e.to_string())
    })?;
    Ok(Reference {
        friendliness,
        turn_times,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TurnAgreement {
    pub turn: usize,
    pub computed: f64,
    pub reference: Option<f64>,
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub turns: Vec<TurnAgreement>,
    /// Fraction of covered turns with matching sign; `None` when no turn is
    /// covered.
    pub agreement: Option<f64>,
}

fn sign(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

pub fn compare_traces(trace: &[(usize, AttitudePoint)], reference: &Reference) -> Result<ComparisonReport> {
    if trace.is_empty() {
        return Err(Error::validation("the trace is empty"));
    }
    let turns: Vec<TurnAgreement> = trace
        .iter()
        .map(|&(turn, point)| {
            let reference = reference
                .turn_times
                .get(&turn)
                .and_then(|&t| reference.friendliness.value_at(t));
            TurnAgreement {
                turn,
                computed: point.friendliness,
                reference,
                agrees: reference.map(|r| sign(r) == sign(point.friendliness)),
            }
        })
        .collect();
    let covered: Vec<bool> = turns.iter().filter_map(|t| t.agrees).collect();
    let agreement = (!covered.is_empty())
        .then(|| covered.iter().filter(|&&a| a).count() as f64 / covered.len() as f64);
    Ok(ComparisonReport { turns, agreement })
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.turns {
            match (t.reference, t.agrees) {
                (Some(r), Some(a)) => writeln!(
                    f,
                    "turn {:>3}  computed {:+.4}  reference {:+.4}  {}",
                    t.turn,
                    t.computed,
                    r,
                    if a { "agree" } else { "disagree" }
                )?,
                _ => writeln!(f, "turn {:>3}  computed {:+.4}  no reference", t.turn, t.computed)?,
            }
        }
        match self.agreement {
            Some(a) => writeln!(f, "sign agreement {:.4}", a),
            None => writeln!(f, "sign agreement n/a (no turn covered by the reference)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(f: f64) -> AttitudePoint {
        AttitudePoint::new(f, 0.0).unwrap()
    }

    const REF: &str = "\
turn 1 10
turn 2 20
turn 3 30
attitude friendliness 0 0.5
attitude friendliness 15 0.5
attitude friendliness 25 -0.5
attitude friendliness 30 -0.5
attitude dominance 0 0.1
";

    #[test]
    fn agreement_rate() {
        let r = parse_reference(REF, "r").unwrap();
        let trace = [(1, p(0.3)), (2, p(0.2)), (3, p(-0.1)), (4, p(0.1))];
        let report = compare_traces(&trace, &r).unwrap();
        // turn 2 at 20 s: reference 0.0 by interpolation, sign mismatch
        assert_eq!(report.turns[1].reference, Some(0.0));
        assert_eq!(report.turns[3].agrees, None);
        assert_eq!(report.agreement, Some(2.0 / 3.0));
        assert!(report.to_string().contains("no reference"));
    }

    #[test]
    fn empty_trace_is_an_error() {
        let r = parse_reference(REF, "r").unwrap();
        assert!(compare_traces(&[], &r).is_err());
    }

    #[test]
    fn no_coverage_gives_no_rate() {
        let r = parse_reference("attitude friendliness 0 0.1\n", "r").unwrap();
        let report = compare_traces(&[(1, p(0.2))], &r).unwrap();
        assert_eq!(report.agreement, None);
    }

    #[test]
    fn malformed_reference() {
        match parse_reference("turn 1 5\nturn one 3\n", "r") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}
