//! Per-turn simulation trace and its CSV form.
//!
//! Columns: `turn`, `question`, the eight recruiter emotions, the five moods,
//! the seven attitudes, `friendliness`, `dominance`, `sequence`. Intensities
//! and coordinates are written with six decimals.

use std::io::{Read, Write};

use crate::affect::{recruiter, AffectVector};
use crate::circumplex::AttitudePoint;
use crate::error::{Error, Result};
use crate::seqmine::Pattern;

#[derive(Debug, Clone, PartialEq)]
pub struct TurnTrace {
    /// 1-based.
    pub turn: usize,
    pub question: String,
    pub emotions: AffectVector,
    pub moods: AffectVector,
    pub attitudes: AffectVector,
    pub point: AttitudePoint,
    pub sequence: Pattern,
    pub diagnostic: Option<String>,
}

pub fn header() -> Vec<String> {
    let mut h = vec!["turn".to_string(), "question".to_string()];
    for name in recruiter::EMOTIONS
        .iter()
        .chain(recruiter::MOODS.iter())
        .chain(recruiter::ATTITUDES.iter())
    {
        h.push(name.to_string());
    }
    h.extend(["friendliness", "dominance", "sequence"].map(String::from));
    h
}

fn record(t: &TurnTrace) -> Vec<String> {
    let mut r = vec![t.turn.to_string(), t.question.clone()];
    let groups: [(&AffectVector, &[&str]); 3] = [
        (&t.emotions, &recruiter::EMOTIONS),
        (&t.moods, &recruiter::MOODS),
        (&t.attitudes, &recruiter::ATTITUDES),
    ];
    for (values, names) in groups {
        r.extend(names.iter().map(|n| format!("{:.6}", values.get(n))));
    }
    r.push(format!("{:.6}", t.point.friendliness));
    r.push(format!("{:.6}", t.point.dominance));
    r.push(t.sequence.to_string());
    r
}

pub fn write_trace<W: Write>(writer: W, trace: &[TurnTrace]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(header())?;
    for t in trace {
        w.write_record(record(t))?;
    }
    w.flush()?;
    Ok(())
}

/// Turn number and attitude point of each row of a trace CSV.
pub fn read_trace_points<R: Read>(reader: R, source_name: &str) -> Result<Vec<(usize, AttitudePoint)>> {
    let mut r = csv::Reader::from_reader(reader);
    let headers = r.headers()?.clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::parse(source_name, 1, format!("missing `{name}` column")))
    };
    let (turn_col, f_col, d_col) = (column("turn")?, column("friendliness")?, column("dominance")?);
    let mut out = Vec::new();
    for (i, row) in r.records().enumerate() {
        let row = row?;
        let line = i + 2;
        let field = |c: usize| row.get(c).unwrap_or("");
        let turn: usize = field(turn_col)
            .parse()
            .map_err(|_| Error::parse(source_name, line, format!("invalid turn `{}`", field(turn_col))))?;
        let num = |c: usize| -> Result<f64> {
            field(c)
                .parse()
                .map_err(|_| Error::parse(source_name, line, format!("invalid number `{}`", field(c))))
        };
        let point = AttitudePoint::new(num(f_col)?, num(d_col)?)
            .map_err(|e| Error::parse(source_name, line, e.to_string()))?;
        out.push((turn, point));
    }
    Ok(out)
}
