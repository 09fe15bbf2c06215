//! Line-oriented corpus format.
//!
//! ```text
//! # comment
//! interaction <id> <duration>
//! signal <modality> <label> <start> <end>
//! attitude <dimension> <timestamp> <value>
//! ```
//!
//! Fields are whitespace separated. Timestamps are seconds with at most three
//! decimals. A file may hold several interactions; records belong to the most
//! recent `interaction` header.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{
    AttitudeCurve, Dimension, InteractionAnnotation, Modality, SignalEvent, Vocabulary,
};
use crate::error::{Error, Result};

struct Draft {
    line: usize,
    id: String,
    duration: f64,
    signals: Vec<SignalEvent>,
    friendliness: Vec<(f64, f64)>,
    dominance: Vec<(f64, f64)>,
}

impl Draft {
    fn finish(self, source: &str, vocabulary: &Vocabulary) -> Result<InteractionAnnotation> {
        let wrap = |e: Error| match e {
            Error::Validation(msg) => Error::parse(source, self.line, format!("interaction `{}`: {msg}", self.id)),
            other => other,
        };
        let annotation = InteractionAnnotation {
            id: self.id.clone(),
            duration: self.duration,
            signals: self.signals,
            friendliness: AttitudeCurve::new(Dimension::Friendliness, self.friendliness).map_err(wrap)?,
            dominance: AttitudeCurve::new(Dimension::Dominance, self.dominance).map_err(wrap)?,
        };
        annotation.validate(vocabulary).map_err(wrap)?;
        Ok(annotation)
    }
}

fn parse_time(token: &str) -> std::result::Result<f64, String> {
    if let Some((_, frac)) = token.split_once('.') {
        if frac.len() > 3 {
            return Err(format!("timestamp `{token}` has more than 3 decimals"));
        }
    }
    let t: f64 = token
        .parse()
        .map_err(|_| format!("invalid timestamp `{token}`"))?;
    if !t.is_finite() {
        return Err(format!("invalid timestamp `{token}`"));
    }
    Ok(t)
}

fn parse_value(token: &str) -> std::result::Result<f64, String> {
    let v: f64 = token
        .parse()
        .map_err(|_| format!("invalid attitude value `{token}`"))?;
    if !(-1.0..=1.0).contains(&v) {
        return Err(format!("attitude value {v} outside [-1, 1]"));
    }
    Ok(v)
}

/// Parses corpus text. `source_name` is used in error messages.
pub fn parse_corpus_str(
    text: &str,
    source_name: &str,
    vocabulary: &Vocabulary,
) -> Result<Vec<InteractionAnnotation>> {
    let mut done = Vec::new();
    let mut current: Option<Draft> = None;
    let mut seen_ids = BTreeSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: String| Error::parse(source_name, line_no, msg);
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields[0] {
            "interaction" => {
                let [_, id, duration] = fields[..] else {
                    return Err(err("expected `interaction <id> <duration>`".into()));
                };
                let duration = parse_time(duration).map_err(err)?;
                if duration <= 0.0 {
                    return Err(err(format!("duration {duration} must be positive")));
                }
                if !seen_ids.insert(id.to_string()) {
                    return Err(err(format!("duplicate interaction id `{id}`")));
                }
                if let Some(d) = current.take() {
                    done.push(d.finish(source_name, vocabulary)?);
                }
                current = Some(Draft {
                    line: line_no,
                    id: id.to_string(),
                    duration,
                    signals: Vec::new(),
                    friendliness: Vec::new(),
                    dominance: Vec::new(),
                });
            }
            "signal" => {
                let [_, modality, label, start, end] = fields[..] else {
                    return Err(err("expected `signal <modality> <label> <start> <end>`".into()));
                };
                let draft = current
                    .as_mut()
                    .ok_or_else(|| err("signal before any interaction header".into()))?;
                let modality: Modality = modality.parse().map_err(|e: Error| err(e.to_string()))?;
                match vocabulary.modality_of(label) {
                    None => return Err(err(format!("unknown signal label `{label}`"))),
                    Some(m) if m != modality => {
                        return Err(err(format!("signal `{label}` belongs to {m}, not {modality}")))
                    }
                    Some(_) => {}
                }
                let start = parse_time(start).map_err(err)?;
                let end = parse_time(end).map_err(err)?;
                let event = SignalEvent::new(label, modality, start, end)
                    .map_err(|e| err(e.to_string()))?;
                if end > draft.duration {
                    return Err(err(format!(
                        "signal ends at {end}, after the interaction ({})",
                        draft.duration
                    )));
                }
                draft.signals.push(event);
            }
            "attitude" => {
                let [_, dimension, timestamp, value] = fields[..] else {
                    return Err(err("expected `attitude <dimension> <timestamp> <value>`".into()));
                };
                let draft = current
                    .as_mut()
                    .ok_or_else(|| err("attitude sample before any interaction header".into()))?;
                let dimension: Dimension =
                    dimension.parse().map_err(|e: Error| err(e.to_string()))?;
                let t = parse_time(timestamp).map_err(err)?;
                let v = parse_value(value).map_err(err)?;
                if t < 0.0 || t > draft.duration {
                    return Err(err(format!("sample at {t} outside [0, {}]", draft.duration)));
                }
                let samples = match dimension {
                    Dimension::Friendliness => &mut draft.friendliness,
                    Dimension::Dominance => &mut draft.dominance,
                };
                if let Some(&(prev, _)) = samples.last() {
                    if t <= prev {
                        return Err(err(format!(
                            "{dimension} timestamp {t} does not increase (previous {prev})"
                        )));
                    }
                }
                samples.push((t, v));
            }
            other => return Err(err(format!("unknown record `{other}`"))),
        }
    }
    if let Some(d) = current.take() {
        done.push(d.finish(source_name, vocabulary)?);
    }
    Ok(done)
}

/// Loads a corpus file, or every `*.corpus` file of a directory in name
/// order.
pub fn parse_corpus(path: &Path, vocabulary: &Vocabulary) -> Result<Vec<InteractionAnnotation>> {
    let mut files = Vec::new();
    if path.is_dir() {
        for entry in fs::read_dir(path)? {
            let p = entry?.path();
            if p.is_file() && p.extension().is_some_and(|e| e == "corpus") {
                files.push(p);
            }
        }
        files.sort();
    } else {
        files.push(path.to_path_buf());
    }

    let mut out = Vec::new();
    let mut ids = BTreeSet::new();
    for file in files {
        let text = fs::read_to_string(&file)?;
        let name = file.display().to_string();
        for annotation in parse_corpus_str(&text, &name, vocabulary)? {
            if !ids.insert(annotation.id.clone()) {
                return Err(Error::validation(format!(
                    "interaction `{}` appears in more than one file",
                    annotation.id
                )));
            }
            out.push(annotation);
        }
    }
    Ok(out)
}

pub(crate) fn fmt_time(t: f64) -> String {
    let s = format!("{t:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Canonical text of `interactions`; parses back to equal annotations.
pub fn write_corpus(interactions: &[InteractionAnnotation]) -> String {
    let mut out = String::new();
    for (i, a) in interactions.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        writeln!(out, "interaction {} {}", a.id, fmt_time(a.duration)).unwrap();
        for s in &a.signals {
            writeln!(
                out,
                "signal {} {} {} {}",
                s.modality,
                s.label,
                fmt_time(s.start),
                fmt_time(s.end)
            )
            .unwrap();
        }
        for curve in [&a.friendliness, &a.dominance] {
            for &(t, v) in curve.samples() {
                writeln!(out, "attitude {} {} {}", curve.dimension, fmt_time(t), v).unwrap();
            }
        }
    }
    out
}
