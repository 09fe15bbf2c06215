//! Mined-pattern file, the planner's input.
//!
//! ```text
//! centroids <dimension> <c1> <c2> <c3> <c4>
//! pattern <dimension> <class> <sup> <conf> <lift> <label>-><label>->...
//! ```
//!
//! Pattern records are written sorted by dimension, class and decreasing
//! lift. Numbers use the shortest decimal form that reads back to the same
//! value.

use std::fmt::Write as _;

use super::{Pattern, PatternStats};
use crate::corpus::{Centroids, Dimension, VariationClass};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PatternSet {
    pub centroids: Centroids,
    pub stats: Vec<PatternStats>,
}

impl PatternSet {
    pub fn sort(&mut self) {
        self.stats.sort_by(|a, b| {
            a.dimension
                .cmp(&b.dimension)
                .then(a.class.cmp(&b.class))
                .then(b.lift.total_cmp(&a.lift))
                .then(a.pattern.cmp(&b.pattern))
        });
    }

    pub fn get(
        &self,
        pattern: &Pattern,
        dimension: Dimension,
        class: VariationClass,
    ) -> Option<&PatternStats> {
        self.stats
            .iter()
            .find(|s| s.dimension == dimension && s.class == class && &s.pattern == pattern)
    }
}

pub fn write_patterns(set: &PatternSet) -> String {
    let mut sorted = set.clone();
    sorted.sort();
    let mut out = String::new();
    for (dimension, c) in &sorted.centroids.by_dimension {
        writeln!(out, "centroids {dimension} {} {} {} {}", c[0], c[1], c[2], c[3]).unwrap();
    }
    for s in &sorted.stats {
        writeln!(
            out,
            "pattern {} {} {} {} {} {}",
            s.dimension, s.class, s.support, s.confidence, s.lift, s.pattern
        )
        .unwrap();
    }
    out
}

fn number(token: &str) -> std::result::Result<f64, String> {
    match token.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(format!("invalid number `{token}`")),
    }
}

pub fn parse_patterns(text: &str, source_name: &str) -> Result<PatternSet> {
    let mut set = PatternSet::default();
    for (idx, raw) in text.lines().enumerate() {
        let err = |msg: String| Error::parse(source_name, idx + 1, msg);
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields[0] {
            "centroids" => {
                let [_, dimension, a, b, c, d] = fields[..] else {
                    return Err(err("expected `centroids <dimension> <c1> <c2> <c3> <c4>`".into()));
                };
                let dimension: Dimension = dimension.parse().map_err(|e: Error| err(e.to_string()))?;
                let values = [number(a), number(b), number(c), number(d)];
                let mut c = [0.0; 4];
                for (slot, v) in c.iter_mut().zip(values) {
                    *slot = v.map_err(err)?;
                }
                if c.windows(2).any(|w| !(w[0] < w[1])) {
                    return Err(err("centroids must be strictly increasing".into()));
                }
                if set.centroids.by_dimension.insert(dimension, c).is_some() {
                    return Err(err(format!("centroids for {dimension} given twice")));
                }
            }
            "pattern" => {
                let [_, dimension, class, sup, conf, lift, pattern] = fields[..] else {
                    return Err(err(
                        "expected `pattern <dimension> <class> <sup> <conf> <lift> <sequence>`"
                            .into(),
                    ));
                };
                let stats = PatternStats {
                    dimension: dimension.parse().map_err(|e: Error| err(e.to_string()))?,
                    class: class.parse().map_err(|e: Error| err(e.to_string()))?,
                    support: number(sup).map_err(err)?,
                    confidence: number(conf).map_err(err)?,
                    lift: number(lift).map_err(err)?,
                    pattern: pattern.parse().map_err(|e: Error| err(e.to_string()))?,
                };
                if stats.pattern.is_empty() {
                    return Err(err("empty pattern".into()));
                }
                if !(0.0..=1.0).contains(&stats.support)
                    || !(0.0..=1.0).contains(&stats.confidence)
                    || stats.lift < 0.0
                {
                    return Err(err("support and confidence must lie in [0, 1], lift must be non-negative".into()));
                }
                set.stats.push(stats);
            }
            other => return Err(err(format!("unknown record `{other}`"))),
        }
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE: &str = "\
pattern friendliness large-decrease 0.027 0.727 2.72 EyesAt->EyesAway->EyebrowUp->HeadShake
pattern dominance large-increase 0.023 0.6 5.38 HeadAt->GestComm->EyebrowUp->Smile
";

    #[test]
    fn published_records_round_trip() {
        let set = parse_patterns(TABLE, "table").unwrap();
        assert_eq!(set.stats.len(), 2);
        let first = &set.stats[0];
        assert_eq!(first.dimension, Dimension::Friendliness);
        assert_eq!(first.class, VariationClass::LargeDecrease);
        assert_eq!((first.support, first.confidence, first.lift), (0.027, 0.727, 2.72));
        assert_eq!(first.pattern.len(), 4);
        assert_eq!(write_patterns(&set), TABLE);
    }

    #[test]
    fn sorted_by_decreasing_lift() {
        let text = "\
pattern dominance small-increase 0.1 0.5 1.5 a
pattern friendliness small-increase 0.1 0.5 1.2 b
pattern friendliness small-increase 0.1 0.5 3 c
pattern friendliness large-decrease 0.1 0.5 0.5 d
";
        let set = parse_patterns(text, "t").unwrap();
        let order: Vec<String> = write_patterns(&set)
            .lines()
            .map(|l| l.rsplit(' ').next().unwrap().to_string())
            .collect();
        assert_eq!(order, ["d", "c", "b", "a"]);
    }

    #[test]
    fn centroids_round_trip() {
        let text = "centroids friendliness -0.8 -0.2 0.2 0.8\n";
        let set = parse_patterns(text, "t").unwrap();
        assert_eq!(
            set.centroids.get(Dimension::Friendliness),
            Some(&[-0.8, -0.2, 0.2, 0.8])
        );
        assert_eq!(write_patterns(&set), text);
    }

    #[test]
    fn malformed_records_report_lines() {
        for (text, line) in [
            ("\npattern friendliness huge 0.1 0.5 1 a\n", 2),
            ("pattern friendliness large-decrease x 0.5 1 a\n", 1),
            ("pattern friendliness large-decrease 0.1 1.5 1 a\n", 1),
            ("centroids dominance 0.3 0.2 0.4 0.5\n", 1),
            ("# c\n\nfoo\n", 3),
        ] {
            match parse_patterns(text, "t") {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }
}
