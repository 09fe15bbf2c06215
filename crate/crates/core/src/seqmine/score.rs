use std::collections::{BTreeMap, BTreeSet};

use super::Pattern;
use crate::corpus::{Dimension, VariationClass};
use crate::error::Result;

/// Quality of `pattern` as a precursor of `class` variations.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternStats {
    pub pattern: Pattern,
    pub dimension: Dimension,
    pub class: VariationClass,
    pub support: f64,
    pub confidence: f64,
    pub lift: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoredPattern {
    pub stats: PatternStats,
    /// Segments of the class containing the pattern.
    pub class_count: usize,
    /// Segments of the whole dimension containing the pattern.
    pub pattern_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScoreWarning {
    EmptyClass {
        dimension: Dimension,
        class: VariationClass,
    },
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ScoreReport {
    pub scored: Vec<ScoredPattern>,
    pub warnings: Vec<ScoreWarning>,
}

/// Support, confidence and lift of each pattern for each variation class of
/// one dimension.
///
/// With `D` all segments of the dimension and `D_c` those of class `c`:
/// support is `n(p, c) / |D|`, confidence `n(p, c) / n(p)` and lift
/// confidence over the class prior `|D_c| / |D|`. Patterns found nowhere are
/// dropped; classes without segments are skipped and reported.
pub fn score_patterns<S: AsRef<[String]>>(
    patterns: &[Pattern],
    dimension: Dimension,
    segments_by_class: &BTreeMap<VariationClass, Vec<S>>,
) -> Result<ScoreReport> {
    let mut report = ScoreReport::default();
    let total: usize = segments_by_class.values().map(Vec::len).sum();
    let populated: Vec<(VariationClass, &Vec<S>)> = VariationClass::ALL
        .into_iter()
        .filter_map(|c| match segments_by_class.get(&c) {
            Some(segs) if !segs.is_empty() => Some((c, segs)),
            _ => {
                report.warnings.push(ScoreWarning::EmptyClass {
                    dimension,
                    class: c,
                });
                None
            }
        })
        .collect();

    let unique: BTreeSet<&Pattern> = patterns.iter().collect();
    for pattern in unique {
        let counts: Vec<usize> = populated
            .iter()
            .map(|(_, segs)| {
                segs.iter()
                    .filter(|s| pattern.occurs_in(s.as_ref()))
                    .count()
            })
            .collect();
        let pattern_count: usize = counts.iter().sum();
        if pattern_count == 0 {
            continue;
        }
        for ((class, segs), class_count) in populated.iter().zip(counts) {
            let prior = segs.len() as f64 / total as f64;
            let confidence = class_count as f64 / pattern_count as f64;
            report.scored.push(ScoredPattern {
                stats: PatternStats {
                    pattern: pattern.clone(),
                    dimension,
                    class: *class,
                    support: class_count as f64 / total as f64,
                    confidence,
                    lift: confidence / prior,
                },
                class_count,
                pattern_count,
            });
        }
    }
    Ok(report)
}
