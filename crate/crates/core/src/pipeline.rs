//! Corpus to pattern file: smoothing, variation detection, clustering,
//! segmentation, mining and scoring.

use std::collections::{BTreeMap, BTreeSet};

use log::{info, warn};

use crate::config::CorpusConfig;
use crate::corpus::{
    cluster_variations, detect_variation_events, segment_interaction, smooth_curve, Dimension,
    InteractionAnnotation, Segment, VariationClass, VariationEvent,
};
use crate::error::{Error, Result};
use crate::seqmine::{gsp_mine, score_patterns, MinerConfig, Pattern, PatternSet, ScoreWarning};

#[derive(Debug, Clone, Default)]
pub struct MiningSummary {
    pub events: usize,
    pub segments: BTreeMap<(Dimension, VariationClass), usize>,
    pub warnings: Vec<ScoreWarning>,
}

/// Detected variation events of every interaction, in the interaction order,
/// each list sorted by time. Classes are still unset.
pub fn detect_all(
    interactions: &[InteractionAnnotation],
    cfg: &CorpusConfig,
) -> Result<Vec<Vec<VariationEvent>>> {
    interactions
        .iter()
        .map(|ia| {
            let mut events = Vec::new();
            for dimension in Dimension::ALL {
                let smoothed = smooth_curve(ia.curve(dimension), cfg.smoothing_window)?;
                events.extend(detect_variation_events(&smoothed, cfg.min_delta, cfg.stability)?);
            }
            events.sort_by(|a, b| a.timestamp.total_cmp(&b.timestamp));
            Ok(events)
        })
        .collect()
}

pub fn mine_corpus(
    interactions: &[InteractionAnnotation],
    corpus_cfg: &CorpusConfig,
    miner_cfg: &MinerConfig,
) -> Result<(PatternSet, MiningSummary)> {
    miner_cfg.validate()?;
    if interactions.is_empty() {
        return Err(Error::Mining("the corpus holds no interaction".into()));
    }
    let per_interaction = detect_all(interactions, corpus_cfg)?;

    let mut flat: Vec<VariationEvent> = per_interaction.iter().flatten().copied().collect();
    let centroids = cluster_variations(&mut flat)?;
    let mut classified = flat.into_iter();
    let per_interaction: Vec<Vec<VariationEvent>> = per_interaction
        .iter()
        .map(|events| classified.by_ref().take(events.len()).collect())
        .collect();

    let mut summary = MiningSummary {
        events: per_interaction.iter().map(Vec::len).sum(),
        ..Default::default()
    };
    let mut grouped: BTreeMap<Dimension, BTreeMap<VariationClass, Vec<Segment>>> = BTreeMap::new();
    for (ia, events) in interactions.iter().zip(&per_interaction) {
        for segment in segment_interaction(ia, events, corpus_cfg.max_lookback)? {
            let event = segment.terminating_event;
            let class = event
                .class
                .ok_or_else(|| Error::Contract("segment event has no class".into()))?;
            grouped
                .entry(event.dimension)
                .or_default()
                .entry(class)
                .or_default()
                .push(segment);
        }
    }

    let mut set = PatternSet {
        centroids,
        stats: Vec::new(),
    };
    for (dimension, by_class) in &grouped {
        let mut patterns: BTreeSet<Pattern> = BTreeSet::new();
        for (class, segments) in by_class {
            summary.segments.insert((*dimension, *class), segments.len());
            if segments.is_empty() {
                continue;
            }
            let found = gsp_mine(segments, miner_cfg)?;
            info!(
                "{dimension} {class}: {} segments, {} frequent sequences",
                segments.len(),
                found.len()
            );
            patterns.extend(found.into_iter().map(|f| f.pattern));
        }
        let patterns: Vec<Pattern> = patterns.into_iter().collect();
        let report = score_patterns(&patterns, *dimension, by_class)?;
        for w in &report.warnings {
            let ScoreWarning::EmptyClass { dimension, class } = w;
            warn!("no {dimension} segment ends in a {class} variation");
        }
        summary.warnings.extend(report.warnings);
        set.stats.extend(
            report
                .scored
                .into_iter()
                .filter(|s| s.class_count > 0)
                .map(|s| s.stats),
        );
    }
    set.sort();
    Ok((set, summary))
}
