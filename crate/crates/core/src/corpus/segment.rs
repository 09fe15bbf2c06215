use super::{InteractionAnnotation, Segment, SignalEvent, VariationEvent};
use crate::error::{Error, Result};

/// Cuts the signal stream of one interaction at each variation event.
///
/// The segment ending at an event at time `t` holds the signals starting in
/// `[max(previous event, t - max_lookback), t)`, where "previous event" is the
/// previous event of the same dimension. Signals are ordered by start time,
/// then by modality. Events without any preceding signal give empty segments.
pub fn segment_interaction(
    annotation: &InteractionAnnotation,
    events: &[VariationEvent],
    max_lookback: f64,
) -> Result<Vec<Segment>> {
    if !(max_lookback > 0.0) {
        return Err(Error::validation(format!(
            "max_lookback must be positive, got {max_lookback}"
        )));
    }
    let mut ordered: Vec<&SignalEvent> = annotation.signals.iter().collect();
    ordered.sort_by(|a, b| {
        a.start
            .total_cmp(&b.start)
            .then(a.modality.cmp(&b.modality))
            .then(a.label.cmp(&b.label))
    });

    let mut segments = Vec::with_capacity(events.len());
    let mut previous = std::collections::BTreeMap::new();
    for event in events {
        let prev = previous.insert(event.dimension, event.timestamp);
        if let Some(p) = prev {
            if p > event.timestamp {
                return Err(Error::Contract(format!(
                    "variation events are not time ordered ({p} then {})",
                    event.timestamp
                )));
            }
        }
        let from = prev
            .unwrap_or(f64::NEG_INFINITY)
            .max(event.timestamp - max_lookback);
        let sequence = ordered
            .iter()
            .filter(|s| s.start >= from && s.start < event.timestamp)
            .map(|s| s.label.clone())
            .collect();
        segments.push(Segment {
            sequence,
            terminating_event: *event,
        });
    }
    Ok(segments)
}
