use super::{AttitudeCurve, VariationEvent};
use crate::error::{Error, Result};

// Slack for comparing sums of decimal timestamps.
const TIME_EPS: f64 = 1e-9;

/// Centered moving average: each sample becomes the mean of all samples
/// within `window / 2` seconds of it. Windows are truncated at the ends, and
/// timestamps are unchanged.
pub fn smooth_curve(curve: &AttitudeCurve, window: f64) -> Result<AttitudeCurve> {
    if !(window > 0.0 && window.is_finite()) {
        return Err(Error::validation(format!(
            "smoothing window must be positive, got {window}"
        )));
    }
    let samples = curve.samples();
    let half = window / 2.0 + TIME_EPS;
    let mut out = Vec::with_capacity(samples.len());
    let (mut lo, mut hi) = (0usize, 0usize);
    for &(t, _) in samples {
        while hi < samples.len() && samples[hi].0 <= t + half {
            hi += 1;
        }
        while samples[lo].0 < t - half {
            lo += 1;
        }
        let mean = samples[lo..hi].iter().map(|s| s.1).sum::<f64>() / (hi - lo) as f64;
        out.push((t, mean.clamp(-1.0, 1.0)));
    }
    AttitudeCurve::new(curve.dimension, out)
}

/// Finds the instants where the curve leaves a stable level.
///
/// The curve is split into maximal strictly monotone runs. A run starting at
/// sample `i` yields an event at `t_i` when its total change reaches
/// `min_delta` in magnitude and every sample of the preceding `stability`
/// seconds stays within `min_delta` of the value at `t_i`. The event's delta
/// is the signed change over the whole run. The stability window is
/// truncated at the start of the curve.
pub fn detect_variation_events(
    curve: &AttitudeCurve,
    min_delta: f64,
    stability: f64,
) -> Result<Vec<VariationEvent>> {
    if !(min_delta > 0.0) {
        return Err(Error::validation(format!(
            "min_delta must be positive, got {min_delta}"
        )));
    }
    if !(stability >= 0.0) {
        return Err(Error::validation(format!(
            "stability must be non-negative, got {stability}"
        )));
    }
    let s = curve.samples();
    let mut events = Vec::new();
    let mut i = 0;
    while i + 1 < s.len() {
        let step = s[i + 1].1 - s[i].1;
        if step == 0.0 {
            i += 1;
            continue;
        }
        let rising = step > 0.0;
        let mut j = i + 1;
        while j + 1 < s.len() {
            let next = s[j + 1].1 - s[j].1;
            if (rising && next > 0.0) || (!rising && next < 0.0) {
                j += 1;
            } else {
                break;
            }
        }
        let (t0, v0) = s[i];
        let delta = s[j].1 - v0;
        if delta.abs() >= min_delta {
            let stable = s[..i]
                .iter()
                .rev()
                .take_while(|(t, _)| *t >= t0 - stability - TIME_EPS)
                .all(|(_, v)| (v - v0).abs() <= min_delta);
            if stable {
                events.push(VariationEvent {
                    timestamp: t0,
                    dimension: curve.dimension,
                    delta,
                    class: None,
                });
            }
        }
        i = j;
    }
    Ok(events)
}
