use std::collections::BTreeMap;

use super::{Dimension, VariationClass, VariationEvent};
use crate::error::{Error, Result};

const CONVERGENCE: f64 = 1e-9;
const MAX_ITERATIONS: usize = 10_000;

/// Result of a one-dimensional K-means run. Clusters are numbered by
/// ascending centroid.
#[derive(Debug, Clone, PartialEq)]
pub struct KMeans1d {
    pub centroids: Vec<f64>,
    pub assignments: Vec<usize>,
    /// Within-cluster sum of squares after each assignment step.
    pub inertia: Vec<f64>,
}

fn quantile(sorted: &[f64], p: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

fn nearest(centroids: &[f64], x: f64) -> usize {
    let mut best = 0;
    for (i, c) in centroids.iter().enumerate().skip(1) {
        if (x - c).abs() < (x - centroids[best]).abs() {
            best = i;
        }
    }
    best
}

/// Lloyd's algorithm on scalars, seeded with centroids at the
/// `(2i + 1) / 2k` quantiles so that runs are reproducible.
pub fn kmeans_1d(values: &[f64], k: usize) -> Result<KMeans1d> {
    if k == 0 {
        return Err(Error::Clustering("k must be at least 1".into()));
    }
    if values.len() < k {
        return Err(Error::Clustering(format!(
            "{} values cannot form {k} clusters; merge more interactions into the corpus",
            values.len()
        )));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::Clustering("non-finite value".into()));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut centroids: Vec<f64> = (0..k)
        .map(|i| quantile(&sorted, (2 * i + 1) as f64 / (2 * k) as f64))
        .collect();

    let mut assignments = vec![0; values.len()];
    let mut inertia = Vec::new();
    for _ in 0..MAX_ITERATIONS {
        let mut sums = vec![0.0; k];
        let mut counts = vec![0usize; k];
        let mut sse = 0.0;
        for (a, &x) in assignments.iter_mut().zip(values) {
            *a = nearest(&centroids, x);
            sums[*a] += x;
            counts[*a] += 1;
            sse += (x - centroids[*a]).powi(2);
        }
        inertia.push(sse);
        let mut moved: f64 = 0.0;
        for i in 0..k {
            if counts[i] > 0 {
                let c = sums[i] / counts[i] as f64;
                moved = moved.max((c - centroids[i]).abs());
                centroids[i] = c;
            }
        }
        if moved < CONVERGENCE {
            break;
        }
    }
    for (a, &x) in assignments.iter_mut().zip(values) {
        *a = nearest(&centroids, x);
    }

    if k > 1 {
        let mut sizes = vec![0usize; k];
        for &a in &assignments {
            sizes[a] += 1;
        }
        let collapsed = centroids.windows(2).any(|w| (w[1] - w[0]).abs() < 1e-12);
        if collapsed || sizes.contains(&0) {
            return Err(Error::Clustering(
                "indistinct clusters: the values do not separate into k groups".into(),
            ));
        }
    }

    // keep cluster ids in ascending centroid order
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| centroids[a].total_cmp(&centroids[b]));
    let mut rank = vec![0; k];
    for (r, &c) in order.iter().enumerate() {
        rank[c] = r;
    }
    Ok(KMeans1d {
        centroids: order.iter().map(|&c| centroids[c]).collect(),
        assignments: assignments.into_iter().map(|a| rank[a]).collect(),
        inertia,
    })
}

/// Ascending variation-class centroids per attitude dimension.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Centroids {
    pub by_dimension: BTreeMap<Dimension, [f64; 4]>,
}

impl Centroids {
    pub fn get(&self, dimension: Dimension) -> Option<&[f64; 4]> {
        self.by_dimension.get(&dimension)
    }
}

/// Clusters the deltas of each dimension into the four variation classes
/// and records the class on every event.
pub fn cluster_variations(events: &mut [VariationEvent]) -> Result<Centroids> {
    let mut out = Centroids::default();
    for dimension in Dimension::ALL {
        let idx: Vec<usize> = (0..events.len())
            .filter(|&i| events[i].dimension == dimension)
            .collect();
        let deltas: Vec<f64> = idx.iter().map(|&i| events[i].delta).collect();
        let km = kmeans_1d(&deltas, VariationClass::ALL.len())
            .map_err(|e| Error::Clustering(format!("{dimension}: {e}")))?;
        for (&i, &rank) in idx.iter().zip(&km.assignments) {
            events[i].class = VariationClass::from_rank(rank);
        }
        let c = &km.centroids;
        out.by_dimension.insert(dimension, [c[0], c[1], c[2], c[3]]);
    }
    Ok(out)
}
