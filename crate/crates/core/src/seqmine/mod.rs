//! Frequent signal-sequence mining (GSP) and per-class quality measures.
//!
//! Segments are sequences of single signal labels, so every GSP element is a
//! singleton and a pattern is an ordered label list. A pattern occurs in a
//! segment when its labels appear there in order, not necessarily
//! contiguously.

mod file;
mod score;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::Segment;
use crate::error::{Error, Result};

pub use file::{parse_patterns, write_patterns, PatternSet};
pub use score::{score_patterns, PatternStats, ScoreReport, ScoreWarning, ScoredPattern};

pub const PATTERN_SEPARATOR: &str = "->";

/// Ordered list of signal labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Pattern(Vec<String>);

impl Pattern {
    pub fn new<S: Into<String>>(items: impl IntoIterator<Item = S>) -> Self {
        Pattern(items.into_iter().map(Into::into).collect())
    }

    pub fn empty() -> Self {
        Pattern(Vec::new())
    }

    pub fn items(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether the labels occur in `sequence` in order.
    pub fn occurs_in<S: AsRef<str>>(&self, sequence: &[S]) -> bool {
        let mut wanted = self.0.iter().peekable();
        for label in sequence {
            match wanted.peek() {
                None => break,
                Some(w) if w.as_str() == label.as_ref() => {
                    wanted.next();
                }
                Some(_) => {}
            }
        }
        wanted.peek().is_none()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(PATTERN_SEPARATOR))
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Pattern::empty());
        }
        let items: Vec<String> = s.split(PATTERN_SEPARATOR).map(str::to_string).collect();
        if items
            .iter()
            .any(|i| i.is_empty() || i.contains(char::is_whitespace))
        {
            return Err(Error::validation(format!("malformed pattern `{s}`")));
        }
        Ok(Pattern(items))
    }
}

impl AsRef<[String]> for Segment {
    fn as_ref(&self) -> &[String] {
        &self.sequence
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MinerConfig {
    pub min_support: f64,
    pub max_pattern_length: usize,
}

impl Default for MinerConfig {
    fn default() -> Self {
        MinerConfig {
            min_support: 0.1,
            max_pattern_length: 5,
        }
    }
}

impl MinerConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.min_support > 0.0 && self.min_support <= 1.0) {
            return Err(Error::validation(format!(
                "min_support {} must lie in (0, 1]",
                self.min_support
            )));
        }
        if self.max_pattern_length == 0 {
            return Err(Error::validation("max_pattern_length must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrequentPattern {
    pub pattern: Pattern,
    /// Number of segments containing the pattern.
    pub count: usize,
    /// `count` as a fraction of all segments.
    pub support: f64,
}

/// Whether `count` occurrences among `total` segments reach `min_support`.
pub fn is_frequent(count: usize, total: usize, min_support: f64) -> bool {
    count as f64 / total as f64 >= min_support
}

fn occurs(pattern: &[u32], sequence: &[u32]) -> bool {
    let mut it = pattern.iter().peekable();
    for x in sequence {
        match it.peek() {
            None => break,
            Some(&&p) if p == *x => {
                it.next();
            }
            Some(_) => {}
        }
    }
    it.peek().is_none()
}

/// Level-wise GSP: frequent patterns of length k are joined on their
/// (k-1)-overlap into candidates of length k+1, candidates with an
/// infrequent sub-pattern are pruned, and the survivors are counted by
/// subsequence containment.
///
/// Results are ordered by length, then lexicographically.
pub fn gsp_mine<S: AsRef<[String]>>(
    segments: &[S],
    cfg: &MinerConfig,
) -> Result<Vec<FrequentPattern>> {
    cfg.validate()?;
    if segments.is_empty() {
        return Err(Error::Mining("no segments to mine".into()));
    }
    let total = segments.len();

    // intern labels in sorted order so id order is label order
    let mut ids: BTreeMap<&str, u32> = BTreeMap::new();
    for s in segments {
        for label in s.as_ref() {
            ids.entry(label.as_str()).or_insert(0);
        }
    }
    let names: Vec<&str> = ids.keys().copied().collect();
    for (i, v) in ids.values_mut().enumerate() {
        *v = i as u32;
    }
    let encoded: Vec<Vec<u32>> = segments
        .iter()
        .map(|s| s.as_ref().iter().map(|l| ids[l.as_str()]).collect())
        .collect();

    let mut singles = vec![0usize; names.len()];
    for seq in &encoded {
        let mut seen = HashSet::new();
        for &x in seq {
            if seen.insert(x) {
                singles[x as usize] += 1;
            }
        }
    }
    let mut level: Vec<(Vec<u32>, usize)> = singles
        .iter()
        .enumerate()
        .filter(|(_, &c)| is_frequent(c, total, cfg.min_support))
        .map(|(x, &c)| (vec![x as u32], c))
        .collect();

    let mut found = Vec::new();
    while !level.is_empty() {
        let k = level[0].0.len();
        found.extend(level.iter().cloned());
        if k >= cfg.max_pattern_length {
            break;
        }

        let frequent: HashMap<&[u32], usize> =
            level.iter().map(|(p, c)| (p.as_slice(), *c)).collect();
        let mut by_prefix: HashMap<&[u32], Vec<&[u32]>> = HashMap::new();
        for (p, _) in &level {
            by_prefix.entry(&p[..k - 1]).or_default().push(p);
        }

        let mut candidates: Vec<Vec<u32>> = Vec::new();
        for (p1, _) in &level {
            let Some(partners) = by_prefix.get(&p1[1..]) else {
                continue;
            };
            for p2 in partners {
                let mut cand = p1.clone();
                cand.push(p2[k - 1]);
                let all_subs_frequent = (0..cand.len()).all(|drop| {
                    let sub: Vec<u32> = cand
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != drop)
                        .map(|(_, &x)| x)
                        .collect();
                    frequent.contains_key(sub.as_slice())
                });
                if all_subs_frequent {
                    candidates.push(cand);
                }
            }
        }
        candidates.sort();
        candidates.dedup();

        let mut next = Vec::new();
        for cand in candidates {
            let count = encoded.iter().filter(|seq| occurs(&cand, seq)).count();
            debug_assert!(
                count <= frequent[&cand[..k]] && count <= frequent[&cand[1..]],
                "support must not grow with pattern length"
            );
            if is_frequent(count, total, cfg.min_support) {
                next.push((cand, count));
            }
        }
        level = next;
    }

    Ok(found
        .into_iter()
        .map(|(p, count)| FrequentPattern {
            pattern: Pattern(p.iter().map(|&x| names[x as usize].to_string()).collect()),
            count,
            support: count as f64 / total as f64,
        })
        .collect())
}
