//! Projection of categorical attitudes onto the interpersonal circumplex.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affect::{recruiter, AffectVector};
use crate::error::{Error, Result};

/// A global attitude as (friendliness, dominance), both in `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct AttitudePoint {
    pub friendliness: f64,
    pub dominance: f64,
}

impl AttitudePoint {
    pub fn new(friendliness: f64, dominance: f64) -> Result<Self> {
        for (axis, v) in [("friendliness", friendliness), ("dominance", dominance)] {
            if !(-1.0..=1.0).contains(&v) {
                return Err(Error::validation(format!("{axis} {v} outside [-1, 1]")));
            }
        }
        Ok(AttitudePoint {
            friendliness,
            dominance,
        })
    }

    pub const ORIGIN: AttitudePoint = AttitudePoint {
        friendliness: 0.0,
        dominance: 0.0,
    };

    pub fn norm(&self) -> f64 {
        self.friendliness.hypot(self.dominance)
    }
}

impl fmt::Display for AttitudePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(F {:+.4}, D {:+.4})", self.friendliness, self.dominance)
    }
}

/// Angle of each attitude on the circumplex, in degrees counter-clockwise
/// from the friendly pole (friendliness on x, dominance on y).
pub const DEFAULT_ANGLES: [(&str, f64); 7] = [
    (recruiter::FRIENDLY, 0.0),
    (recruiter::ATTENTIVE, 15.0),
    (recruiter::SUPPORTIVE, 45.0),
    (recruiter::DOMINANT, 90.0),
    (recruiter::AGGRESSIVE, 135.0),
    (recruiter::INATTENTIVE, 225.0),
    (recruiter::GOSSIP, 315.0),
];

/// Unit direction of each recruiter attitude in the (friendliness,
/// dominance) plane.
#[derive(Debug, Clone, PartialEq)]
pub struct PlacementTable {
    directions: BTreeMap<String, (f64, f64)>,
}

impl Default for PlacementTable {
    fn default() -> Self {
        Self::from_angles(DEFAULT_ANGLES.iter().map(|&(n, a)| (n.to_string(), a)))
            .expect("default angles cover every attitude")
    }
}

impl PlacementTable {
    /// Builds a table from angles in degrees. Every recruiter attitude must
    /// be placed exactly once.
    pub fn from_angles(angles: impl IntoIterator<Item = (String, f64)>) -> Result<Self> {
        let mut directions = BTreeMap::new();
        for (name, degrees) in angles {
            if !recruiter::ATTITUDES.contains(&name.as_str()) {
                return Err(Error::validation(format!(
                    "placement for unknown attitude `{name}`"
                )));
            }
            if !degrees.is_finite() {
                return Err(Error::validation(format!("angle of `{name}` is not finite")));
            }
            let rad = degrees.to_radians();
            if directions.insert(name.clone(), (rad.cos(), rad.sin())).is_some() {
                return Err(Error::validation(format!("attitude `{name}` placed twice")));
            }
        }
        if let Some(missing) = recruiter::ATTITUDES
            .iter()
            .find(|a| !directions.contains_key(**a))
        {
            return Err(Error::validation(format!("no placement for attitude `{missing}`")));
        }
        Ok(PlacementTable { directions })
    }

    /// Default angles with the given ones overriding them.
    pub fn with_overrides(overrides: &BTreeMap<String, f64>) -> Result<Self> {
        let mut angles: BTreeMap<String, f64> = DEFAULT_ANGLES
            .iter()
            .map(|&(n, a)| (n.to_string(), a))
            .collect();
        for (name, angle) in overrides {
            if !angles.contains_key(name) {
                return Err(Error::validation(format!(
                    "placement for unknown attitude `{name}`"
                )));
            }
            angles.insert(name.clone(), *angle);
        }
        Self::from_angles(angles)
    }

    pub fn direction(&self, attitude: &str) -> Option<(f64, f64)> {
        self.directions.get(attitude).copied()
    }
}

/// Average of the intensity-scaled placement vectors of the active
/// attitudes (intensity > 0). No active attitude gives the origin.
pub fn aggregate(attitudes: &AffectVector, placements: &PlacementTable) -> Result<AttitudePoint> {
    let mut sum = (0.0, 0.0);
    let mut active = 0usize;
    for (name, intensity) in attitudes.iter() {
        let (x, y) = placements
            .direction(name)
            .ok_or_else(|| Error::validation(format!("unknown attitude `{name}`")))?;
        if intensity > 0.0 {
            sum.0 += intensity * x;
            sum.1 += intensity * y;
            active += 1;
        }
    }
    if active == 0 {
        return Ok(AttitudePoint::ORIGIN);
    }
    let n = active as f64;
    AttitudePoint::new(sum.0 / n, sum.1 / n)
}
