//! Module settings, loadable from one TOML file.
//!
//! ```toml
//! [rules]
//! threshold = 0.5
//!
//! [placement]          # degrees, counter-clockwise from the friendly pole
//! gossip = 300.0
//!
//! [corpus]
//! smoothing_window = 2.0
//! min_delta = 0.15
//! stability = 2.0
//! max_lookback = 30.0
//!
//! [miner]
//! min_support = 0.1
//! max_pattern_length = 5
//!
//! [planner]
//! dead_zone = 0.05
//! decay_window = 5
//! ```
//!
//! Every section and key is optional.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::circumplex::PlacementTable;
use crate::error::{Error, Result};
use crate::planner::PlannerConfig;
use crate::rules::RuleConfig;
use crate::seqmine::MinerConfig;

/// Variation detection and segmentation settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusConfig {
    pub smoothing_window: f64,
    pub min_delta: f64,
    pub stability: f64,
    pub max_lookback: f64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            smoothing_window: 2.0,
            min_delta: 0.15,
            stability: 2.0,
            max_lookback: 30.0,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub rules: RuleConfig,
    pub placement: BTreeMap<String, f64>,
    pub corpus: CorpusConfig,
    pub miner: MinerConfig,
    pub planner: PlannerConfig,
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: Config = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Self::from_toml(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    pub fn validate(&self) -> Result<()> {
        self.rules.validate()?;
        self.miner.validate()?;
        self.planner.validate()?;
        self.placement_table()?;
        Ok(())
    }

    pub fn placement_table(&self) -> Result<PlacementTable> {
        PlacementTable::with_overrides(&self.placement)
    }
}
