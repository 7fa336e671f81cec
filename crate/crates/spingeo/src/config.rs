//! Optional TOML configuration. Every field has a default, so an empty file
//! (or no file) is valid.

use std::path::Path;

use serde::{Deserialize, Serialize};
use spingeo_core::geography::{smallest_composition, CompositionBounds, SearchBounds};
use spingeo_core::grp::AbelianType;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub snf: SnfSampling,
    pub strip: StripGrid,
    pub horikawa: HorikawaGrid,
    pub targets: TargetSets,
    pub composition: CompositionBounds,
    pub search: Search,
    pub wedge: WedgeSampling,
    pub family: FamilyDial,
    pub cusp_genera: Vec<i64>,
    pub product_n: (i64, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SnfSampling {
    pub samples: usize,
    pub max_dim: usize,
    pub max_entry: i64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct StripGrid {
    pub n_max: i64,
    pub s_max: i64,
    /// One group per target shape.
    pub groups: Vec<AbelianType>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct HorikawaGrid {
    pub kp_max: i64,
    pub n_max: i64,
}

/// Orders used to instantiate the group targets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TargetSets {
    pub p_values: Vec<u64>,
    pub q_values: Vec<u64>,
    pub product_genera: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Search {
    pub m_max: i64,
    pub strip_n_max: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WedgeSampling {
    pub instances: usize,
    pub m_max: i64,
    pub kp_max: i64,
    pub s_max: i64,
    pub strip_n_max: i64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FamilyDial {
    pub dial_max: i64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            snf: SnfSampling::default(),
            strip: StripGrid::default(),
            horikawa: HorikawaGrid::default(),
            targets: TargetSets::default(),
            composition: CompositionBounds::default(),
            search: Search::default(),
            wedge: WedgeSampling::default(),
            family: FamilyDial::default(),
            cusp_genera: vec![2, 3, 4],
            product_n: (2, 8),
        }
    }
}

impl Default for SnfSampling {
    fn default() -> Self {
        SnfSampling {
            samples: 500,
            max_dim: 6,
            max_entry: 9,
            seed: 0x5eed,
        }
    }
}

impl Default for StripGrid {
    fn default() -> Self {
        StripGrid {
            n_max: 20,
            s_max: 20,
            groups: ["trivial", "Z", "Z+Z", "Z_3", "Z+Z_3", "Z_3+Z_3"]
                .iter()
                .map(|g| g.parse().unwrap())
                .collect(),
        }
    }
}

impl Default for HorikawaGrid {
    fn default() -> Self {
        HorikawaGrid {
            kp_max: 10,
            n_max: 10,
        }
    }
}

impl Default for TargetSets {
    fn default() -> Self {
        TargetSets {
            p_values: vec![2, 3, 5, 7],
            q_values: vec![2, 3, 5, 7],
            product_genera: vec![2, 3],
        }
    }
}

impl Default for Search {
    fn default() -> Self {
        let d = SearchBounds::default();
        Search {
            m_max: d.m_max,
            strip_n_max: d.strip_n_max,
        }
    }
}

impl Default for WedgeSampling {
    fn default() -> Self {
        WedgeSampling {
            instances: 100,
            m_max: 5,
            kp_max: 10,
            s_max: 20,
            strip_n_max: 10,
            seed: 2718,
        }
    }
}

impl Default for FamilyDial {
    fn default() -> Self {
        FamilyDial { dial_max: 6 }
    }
}

impl Config {
    pub fn load(path: &Path) -> anyhow::Result<Config> {
        let src = std::fs::read_to_string(path)?;
        Ok(toml::from_str(&src)?)
    }

    /// Solver bounds with the smallest usable composition under `composition`.
    pub fn search_bounds(&self) -> SearchBounds {
        SearchBounds {
            compositions: smallest_composition(&self.composition)
                .into_iter()
                .collect(),
            m_max: self.search.m_max,
            strip_n_max: self.search.strip_n_max,
        }
    }
}
