use std::path::Path;

use hopf_forest::combinatorics::DegreeCaps;
use serde::Deserialize;

pub const ENV_MAX_DEGREE: &str = "HOPF_FOREST_MAX_DEGREE";

/// Optional `key = value` settings file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    /// Default `--max-degree` for the verification verbs.
    pub max_degree: Option<usize>,
    /// Hard cap for ordered and planar binary trees.
    pub tree_cap: Option<usize>,
    /// Hard cap for permutations and heap-ordered trees.
    pub perm_cap: Option<usize>,
}

#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub default_max_degree: usize,
    pub caps: DegreeCaps,
}

impl Settings {
    pub fn load(path: Option<&Path>) -> Result<Settings, String> {
        let file = match path {
            None => FileConfig::default(),
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
                toml::from_str(&text)
                    .map_err(|e| format!("bad config file {}: {e}", p.display()))?
            }
        };
        let mut caps = DegreeCaps::default();
        if let Some(c) = file.tree_cap {
            caps.trees = c;
        }
        if let Some(c) = file.perm_cap {
            caps.permutations = c;
        }
        if let Ok(v) = std::env::var(ENV_MAX_DEGREE) {
            let n: usize = v.trim().parse().map_err(|_| {
                format!("{ENV_MAX_DEGREE} must be a nonnegative integer, got '{v}'")
            })?;
            caps = DegreeCaps::uniform(n);
        }
        Ok(Settings {
            default_max_degree: file.max_degree.unwrap_or(4),
            caps,
        })
    }
}
