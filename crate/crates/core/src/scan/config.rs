use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use globset::{Glob, GlobSet, GlobSetBuilder};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::detect::bidi::{BidiMode, BidiOptions};
use crate::detect::chars::InvisibleOptions;
use crate::finding::{CheckId, Severity};
use crate::lexer::{LanguageProfile, ProfileError, ProfileRegistry};
use crate::unicode::{InvisibleSet, InvisibleSetError};

pub const CONFIG_FILE_NAME: &str = ".trojan-sentinel.json";
pub const CONFIG_ENV_VAR: &str = "TROJAN_SENTINEL_CONFIG";
pub const DEFAULT_MAX_FILE_BYTES: u64 = 10 * 1024 * 1024;

/// The on-disk configuration document. Every field is optional; unknown
/// keys are rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScanConfig {
    /// Enabled checks; `None` enables all of them.
    pub checks: Option<BTreeSet<CheckId>>,
    pub severity_overrides: BTreeMap<CheckId, Severity>,
    pub bidi_mode: BidiMode,
    pub flag_all_bidi: bool,
    /// Extra invisible code points, as `U+XXXX`.
    pub invisible_extensions: Vec<String>,
    pub string_invisibles: bool,
    pub project_index: bool,
    /// Glob patterns matched against paths relative to each scan root.
    pub ignore: Vec<String>,
    /// File extension (without dot) to language id.
    pub languages: BTreeMap<String, String>,
    /// Additional or replacement language profiles.
    pub profiles: Vec<LanguageProfile>,
    pub max_file_bytes: u64,
    pub fail_on: Severity,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            checks: None,
            severity_overrides: BTreeMap::new(),
            bidi_mode: BidiMode::Strict,
            flag_all_bidi: false,
            invisible_extensions: Vec::new(),
            string_invisibles: false,
            project_index: false,
            ignore: Vec::new(),
            languages: BTreeMap::new(),
            profiles: Vec::new(),
            max_file_bytes: DEFAULT_MAX_FILE_BYTES,
            fail_on: Severity::Warning,
        }
    }
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid config {path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error(transparent)]
    Invisible(#[from] InvisibleSetError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error("invalid ignore pattern: {0}")]
    Glob(#[from] globset::Error),
}

impl ScanConfig {
    pub fn from_json(text: &str, path: &Path) -> Result<Self, ConfigError> {
        serde_json::from_str(text).map_err(|source| ConfigError::Parse {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        ScanConfig::from_json(&text, path)
    }

    /// Builds the runtime settings, validating every field.
    pub fn prepare(&self) -> Result<Settings, ConfigError> {
        let extra = self
            .invisible_extensions
            .iter()
            .map(|s| InvisibleSet::parse_code_point(s))
            .collect::<Result<Vec<_>, _>>()?;
        let invisibles = InvisibleSet::extended(extra)?;
        let mut registry = ProfileRegistry::builtin();
        for p in &self.profiles {
            registry.register(p.clone())?;
        }
        for (ext, id) in &self.languages {
            registry.map_extension(ext, id)?;
        }
        let mut globs = GlobSetBuilder::new();
        for pattern in &self.ignore {
            globs.add(Glob::new(pattern)?);
        }
        Ok(Settings {
            checks: self
                .checks
                .clone()
                .unwrap_or_else(|| CheckId::ALL.into_iter().collect()),
            severity_overrides: self.severity_overrides.clone(),
            bidi: BidiOptions {
                mode: self.bidi_mode,
                flag_all: self.flag_all_bidi,
            },
            invisible: InvisibleOptions {
                string_invisibles: self.string_invisibles,
            },
            invisibles,
            registry,
            ignore: globs.build()?,
            project_index: self.project_index,
            max_file_bytes: self.max_file_bytes,
            fail_on: self.fail_on,
        })
    }
}

/// Nearest `.trojan-sentinel.json` at or above `start`.
pub fn discover_config(start: &Path) -> Option<PathBuf> {
    let start = if start.is_file() { start.parent()? } else { start };
    let start = start.canonicalize().ok()?;
    start
        .ancestors()
        .map(|dir| dir.join(CONFIG_FILE_NAME))
        .find(|p| p.is_file())
}

/// Config file to use: an explicit path, then the environment variable,
/// then discovery upward from `scan_root`.
pub fn resolve_config_path(explicit: Option<&Path>, env_value: Option<&str>, scan_root: &Path) -> Option<PathBuf> {
    if let Some(p) = explicit {
        return Some(p.to_path_buf());
    }
    if let Some(v) = env_value.filter(|v| !v.is_empty()) {
        return Some(PathBuf::from(v));
    }
    discover_config(scan_root)
}

/// Validated runtime form of [`ScanConfig`].
#[derive(Debug, Clone)]
pub struct Settings {
    pub checks: BTreeSet<CheckId>,
    pub severity_overrides: BTreeMap<CheckId, Severity>,
    pub bidi: BidiOptions,
    pub invisible: InvisibleOptions,
    pub invisibles: InvisibleSet,
    pub registry: ProfileRegistry,
    pub ignore: GlobSet,
    pub project_index: bool,
    pub max_file_bytes: u64,
    pub fail_on: Severity,
}

impl Default for Settings {
    fn default() -> Self {
        ScanConfig::default().prepare().expect("default config is valid")
    }
}
