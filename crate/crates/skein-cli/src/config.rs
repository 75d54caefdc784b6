//! Run configuration shared by every command.

use crate::error::{CliError, CliResult};
use skein_core::RootData;
use std::path::PathBuf;

/// Environment variable naming the 6j cache directory.
pub const CACHE_ENV: &str = "SKEIN_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Approx,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: u32,
    pub kprime: u32,
    pub mode: Mode,
    pub tolerance: f64,
    /// `None` disables the persistent cache.
    pub cache_dir: Option<PathBuf>,
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn new(n: u32, kprime: u32, mode: Mode, tolerance: f64) -> CliResult<Self> {
        let cfg = Self { n, kprime, mode, tolerance, cache_dir: None, format: OutputFormat::Json };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Checks `N` odd and at least 3, `gcd(k', N) = 1` and a positive tolerance.
    pub fn validate(&self) -> CliResult<()> {
        RootData::new(self.n, self.kprime).map_err(|e| CliError::Usage(e.to_string()))?;
        if !(self.tolerance > 0.0) {
            return Err(CliError::Usage(format!("tolerance {} must be positive", self.tolerance)));
        }
        Ok(())
    }

    pub fn root(&self) -> RootData {
        RootData::new(self.n, self.kprime).expect("validated")
    }

    /// Uses `dir`, else the environment variable, else no cache.
    pub fn with_cache(mut self, dir: Option<PathBuf>, disabled: bool) -> Self {
        self.cache_dir = if disabled { None } else { dir.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from)) };
        self
    }

    pub fn with_format(mut self, format: OutputFormat) -> Self {
        self.format = format;
        self
    }
}
