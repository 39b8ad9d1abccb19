//! Run manifests: every output file gets a sidecar recording the exact
//! invocation, so deterministic commands can be reproduced bit-identically.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub argv: Vec<String>,
    pub config: Value,
    pub artifact_version: String,
    pub seeds: Vec<u64>,
    pub timestamp_utc: String,
    pub inputs: Vec<PathBuf>,
    pub outputs: Vec<PathBuf>,
}

impl RunManifest {
    pub fn new(command: &str, config: Value, seeds: Vec<u64>) -> Self {
        RunManifest {
            command: command.to_string(),
            argv: std::env::args().collect(),
            config,
            artifact_version: crofton::VERSION.to_string(),
            seeds,
            timestamp_utc: chrono::Utc::now().to_rfc3339(),
            inputs: Vec::new(),
            outputs: Vec::new(),
        }
    }

    pub fn input(mut self, path: &Path) -> Self {
        self.inputs.push(path.to_path_buf());
        self
    }

    pub fn output(mut self, path: &Path) -> Self {
        self.outputs.push(path.to_path_buf());
        self
    }

    /// Write `<path>.manifest.json` next to an output file.
    pub fn write_beside(&self, path: &Path) -> Result<()> {
        let mut name = path.file_name().unwrap_or_default().to_os_string();
        name.push(".manifest.json");
        let manifest_path = path.with_file_name(name);
        let text = serde_json::to_string_pretty(self)?;
        std::fs::write(&manifest_path, text)
            .with_context(|| format!("writing manifest {}", manifest_path.display()))?;
        Ok(())
    }
}
