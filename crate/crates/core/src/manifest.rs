//! Provenance record written next to every generated file.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    pub tool_version: String,
    /// SHA-256 of each named input, hex encoded.
    pub input_hashes: BTreeMap<String, String>,
    pub wall_time_seconds: f64,
    pub output_path: Option<PathBuf>,
    /// SHA-256 of the output bytes.
    pub output_hash: Option<String>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl RunManifest {
    pub fn new(command_line: Vec<String>, wall_time: Duration) -> Self {
        RunManifest {
            command_line,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_hashes: BTreeMap::new(),
            wall_time_seconds: wall_time.as_secs_f64(),
            output_path: None,
            output_hash: None,
        }
    }

    pub fn with_input(mut self, name: impl Into<String>, bytes: &[u8]) -> Self {
        self.input_hashes.insert(name.into(), sha256_hex(bytes));
        self
    }

    pub fn with_output(mut self, path: &Path, bytes: &[u8]) -> Self {
        self.output_path = Some(path.to_path_buf());
        self.output_hash = Some(sha256_hex(bytes));
        self
    }

    /// `out.jsonl` gets `out.jsonl.manifest.json`.
    pub fn path_for(output: &Path) -> PathBuf {
        let mut name = output.file_name().map(|n| n.to_os_string()).unwrap_or_default();
        name.push(".manifest.json");
        output.with_file_name(name)
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        let text = serde_json::to_string_pretty(self).map_err(std::io::Error::other)?;
        std::fs::write(path, text + "\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hashes_and_paths() {
        assert_eq!(sha256_hex(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
        assert_eq!(RunManifest::path_for(Path::new("dir/census.jsonl")), PathBuf::from("dir/census.jsonl.manifest.json"));
        let m = RunManifest::new(vec!["vfpoly".into()], Duration::from_millis(1500)).with_input("table", b"abc");
        assert_eq!(m.input_hashes["table"], sha256_hex(b"abc"));
        assert_eq!(m.wall_time_seconds, 1.5);
    }
}
