//! Atomic output handling: every command stages its artifacts in memory,
//! then writes them temp-file-then-rename so a failed run leaves either no
//! outputs or a `.failed` marker, never a partial file.

use std::io;
use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::Serialize;

#[derive(Serialize)]
pub struct RunManifest {
    pub command: String,
    pub argv: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub version: String,
    pub outputs: Vec<String>,
    pub duration_ms: u128,
    pub created_unix_ms: u128,
}

pub struct OutputSet {
    prefix: PathBuf,
    files: Vec<(PathBuf, Vec<u8>)>,
}

impl OutputSet {
    pub fn new(prefix: &str) -> Self {
        OutputSet {
            prefix: PathBuf::from(prefix),
            files: Vec::new(),
        }
    }

    /// Stage a file at `<prefix><suffix>`.
    pub fn stage(&mut self, suffix: &str, content: impl Into<Vec<u8>>) {
        let mut name = self.prefix.as_os_str().to_owned();
        name.push(suffix);
        self.files.push((PathBuf::from(name), content.into()));
    }

    /// Write everything atomically, then the manifest alongside.
    pub fn commit(
        mut self,
        command: &str,
        argv: Vec<String>,
        seed: Option<u64>,
        started: Instant,
    ) -> io::Result<()> {
        let manifest = RunManifest {
            command: command.to_string(),
            argv,
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            outputs: self
                .files
                .iter()
                .map(|(p, _)| p.display().to_string())
                .collect(),
            duration_ms: started.elapsed().as_millis(),
            created_unix_ms: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_millis())
                .unwrap_or(0),
        };
        let manifest_bytes = serde_json::to_vec_pretty(&manifest).expect("manifest serializes");
        let mut name = self.prefix.as_os_str().to_owned();
        name.push(".manifest.json");
        self.files.push((PathBuf::from(name), manifest_bytes));

        let mut written: Vec<PathBuf> = Vec::new();
        for (path, content) in &self.files {
            match write_atomic(path, content) {
                Ok(()) => written.push(path.clone()),
                Err(e) => {
                    for w in &written {
                        let _ = std::fs::remove_file(w);
                    }
                    return Err(e);
                }
            }
        }
        Ok(())
    }
}

fn write_atomic(path: &Path, content: &[u8]) -> io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    if let Some(dir) = dir {
        std::fs::create_dir_all(dir)?;
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp.{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    std::fs::write(&tmp, content)?;
    std::fs::rename(&tmp, path)
}

/// Drop a `<prefix>.failed` marker describing the error.
pub fn write_failed_marker(prefix: &str, message: &str) {
    let path = format!("{prefix}.failed");
    let _ = std::fs::write(path, format!("{message}\n"));
}
