// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use crate::CliError;
use std::path::Path;

/// Result of one command: exit code, JSON report and CSV summary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub code: i32,
    pub json: String,
    pub csv: String,
    /// Non-fatal problems, e.g. skipped input lines.
    pub warnings: Vec<String>,
}

impl RunOutcome {
    /// Writes the JSON to `path` and the CSV to the same path with a `.csv`
    /// extension.
    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        let write = |p: &Path, text: &str| {
            std::fs::write(p, text).map_err(|source| CliError::Io { path: p.to_path_buf(), source })
        };
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
        }
        write(path, &self.json)?;
        write(&path.with_extension("csv"), &self.csv)
    }
}

pub(crate) fn csv_table<R>(header: &[&str], rows: R) -> Result<String, CliError>
where
    R: IntoIterator<Item = Vec<String>>,
{
    let err = |e: csv::Error| CliError::Report(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(err)?;
    for row in rows {
        w.write_record(&row).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Report(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Report(e.to_string()))
}

pub(crate) fn to_json(value: &serde_json::Value) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| CliError::Report(e.to_string()))
}
