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

//! Command-line harness: builds graph inputs, runs the library checks in
//! parallel and writes deterministic JSON and CSV reports.
//!
//! The binary is a thin wrapper around [`run`]; everything it does is
//! reachable from tests through [`RunConfig`].

mod commands;
mod config;
mod input;
mod output;
mod select;

pub use config::{Cli, Command, RunConfig};
pub use input::{collect_graphs, ingest_corpus, Ingested};
pub use output::RunOutcome;
pub use select::LemmaGroup;

use chromatic_critic::Verdict;
use std::path::PathBuf;
use thiserror::Error;

/// Every report is HOLDS or PREMISE_UNSATISFIED.
pub const EXIT_OK: i32 = 0;
/// Usage, input or I/O error.
pub const EXIT_ERROR: i32 = 1;
/// At least one VIOLATED report.
pub const EXIT_VIOLATED: i32 = 2;
/// Nothing violated, but some check ran out of budget.
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}: {message}")]
    Malformed { path: PathBuf, line: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] chromatic_critic::Error),
    #[error("cannot write report: {0}")]
    Report(String),
}

/// Maps the most severe verdict to a process exit code.
pub fn exit_code(worst: Verdict) -> i32 {
    match worst {
        Verdict::Violated => EXIT_VIOLATED,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
        Verdict::Holds | Verdict::PremiseUnsatisfied => EXIT_OK,
    }
}

/// Runs one command. Reports are written to `config.out` (JSON, plus a CSV
/// next to it) when set; the JSON is also returned.
pub fn run(config: &RunConfig) -> Result<RunOutcome, CliError> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = config.workers {
        pool = pool.num_threads(w);
    }
    let pool = pool.build().map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let outcome = pool.install(|| commands::dispatch(config))?;
    if let Some(path) = &config.out {
        outcome.write(path)?;
    }
    Ok(outcome)
}
