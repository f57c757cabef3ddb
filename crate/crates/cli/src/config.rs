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

use crate::select::{parse_lemmas, LemmaGroup};
use crate::CliError;
use chromatic_critic::critical::DEFAULT_BUDGET;
use chromatic_critic::hamilton::cycles::DEFAULT_HAMILTON_BUDGET;
use chromatic_critic::rational::{self, Rational};
use clap::{Parser, ValueEnum};
use std::path::PathBuf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// List the edge-critical graphs among the inputs (or up to --nmax).
    Corpus,
    /// Run lemma checks and write per-graph reports.
    Verify,
    /// Summarize single graphs: degrees, chromatic index, cycles.
    Analyze,
    /// Run the staged Hamiltonicity theorem check.
    Pipeline,
    /// Compute degree-sum closures.
    Closure,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Corpus => "corpus",
            Command::Verify => "verify",
            Command::Analyze => "analyze",
            Command::Pipeline => "pipeline",
            Command::Closure => "closure",
        }
    }
}

/// Verification workbench for edge-chromatic critical graphs.
#[derive(Debug, Parser)]
#[command(name = "chromatic-critic", version)]
pub struct Cli {
    pub command: Command,
    /// Enumerate every graph on 1..=N vertices (N ≤ 8).
    #[arg(long)]
    pub nmax: Option<usize>,
    /// A file of graph6 lines, or a family such as `petersen`, `cycle:5`,
    /// `random:8:1/2:7`. Repeatable.
    #[arg(long = "in", value_name = "FILE|FAMILY")]
    pub inputs: Vec<String>,
    /// A graph6 string. Repeatable.
    #[arg(long)]
    pub graph6: Vec<String>,
    /// Comma-separated rational thresholds q, replacing the default grid.
    #[arg(long, value_delimiter = ',')]
    pub q: Option<Vec<String>>,
    /// Comma-separated lemma groups, by name or number (default: all).
    #[arg(long, value_delimiter = ',')]
    pub lemmas: Option<Vec<String>>,
    /// Node expansions per chromatic-index decision.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Node expansions per Hamiltonicity call.
    #[arg(long, default_value_t = DEFAULT_HAMILTON_BUDGET)]
    pub ham_budget: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, env = "CC_WORKERS")]
    pub workers: Option<usize>,
    /// JSON report path; a CSV summary is written next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Skip malformed graph6 lines with a warning instead of failing.
    #[arg(long)]
    pub skip_bad: bool,
    /// Treat every input as edge-critical without certifying it (for
    /// families whose criticality is known but too costly to decide).
    #[arg(long)]
    pub assume_critical: bool,
    /// Sampled colorings per edge for path and broom checks.
    #[arg(long, default_value_t = 100)]
    pub per_edge: usize,
    /// Kempe-walk steps per statement search.
    #[arg(long, default_value_t = 2000)]
    pub steps: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub nmax: Option<usize>,
    pub inputs: Vec<String>,
    pub graph6: Vec<String>,
    /// `None` means the default grid for each graph's Δ.
    pub q: Option<Vec<Rational>>,
    pub lemmas: Vec<LemmaGroup>,
    pub budget: u64,
    pub ham_budget: u64,
    pub seed: u64,
    pub workers: Option<usize>,
    pub out: Option<PathBuf>,
    pub skip_bad: bool,
    pub assume_critical: bool,
    pub per_edge: usize,
    pub steps: u64,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            nmax: None,
            inputs: Vec::new(),
            graph6: Vec::new(),
            q: None,
            lemmas: LemmaGroup::ALL.to_vec(),
            budget: DEFAULT_BUDGET,
            ham_budget: DEFAULT_HAMILTON_BUDGET,
            seed: 0,
            workers: None,
            out: None,
            skip_bad: false,
            assume_critical: false,
            per_edge: 100,
            steps: 2000,
        }
    }
}

impl TryFrom<Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, CliError> {
        if cli.budget == 0 || cli.ham_budget == 0 {
            return Err(CliError::Usage("budgets must be positive".into()));
        }
        if cli.workers == Some(0) {
            return Err(CliError::Usage("--workers must be positive".into()));
        }
        let q = cli
            .q
            .map(|list| {
                list.iter()
                    .map(|s| rational::parse(s).ok_or_else(|| CliError::Usage(format!("bad rational {s:?} in --q"))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .transpose()?;
        let lemmas = match cli.lemmas {
            Some(list) => parse_lemmas(&list)?,
            None => LemmaGroup::ALL.to_vec(),
        };
        Ok(RunConfig {
            command: cli.command,
            nmax: cli.nmax,
            inputs: cli.inputs,
            graph6: cli.graph6,
            q,
            lemmas,
            budget: cli.budget,
            ham_budget: cli.ham_budget,
            seed: cli.seed,
            workers: cli.workers,
            out: cli.out,
            skip_bad: cli.skip_bad,
            assume_critical: cli.assume_critical,
            per_edge: cli.per_edge,
            steps: cli.steps,
        })
    }
}
