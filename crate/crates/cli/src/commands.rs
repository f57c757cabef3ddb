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

use crate::input::collect_graphs;
use crate::output::{csv_table, to_json, RunOutcome};
use crate::select::LemmaGroup;
use crate::{exit_code, CliError, Command, RunConfig, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_VIOLATED};
use chromatic_critic::coloring::{chromatic_index, SolveStatus};
use chromatic_critic::critical::{critical_corpus, is_edge_delta_critical, CorpusEntry};
use chromatic_critic::graph::{encode_graph6, Graph};
use chromatic_critic::hamilton::{
    bondy_chvatal_closure, brandt_veldman_check, circumference, closure_equivalence_check,
    critical_hamiltonicity_reports, double_cover_check, hamiltonian_cycle, theorem_pipeline, PipelineConfig,
};
use chromatic_critic::lemmas::{
    adjacency_reports, check_sigma_bounds, default_q_grid, graph_key, structure_reports, verify_coloring_statements,
    Mode, Sampling, SearchConfig,
};
use chromatic_critic::rational::to_string;
use chromatic_critic::{Error, LemmaReport, Verdict};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;

pub(crate) fn dispatch(config: &RunConfig) -> Result<RunOutcome, CliError> {
    match config.command {
        Command::Corpus => corpus(config),
        Command::Verify => verify(config),
        Command::Analyze => analyze(config),
        Command::Pipeline => pipeline(config),
        Command::Closure => closure(config),
    }
}

/// FNV-1a, so per-graph seeds depend only on the graph and `--seed`.
fn graph_seed(seed: u64, key: &str) -> u64 {
    key.bytes().fold(0xcbf2_9ce4_8422_2325u64 ^ seed, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

fn inputs(config: &RunConfig) -> Result<(Vec<Graph>, Vec<String>), CliError> {
    let (graphs, warnings) = collect_graphs(config)?;
    if config.nmax.is_none() && config.inputs.is_empty() && config.graph6.is_empty() {
        return Err(CliError::Usage(format!("{} needs --nmax, --in or --graph6", config.command.name())));
    }
    Ok((graphs, warnings))
}

fn tally(verdicts: impl IntoIterator<Item = Verdict>) -> (Verdict, BTreeMap<&'static str, u64>) {
    let mut worst = Verdict::PremiseUnsatisfied;
    let mut counts = BTreeMap::new();
    for v in verdicts {
        worst = worst.combine(v);
        *counts.entry(v.as_str()).or_default() += 1;
    }
    (worst, counts)
}

enum Criticality {
    Critical,
    /// Taken on trust via `--assume-critical`; reports are flagged.
    Assumed,
    Not(&'static str),
    Undecided,
}

fn criticality(g: &Graph, budget: u64) -> Result<Criticality, CliError> {
    if g.edge_count() == 0 {
        return Ok(Criticality::Not("no edges"));
    }
    Ok(match is_edge_delta_critical(g, budget)?.settled() {
        Some(true) => Criticality::Critical,
        Some(false) => Criticality::Not("not edge-critical"),
        None => Criticality::Undecided,
    })
}

fn sigma_group(g: &Graph, mode: Mode, config: &RunConfig, seed: u64) -> Result<Vec<LemmaReport>, CliError> {
    let key = graph_key(g);
    let group = if mode == Mode::Single { LemmaGroup::SigmaSingle } else { LemmaGroup::SigmaPair };
    let mode_name = if mode == Mode::Single { "SINGLE" } else { "PAIR" };
    let grid = config.q.clone().unwrap_or_else(|| default_q_grid(g.max_degree()));
    if grid.is_empty() {
        return Ok(group
            .reports()
            .iter()
            .map(|n| LemmaReport::premise_unsatisfied(n, &key, "no admissible q").param("mode", mode_name))
            .collect());
    }
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    if mode == Mode::Single {
        edges.extend(g.edges().iter().map(|&(u, v)| (v, u)));
    }
    let search = SearchConfig { steps: config.steps, seed, solver_budget: config.budget, ..SearchConfig::default() };
    let mut out = Vec::new();
    for q in &grid {
        out.push(check_sigma_bounds(g, q, mode));
        let mut any = false;
        for &e in &edges {
            let outcome = verify_coloring_statements(g, e, q, mode, &search)?;
            if outcome.reports.iter().any(|r| r.verdict != Verdict::PremiseUnsatisfied) {
                any = true;
                out.extend(outcome.reports);
            }
        }
        if !any {
            for name in &group.reports()[1..] {
                let r = LemmaReport::premise_unsatisfied(name, &key, "no edge meets the degree condition")
                    .param("q", to_string(q))
                    .param("mode", mode_name);
                out.push(r);
            }
        }
    }
    Ok(out)
}

fn verify_graph(g: &Graph, config: &RunConfig) -> Result<Vec<LemmaReport>, CliError> {
    let key = graph_key(g);
    let seed = graph_seed(config.seed, &key);
    let crit = if config.assume_critical {
        Criticality::Assumed
    } else if config.lemmas.iter().any(|l| l.needs_criticality()) {
        criticality(g, config.budget)?
    } else {
        Criticality::Undecided
    };
    let mut adjacency: Option<Vec<LemmaReport>> = None;
    let mut structure: Option<Vec<LemmaReport>> = None;
    let mut out = Vec::new();
    for &group in &config.lemmas {
        let names = group.reports();
        let gated = |why: &str, verdict: Verdict| -> Vec<LemmaReport> {
            names
                .iter()
                .map(|n| {
                    let mut r = LemmaReport::premise_unsatisfied(n, &key, why);
                    r.verdict = verdict;
                    match group {
                        LemmaGroup::SigmaSingle => r.param("mode", "SINGLE"),
                        LemmaGroup::SigmaPair => r.param("mode", "PAIR"),
                        _ => r,
                    }
                })
                .collect()
        };
        if group.needs_criticality() {
            match crit {
                Criticality::Critical | Criticality::Assumed => {}
                Criticality::Not(why) => {
                    out.extend(gated(why, Verdict::PremiseUnsatisfied));
                    continue;
                }
                Criticality::Undecided => {
                    out.extend(gated("criticality undecided within budget", Verdict::Inconclusive));
                    continue;
                }
            }
        }
        let first = out.len();
        let pick =
            |all: &[LemmaReport]| all.iter().filter(|r| names.contains(&r.lemma.as_str())).cloned().collect::<Vec<_>>();
        match group {
            LemmaGroup::Adjacency | LemmaGroup::WoodallCount | LemmaGroup::WoodallP => {
                out.extend(pick(adjacency.get_or_insert_with(|| adjacency_reports(g))));
            }
            LemmaGroup::SigmaSingle => out.extend(sigma_group(g, Mode::Single, config, seed)?),
            LemmaGroup::SigmaPair => out.extend(sigma_group(g, Mode::Pair, config, seed)?),
            LemmaGroup::Kierstead | LemmaGroup::KiersteadFour | LemmaGroup::Broom => {
                if structure.is_none() {
                    let sampling = Sampling {
                        per_edge: config.per_edge,
                        seed,
                        solver_budget: config.budget,
                        ..Sampling::default()
                    };
                    structure = Some(structure_reports(g, &sampling)?);
                }
                out.extend(pick(structure.as_deref().unwrap_or_default()));
            }
            LemmaGroup::Circumference => out.push(match brandt_veldman_check(g, config.ham_budget) {
                Ok(r) => r,
                Err(Error::TooLarge(why)) => LemmaReport::premise_unsatisfied(names[0], &key, &why),
                Err(e) => return Err(e.into()),
            }),
            LemmaGroup::DegreeSum | LemmaGroup::SmallCritical => {
                out.extend(pick(&critical_hamiltonicity_reports(g, true, config.ham_budget)));
            }
            LemmaGroup::Closure => out.push(closure_equivalence_check(g, config.ham_budget)),
            LemmaGroup::Cover => out.push(double_cover_check(g)),
        }
        if matches!(crit, Criticality::Assumed) && group.needs_criticality() {
            out[first..].iter_mut().for_each(|r| r.flag("criticality assumed"));
        }
    }
    Ok(out)
}

fn verify(config: &RunConfig) -> Result<RunOutcome, CliError> {
    let (graphs, warnings) = inputs(config)?;
    let per_graph: Vec<Result<Vec<LemmaReport>, CliError>> =
        graphs.par_iter().map(|g| verify_graph(g, config)).collect();
    let mut reports = Vec::new();
    for r in per_graph {
        reports.extend(r?);
    }
    reports.sort_by(|a, b| (&a.graph6, &a.lemma, &a.params).cmp(&(&b.graph6, &b.lemma, &b.params)));
    let (worst, counts) = tally(reports.iter().map(|r| r.verdict));
    let mut by_lemma: BTreeMap<&str, BTreeMap<&str, u64>> = BTreeMap::new();
    for r in &reports {
        *by_lemma.entry(&r.lemma).or_default().entry(r.verdict.as_str()).or_default() += 1;
    }
    let json = to_json(&json!({
        "command": "verify",
        "seed": config.seed,
        "budget": config.budget,
        "lemmas": config.lemmas.iter().map(|l| l.name()).collect::<Vec<_>>(),
        "summary": { "graphs": graphs.len(), "reports": reports.len(), "verdicts": counts, "by_lemma": by_lemma },
        "reports": reports,
    }))?;
    let rational = |q: &Option<chromatic_critic::Rational>| q.as_ref().map(to_string).unwrap_or_default();
    let csv = csv_table(
        &["graph6", "lemma", "params", "verdict", "lhs", "rhs", "checked", "flags"],
        reports.iter().map(|r| {
            vec![
                r.graph6.clone(),
                r.lemma.clone(),
                r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";"),
                r.verdict.as_str().to_string(),
                rational(&r.lhs),
                rational(&r.rhs),
                r.checked.to_string(),
                r.flags.join("|"),
            ]
        }),
    )?;
    Ok(RunOutcome { code: exit_code(worst), json, csv, warnings })
}

fn corpus(config: &RunConfig) -> Result<RunOutcome, CliError> {
    let (mut entries, mut undecided, warnings) = if config.inputs.is_empty() && config.graph6.is_empty() {
        let n = config.nmax.ok_or_else(|| CliError::Usage("corpus needs --nmax, --in or --graph6".into()))?;
        let c = critical_corpus(n, config.budget)?;
        (c.entries, c.undecided, Vec::new())
    } else {
        let (graphs, warnings) = inputs(config)?;
        let checked: Vec<Result<Option<(Graph, _)>, CliError>> = graphs
            .par_iter()
            .filter(|g| g.edge_count() > 0)
            .map(|g| Ok(Some((g.clone(), is_edge_delta_critical(g, config.budget)?))))
            .collect();
        let (mut entries, mut undecided) = (Vec::new(), Vec::new());
        for item in checked {
            let Some((g, v)) = item? else { continue };
            match v.settled() {
                Some(true) => entries.extend(CorpusEntry::from_verdict(&g, &v)?),
                Some(false) => {}
                None => undecided.push(graph_key(&g)),
            }
        }
        (entries, undecided, warnings)
    };
    entries.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    undecided.sort();
    // critical graphs have d(x) + d(y) ≥ Δ + 2 on every edge; equality is reported
    let below = entries.iter().filter(|e| !e.degree_sums.below.is_empty()).count();
    let tight = entries.iter().filter(|e| !e.degree_sums.tight.is_empty()).count();
    let json = to_json(&json!({
        "command": "corpus",
        "budget": config.budget,
        "summary": {
            "critical": entries.len(),
            "undecided": undecided.len(),
            "degree_sum_below": below,
            "degree_sum_tight": tight,
        },
        "entries": entries,
        "undecided": undecided,
    }))?;
    let csv = csv_table(
        &["graph6", "n", "delta", "chi_prime", "min_edge_degree_sum", "tight_edges"],
        entries.iter().map(|e| {
            vec![
                e.graph6.clone(),
                e.graph.n().to_string(),
                e.delta.to_string(),
                e.chi_prime.to_string(),
                e.degree_sums.min_sum.map_or_else(String::new, |s| s.to_string()),
                e.degree_sums.tight.len().to_string(),
            ]
        }),
    )?;
    let code = match (below, undecided.is_empty()) {
        (1.., _) => EXIT_VIOLATED,
        (0, true) => EXIT_OK,
        (0, false) => EXIT_INCONCLUSIVE,
    };
    Ok(RunOutcome { code, json, csv, warnings })
}

fn analyze_graph(g: &Graph, config: &RunConfig) -> Result<(Value, bool), CliError> {
    let chi = chromatic_index(g, config.budget);
    let crit = if g.edge_count() > 0 { is_edge_delta_critical(g, config.budget)?.settled() } else { Some(false) };
    let ham = if g.n() >= 3 { hamiltonian_cycle(g, config.ham_budget).is_hamiltonian() } else { Some(false) };
    let circ = circumference(g, config.ham_budget);
    let min_sum = g.edges().iter().map(|&(u, v)| g.degree(u) + g.degree(v)).min();
    let incomplete = chi.status == SolveStatus::BudgetExhausted
        || crit.is_none()
        || ham.is_none()
        || circ.status == SolveStatus::BudgetExhausted;
    let summary = json!({
        "graph6": graph_key(g),
        "n": g.n(),
        "m": g.edge_count(),
        "delta": g.max_degree(),
        "min_degree": g.min_degree(),
        "chi_prime": chi.value,
        "class": chi.value.map(|c| if c == g.max_degree() { 1 } else { 2 }),
        "critical": crit,
        "connected": g.is_connected(),
        "hamiltonian": ham,
        "circumference": circ.length,
        "cycle": circ.certificate.map(|c| c.vertices),
        "min_edge_degree_sum": min_sum,
        "closure_added": bondy_chvatal_closure(g).added.len(),
    });
    Ok((summary, incomplete))
}

fn analyze(config: &RunConfig) -> Result<RunOutcome, CliError> {
    let (graphs, warnings) = inputs(config)?;
    let results: Vec<Result<(Value, bool), CliError>> = graphs.par_iter().map(|g| analyze_graph(g, config)).collect();
    let mut rows = Vec::new();
    let mut incomplete = false;
    for r in results {
        let (v, inc) = r?;
        incomplete |= inc;
        rows.push(v);
    }
    rows.sort_by(|a, b| a["graph6"].as_str().cmp(&b["graph6"].as_str()));
    let cell = |v: &Value| match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    let cols = ["graph6", "n", "m", "delta", "chi_prime", "critical", "hamiltonian", "circumference"];
    let csv = csv_table(&cols, rows.iter().map(|r| cols.iter().map(|c| cell(&r[*c])).collect()))?;
    let json = to_json(&json!({ "command": "analyze", "graphs": rows }))?;
    Ok(RunOutcome { code: if incomplete { EXIT_INCONCLUSIVE } else { EXIT_OK }, json, csv, warnings })
}

fn pipeline(config: &RunConfig) -> Result<RunOutcome, CliError> {
    let (graphs, warnings) = inputs(config)?;
    let mut reports: Vec<_> = graphs
        .par_iter()
        .map(|g| {
            let cfg = PipelineConfig {
                chi_budget: config.budget,
                ham_budget: config.ham_budget,
                seed: graph_seed(config.seed, &graph_key(g)),
                ..PipelineConfig::default()
            };
            theorem_pipeline(g, &cfg)
        })
        .collect();
    reports.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    let (worst, counts) = tally(reports.iter().map(|r| r.verdict));
    let json = to_json(&json!({
        "command": "pipeline",
        "seed": config.seed,
        "summary": { "graphs": reports.len(), "verdicts": counts },
        "reports": reports,
    }))?;
    let csv = csv_table(
        &["graph6", "stage", "verdict"],
        reports.iter().flat_map(|r| {
            r.stages.iter().map(|s| vec![r.graph6.clone(), s.stage.to_string(), s.verdict.as_str().to_string()])
        }),
    )?;
    Ok(RunOutcome { code: exit_code(worst), json, csv, warnings })
}

fn closure(config: &RunConfig) -> Result<RunOutcome, CliError> {
    let (graphs, warnings) = inputs(config)?;
    let mut rows: Vec<Value> = graphs
        .par_iter()
        .map(|g| {
            let t = bondy_chvatal_closure(g);
            json!({
                "graph6": graph_key(g),
                "closure": encode_graph6(&t.closure).ok(),
                "added": t.added,
                "complete": t.closure.edge_count() == g.n() * g.n().saturating_sub(1) / 2,
            })
        })
        .collect();
    rows.sort_by(|a, b| a["graph6"].as_str().cmp(&b["graph6"].as_str()));
    let csv = csv_table(
        &["graph6", "closure", "added"],
        rows.iter().map(|r| {
            vec![
                r["graph6"].as_str().unwrap_or_default().to_string(),
                r["closure"].as_str().unwrap_or_default().to_string(),
                r["added"].as_array().map_or(0, Vec::len).to_string(),
            ]
        }),
    )?;
    let json = to_json(&json!({ "command": "closure", "graphs": rows }))?;
    Ok(RunOutcome { code: EXIT_OK, json, csv, warnings })
}
