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

//! Criticality: class II graphs whose every edge deletion is Δ-colorable.

use crate::coloring::{chromatic_index, color_with, Colorability, EdgeColoring, SolveStatus};
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, enumerate_all, Graph, MAX_ENUMERATION_ORDER};
use rayon::prelude::*;
use serde::Serialize;

/// Node budget per chromatic-index decision used when none is given.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeChi {
    pub edge: (usize, usize),
    /// χ′(G − e), unset when the budget ran out.
    pub chi_prime: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriticalityVerdict {
    pub delta: usize,
    pub chi_prime: Option<usize>,
    pub is_class_two: bool,
    pub critical_edges: Vec<(usize, usize)>,
    pub is_delta_critical: bool,
    pub connected: bool,
    pub per_edge_chi: Vec<EdgeChi>,
    pub status: SolveStatus,
}

impl CriticalityVerdict {
    /// `Some(true)` if certified critical, `Some(false)` if certainly not
    /// (disconnected, class one, or some deletion keeps χ′ = Δ+1) even when
    /// other decisions ran out of budget, `None` otherwise.
    pub fn settled(&self) -> Option<bool> {
        if self.is_delta_critical {
            return Some(true);
        }
        let refuted = !self.connected
            || self.chi_prime == Some(self.delta)
            || self.per_edge_chi.iter().any(|e| e.chi_prime == Some(self.delta + 1));
        if refuted || self.status == SolveStatus::Complete {
            Some(false)
        } else {
            None
        }
    }
}

/// Whether deleting `e` lowers the chromatic index.
pub fn is_critical_edge(g: &Graph, e: (usize, usize), budget: u64) -> Result<bool> {
    if !g.has_edge(e.0, e.1) {
        return Err(Error::NotAnEdge(e.0, e.1));
    }
    let whole = chromatic_index(g, budget).value.ok_or(Error::BudgetExhausted(budget))?;
    let minus = chromatic_index(&g.without_edge(e.0, e.1), budget).value.ok_or(Error::BudgetExhausted(budget))?;
    Ok(minus < whole)
}

/// Decides edge-Δ-criticality: connected, χ′ = Δ+1, and χ′(G−e) ≤ Δ for
/// every edge. Deleting one edge at a time suffices because every proper
/// subgraph lies in some `G − e` and χ′ is monotone under subgraphs.
///
/// Per-edge decisions run in parallel. If any decision runs out of budget
/// the verdict has status [`SolveStatus::BudgetExhausted`] and
/// `is_delta_critical` is false.
pub fn is_edge_delta_critical(g: &Graph, budget: u64) -> Result<CriticalityVerdict> {
    if g.edge_count() == 0 {
        return Err(Error::BadParam("criticality needs at least one edge".into()));
    }
    let delta = g.max_degree();
    let whole = chromatic_index(g, budget);
    let per_edge_chi: Vec<EdgeChi> = g
        .edges()
        .par_iter()
        .map(|&(u, v)| EdgeChi { edge: (u, v), chi_prime: chromatic_index(&g.without_edge(u, v), budget).value })
        .collect();
    let mut status = whole.status;
    if per_edge_chi.iter().any(|e| e.chi_prime.is_none()) {
        status = SolveStatus::BudgetExhausted;
    }
    let critical_edges = match whole.value {
        Some(chi) => per_edge_chi.iter().filter(|e| e.chi_prime.is_some_and(|c| c < chi)).map(|e| e.edge).collect(),
        None => Vec::new(),
    };
    let is_class_two = whole.value == Some(delta + 1);
    let connected = g.is_connected();
    let is_delta_critical =
        status == SolveStatus::Complete && is_class_two && connected && critical_edges.len() == g.edge_count();
    Ok(CriticalityVerdict {
        delta,
        chi_prime: whole.value,
        is_class_two,
        critical_edges,
        is_delta_critical,
        connected,
        per_edge_chi,
        status,
    })
}

/// A Δ(G)-coloring of `G − e` with `e` left uncolored, if one exists.
pub fn deletion_coloring(g: &Graph, e: (usize, usize), budget: u64) -> Result<Option<EdgeColoring>> {
    if !g.has_edge(e.0, e.1) {
        return Err(Error::NotAnEdge(e.0, e.1));
    }
    match color_with(&g.without_edge(e.0, e.1), g.max_degree(), budget).0 {
        Colorability::Colorable(c) => Ok(Some(c)),
        Colorability::Uncolorable => Ok(None),
        Colorability::Unknown => Err(Error::BudgetExhausted(budget)),
    }
}

/// Edge degree sums against Δ+2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSumCheck {
    pub delta: usize,
    pub min_sum: Option<usize>,
    /// Edges with `d(u)+d(v) < Δ+2`.
    pub below: Vec<(usize, usize)>,
    /// Edges with `d(u)+d(v) = Δ+2`: allowed, but reported.
    pub tight: Vec<(usize, usize)>,
}

pub fn edge_degree_sums(g: &Graph) -> DegreeSumCheck {
    let delta = g.max_degree();
    let sum = |&(u, v): &(usize, usize)| g.degree(u) + g.degree(v);
    DegreeSumCheck {
        delta,
        min_sum: g.edges().iter().map(sum).min(),
        below: g.edges().iter().copied().filter(|e| sum(e) < delta + 2).collect(),
        tight: g.edges().iter().copied().filter(|e| sum(e) == delta + 2).collect(),
    }
}

/// A certified member of the small critical corpus.
#[derive(Clone, Debug, Serialize)]
pub struct CorpusEntry {
    #[serde(skip)]
    pub graph: Graph,
    pub graph6: String,
    pub delta: usize,
    pub chi_prime: usize,
    pub critical: bool,
    pub degree_sums: DegreeSumCheck,
}

impl CorpusEntry {
    pub fn from_verdict(g: &Graph, v: &CriticalityVerdict) -> Result<Option<CorpusEntry>> {
        let Some(chi_prime) = v.chi_prime else { return Ok(None) };
        Ok(Some(CorpusEntry {
            graph: g.clone(),
            graph6: encode_graph6(g)?,
            delta: v.delta,
            chi_prime,
            critical: v.is_delta_critical,
            degree_sums: edge_degree_sums(g),
        }))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriticalCorpus {
    pub entries: Vec<CorpusEntry>,
    /// Set when some candidate could not be decided within budget; those
    /// candidates are listed by graph6.
    pub undecided: Vec<String>,
}

impl CriticalCorpus {
    pub fn is_partial(&self) -> bool {
        !self.undecided.is_empty()
    }
}

/// Every edge-Δ-critical graph on 3..=n_max vertices, in enumeration order.
pub fn critical_corpus(n_max: usize, budget: u64) -> Result<CriticalCorpus> {
    if n_max > MAX_ENUMERATION_ORDER {
        return Err(Error::UnsupportedOrder { n: n_max, max: MAX_ENUMERATION_ORDER });
    }
    let mut candidates = Vec::new();
    for n in 3..=n_max {
        candidates.extend(enumerate_all(n)?.into_iter().filter(|g| g.edge_count() > 0 && g.is_connected()));
    }
    let checked: Vec<Result<Option<(Graph, CriticalityVerdict)>>> = candidates
        .par_iter()
        .map(|g| {
            // Class I graphs are discarded without the per-edge work.
            let whole = chromatic_index(g, budget);
            if whole.value == Some(g.max_degree()) {
                return Ok(None);
            }
            Ok(Some((g.clone(), is_edge_delta_critical(g, budget)?)))
        })
        .collect();
    let mut corpus = CriticalCorpus { entries: Vec::new(), undecided: Vec::new() };
    for item in checked {
        let Some((g, verdict)) = item? else { continue };
        if verdict.status == SolveStatus::BudgetExhausted {
            corpus.undecided.push(encode_graph6(&g)?);
        } else if verdict.is_delta_critical {
            corpus.entries.extend(CorpusEntry::from_verdict(&g, &verdict)?);
        }
    }
    Ok(corpus)
}
