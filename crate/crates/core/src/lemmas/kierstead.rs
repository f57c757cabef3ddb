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

//! Kierstead paths and their elementarity.
//!
//! For a coloring `φ` of `G − e1` with `e1 = y0y1`, a Kierstead path is a
//! path `y0, y1, .., yp` on distinct vertices whose edge `y(i−1)yi` for
//! `i ≥ 2` carries a color missing at one of `y0, .., y(i−1)`. On a graph
//! with `χ′ = Δ + 1` and a critical edge `e1`:
//!
//! * the path is elementary if `d(yj) < Δ` for all `j ≥ 2`;
//! * for paths on four vertices: `φ̄(y0) ∩ φ̄(y1) = ∅`; the path is
//!   elementary if `d(y2) < Δ` or if `d(y1) < Δ`; and
//!   `|φ̄(y3) ∩ (φ̄(y0) ∪ φ̄(y1))| ≤ 1`.

use crate::bitset::{ColorSet, VertexSet};
use crate::coloring::{elementary_witness, EdgeColoring, SharedMissing};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::Verdict;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KiersteadPath {
    /// `y0, y1, .., yp`.
    pub vertices: Vec<usize>,
}

impl KiersteadPath {
    pub fn new(vertices: Vec<usize>) -> Self {
        KiersteadPath { vertices }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Number of edges `p`.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 2
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidPath(msg)
}

/// Checks the path conditions for `path` against `g`, `e` and `c`.
pub fn validate_kierstead(g: &Graph, e: (usize, usize), c: &EdgeColoring, path: &KiersteadPath) -> Result<()> {
    let ys = &path.vertices;
    if ys.len() < 2 {
        return Err(invalid("a path needs at least y0 and y1".into()));
    }
    if ys.iter().any(|&v| v >= g.n()) {
        return Err(invalid("vertex out of range".into()));
    }
    if path.vertex_set().len() != ys.len() {
        return Err(invalid("repeated vertex".into()));
    }
    let (a, b) = (ys[0].min(ys[1]), ys[0].max(ys[1]));
    if (a, b) != (e.0.min(e.1), e.0.max(e.1)) {
        return Err(invalid(format!("first edge {}-{} is not the uncolored edge", ys[0], ys[1])));
    }
    if !g.has_edge(a, b) || c.color(a, b).is_some() {
        return Err(invalid("the first edge must be an uncolored edge of the graph".into()));
    }
    let mut missing = c.missing(ys[0]).union(c.missing(ys[1]));
    for i in 2..ys.len() {
        let (u, v) = (ys[i - 1], ys[i]);
        if !g.has_edge(u, v) {
            return Err(invalid(format!("{u}-{v} is not an edge")));
        }
        match c.color(u, v) {
            Some(col) if missing.contains(col) => {}
            _ => return Err(invalid(format!("edge {u}-{v} is not colored from earlier missing sets"))),
        }
        missing = missing.union(c.missing(v));
    }
    Ok(())
}

/// One clause of the path checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseResult {
    pub clause: &'static str,
    pub verdict: Verdict,
    pub shared: Option<SharedMissing>,
}

pub const CLAUSE_LOW_INTERIOR: &str = "low_interior";
pub const CLAUSE_FIRST_PAIR: &str = "first_pair_disjoint";
pub const CLAUSE_SECOND_LOW: &str = "y2_low";
pub const CLAUSE_FIRST_LOW: &str = "y1_low";
pub const CLAUSE_END_OVERLAP: &str = "end_overlap";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathCheck {
    pub elementary: bool,
    pub shared: Option<SharedMissing>,
    pub clauses: Vec<ClauseResult>,
}

fn gated(clause: &'static str, premise: bool, ok: bool, shared: Option<SharedMissing>) -> ClauseResult {
    let verdict = match (premise, ok) {
        (false, _) => Verdict::PremiseUnsatisfied,
        (true, true) => Verdict::Holds,
        (true, false) => Verdict::Violated,
    };
    ClauseResult { clause, verdict, shared: if verdict == Verdict::Violated { shared } else { None } }
}

/// Evaluates every clause that applies to `path`.
///
/// The low-interior clause applies to paths of any length; the other four
/// only to paths on exactly four vertices.
pub fn kierstead_check(g: &Graph, e: (usize, usize), c: &EdgeColoring, path: &KiersteadPath) -> Result<PathCheck> {
    validate_kierstead(g, e, c, path)?;
    Ok(path_clauses(g, c, path))
}

pub(crate) fn path_clauses(g: &Graph, c: &EdgeColoring, path: &KiersteadPath) -> PathCheck {
    let ys = &path.vertices;
    let delta = g.max_degree();
    let shared = elementary_witness(c, path.vertex_set());
    let elementary = shared.is_none();
    let mut clauses =
        vec![gated(CLAUSE_LOW_INTERIOR, ys[2..].iter().all(|&v| g.degree(v) < delta), elementary, shared)];
    if ys.len() == 4 {
        let first = elementary_witness(c, VertexSet::singleton(ys[0]).with(ys[1]));
        clauses.push(gated(CLAUSE_FIRST_PAIR, true, first.is_none(), first));
        clauses.push(gated(CLAUSE_SECOND_LOW, g.degree(ys[2]) < delta, elementary, shared));
        clauses.push(gated(CLAUSE_FIRST_LOW, g.degree(ys[1]) < delta, elementary, shared));
        let gamma = c.missing(ys[0]).union(c.missing(ys[1]));
        let overlap: ColorSet = c.missing(ys[3]).intersection(gamma);
        let witness = overlap.iter().nth(1).map(|color| SharedMissing { u: ys[3], v: ys[0], color });
        clauses.push(gated(CLAUSE_END_OVERLAP, true, overlap.len() <= 1, witness));
    }
    PathCheck { elementary, shared, clauses }
}

/// Every Kierstead path for `e` under `c`, both orientations of `e`,
/// in depth-first order. Stops after `limit` paths.
pub fn kierstead_paths(g: &Graph, e: (usize, usize), c: &EdgeColoring, limit: usize) -> Vec<KiersteadPath> {
    let mut out = Vec::new();
    for (y0, y1) in [(e.0, e.1), (e.1, e.0)] {
        let mut stack = vec![y0, y1];
        extend(g, c, &mut stack, c.missing(y0).union(c.missing(y1)), &mut out, limit);
    }
    out
}

fn extend(
    g: &Graph,
    c: &EdgeColoring,
    path: &mut Vec<usize>,
    missing: ColorSet,
    out: &mut Vec<KiersteadPath>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    out.push(KiersteadPath::new(path.clone()));
    let last = *path.last().expect("nonempty");
    let used: VertexSet = path.iter().copied().collect();
    for w in g.neighbors(last).difference(used).iter() {
        if c.color(last, w).is_some_and(|col| missing.contains(col)) {
            path.push(w);
            extend(g, c, path, missing.union(c.missing(w)), out, limit);
            path.pop();
        }
    }
}

/// Whether no vertex extends `path` to a longer Kierstead path.
pub fn is_maximal(g: &Graph, c: &EdgeColoring, path: &KiersteadPath) -> bool {
    let missing = path.vertices.iter().fold(ColorSet::EMPTY, |m, &v| m.union(c.missing(v)));
    let last = *path.vertices.last().expect("nonempty");
    !g.neighbors(last)
        .difference(path.vertex_set())
        .iter()
        .any(|w| c.color(last, w).is_some_and(|col| missing.contains(col)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critical::deletion_coloring;
    use crate::graph::{generate, Family};

    fn c5_setup() -> (Graph, EdgeColoring) {
        let g = generate(&Family::Cycle(5)).unwrap();
        // path 1-2-3-4-0 colored 1,2,1,2; edge 0-1 uncolored
        let c = EdgeColoring::from_assignments(5, 2, [(1, 2, 1), (2, 3, 2), (3, 4, 1), (0, 4, 2)]).unwrap();
        (g, c)
    }

    #[test]
    fn three_vertex_path_on_c5_is_elementary() {
        let (g, c) = c5_setup();
        // φ̄(0) = {1}, φ̄(1) = {2}; edge 0-4 has color 2 ∈ φ̄(1)
        let k = KiersteadPath::new(vec![1, 0, 4]);
        let check = kierstead_check(&g, (0, 1), &c, &k).unwrap();
        assert!(check.elementary);
        assert_eq!(check.clauses[0].verdict, Verdict::PremiseUnsatisfied);
    }

    #[test]
    fn invalid_paths_are_rejected() {
        let (g, c) = c5_setup();
        let bad = [vec![0], vec![0, 1, 1], vec![1, 2, 3], vec![0, 1, 3], vec![0, 1, 2, 3, 0]];
        for v in bad {
            assert!(matches!(kierstead_check(&g, (0, 1), &c, &KiersteadPath::new(v)), Err(Error::InvalidPath(_))));
        }
        // 1-2 has color 1, missing at 0: valid. 2-3 has color 2, missing at 1: valid.
        assert!(kierstead_check(&g, (0, 1), &c, &KiersteadPath::new(vec![0, 1, 2, 3])).is_ok());
    }

    #[test]
    fn all_interior_at_delta_gates_first_clause() {
        let (g, c) = c5_setup();
        let check = kierstead_check(&g, (0, 1), &c, &KiersteadPath::new(vec![0, 1, 2, 3])).unwrap();
        assert_eq!(check.clauses[0].verdict, Verdict::PremiseUnsatisfied);
        assert_eq!(check.clauses.len(), 5);
        assert_eq!(check.clauses[1].verdict, Verdict::Holds);
        assert_eq!(check.clauses[4].verdict, Verdict::Holds);
    }

    #[test]
    fn enumeration_yields_valid_paths() {
        let g = generate(&Family::SubdividedComplete(4)).unwrap();
        let c = deletion_coloring(&g, (4, 0), 100_000).unwrap().unwrap();
        let paths = kierstead_paths(&g, (4, 0), &c, usize::MAX);
        assert!(paths.len() >= 2);
        for p in &paths {
            let check = kierstead_check(&g, (4, 0), &c, p).unwrap();
            assert!(check.clauses.iter().all(|cl| cl.verdict != Verdict::Violated));
        }
        assert!(paths.iter().any(|p| is_maximal(&g, &c, p)));
        assert_eq!(kierstead_paths(&g, (4, 0), &c, 3).len(), 3);
    }
}
