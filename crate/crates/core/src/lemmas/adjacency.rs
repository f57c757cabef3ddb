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

//! Degree-count consequences of criticality along single edges.
//!
//! For an edge-Δ-critical graph and every edge `xy`:
//!
//! * `σ_Δ(x, y) ≥ Δ − d(x) + 1` (Vizing's adjacency lemma);
//! * at least `Δ − σ(x, y)` vertices `z ∈ N(x) \ {y}` have
//!   `σ(x, z) ≥ 2Δ − d(x) − σ(x, y)`, where the count presupposes
//!   `σ(x, y) ≤ d(y) − 1`;
//! * every `x` has at least `d(x) − p(x) − 1` neighbors `y` with
//!   `σ(x, y) ≥ Δ − p(x) − 1`.

use super::sigma::{sigma, sigma_q, woodall_params};
use crate::coloring::SolveStatus;
use crate::critical::is_edge_delta_critical;
use crate::error::Result;
use crate::graph::Graph;
use crate::rational::int;
use crate::report::{LemmaReport, Tally, Verdict};
use serde_json::json;

pub const ADJACENCY: &str = "vizing_adjacency";
pub const WOODALL_COUNT: &str = "woodall_count";
pub const WOODALL_PRESUPPOSITION: &str = "woodall_presupposition";
pub const WOODALL_P: &str = "woodall_p";

/// Certifies criticality, then runs [`adjacency_reports`]. Graphs that are
/// not edge-Δ-critical get `PREMISE_UNSATISFIED`; undecided ones get
/// `INCONCLUSIVE`.
pub fn check_adjacency_lemmas(g: &Graph, budget: u64) -> Result<Vec<LemmaReport>> {
    let key = super::graph_key(g);
    let names = [ADJACENCY, WOODALL_COUNT, WOODALL_PRESUPPOSITION, WOODALL_P];
    if g.edge_count() == 0 {
        return Ok(names.iter().map(|n| LemmaReport::premise_unsatisfied(n, &key, "no edges")).collect());
    }
    let verdict = is_edge_delta_critical(g, budget)?;
    if verdict.status == SolveStatus::BudgetExhausted {
        return Ok(names
            .iter()
            .map(|n| {
                let mut r = LemmaReport::premise_unsatisfied(n, &key, "criticality undecided within budget");
                r.verdict = Verdict::Inconclusive;
                r
            })
            .collect());
    }
    if !verdict.is_delta_critical {
        return Ok(names.iter().map(|n| LemmaReport::premise_unsatisfied(n, &key, "not edge-critical")).collect());
    }
    Ok(adjacency_reports(g))
}

/// The four checks on a graph already known to be edge-Δ-critical.
pub fn adjacency_reports(g: &Graph) -> Vec<LemmaReport> {
    let key = super::graph_key(g);
    let delta = g.max_degree() as i64;
    let mut val = Tally::new(LemmaReport::new(ADJACENCY, &key));
    let mut count = Tally::new(LemmaReport::new(WOODALL_COUNT, &key));
    let mut presup = Tally::new(LemmaReport::new(WOODALL_PRESUPPOSITION, &key));
    let mut pval = Tally::new(LemmaReport::new(WOODALL_P, &key));

    for &(a, b) in g.edges() {
        for (x, y) in [(a, b), (b, a)] {
            let dx = g.degree(x) as i64;
            let s_delta = sigma_q(g, x, y, &int(delta)).expect("edge") as i64;
            val.record(int(s_delta), int(delta - dx + 1), false, || json!({"x": x, "y": y}));

            let s = sigma(g, x, y).expect("edge") as i64;
            presup.record(int(g.degree(y) as i64 - 1), int(s), false, || json!({"x": x, "y": y}));
            let target = 2 * delta - dx - s;
            let good: Vec<usize> =
                g.neighbors(x).without(y).iter().filter(|&z| sigma(g, x, z).expect("edge") as i64 >= target).collect();
            count.record(
                int(good.len() as i64),
                int(delta - s),
                false,
                || json!({"x": x, "y": y, "sigma": s, "threshold": target, "z": good}),
            );
        }
    }
    for x in g.vertices().iter().filter(|&x| g.degree(x) > 0) {
        let (w, profile) = woodall_params(g, x).expect("d(x) ≥ 1");
        let threshold = delta - w.p - 1;
        let good = profile.neighbors.iter().filter(|s| s.sigma as i64 >= threshold).count() as i64;
        pval.record(
            int(good),
            int(g.degree(x) as i64 - w.p - 1),
            false,
            || json!({"x": x, "p_min": w.p_min, "p": w.p, "sigma_threshold": threshold}),
        );
    }
    vec![val.finish(), count.finish(), presup.finish(), pval.finish()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critical::{critical_corpus, DEFAULT_BUDGET};
    use crate::graph::{generate, Family};

    #[test]
    fn odd_cycle_holds_everywhere() {
        let c5 = generate(&Family::Cycle(5)).unwrap();
        let reports = check_adjacency_lemmas(&c5, 1000).unwrap();
        assert_eq!(reports.len(), 4);
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Holds, "{r:?}");
        }
        // σ_2 = 1 = Δ − d(x) + 1 on every edge
        assert_eq!(reports[0].lhs, Some(int(1)));
        assert_eq!(reports[0].rhs, Some(int(1)));
        assert_eq!(reports[0].checked, 10);
    }

    #[test]
    fn class_one_graph_is_vacuous() {
        let c6 = generate(&Family::Cycle(6)).unwrap();
        for r in check_adjacency_lemmas(&c6, 1000).unwrap() {
            assert_eq!(r.verdict, Verdict::PremiseUnsatisfied);
        }
    }

    #[test]
    fn non_critical_graph_can_violate() {
        // a pendant edge on a triangle: the pendant vertex has σ_Δ = 0 < Δ
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(adjacency_reports(&g)[0].verdict, Verdict::Violated);
    }

    #[test]
    fn critical_corpus_holds() {
        for e in critical_corpus(6, DEFAULT_BUDGET).unwrap().entries {
            for r in adjacency_reports(&e.graph) {
                assert_eq!(r.verdict, Verdict::Holds, "{} {}", r.lemma, e.graph6);
            }
        }
    }
}
