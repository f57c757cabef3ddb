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

//! Circumference and Hamiltonicity checks reported as [`LemmaReport`]s.

use super::closure::bondy_chvatal_closure;
use super::cover::{double_cover_subgraph, expansion_premise, EXPANSION_LIMIT};
use super::cycles::{circumference, hamiltonian_cycle, Circumference, Hamiltonicity};
use crate::bitset::VertexSet;
use crate::coloring::SolveStatus;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lemmas::graph_key;
use crate::rational::{frac, int};
use crate::report::{LemmaReport, Verdict};
use serde::Serialize;
use serde_json::json;

pub const BRANDT_VELDMAN: &str = "brandt_veldman_circumference";
pub const CLOSURE_EQUIVALENCE: &str = "closure_circumference";
pub const DEGREE_SUM_HAMILTONIAN: &str = "degree_sum_hamiltonian";
pub const SMALL_CRITICAL_HAMILTONIAN: &str = "small_critical_hamiltonian";
pub const DOUBLE_COVER: &str = "double_cover";

/// Largest order for which independent sets are enumerated.
pub const FORMULA_LIMIT: usize = 20;

/// Largest order covered by the small-graph Hamiltonicity statement.
pub const SMALL_CRITICAL_ORDER: usize = 10;

/// Flag set when no independent `S` with `S ∪ N(S) ≠ V` exists and the
/// maximum is taken to be 0.
pub const EMPTY_FAMILY: &str = "EMPTY_FAMILY_CONVENTION";

/// The formula undercounts on disconnected graphs (`K3 ∪ K1` gives 2, the
/// circumference is 3); such reports are flagged.
pub const DISCONNECTED: &str = "DISCONNECTED";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    /// `n − max{|S| − |N(S)| + 1, 0}`.
    pub value: usize,
    /// `max{|S| − |N(S)| + 1}` over the admissible family, before clamping.
    pub term: Option<i64>,
    /// An admissible set attaining the maximum.
    pub best: Option<VertexSet>,
}

/// Whether every edge has degree sum at least `n` and `g` is not a star.
pub fn degree_sum_premise(g: &Graph) -> bool {
    !g.is_star() && g.edges().iter().all(|&(u, v)| g.degree(u) + g.degree(v) >= g.n())
}

/// Evaluates the circumference formula over nonempty independent sets `S`
/// with `S ∪ N(S) ≠ V`.
pub fn circumference_formula(g: &Graph) -> Result<FormulaValue> {
    let n = g.n();
    if n > FORMULA_LIMIT {
        return Err(Error::TooLarge(format!("formula enumeration needs n <= {FORMULA_LIMIT}, got {n}")));
    }
    let all = VertexSet::full(n);
    let mut best: Option<(i64, VertexSet)> = None;
    for mask in 1u64..(1u64 << n) {
        let s = VertexSet(mask);
        if !g.is_independent(s) {
            continue;
        }
        let ns = g.neighborhood(s);
        if s.union(ns) == all {
            continue;
        }
        let term = s.len() as i64 - ns.len() as i64 + 1;
        if best.is_none_or(|(b, _)| term > b) {
            best = Some((term, s));
        }
    }
    let clamp = best.map_or(0, |(t, _)| t.max(0)) as usize;
    Ok(FormulaValue { value: n - clamp, term: best.map(|(t, _)| t), best: best.map(|(_, s)| s) })
}

fn budget_flag(r: &mut LemmaReport, c: &Circumference) -> bool {
    if c.status == SolveStatus::BudgetExhausted {
        r.verdict = Verdict::Inconclusive;
        r.flag("BUDGET_EXHAUSTED");
        return true;
    }
    false
}

/// Compares the formula with the exact circumference when the degree-sum
/// premise holds.
pub fn brandt_veldman_check(g: &Graph, budget: u64) -> Result<LemmaReport> {
    let key = graph_key(g);
    if g.is_star() {
        return Ok(LemmaReport::premise_unsatisfied(BRANDT_VELDMAN, &key, "star"));
    }
    if !degree_sum_premise(g) {
        return Ok(LemmaReport::premise_unsatisfied(BRANDT_VELDMAN, &key, "edge degree sum below n"));
    }
    let f = circumference_formula(g)?;
    let mut r = LemmaReport::new(BRANDT_VELDMAN, &key);
    r.checked = 1;
    if f.best.is_none() {
        r.flag(EMPTY_FAMILY);
    }
    if !g.is_connected() {
        r.flag(DISCONNECTED);
    }
    let c = circumference(g, budget);
    if budget_flag(&mut r, &c) {
        return Ok(r);
    }
    let exact = c.length.unwrap_or(0);
    r.lhs = Some(int(f.value as i64));
    r.rhs = Some(int(exact as i64));
    r.verdict = if f.value == exact { Verdict::Holds } else { Verdict::Violated };
    r.witness = Some(json!({
        "s": f.best.map(|s| s.to_vec()),
        "neighborhood": f.best.map(|s| g.neighborhood(s).to_vec()),
        "term": f.term,
        "cycle": c.certificate.map(|c| c.vertices),
    }));
    Ok(r)
}

/// Compares circumference and Hamiltonicity of `g` and its closure.
pub fn closure_equivalence_check(g: &Graph, budget: u64) -> LemmaReport {
    let mut r = LemmaReport::new(CLOSURE_EQUIVALENCE, &graph_key(g));
    let trace = bondy_chvatal_closure(g);
    let before = circumference(g, budget);
    let after = circumference(&trace.closure, budget);
    if budget_flag(&mut r, &before) || budget_flag(&mut r, &after) {
        return r;
    }
    let (a, b) = (before.length.unwrap_or(0), after.length.unwrap_or(0));
    r.lhs = Some(int(a as i64));
    r.rhs = Some(int(b as i64));
    r.checked = 2;
    let mut ok = a == b;
    let mut ham = (None, None);
    if g.n() >= 3 {
        ham =
            (hamiltonian_cycle(g, budget).is_hamiltonian(), hamiltonian_cycle(&trace.closure, budget).is_hamiltonian());
        match ham {
            (Some(x), Some(y)) => ok &= x == y,
            _ => r.flag("HAMILTONICITY_BUDGET_EXHAUSTED"),
        }
    }
    r.verdict = if ok { Verdict::Holds } else { Verdict::Violated };
    r.witness = Some(json!({
        "added": trace.added,
        "hamiltonian": [ham.0, ham.1],
        "cycle": before.certificate.map(|c| c.vertices),
        "closure_cycle": after.certificate.map(|c| c.vertices),
    }));
    r
}

/// On a bipartite graph with `X` the smaller side (the side of the lowest
/// vertex on ties): if every `S ⊆ X` has `|N(S)| ≥ 3|S|/2`, a subgraph with
/// `d_H(x) = 2` on `X` and `d_H(y) ≤ 2` on `Y` must exist.
pub fn double_cover_check(g: &Graph) -> LemmaReport {
    let key = graph_key(g);
    let Some((a, b)) = g.bipartition() else {
        return LemmaReport::premise_unsatisfied(DOUBLE_COVER, &key, "not bipartite");
    };
    let (x, y) = if b.len() < a.len() { (b, a) } else { (a, b) };
    if x.len() > EXPANSION_LIMIT {
        return LemmaReport::premise_unsatisfied(DOUBLE_COVER, &key, "|X| above 20");
    }
    let edges = g.edges().to_vec();
    let expansion = match expansion_premise(x, y, &edges) {
        Ok(Some(e)) => e,
        Ok(None) => return LemmaReport::premise_unsatisfied(DOUBLE_COVER, &key, "X is empty"),
        Err(e) => return LemmaReport::premise_unsatisfied(DOUBLE_COVER, &key, &e.to_string()),
    };
    let mut r = LemmaReport::new(DOUBLE_COVER, &key);
    r.lhs = Some(expansion.ratio);
    r.rhs = Some(frac(3, 2));
    if expansion.ratio < frac(3, 2) {
        r.flag("expansion below 3/2");
        r.witness = Some(json!({ "x": x.to_vec(), "worst": expansion.worst.to_vec() }));
        return r;
    }
    r.checked = 1;
    match double_cover_subgraph(x, y, &edges) {
        Ok(Some(h)) => {
            r.verdict = if h.validate(x, y, &edges) { Verdict::Holds } else { Verdict::Violated };
            r.witness = Some(json!({ "x": x.to_vec(), "cover": h.edges }));
        }
        Ok(None) => {
            r.verdict = Verdict::Violated;
            r.witness = Some(json!({ "x": x.to_vec() }));
        }
        Err(e) => r.flag(&e.to_string()),
    }
    r
}

fn hamiltonian_report(lemma: &str, g: &Graph, budget: u64) -> LemmaReport {
    let mut r = LemmaReport::new(lemma, &graph_key(g));
    r.checked = 1;
    match hamiltonian_cycle(g, budget) {
        Hamiltonicity::Cycle(c) => {
            r.verdict = Verdict::Holds;
            r.witness = Some(json!(c.vertices));
        }
        Hamiltonicity::NoCycle => r.verdict = Verdict::Violated,
        Hamiltonicity::BudgetExhausted => {
            r.verdict = Verdict::Inconclusive;
            r.flag("BUDGET_EXHAUSTED");
        }
    }
    r
}

/// Hamiltonicity statements about critical graphs: one under the
/// edge degree-sum condition, one for graphs on at most
/// [`SMALL_CRITICAL_ORDER`] vertices. `critical` must already be certified.
pub fn critical_hamiltonicity_reports(g: &Graph, critical: bool, budget: u64) -> Vec<LemmaReport> {
    let key = graph_key(g);
    let gate = |lemma: &str, premise: bool, why: &str| {
        if !critical {
            LemmaReport::premise_unsatisfied(lemma, &key, "not edge-critical")
        } else if !premise {
            LemmaReport::premise_unsatisfied(lemma, &key, why)
        } else {
            hamiltonian_report(lemma, g, budget)
        }
    };
    let sums = g.edges().iter().all(|&(u, v)| g.degree(u) + g.degree(v) >= g.n());
    vec![
        gate(DEGREE_SUM_HAMILTONIAN, sums, "edge degree sum below n"),
        gate(SMALL_CRITICAL_HAMILTONIAN, g.n() <= SMALL_CRITICAL_ORDER, "more than 10 vertices"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::rational::frac;

    const B: u64 = 1_000_000;

    #[test]
    fn formula_examples() {
        let k23 = generate(&Family::CompleteBipartite(2, 3)).unwrap();
        let r = brandt_veldman_check(&k23, B).unwrap();
        assert_eq!((r.verdict, r.lhs, r.rhs), (Verdict::Holds, Some(int(4)), Some(int(4))));
        let f = circumference_formula(&k23).unwrap();
        assert_eq!((f.term, f.best.unwrap().len()), (Some(1), 2));

        let k4 = generate(&Family::Complete(4)).unwrap();
        let r = brandt_veldman_check(&k4, B).unwrap();
        assert_eq!((r.verdict, r.lhs), (Verdict::Holds, Some(int(4))));
        assert_eq!(r.flags, vec![EMPTY_FAMILY.to_string()]);

        let c5 = generate(&Family::Cycle(5)).unwrap();
        assert_eq!(brandt_veldman_check(&c5, B).unwrap().verdict, Verdict::PremiseUnsatisfied);
        let star = generate(&Family::Star(4)).unwrap();
        assert_eq!(brandt_veldman_check(&star, B).unwrap().flags, vec!["star".to_string()]);
        assert!(circumference_formula(&Graph::empty(21)).is_err());

        let k3k1 = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = brandt_veldman_check(&k3k1, B).unwrap();
        assert_eq!((r.verdict, r.lhs, r.rhs), (Verdict::Violated, Some(int(2)), Some(int(3))));
        assert_eq!(r.flags, vec![DISCONNECTED.to_string()]);
    }

    #[test]
    fn closure_examples() {
        let k4e = generate(&Family::Complete(4)).unwrap().without_edge(0, 1);
        let r = closure_equivalence_check(&k4e, B);
        assert_eq!((r.verdict, r.lhs, r.rhs), (Verdict::Holds, Some(int(4)), Some(int(4))));
        let r = closure_equivalence_check(&Graph::empty(5), B);
        assert_eq!((r.verdict, r.lhs), (Verdict::Holds, Some(int(0))));
        for seed in 0..20 {
            let g = generate(&Family::Random { n: 10, p: frac(1, 2), seed }).unwrap();
            assert_eq!(closure_equivalence_check(&g, B).verdict, Verdict::Holds);
        }
    }

    #[test]
    fn covers_on_bipartite_graphs() {
        let k23 = generate(&Family::CompleteBipartite(2, 3)).unwrap();
        let r = double_cover_check(&k23);
        assert_eq!((r.verdict, r.lhs), (Verdict::Holds, Some(frac(3, 2))));
        let r = double_cover_check(&generate(&Family::Cycle(6)).unwrap());
        assert_eq!((r.verdict, r.lhs), (Verdict::PremiseUnsatisfied, Some(int(1))));
        let r = double_cover_check(&generate(&Family::Cycle(5)).unwrap());
        assert_eq!(r.flags, vec!["not bipartite".to_string()]);
    }

    #[test]
    fn critical_graphs_are_hamiltonian() {
        let c7 = generate(&Family::Cycle(7)).unwrap();
        let rs = critical_hamiltonicity_reports(&c7, true, B);
        assert_eq!(rs[0].verdict, Verdict::PremiseUnsatisfied);
        assert_eq!(rs[1].verdict, Verdict::Holds);
        let p = generate(&Family::Petersen).unwrap();
        assert!(critical_hamiltonicity_reports(&p, false, B).iter().all(|r| r.verdict == Verdict::PremiseUnsatisfied));
    }
}
