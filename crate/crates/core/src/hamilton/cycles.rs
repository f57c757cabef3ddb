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

//! Exact Hamiltonian cycles and circumference.
//!
//! Up to [`DP_LIMIT`] vertices both questions are answered by a subset
//! dynamic program: `ends[S]` is the set of vertices `v` such that some path
//! starting at the smallest vertex of `S` visits exactly `S` and ends at
//! `v`. Every cycle is found from its smallest vertex, so a set `S` of three
//! or more vertices spans a cycle iff `ends[S]` meets the neighborhood of
//! its smallest vertex. Larger graphs use depth-first branch and bound with
//! a node budget.

use crate::bitset::VertexSet;
use crate::coloring::SolveStatus;
use crate::graph::Graph;
use serde::Serialize;

/// Largest order handled by the subset dynamic program.
pub const DP_LIMIT: usize = 18;

/// Default node budget per Hamiltonicity call.
pub const DEFAULT_HAMILTON_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleCertificate {
    pub vertices: Vec<usize>,
    pub length: usize,
}

impl CycleCertificate {
    pub fn new(vertices: Vec<usize>) -> Self {
        let length = vertices.len();
        CycleCertificate { vertices, length }
    }

    /// Distinct vertices, at least three, consecutive ones adjacent
    /// (cyclically).
    pub fn validate(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        let set: VertexSet = vs.iter().copied().filter(|&v| v < g.n()).collect();
        vs.len() >= 3
            && self.length == vs.len()
            && set.len() == vs.len()
            && (0..vs.len()).all(|i| g.has_edge(vs[i], vs[(i + 1) % vs.len()]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "certificate", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Hamiltonicity {
    Cycle(CycleCertificate),
    /// Exhaustive search found no Hamiltonian cycle.
    #[serde(rename = "NONE")]
    NoCycle,
    BudgetExhausted,
}

impl Hamiltonicity {
    pub fn is_hamiltonian(&self) -> Option<bool> {
        match self {
            Hamiltonicity::Cycle(_) => Some(true),
            Hamiltonicity::NoCycle => Some(false),
            Hamiltonicity::BudgetExhausted => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Circumference {
    /// Longest cycle length, 0 for forests; unset when the budget ran out.
    pub length: Option<usize>,
    pub certificate: Option<CycleCertificate>,
    pub status: SolveStatus,
}

fn rows(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).0).collect()
}

struct SubsetTable {
    adj: Vec<u64>,
    ends: Vec<u32>,
}

impl SubsetTable {
    fn build(g: &Graph) -> Self {
        let n = g.n();
        debug_assert!(n <= DP_LIMIT);
        let adj = rows(g);
        let full = (1u32 << n) - 1;
        let mut ends = vec![0u32; 1 << n];
        for s in 0..n {
            ends[1 << s] = 1 << s;
        }
        for mask in 1..=full {
            let e = ends[mask as usize];
            if e == 0 {
                continue;
            }
            let s = mask.trailing_zeros();
            let above = full & !((2u32 << s) - 1);
            let mut vs = e;
            while vs != 0 {
                let v = vs.trailing_zeros() as usize;
                vs &= vs - 1;
                let mut ext = adj[v] as u32 & above & !mask;
                while ext != 0 {
                    let w = ext.trailing_zeros();
                    ext &= ext - 1;
                    ends[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
        SubsetTable { adj, ends }
    }

    /// A cycle through exactly `mask`, if one exists.
    fn cycle(&self, mask: u32) -> Option<CycleCertificate> {
        if mask.count_ones() < 3 {
            return None;
        }
        let s = mask.trailing_zeros() as usize;
        let closing = self.ends[mask as usize] & self.adj[s] as u32;
        if closing == 0 {
            return None;
        }
        let mut v = closing.trailing_zeros() as usize;
        let mut m = mask;
        let mut path = vec![v];
        while m.count_ones() > 1 {
            let prev = m & !(1 << v);
            let u = (self.ends[prev as usize] & self.adj[v] as u32).trailing_zeros() as usize;
            path.push(u);
            m = prev;
            v = u;
        }
        path.reverse();
        Some(CycleCertificate::new(path))
    }
}

/// A cycle alternates sides, so a bipartite block holds at most twice its
/// smaller side.
fn cycle_upper_bound(g: &Graph) -> usize {
    let mut left = g.vertices();
    let mut bound = 0;
    while let Some(v) = left.first() {
        let comp = g.component(v);
        left = left.difference(comp);
        let h = g.induced(&comp.to_vec());
        let b = match h.bipartition() {
            Some((a, c)) => 2 * a.len().min(c.len()),
            None => comp.len(),
        };
        bound = bound.max(if b >= 3 { b } else { 0 });
    }
    bound
}

fn has_cut_vertex(g: &Graph) -> bool {
    g.n() > 2 && (0..g.n()).any(|v| !g.without_vertex(v).is_connected())
}

/// Depth-first search for a Hamiltonian cycle through vertex 0.
struct HamSearch {
    adj: Vec<u64>,
    full: u64,
    nodes: u64,
    budget: u64,
    path: Vec<usize>,
}

impl HamSearch {
    fn viable(&self, cur: usize, visited: u64) -> bool {
        let open = self.full & !visited;
        let ports = open | 1 << cur | 1;
        let mut bits = open;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if (self.adj[w] & ports).count_ones() < 2 {
                return false;
            }
        }
        // the unvisited vertices and `cur` must stay connected
        let region = open | 1 << cur;
        let mut seen = 1u64 << cur;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & region;
            }
            next &= !seen;
            seen |= next;
            frontier = next;
        }
        seen == region
    }

    fn dfs(&mut self, cur: usize, visited: u64) -> Option<bool> {
        if visited == self.full {
            return Some(self.adj[cur] & 1 != 0);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if !self.viable(cur, visited) {
            return Some(false);
        }
        let mut options: Vec<usize> = VertexSet(self.adj[cur] & !visited).iter().collect();
        // fewest onward moves first
        options.sort_by_key(|&w| ((self.adj[w] & !visited).count_ones(), w));
        for w in options {
            self.path.push(w);
            if self.dfs(w, visited | 1 << w)? {
                return Some(true);
            }
            self.path.pop();
        }
        Some(false)
    }
}

/// Decides Hamiltonicity. Graphs with fewer than three vertices have no
/// Hamiltonian cycle.
pub fn hamiltonian_cycle(g: &Graph, budget: u64) -> Hamiltonicity {
    let n = g.n();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return Hamiltonicity::NoCycle;
    }
    if n <= DP_LIMIT {
        let table = SubsetTable::build(g);
        return match table.cycle(((1u64 << n) - 1) as u32) {
            Some(c) => Hamiltonicity::Cycle(c),
            None => Hamiltonicity::NoCycle,
        };
    }
    hamiltonian_search(g, budget)
}

pub(crate) fn hamiltonian_search(g: &Graph, budget: u64) -> Hamiltonicity {
    let n = g.n();
    if n < 3 || g.min_degree() < 2 || cycle_upper_bound(g) < n || has_cut_vertex(g) {
        return Hamiltonicity::NoCycle;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s = HamSearch { adj: rows(g), full, nodes: 0, budget, path: vec![0] };
    match s.dfs(0, 1) {
        Some(true) => Hamiltonicity::Cycle(CycleCertificate::new(s.path)),
        Some(false) => Hamiltonicity::NoCycle,
        None => Hamiltonicity::BudgetExhausted,
    }
}

/// Longest cycle, exactly.
pub fn circumference(g: &Graph, budget: u64) -> Circumference {
    if g.n() <= DP_LIMIT {
        let n = g.n();
        let table = SubsetTable::build(g);
        let mut masks: Vec<u32> = (0..(1u32 << n)).filter(|m| m.count_ones() >= 3).collect();
        masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        let certificate = masks.into_iter().find_map(|m| table.cycle(m));
        return Circumference {
            length: Some(certificate.as_ref().map_or(0, |c| c.length)),
            certificate,
            status: SolveStatus::Complete,
        };
    }
    circumference_search(g, budget)
}

struct LongestSearch {
    adj: Vec<u64>,
    nodes: u64,
    budget: u64,
    path: Vec<usize>,
    best: Vec<usize>,
    bound: usize,
}

impl LongestSearch {
    fn reachable(&self, cur: usize, allowed: u64) -> u32 {
        let mut seen = 0u64;
        let mut frontier = self.adj[cur] & allowed;
        while frontier != 0 {
            seen |= frontier;
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & allowed;
            }
            frontier = next & !seen;
        }
        seen.count_ones()
    }

    /// Extends paths from `start` through vertices in `allowed`.
    fn dfs(&mut self, start: usize, cur: usize, allowed: u64) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if self.path.len() >= 3 && self.adj[cur] >> start & 1 == 1 && self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        if self.best.len() == self.bound || self.path.len() + self.reachable(cur, allowed) as usize <= self.best.len() {
            return true;
        }
        let mut options = VertexSet(self.adj[cur] & allowed);
        while let Some(w) = options.first() {
            options.remove(w);
            self.path.push(w);
            let ok = self.dfs(start, w, allowed & !(1 << w));
            self.path.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

pub(crate) fn circumference_search(g: &Graph, budget: u64) -> Circumference {
    let n = g.n();
    let bound = cycle_upper_bound(g);
    let mut s = LongestSearch { adj: rows(g), nodes: 0, budget, path: Vec::new(), best: Vec::new(), bound };
    for start in 0..n {
        if s.best.len() == bound {
            break;
        }
        // cycles whose smallest vertex is `start`
        let above = if start + 1 >= 64 { 0 } else { (u64::MAX << (start + 1)) & VertexSet::full(n).0 };
        if n - start <= s.best.len() {
            break;
        }
        s.path = vec![start];
        if !s.dfs(start, start, above) {
            return Circumference { length: None, certificate: None, status: SolveStatus::BudgetExhausted };
        }
    }
    let certificate = (s.best.len() >= 3).then(|| CycleCertificate::new(s.best.clone()));
    Circumference { length: Some(s.best.len()), certificate, status: SolveStatus::Complete }
}
