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

//! Immutable simple graphs on at most 64 vertices.

mod enumerate;
mod generators;
mod graph6;

pub use enumerate::{canonical_form, enumerate_all, CanonicalForm, MAX_ENUMERATION_ORDER};
pub use generators::{generate, Family};
pub use graph6::{encode_graph6, parse_graph6, MAX_GRAPH6_ORDER};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::rational::Rational;
use std::collections::BTreeMap;

/// Largest supported order; adjacency rows are single machine words.
pub const MAX_ORDER: usize = 64;

/// A simple undirected graph with vertices `0..n`.
///
/// Edges are stored both as adjacency bitsets and as a sorted list of
/// normalized pairs `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from vertex pairs. Duplicate pairs, in either
    /// orientation, collapse to a single edge.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::UnsupportedOrder { n, max: MAX_ORDER });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_ORDER);
        Graph { n, adj: vec![VertexSet::EMPTY; n], edges: Vec::new() }
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, row) in adj.iter().enumerate() {
            for v in row.iter().filter(|&v| v > u) {
                edges.push((u, v));
            }
        }
        Graph { n, adj, edges }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Normalized edge list, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Maximum degree Δ; zero for the null graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Minimum degree δ; zero for the null graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Index of `(u, v)` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&e).ok()
    }

    /// Union of the neighborhoods of `set`, excluding nothing.
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].intersection(set).is_empty())
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v]))
    }

    /// Copy of the graph with `uv` removed. The vertex set is unchanged.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u].remove(v);
        adj[v].remove(u);
        Graph::from_adjacency(adj)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && u < self.n && v < self.n);
        let mut adj = self.adj.clone();
        adj[u].insert(v);
        adj[v].insert(u);
        Graph::from_adjacency(adj)
    }

    /// Subgraph induced by removing vertex `v` (remaining vertices are
    /// renumbered in order).
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        self.induced(&keep)
    }

    /// Induced subgraph on `keep`, with `keep[i]` becoming vertex `i`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; keep.len()];
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if self.adj[a].contains(b) {
                    adj[i].insert(j);
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for &(u, v) in &self.edges {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph::from_adjacency(adj)
    }

    /// Vertex set of the connected component containing `v`.
    pub fn component(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Connected in the usual sense; the null graph and K1 count as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component(0).len() == self.n
    }

    /// `true` if `self` is the star `K_{1,n-1}` (this includes K1 and K2).
    pub fn is_star(&self) -> bool {
        let n = self.n;
        if n == 0 || self.edge_count() != n - 1 {
            return false;
        }
        (0..n).any(|c| self.degree(c) == n - 1)
    }

    /// `|E| > Δ ⌊n/2⌋`: too many edges for Δ matchings, hence class II.
    pub fn is_overfull(&self) -> bool {
        self.edge_count() > self.max_degree() * (self.n / 2)
    }

    /// Two-coloring of the vertices if the graph is bipartite.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = vec![None::<bool>; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for w in self.adj[v] {
                    match side[w] {
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                    }
                }
            }
        }
        let left = (0..self.n).filter(|&v| side[v] == Some(false)).collect();
        let right = (0..self.n).filter(|&v| side[v] == Some(true)).collect();
        Some((left, right))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Exact degree data plus the threshold sets `V_{≥q}` for requested `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub threshold_sets: BTreeMap<Rational, VertexSet>,
}

impl DegreeProfile {
    /// `V_{≥q}` for a threshold that was requested when building the profile.
    pub fn at_least(&self, q: &Rational) -> Option<VertexSet> {
        self.threshold_sets.get(q).copied()
    }
}

/// Vertices whose degree is at least `q`.
pub fn vertices_at_least(g: &Graph, q: &Rational) -> VertexSet {
    (0..g.n()).filter(|&v| Rational::from_integer(g.degree(v) as i64) >= *q).collect()
}

pub fn degree_stats(g: &Graph, thresholds: &[Rational]) -> DegreeProfile {
    DegreeProfile {
        degrees: g.degrees(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        threshold_sets: thresholds.iter().map(|q| (*q, vertices_at_least(g, q))).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn builds_triangle() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn empty_graph_on_two_vertices() {
        let g = Graph::new(2, []).unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn duplicate_pairs_collapse() {
        let g = Graph::new(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn rejects_bad_vertices_and_loops() {
        assert_eq!(Graph::new(3, [(0, 3)]), Err(Error::OutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(Graph::new(65, []), Err(Error::UnsupportedOrder { .. })));
    }

    #[test]
    fn petersen_thresholds() {
        let g = generate(&Family::Petersen).unwrap();
        let p = degree_stats(&g, &[int(3), int(4)]);
        assert_eq!((p.max_degree, p.min_degree), (3, 3));
        assert_eq!(p.at_least(&int(3)).unwrap().len(), 10);
        assert!(p.at_least(&int(4)).unwrap().is_empty());
    }

    #[test]
    fn subdivided_complete_half_threshold() {
        let g = generate(&Family::SubdividedComplete(12)).unwrap();
        let p = degree_stats(&g, &[frac(11, 2)]);
        assert_eq!(p.at_least(&frac(11, 2)).unwrap().len(), 12);
    }

    #[test]
    fn stars_and_overfull() {
        assert!(generate(&Family::Star(5)).unwrap().is_star());
        assert!(!generate(&Family::Cycle(4)).unwrap().is_star());
        assert!(generate(&Family::Cycle(5)).unwrap().is_overfull());
        assert!(generate(&Family::SubdividedComplete(4)).unwrap().is_overfull());
        assert!(!generate(&Family::Petersen).unwrap().is_overfull());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..14).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..40)
                .prop_map(move |pairs| Graph::new(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap())
        })
    }

    proptest! {
        #[test]
        fn handshake(g in arb_graph()) {
            let total: usize = g.degrees().iter().sum();
            prop_assert_eq!(total, 2 * g.edge_count());
            for &(u, v) in g.edges() {
                prop_assert!(u < v && g.has_edge(v, u));
            }
        }

        #[test]
        fn thresholds_are_monotone(g in arb_graph(), a in 0i64..30, b in 0i64..30) {
            let (lo, hi) = (frac(a.min(b), 2), frac(a.max(b), 2));
            prop_assert!(vertices_at_least(&g, &hi).is_subset(vertices_at_least(&g, &lo)));
        }
    }
}
