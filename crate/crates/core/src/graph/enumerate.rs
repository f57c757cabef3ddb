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

//! Canonical labeling by partition refinement with individualization, and
//! exhaustive generation of isomorphism classes at small orders.

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Hard cap for [`enumerate_all`]; larger corpora should be ingested from
/// graph6 files.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Adjacency rows of a graph under its canonical labeling. Two graphs are
/// isomorphic iff their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency(self.rows.iter().map(|&r| VertexSet(r)).collect())
    }
}

type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbor counts into every cell until the ordered
/// partition is equitable. Sub-cells are ordered by their count vectors, so
/// the result depends only on the graph and the input partition.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next: Partition = Vec::with_capacity(g.n());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| g.neighbors(v).intersection(*m).len()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn leaf_rows(g: &Graph, cells: &Partition) -> Vec<u64> {
    let mut label = vec![0usize; g.n()];
    for (i, cell) in cells.iter().enumerate() {
        label[cell[0]] = i;
    }
    let mut rows = vec![0u64; g.n()];
    for &(u, v) in g.edges() {
        rows[label[u]] |= 1 << label[v];
        rows[label[v]] |= 1 << label[u];
    }
    rows
}

fn search(g: &Graph, cells: Partition, best: &mut Option<Vec<u64>>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let rows = leaf_rows(g, &cells);
        if best.as_ref().is_none_or(|b| rows < *b) {
            *best = Some(rows);
        }
        return;
    };
    // Twins inside the target cell are exchanged by an automorphism that
    // preserves the partition, so one representative per twin class suffices.
    let mut explored: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        let twin_of_explored = explored.iter().any(|&w| g.neighbors(v).without(w) == g.neighbors(w).without(v));
        if twin_of_explored {
            continue;
        }
        explored.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(vec![v]);
        child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        child.extend_from_slice(&cells[target + 1..]);
        search(g, refine(g, child), best);
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    if n == 0 {
        return CanonicalForm { n, rows: Vec::new() };
    }
    let mut best = None;
    search(g, refine(g, vec![(0..n).collect()]), &mut best);
    CanonicalForm { n, rows: best.expect("search visits at least one leaf") }
}

/// One representative per isomorphism class of simple graphs on `n`
/// vertices, ordered by edge count and then by canonical form. Each
/// representative is returned in its canonical labeling.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::UnsupportedOrder { n, max: MAX_ENUMERATION_ORDER });
    }
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_form(&Graph::empty(n.min(1))));
    for order in 2..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let base = form.to_graph();
            for mask in 0u64..1 << (order - 1) {
                let mut adj: Vec<VertexSet> = (0..order - 1)
                    .map(|v| {
                        let row = base.neighbors(v);
                        if mask >> v & 1 == 1 {
                            row.with(order - 1)
                        } else {
                            row
                        }
                    })
                    .collect();
                adj.push(VertexSet(mask));
                next.insert(canonical_form(&Graph::from_adjacency(adj)));
            }
        }
        level = next;
    }
    let mut graphs: Vec<Graph> = level.iter().map(CanonicalForm::to_graph).collect();
    graphs.sort_by_key(|g| g.edge_count());
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    /// Independent oracle: all labeled graphs, deduplicated by trying every
    /// vertex permutation against the representatives kept so far.
    fn brute_force_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let perms = permutations(n);
        let mut reps: Vec<Graph> = Vec::new();
        for mask in 0u64..1 << pairs.len() {
            let g =
                Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap();
            let iso = |h: &Graph| h.edge_count() == g.edge_count() && perms.iter().any(|p| g.relabel(p) == *h);
            if !reps.iter().any(iso) {
                reps.push(g);
            }
        }
        reps.len()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn counts_match_brute_force_oracle() {
        for n in 1..=5 {
            assert_eq!(enumerate_all(n).unwrap().len(), brute_force_count(n), "n={n}");
        }
    }

    #[test]
    fn frozen_counts() {
        // values produced by brute_force_count for n <= 5
        assert_eq!(enumerate_all(1).unwrap().len(), 1);
        assert_eq!(enumerate_all(4).unwrap().len(), 11);
        assert_eq!(enumerate_all(5).unwrap().len(), 34);
        assert_eq!(enumerate_all(6).unwrap().len(), 156);
    }

    #[test]
    fn order_cap() {
        assert!(matches!(enumerate_all(9), Err(Error::UnsupportedOrder { n: 9, max: 8 })));
        assert_eq!(enumerate_all(0).unwrap().len(), 1);
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = generate(&Family::Petersen).unwrap();
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
        let c5 = generate(&Family::Cycle(5)).unwrap();
        let p5 = generate(&Family::Path(5)).unwrap();
        assert_ne!(canonical_form(&c5), canonical_form(&p5));
    }

    #[test]
    fn no_two_isomorphic_at_order_six() {
        let all = enumerate_all(6).unwrap();
        let forms: BTreeSet<_> = all.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), all.len());
    }

    #[test]
    fn enumeration_is_deterministic() {
        assert_eq!(enumerate_all(5).unwrap(), enumerate_all(5).unwrap());
    }
}
