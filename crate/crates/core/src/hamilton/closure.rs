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

//! The Bondy–Chvátal closure: repeatedly join nonadjacent vertices whose
//! degree sum is at least `n`.

use crate::graph::Graph;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AddedEdge {
    pub u: usize,
    pub v: usize,
    /// `d(u) + d(v)` in the graph at the time of addition.
    pub degree_sum: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureTrace {
    #[serde(skip)]
    pub closure: Graph,
    pub added: Vec<AddedEdge>,
}

impl ClosureTrace {
    /// Re-applies the trace to `g`, checking each recorded degree sum.
    pub fn replay(&self, g: &Graph) -> Option<Graph> {
        let mut h = g.clone();
        for a in &self.added {
            if h.has_edge(a.u, a.v) || h.degree(a.u) + h.degree(a.v) != a.degree_sum || a.degree_sum < g.n() {
                return None;
            }
            h = h.with_edge(a.u, a.v);
        }
        Some(h)
    }
}

/// Scan order for candidate pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanOrder {
    Lexicographic,
    Reverse,
}

fn next_pair(g: &Graph, order: ScanOrder) -> Option<(usize, usize)> {
    let n = g.n();
    let addable = |&(u, v): &(usize, usize)| !g.has_edge(u, v) && g.degree(u) + g.degree(v) >= n;
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    match order {
        ScanOrder::Lexicographic => pairs.into_iter().find(addable),
        ScanOrder::Reverse => pairs.collect::<Vec<_>>().into_iter().rev().find(addable),
    }
}

/// The closure, scanning pairs lexicographically and restarting after each
/// addition.
pub fn bondy_chvatal_closure(g: &Graph) -> ClosureTrace {
    closure_in_order(g, ScanOrder::Lexicographic)
}

pub fn closure_in_order(g: &Graph, order: ScanOrder) -> ClosureTrace {
    let mut h = g.clone();
    let mut added = Vec::new();
    while let Some((u, v)) = next_pair(&h, order) {
        added.push(AddedEdge { u, v, degree_sum: h.degree(u) + h.degree(v) });
        h = h.with_edge(u, v);
    }
    ClosureTrace { closure: h, added }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::rational::frac;
    use proptest::prelude::*;

    #[test]
    fn small_closures() {
        let k4 = generate(&Family::Complete(4)).unwrap();
        let t = bondy_chvatal_closure(&k4.without_edge(0, 1));
        assert_eq!(t.closure.edges(), k4.edges());
        assert_eq!(t.added, vec![AddedEdge { u: 0, v: 1, degree_sum: 4 }]);
        for f in [Family::Cycle(5), Family::Petersen] {
            let g = generate(&f).unwrap();
            let t = bondy_chvatal_closure(&g);
            assert!(t.added.is_empty());
            assert_eq!(t.closure.edges(), g.edges());
        }
    }

    proptest! {
        #[test]
        fn closure_is_a_replayable_order_free_fixed_point(n in 1usize..14, seed in any::<u64>(), p in 1i64..10) {
            let g = generate(&Family::Random { n, p: frac(p, 10), seed }).unwrap();
            let t = bondy_chvatal_closure(&g);
            prop_assert!(bondy_chvatal_closure(&t.closure).added.is_empty());
            prop_assert_eq!(t.replay(&g), Some(t.closure.clone()));
            let r = closure_in_order(&g, ScanOrder::Reverse);
            prop_assert_eq!(r.closure.edges(), t.closure.edges());
        }
    }
}
