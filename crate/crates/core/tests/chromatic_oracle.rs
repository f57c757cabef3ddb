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

//! Solver outputs against naive oracles on every small graph.

use chromatic_critic::coloring::{check_proper, chromatic_index};
use chromatic_critic::critical::{is_edge_delta_critical, DEFAULT_BUDGET};
use chromatic_critic::graph::{enumerate_all, Graph};

/// Plain backtracking with no ordering, pruning or symmetry breaking.
fn colorable(g: &Graph, k: usize) -> bool {
    fn go(edges: &[(usize, usize)], i: usize, colors: &mut Vec<usize>, k: usize) -> bool {
        if i == edges.len() {
            return true;
        }
        let (u, v) = edges[i];
        for c in 1..=k {
            let clash = (0..i).any(|j| {
                colors[j] == c && {
                    let (a, b) = edges[j];
                    a == u || a == v || b == u || b == v
                }
            });
            if !clash {
                colors[i] = c;
                if go(edges, i + 1, colors, k) {
                    return true;
                }
            }
        }
        colors[i] = 0;
        false
    }
    let edges = g.edges().to_vec();
    go(&edges, 0, &mut vec![0; edges.len()], k)
}

fn oracle_index(g: &Graph) -> usize {
    (0..).find(|&k| colorable(g, k)).unwrap()
}

#[test]
fn chromatic_index_matches_naive_search_up_to_six_vertices() {
    for n in 1..=6 {
        for g in enumerate_all(n).unwrap() {
            let r = chromatic_index(&g, DEFAULT_BUDGET);
            assert_eq!(r.value, Some(oracle_index(&g)), "{:?}", g.edges());
            let w = r.witness.unwrap();
            assert_eq!(check_proper(&g, &w), Ok(true));
            assert!(w.is_total(&g));
        }
    }
}

#[test]
fn criticality_matches_definition_up_to_six_vertices() {
    for n in 2..=6 {
        for g in enumerate_all(n).unwrap().into_iter().filter(|g| g.edge_count() > 0) {
            let chi = oracle_index(&g);
            let delta = g.max_degree();
            let every_edge = g.edges().iter().all(|&(u, v)| oracle_index(&g.without_edge(u, v)) < chi);
            let expected = g.is_connected() && chi == delta + 1 && every_edge;
            let v = is_edge_delta_critical(&g, DEFAULT_BUDGET).unwrap();
            assert_eq!(v.is_delta_critical, expected, "{:?}", g.edges());
        }
    }
}
