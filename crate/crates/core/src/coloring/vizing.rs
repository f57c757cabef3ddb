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

//! Constructive Δ+1 edge coloring by fan rotation (Misra–Gries).

use super::kempe::kempe_switch;
use super::EdgeColoring;
use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Proper coloring of every edge of `g` with palette size Δ+1.
///
/// Edges are inserted in lexicographic order. Fans are grown by taking the
/// smallest eligible neighbor, and the free colors chosen at the center and
/// at the fan tip are the smallest available, so the output is a pure
/// function of the graph.
pub fn vizing_color(g: &Graph) -> EdgeColoring {
    let k = (g.max_degree() + 1) as u8;
    let mut c = EdgeColoring::new(g.n(), k);
    for &(u, v) in g.edges() {
        color_edge(g, &mut c, u, v);
    }
    c
}

fn maximal_fan(g: &Graph, c: &EdgeColoring, u: usize, v: usize) -> Vec<usize> {
    let mut fan = vec![v];
    let mut in_fan = VertexSet::singleton(v);
    loop {
        let last = *fan.last().unwrap();
        let next = g
            .neighbors(u)
            .iter()
            .find(|&w| !in_fan.contains(w) && c.color(u, w).is_some_and(|col| c.missing(last).contains(col)));
        match next {
            Some(w) => {
                fan.push(w);
                in_fan.insert(w);
            }
            None => return fan,
        }
    }
}

fn color_edge(g: &Graph, c: &mut EdgeColoring, u: usize, v: usize) {
    let fan = maximal_fan(g, c, u, v);
    let free_u = c.missing(u).first().expect("center has a free color");
    let free_tip = c.missing(*fan.last().unwrap()).first().expect("fan tip has a free color");
    if free_u != free_tip {
        // u misses free_u, so the chain through u is the path leaving u on free_tip
        *c = kempe_switch(c, u, free_tip, free_u);
    }

    // first fan position where free_tip is free and the prefix is still a fan
    let mut pivot = None;
    for i in 0..fan.len() {
        if i > 0 {
            let still_fan = c.color(u, fan[i]).is_some_and(|col| c.missing(fan[i - 1]).contains(col));
            if !still_fan {
                break;
            }
        }
        if c.missing(fan[i]).contains(free_tip) {
            pivot = Some(i);
            break;
        }
    }
    let w = pivot.expect("fan rotation always finds a pivot");

    let shifted: Vec<_> = (0..w).map(|j| c.color(u, fan[j + 1]).unwrap()).collect();
    for (j, col) in shifted.into_iter().enumerate() {
        c.put(u, fan[j], col);
    }
    c.put(u, fan[w], free_tip);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::check_proper;
    use crate::graph::{enumerate_all, generate, Family};
    use crate::rational::frac;
    use proptest::prelude::*;

    fn assert_vizing(g: &Graph) {
        let c = vizing_color(g);
        assert!(check_proper(g, &c).unwrap(), "{g:?}");
        assert!(c.is_total(g));
        assert_eq!(c.k() as usize, g.max_degree() + 1);
    }

    #[test]
    fn small_families() {
        for f in [
            Family::Cycle(5),
            Family::Complete(4),
            Family::Petersen,
            Family::Complete(9),
            Family::SubdividedComplete(12),
        ] {
            assert_vizing(&generate(&f).unwrap());
        }
    }

    #[test]
    fn petersen_uses_four_colors() {
        let g = generate(&Family::Petersen).unwrap();
        assert_eq!(vizing_color(&g).colors_used(), 4);
    }

    #[test]
    fn deterministic() {
        let g = generate(&Family::Random { n: 12, p: frac(1, 2), seed: 3 }).unwrap();
        assert_eq!(vizing_color(&g), vizing_color(&g));
    }

    #[test]
    fn every_graph_up_to_six_vertices() {
        for n in 1..=6 {
            for g in enumerate_all(n).unwrap() {
                assert_vizing(&g);
            }
        }
    }

    proptest! {
        #[test]
        fn random_graphs(n in 2usize..40, p in 1i64..10, seed in any::<u64>()) {
            let g = generate(&Family::Random { n, p: frac(p, 10), seed }).unwrap();
            let c = vizing_color(&g);
            prop_assert!(check_proper(&g, &c).unwrap());
            prop_assert!(c.is_total(&g));
            prop_assert!(c.colors_used() <= g.max_degree() + 1);
        }
    }
}
