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

//! Cycle solvers against permutation search, and closure invariants.

use chromatic_critic::graph::{enumerate_all, generate, Family, Graph};
use chromatic_critic::hamilton::{
    bondy_chvatal_closure, brandt_veldman_check, circumference, circumference_formula, closure_equivalence_check,
    degree_sum_premise, double_cover_subgraph, expansion_premise, hamiltonian_cycle,
};
use chromatic_critic::rational::frac;
use chromatic_critic::{Verdict, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Longest cycle by trying every sequence that starts at its smallest vertex.
fn oracle_circumference(g: &Graph) -> usize {
    fn extend(g: &Graph, path: &mut Vec<usize>, best: &mut usize) {
        let (s, last) = (path[0], *path.last().unwrap());
        if path.len() >= 3 && g.has_edge(last, s) {
            *best = (*best).max(path.len());
        }
        let next: Vec<usize> = (s + 1..g.n()).filter(|&w| g.has_edge(last, w) && !path.contains(&w)).collect();
        for w in next {
            path.push(w);
            extend(g, path, best);
            path.pop();
        }
    }
    let mut best = 0;
    for s in 0..g.n() {
        extend(g, &mut vec![s], &mut best);
    }
    best
}

#[test]
fn circumference_matches_permutation_search_up_to_seven_vertices() {
    for n in 1..=7 {
        for g in enumerate_all(n).unwrap() {
            let c = circumference(&g, u64::MAX);
            let expected = oracle_circumference(&g);
            assert_eq!(c.length, Some(expected), "{:?}", g.edges());
            if let Some(cert) = c.certificate {
                assert!(cert.validate(&g));
            }
            if n >= 3 {
                assert_eq!(hamiltonian_cycle(&g, u64::MAX).is_hamiltonian(), Some(expected == n));
            }
        }
    }
}

#[test]
fn closure_preserves_circumference_and_hamiltonicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..300 {
        let n = rng.gen_range(3..=12);
        let p = [frac(3, 10), frac(1, 2), frac(7, 10)][rng.gen_range(0..3)];
        let g = generate(&Family::Random { n, p, seed: rng.gen() }).unwrap();
        let h = bondy_chvatal_closure(&g).closure;
        assert_eq!(circumference(&g, u64::MAX).length, circumference(&h, u64::MAX).length);
        assert_eq!(hamiltonian_cycle(&g, u64::MAX).is_hamiltonian(), hamiltonian_cycle(&h, u64::MAX).is_hamiltonian());
        assert_eq!(closure_equivalence_check(&g, u64::MAX).verdict, Verdict::Holds);
    }
}

#[test]
fn formula_is_exact_on_connected_premise_graphs() {
    let mut connected = 0;
    for n in 1..=7 {
        for g in enumerate_all(n).unwrap().into_iter().filter(degree_sum_premise) {
            let r = brandt_veldman_check(&g, u64::MAX).unwrap();
            if g.is_connected() {
                connected += 1;
                assert_eq!(r.verdict, Verdict::Holds, "{:?}", g.edges());
            } else {
                let f = circumference_formula(&g).unwrap();
                assert!(f.value <= oracle_circumference(&g));
            }
        }
    }
    assert!(connected > 100);
}

#[test]
fn expansion_three_halves_yields_a_cover() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tried = 0;
    while tried < 100 {
        let kx = rng.gen_range(1..=8);
        let ky = rng.gen_range(kx..=2 * kx + 2);
        let x: VertexSet = (0..kx).collect();
        let y: VertexSet = (kx..kx + ky).collect();
        let edges: Vec<_> =
            x.iter().flat_map(|a| y.iter().map(move |b| (a, b))).filter(|_| rng.gen_bool(0.6)).collect();
        let e = expansion_premise(x, y, &edges).unwrap().unwrap();
        if e.ratio < frac(3, 2) {
            continue;
        }
        tried += 1;
        let h = double_cover_subgraph(x, y, &edges).unwrap().expect("cover exists");
        assert!(h.validate(x, y, &edges));
    }
}
