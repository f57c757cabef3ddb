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

//! Degree-constrained bipartite covers via maximum flow.
//!
//! A subgraph `H` with `d_H(x) = 2` on `X` and `d_H(y) ≤ 2` on `Y` exists
//! iff the network `source → x` (capacity 2), `x → y` (capacity 1),
//! `y → sink` (capacity 2) carries a flow of `2|X|`.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use serde::Serialize;
use std::collections::{BTreeMap, VecDeque};

/// Largest `|X|` for exhaustive expansion checks.
pub const EXPANSION_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverSubgraph {
    /// Edges of `H` as `(x, y)` pairs.
    pub edges: Vec<(usize, usize)>,
    pub degrees: BTreeMap<usize, usize>,
}

impl CoverSubgraph {
    pub fn validate(&self, x: VertexSet, y: VertexSet, edges: &[(usize, usize)]) -> bool {
        let allowed = |a: usize, b: usize| edges.iter().any(|&(u, v)| (u, v) == (a, b) || (v, u) == (a, b));
        let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
        for &(a, b) in &self.edges {
            if !x.contains(a) || !y.contains(b) || !allowed(a, b) {
                return false;
            }
            *deg.entry(a).or_default() += 1;
            *deg.entry(b).or_default() += 1;
        }
        let mut distinct = self.edges.clone();
        distinct.sort_unstable();
        distinct.dedup();
        distinct.len() == self.edges.len()
            && deg == self.degrees
            && x.iter().all(|v| deg.get(&v) == Some(&2))
            && y.iter().all(|v| deg.get(&v).copied().unwrap_or(0) <= 2)
    }
}

/// Orients every edge as `(x, y)`, rejecting anything not between the parts.
fn orient(x: VertexSet, y: VertexSet, edges: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    if !x.intersection(y).is_empty() {
        return Err(Error::NotBipartite(format!("parts share {:?}", x.intersection(y))));
    }
    edges
        .iter()
        .map(|&(u, v)| match (x.contains(u) && y.contains(v), x.contains(v) && y.contains(u)) {
            (true, _) => Ok((u, v)),
            (_, true) => Ok((v, u)),
            _ => Err(Error::NotBipartite(format!("edge {u}-{v} is not between the parts"))),
        })
        .collect()
}

struct Arc {
    to: usize,
    cap: u32,
}

struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    /// Adds `a → b` and its residual twin; returns the forward arc id.
    fn add(&mut self, a: usize, b: usize, cap: u32) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to: b, cap });
        self.arcs.push(Arc { to: a, cap: 0 });
        self.out[a].push(id);
        self.out[b].push(id + 1);
        id
    }

    /// Edmonds–Karp: augment along shortest residual paths.
    fn max_flow(&mut self, s: usize, t: usize) -> u32 {
        let mut flow = 0;
        loop {
            let mut via = vec![usize::MAX; self.out.len()];
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            while let Some(u) = queue.pop_front() {
                for &id in &self.out[u] {
                    let Arc { to, cap } = self.arcs[id];
                    if cap > 0 && to != s && via[to] == usize::MAX {
                        via[to] = id;
                        if to == t {
                            reached = true;
                            break;
                        }
                        queue.push_back(to);
                    }
                }
                if reached {
                    break;
                }
            }
            if !reached {
                return flow;
            }
            let mut push = u32::MAX;
            let mut v = t;
            while v != s {
                let id = via[v];
                push = push.min(self.arcs[id].cap);
                v = self.arcs[id ^ 1].to;
            }
            let mut v = t;
            while v != s {
                let id = via[v];
                self.arcs[id].cap -= push;
                self.arcs[id ^ 1].cap += push;
                v = self.arcs[id ^ 1].to;
            }
            flow += push;
        }
    }
}

/// Finds `H` with `d_H(x) = 2` for `x ∈ X` and `d_H(y) ≤ 2` for `y ∈ Y`, or
/// `None` when no such subgraph exists.
pub fn double_cover_subgraph(x: VertexSet, y: VertexSet, edges: &[(usize, usize)]) -> Result<Option<CoverSubgraph>> {
    let oriented = orient(x, y, edges)?;
    let xs = x.to_vec();
    let ys = y.to_vec();
    let (s, t) = (0, 1);
    let node = |v: usize| 2 + v;
    let mut net = Network::new(2 + 64);
    for &v in &xs {
        net.add(s, node(v), 2);
    }
    for &v in &ys {
        net.add(node(v), t, 2);
    }
    let mut middle = oriented.clone();
    middle.sort_unstable();
    middle.dedup();
    let ids: Vec<usize> = middle.iter().map(|&(a, b)| net.add(node(a), node(b), 1)).collect();
    if net.max_flow(s, t) != 2 * xs.len() as u32 {
        return Ok(None);
    }
    let chosen: Vec<(usize, usize)> =
        middle.iter().zip(ids).filter(|&(_, id)| net.arcs[id].cap == 0).map(|(&e, _)| e).collect();
    let mut degrees = BTreeMap::new();
    for &(a, b) in &chosen {
        *degrees.entry(a).or_default() += 1;
        *degrees.entry(b).or_default() += 1;
    }
    Ok(Some(CoverSubgraph { edges: chosen, degrees }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expansion {
    #[serde(serialize_with = "rational::serde_str::serialize")]
    pub ratio: Rational,
    /// A nonempty `S ⊆ X` attaining the minimum.
    pub worst: VertexSet,
}

/// `min |N(S)| / |S|` over nonempty `S ⊆ X`; `None` when `X` is empty.
pub fn expansion_premise(x: VertexSet, y: VertexSet, edges: &[(usize, usize)]) -> Result<Option<Expansion>> {
    if x.len() > EXPANSION_LIMIT {
        return Err(Error::TooLarge(format!("|X| = {} exceeds {EXPANSION_LIMIT}", x.len())));
    }
    let oriented = orient(x, y, edges)?;
    let xs = x.to_vec();
    let nbr: Vec<u64> =
        xs.iter().map(|&a| oriented.iter().filter(|e| e.0 == a).fold(0u64, |acc, e| acc | 1 << e.1)).collect();
    Ok(min_ratio(&nbr).map(|(num, den, mask)| Expansion {
        ratio: Rational::new(num as i64, den as i64),
        worst: (0..xs.len()).filter(|i| mask >> i & 1 == 1).map(|i| xs[i]).collect(),
    }))
}

/// Minimum `|N(S)| / |S|` over nonempty index subsets, with the first
/// attaining mask.
pub(crate) fn min_ratio(nbr: &[u64]) -> Option<(u32, u32, u64)> {
    let k = nbr.len();
    if k == 0 {
        return None;
    }
    let mut union = vec![0u64; 1 << k];
    let mut best = (u32::MAX, 1u32, 0u64);
    for mask in 1usize..(1 << k) {
        let low = mask.trailing_zeros() as usize;
        union[mask] = union[mask & (mask - 1)] | nbr[low];
        let (num, den) = (union[mask].count_ones(), mask.count_ones());
        if (num as u64) * (best.1 as u64) < (best.0 as u64) * (den as u64) {
            best = (num, den, mask as u64);
        }
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn forced_and_impossible_covers() {
        let (x, y) = (set(&[0]), set(&[1, 2]));
        let h = double_cover_subgraph(x, y, &[(0, 1), (2, 0)]).unwrap().unwrap();
        assert_eq!(h.edges, vec![(0, 1), (0, 2)]);
        assert!(h.validate(x, y, &[(0, 1), (2, 0)]));
        assert_eq!(double_cover_subgraph(x, y, &[(0, 1)]).unwrap(), None);
        assert_eq!(expansion_premise(x, y, &[(0, 1)]).unwrap().unwrap().ratio, int(1));
        assert!(matches!(double_cover_subgraph(x, y, &[(1, 2)]), Err(Error::NotBipartite(_))));
    }

    #[test]
    fn complete_bipartite_two_three() {
        let (x, y) = (set(&[0, 1]), set(&[2, 3, 4]));
        let edges: Vec<_> = [0, 1].iter().flat_map(|&a| [2, 3, 4].map(|b| (a, b))).collect();
        let h = double_cover_subgraph(x, y, &edges).unwrap().unwrap();
        assert!(h.validate(x, y, &edges));
        let mut ydeg: Vec<usize> = [2, 3, 4].iter().map(|v| h.degrees.get(v).copied().unwrap_or(0)).collect();
        ydeg.sort_unstable();
        assert_eq!(ydeg.iter().sum::<usize>(), 4);
        let e = expansion_premise(x, y, &edges).unwrap().unwrap();
        assert_eq!((e.ratio, e.worst), (frac(3, 2), x));
    }

    #[test]
    fn two_disjoint_cherries() {
        let (x, y) = (set(&[0, 1]), set(&[2, 3, 4, 5]));
        let edges = [(0, 2), (0, 3), (1, 4), (1, 5)];
        assert_eq!(expansion_premise(x, y, &edges).unwrap().unwrap().ratio, int(2));
        assert!(expansion_premise(VertexSet::full(21), VertexSet::EMPTY, &[]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn flow_matches_brute_force(kx in 1usize..5, ky in 1usize..6, seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x: VertexSet = (0..kx).collect();
            let y: VertexSet = (kx..kx + ky).collect();
            let edges: Vec<_> = x.iter().flat_map(|a| y.iter().map(move |b| (a, b)))
                .filter(|_| rng.gen_bool(0.5)).collect();
            let found = double_cover_subgraph(x, y, &edges).unwrap();
            // brute force over edge subsets
            let m = edges.len();
            let exists = (0u32..1 << m).any(|mask| {
                let mut deg = [0usize; 16];
                for (i, &(a, b)) in edges.iter().enumerate() {
                    if mask >> i & 1 == 1 { deg[a] += 1; deg[b] += 1; }
                }
                x.iter().all(|v| deg[v] == 2) && y.iter().all(|v| deg[v] <= 2)
            });
            prop_assert_eq!(found.is_some(), exists);
            if let Some(h) = found {
                prop_assert!(h.validate(x, y, &edges));
            }
            if let Some(e) = expansion_premise(x, y, &edges).unwrap() {
                if e.ratio >= frac(3, 2) {
                    prop_assert!(exists);
                }
            }
        }
    }
}
