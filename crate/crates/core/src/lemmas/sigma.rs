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

//! Neighbor degree counts σ_q and Woodall's parameters.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{self, int, Rational};
use serde::Serialize;

/// `σ_q(x, y) = |{z ∈ N(y) \ {x} : d(z) ≥ q}|` for an edge `xy`.
pub fn sigma_q(g: &Graph, x: usize, y: usize, q: &Rational) -> Result<usize> {
    if !g.has_edge(x, y) {
        return Err(Error::NotAnEdge(x, y));
    }
    Ok(g.neighbors(y).without(x).iter().filter(|&z| int(g.degree(z) as i64) >= *q).count())
}

/// The threshold `2Δ − d(x) − d(y) + 2` at which σ_q becomes Woodall's σ.
pub fn woodall_threshold(g: &Graph, x: usize, y: usize) -> i64 {
    2 * g.max_degree() as i64 - g.degree(x) as i64 - g.degree(y) as i64 + 2
}

/// Woodall's `σ(x, y)`.
pub fn sigma(g: &Graph, x: usize, y: usize) -> Result<usize> {
    sigma_q(g, x, y, &int(woodall_threshold(g, x, y)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborSigma {
    pub y: usize,
    /// σ_q(x, y) at the profile's q.
    pub sigma_q: usize,
    /// Woodall's σ(x, y).
    pub sigma: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaProfile {
    pub x: usize,
    #[serde(serialize_with = "rational::serde_str::serialize")]
    pub q: Rational,
    pub neighbors: Vec<NeighborSigma>,
}

pub fn sigma_profile(g: &Graph, x: usize, q: &Rational) -> SigmaProfile {
    let neighbors = g
        .neighbors(x)
        .iter()
        .map(|y| NeighborSigma {
            y,
            sigma_q: sigma_q(g, x, y, q).expect("y is a neighbor"),
            sigma: sigma(g, x, y).expect("y is a neighbor"),
        })
        .collect();
    SigmaProfile { x, q: *q, neighbors }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WoodallParams {
    /// `min_y σ(x, y) − Δ + d(x) − 1`.
    pub p_min: i64,
    /// `min(p_min, ⌊d(x)/2⌋ − 1)`.
    pub p: i64,
}

/// Woodall's `p_min(x)` and `p(x)`, with the σ profile at `q = Δ`.
pub fn woodall_params(g: &Graph, x: usize) -> Result<(WoodallParams, SigmaProfile)> {
    let d = g.degree(x) as i64;
    if d == 0 {
        return Err(Error::BadParam(format!("vertex {x} is isolated")));
    }
    let profile = sigma_profile(g, x, &int(g.max_degree() as i64));
    let min_sigma = profile.neighbors.iter().map(|s| s.sigma as i64).min().expect("d(x) ≥ 1");
    let p_min = min_sigma - g.max_degree() as i64 + d - 1;
    Ok((WoodallParams { p_min, p: p_min.min(d / 2 - 1) }, profile))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::rational::frac;
    use proptest::prelude::*;

    #[test]
    fn sigma_on_small_families() {
        let p = generate(&Family::Petersen).unwrap();
        for &(x, y) in p.edges() {
            assert_eq!(sigma_q(&p, x, y, &int(3)).unwrap(), 2);
            assert_eq!(sigma_q(&p, x, y, &frac(7, 2)).unwrap(), 0);
        }
        assert_eq!(sigma_q(&p, 0, 2, &int(1)), Err(Error::NotAnEdge(0, 2)));

        let s = generate(&Family::SubdividedComplete(12)).unwrap();
        for y in s.neighbors(12).iter() {
            assert_eq!(sigma_q(&s, 12, y, &int(1)).unwrap(), 10);
        }
    }

    #[test]
    fn woodall_params_by_hand() {
        let c5 = generate(&Family::Cycle(5)).unwrap();
        let (w, prof) = woodall_params(&c5, 0).unwrap();
        assert!(prof.neighbors.iter().all(|s| s.sigma == 1));
        assert_eq!(w, WoodallParams { p_min: 0, p: 0 });

        let k4 = generate(&Family::Complete(4)).unwrap();
        assert_eq!(woodall_threshold(&k4, 0, 1), 2);
        let (w, prof) = woodall_params(&k4, 0).unwrap();
        assert!(prof.neighbors.iter().all(|s| s.sigma == 2));
        assert_eq!(w, WoodallParams { p_min: 1, p: 0 });

        // a leaf of K2 has p = ⌊1/2⌋ − 1; with more leaves p_min is smaller
        let k2 = generate(&Family::Star(2)).unwrap();
        assert_eq!(woodall_params(&k2, 1).unwrap().0, WoodallParams { p_min: -1, p: -1 });
        let star = generate(&Family::Star(4)).unwrap();
        assert_eq!(woodall_params(&star, 1).unwrap().0, WoodallParams { p_min: -3, p: -3 });
        assert!(woodall_params(&crate::graph::Graph::empty(2), 0).is_err());
    }

    proptest! {
        #[test]
        fn sigma_is_bounded_and_monotone(n in 2usize..12, seed in any::<u64>(), a in 0i64..14, b in 0i64..14) {
            let g = generate(&Family::Random { n, p: frac(1, 2), seed }).unwrap();
            let (lo, hi) = (a.min(b), a.max(b));
            for &(x, y) in g.edges() {
                for (u, v) in [(x, y), (y, x)] {
                    let s_lo = sigma_q(&g, u, v, &int(lo)).unwrap();
                    let s_hi = sigma_q(&g, u, v, &int(hi)).unwrap();
                    prop_assert!(s_hi <= s_lo);
                    prop_assert!(s_lo < g.degree(v));
                    let min_deg = g.neighbors(v).without(u).iter().map(|w| g.degree(w)).min();
                    if min_deg.is_none_or(|m| int(lo) <= int(m as i64)) {
                        prop_assert_eq!(s_lo, g.degree(v) - 1);
                    }
                }
            }
        }
    }
}
