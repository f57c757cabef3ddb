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

//! Lower bounds on σ_q sums around low-degree edges.
//!
//! `Single`: for an edge `xy` with `d(x) < Δ/2` and `0 < q ≤ Δ − 10`, some
//! `z ∈ N(x) \ {y}` satisfies
//!
//! ```text
//! σ_q(x,y) + σ_q(x,z) > 2Δ − d(x) − (6d(x) − 8)/(Δ − q) − 8(d(x) − 2)/(Δ − q)²
//! ```
//!
//! `Pair`: for an edge `x1x2` with `d(x1) + d(x2) < 3Δ/2`, `0 < q ≤ Δ − 10`
//! and `δ ≥ Δ/2`, some `z ∈ N(x1) \ {x2}` and `y ∈ N(x2) \ {x1, z}` satisfy
//!
//! ```text
//! σ_q(x1,z) + σ_q(x2,y) > 3Δ − s − (6(s − Δ) − 4)/(Δ − q) − 8(s − Δ − 2)/(Δ − q)²
//! ```
//!
//! with `s = d(x1) + d(x2)`. Both are checked by exhaustive search over the
//! witnesses, in exact rationals. The graph is assumed edge-Δ-critical.

use super::sigma::sigma_q;
use crate::graph::Graph;
use crate::rational::{frac, int, Rational};
use crate::report::{LemmaReport, Tally};
use serde::Serialize;
use serde_json::json;

pub const SIGMA_BOUND_SINGLE: &str = "sigma_bound_single";
pub const SIGMA_BOUND_PAIR: &str = "sigma_bound_pair";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mode {
    Single,
    Pair,
}

/// Right-hand side of the `Single` bound.
pub fn single_bound(delta: i64, dx: i64, q: &Rational) -> Rational {
    let gap = int(delta) - q;
    int(2 * delta - dx) - int(6 * dx - 8) / gap - int(8 * (dx - 2)) / (gap * gap)
}

/// Right-hand side of the `Pair` bound for `s = d(x1) + d(x2)`.
pub fn pair_bound(delta: i64, s: i64, q: &Rational) -> Rational {
    let gap = int(delta) - q;
    int(3 * delta - s) - int(6 * (s - delta) - 4) / gap - int(8 * (s - delta - 2)) / (gap * gap)
}

/// Whether `q` lies in the admissible range `0 < q ≤ Δ − 10`.
pub fn q_admissible(delta: usize, q: &Rational) -> bool {
    *q > int(0) && *q <= int(delta as i64 - 10)
}

/// The default thresholds: `1, 2, .., Δ − 10` together with `Δ − 18` and
/// `(1 − 13/81)Δ`, keeping the admissible ones.
pub fn default_q_grid(delta: usize) -> Vec<Rational> {
    let d = delta as i64;
    let mut grid: Vec<Rational> = (1..=d - 10).map(int).collect();
    grid.push(int(d - 18));
    grid.push(frac(68 * d, 81));
    grid.retain(|q| q_admissible(delta, q));
    grid.sort();
    grid.dedup();
    grid
}

pub fn check_sigma_bounds(g: &Graph, q: &Rational, mode: Mode) -> LemmaReport {
    let key = super::graph_key(g);
    let name = match mode {
        Mode::Single => SIGMA_BOUND_SINGLE,
        Mode::Pair => SIGMA_BOUND_PAIR,
    };
    let base = LemmaReport::new(name, &key).param("q", crate::rational::to_string(q));
    let delta = g.max_degree() as i64;
    if !q_admissible(g.max_degree(), q) {
        let mut r = base;
        r.flag("q outside (0, Δ-10]");
        return r;
    }
    let mut tally = Tally::new(base);
    match mode {
        Mode::Single => {
            for &(a, b) in g.edges() {
                for (x, y) in [(a, b), (b, a)] {
                    let dx = g.degree(x) as i64;
                    if 2 * dx >= delta {
                        continue;
                    }
                    let s_y = sigma_q(g, x, y, q).expect("edge");
                    let best = g
                        .neighbors(x)
                        .without(y)
                        .iter()
                        .map(|z| (sigma_q(g, x, z, q).expect("edge"), z))
                        .max_by_key(|&(s, z)| (s, std::cmp::Reverse(z)));
                    let rhs = single_bound(delta, dx, q);
                    let lhs = int((s_y + best.map_or(0, |b| b.0)) as i64);
                    tally.record(lhs, rhs, true, || json!({"x": x, "y": y, "z": best.map(|b| b.1)}));
                }
            }
        }
        Mode::Pair => {
            if 2 * g.min_degree() as i64 >= delta {
                for &(x1, x2) in g.edges() {
                    let s = (g.degree(x1) + g.degree(x2)) as i64;
                    if 2 * s >= 3 * delta {
                        continue;
                    }
                    let mut best: Option<(usize, usize, usize)> = None;
                    for z in g.neighbors(x1).without(x2).iter() {
                        let s_z = sigma_q(g, x1, z, q).expect("edge");
                        for y in g.neighbors(x2).without(x1).without(z).iter() {
                            let total = s_z + sigma_q(g, x2, y, q).expect("edge");
                            if best.is_none_or(|b| total > b.0) {
                                best = Some((total, z, y));
                            }
                        }
                    }
                    let rhs = pair_bound(delta, s, q);
                    let lhs = int(best.map_or(0, |b| b.0) as i64);
                    tally.record(
                        lhs,
                        rhs,
                        true,
                        || json!({"x1": x1, "x2": x2, "z": best.map(|b| b.1), "y": best.map(|b| b.2)}),
                    );
                }
            }
        }
    }
    let mut r = tally.finish();
    if r.checked == 0 {
        r.flag("no edge meets the degree premise");
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::report::Verdict;

    #[test]
    fn subdivided_complete_single_witness() {
        let g = generate(&Family::SubdividedComplete(12)).unwrap();
        assert_eq!(single_bound(11, 2, &int(1)), frac(98, 5));
        let r = check_sigma_bounds(&g, &int(1), Mode::Single);
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.lhs, Some(int(20)));
        assert_eq!(r.rhs, Some(frac(98, 5)));
        assert_eq!(r.checked, 2);
    }

    #[test]
    fn small_delta_has_no_admissible_q() {
        let g = generate(&Family::Complete(8)).unwrap();
        assert!(default_q_grid(7).is_empty());
        let r = check_sigma_bounds(&g, &int(1), Mode::Single);
        assert_eq!(r.verdict, Verdict::PremiseUnsatisfied);
    }

    #[test]
    fn regular_graphs_have_no_low_vertex() {
        let p = generate(&Family::Petersen).unwrap();
        assert_eq!(check_sigma_bounds(&p, &int(1), Mode::Single).verdict, Verdict::PremiseUnsatisfied);
        let k = generate(&Family::Complete(13)).unwrap();
        let r = check_sigma_bounds(&k, &int(1), Mode::Single);
        assert_eq!(r.verdict, Verdict::PremiseUnsatisfied);
        assert_eq!(r.checked, 0);
    }

    #[test]
    fn q_grid_contents() {
        assert_eq!(default_q_grid(11), vec![int(1)]);
        let g = default_q_grid(81);
        assert!(g.contains(&int(63)) && g.contains(&int(68)) && g.contains(&int(71)));
        assert_eq!(g.len(), 71);
        assert!(default_q_grid(20).iter().all(|q| *q > int(0)));
    }

    #[test]
    fn pair_bound_arithmetic() {
        // Δ = 20, s = 25, q = 2: 60 − 25 − 26/18 − 24/324
        assert_eq!(pair_bound(20, 25, &int(2)), int(35) - frac(26, 18) - frac(24, 324));
    }

    #[test]
    fn pair_mode_gates_on_min_degree() {
        let g = generate(&Family::SubdividedComplete(12)).unwrap();
        let r = check_sigma_bounds(&g, &int(1), Mode::Pair);
        assert_eq!(r.verdict, Verdict::PremiseUnsatisfied);
    }
}
