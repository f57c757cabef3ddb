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

//! Feasible colorings around a low-degree edge.
//!
//! `Single` pivots `(x, y, z)`: `φ` colors `G − xy` with `Δ` colors, `z` is
//! a neighbor of `x` other than `y`, and `φ(xz) ∈ φ̄(y)`. Then
//!
//! ```text
//! Z   = {v ∈ N(z) \ {x} : φ(vz) ∈ φ̄(x) ∪ φ̄(y)}
//! C_z = {φ(vz) : v ∈ Z, d(v) < q}
//! Y   = {v ∈ N(y) \ {x} : φ(vy) ∈ φ̄(x) ∪ φ̄(z)}
//! C_y = {φ(vy) : v ∈ Y, d(v) < q}
//! T_0 = {k ∈ φ(x) ∩ φ(y) ∩ φ(z) : d(y_k) < q and d(z_k) < q}
//! ```
//!
//! where `z_k` and `y_k` are the `k`-colored neighbors of `z` and `y`.
//!
//! `Pair` pivots `(x1, x2, z, y)`: `φ` colors `G − x1x2`, `z ∈ N(x1) \ {x2}`,
//! `y ∈ N(x2) \ {x1, z}`, `φ(x1z) ∈ φ̄(x2)` and `φ(x2y) ∈ φ̄(x1)`. The sets
//! are as above with `φ̄(x1) ∪ φ̄(x2)` in place of `φ̄(x)` and `x1`, `x2`
//! excluded from `Z` and `Y` respectively; `T_0` also requires `k ∈ φ(x1) ∩
//! φ(x2)`.

use crate::bitset::{Color, ColorSet, VertexSet};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{self, int, Rational};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "mode", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Pivots {
    Single { x: usize, y: usize, z: usize },
    Pair { x1: usize, x2: usize, z: usize, y: usize },
}

impl Pivots {
    /// The uncolored edge.
    pub fn edge(self) -> (usize, usize) {
        match self {
            Pivots::Single { x, y, .. } => (x, y),
            Pivots::Pair { x1, x2, .. } => (x1, x2),
        }
    }

    /// The vertices whose missing sets the statements treat as disjoint.
    pub fn core(self) -> VertexSet {
        match self {
            Pivots::Single { x, y, z } => VertexSet::singleton(x).with(y).with(z),
            Pivots::Pair { x1, x2, z, y } => VertexSet::singleton(x1).with(x2).with(z).with(y),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibleContext {
    pub pivots: Pivots,
    #[serde(serialize_with = "rational::serde_str::serialize")]
    pub q: Rational,
    #[serde(skip)]
    pub coloring: EdgeColoring,
    pub z_set: VertexSet,
    pub y_set: VertexSet,
    pub c_z: ColorSet,
    pub c_y: ColorSet,
    pub t0: ColorSet,
    /// `C_z ∪ C_y`.
    pub r: ColorSet,
    /// `R` together with the two pivot edge colors, in `Pair` mode.
    pub r_prime: Option<ColorSet>,
    /// `(k, z_k)` for every color `k` seen at `z`.
    pub z_partners: Vec<(Color, usize)>,
    /// `(k, y_k)` for every color `k` seen at `y`.
    pub y_partners: Vec<(Color, usize)>,
}

fn require_edge(g: &Graph, u: usize, v: usize) -> Result<()> {
    if u < g.n() && v < g.n() && g.has_edge(u, v) {
        Ok(())
    } else {
        Err(Error::NotAnEdge(u, v))
    }
}

fn feasibility(msg: String) -> Error {
    Error::Feasibility(msg)
}

fn partners(c: &EdgeColoring, v: usize) -> Vec<(Color, usize)> {
    c.seen(v).iter().map(|k| (k, c.partner(v, k).expect("seen color has a partner"))).collect()
}

/// Colors `φ(vw)` over neighbors `v` of `w` (excluding `skip`) whose color
/// lies in `allowed`; returns the vertices and the colors of those with
/// degree below `q`.
fn attached(
    g: &Graph,
    c: &EdgeColoring,
    w: usize,
    skip: usize,
    allowed: ColorSet,
    q: &Rational,
) -> (VertexSet, ColorSet) {
    let mut verts = VertexSet::EMPTY;
    let mut low = ColorSet::EMPTY;
    for v in g.neighbors(w).without(skip).iter() {
        if let Some(col) = c.color(v, w).filter(|&col| allowed.contains(col)) {
            verts.insert(v);
            if int(g.degree(v) as i64) < *q {
                low.insert(col);
            }
        }
    }
    (verts, low)
}

fn low_common(g: &Graph, c: &EdgeColoring, common: ColorSet, y: usize, z: usize, q: &Rational) -> ColorSet {
    common
        .iter()
        .filter(|&k| {
            let yk = c.partner(y, k).expect("k seen at y");
            let zk = c.partner(z, k).expect("k seen at z");
            int(g.degree(yk) as i64) < *q && int(g.degree(zk) as i64) < *q
        })
        .collect()
}

/// Builds the context, checking that `c` is feasible for `pivots`.
pub fn feasible_context(g: &Graph, pivots: Pivots, c: &EdgeColoring, q: &Rational) -> Result<FeasibleContext> {
    let (a, b) = pivots.edge();
    require_edge(g, a, b)?;
    if c.color(a, b).is_some() {
        return Err(feasibility(format!("edge {a}-{b} must be uncolored")));
    }
    let ctx = match pivots {
        Pivots::Single { x, y, z } => {
            require_edge(g, x, z)?;
            if z == y {
                return Err(feasibility("z must differ from y".into()));
            }
            let fxz = c.color(x, z).ok_or_else(|| feasibility(format!("edge {x}-{z} is uncolored")))?;
            if !c.missing(y).contains(fxz) {
                return Err(feasibility(format!("color {fxz} of {x}-{z} is not missing at {y}")));
            }
            let (z_set, c_z) = attached(g, c, z, x, c.missing(x).union(c.missing(y)), q);
            let (y_set, c_y) = attached(g, c, y, x, c.missing(x).union(c.missing(z)), q);
            let common = c.seen(x).intersection(c.seen(y)).intersection(c.seen(z));
            FeasibleContext {
                pivots,
                q: *q,
                coloring: c.clone(),
                z_set,
                y_set,
                c_z,
                c_y,
                t0: low_common(g, c, common, y, z, q),
                r: c_z.union(c_y),
                r_prime: None,
                z_partners: partners(c, z),
                y_partners: partners(c, y),
            }
        }
        Pivots::Pair { x1, x2, z, y } => {
            require_edge(g, x1, z)?;
            require_edge(g, x2, y)?;
            if z == x2 || y == x1 || y == z {
                return Err(feasibility("pivots must be distinct from each other and the edge".into()));
            }
            let f1 = c.color(x1, z).ok_or_else(|| feasibility(format!("edge {x1}-{z} is uncolored")))?;
            let f2 = c.color(x2, y).ok_or_else(|| feasibility(format!("edge {x2}-{y} is uncolored")))?;
            if !c.missing(x2).contains(f1) || !c.missing(x1).contains(f2) {
                return Err(feasibility("pivot edge colors are not missing at the opposite end".into()));
            }
            let base = c.missing(x1).union(c.missing(x2));
            let (z_set, c_z) = attached(g, c, z, x1, base.union(c.missing(y)), q);
            let (y_set, c_y) = attached(g, c, y, x2, base.union(c.missing(z)), q);
            let common = c.seen(x1).intersection(c.seen(x2)).intersection(c.seen(y)).intersection(c.seen(z));
            let r = c_z.union(c_y);
            FeasibleContext {
                pivots,
                q: *q,
                coloring: c.clone(),
                z_set,
                y_set,
                c_z,
                c_y,
                t0: low_common(g, c, common, y, z, q),
                r,
                r_prime: Some(r.union(ColorSet::singleton(f1)).union(ColorSet::singleton(f2))),
                z_partners: partners(c, z),
                y_partners: partners(c, y),
            }
        }
    };
    Ok(ctx)
}

/// Every pivot choice for which `c` is feasible, in increasing order.
pub fn feasible_pivots(g: &Graph, c: &EdgeColoring, edge: (usize, usize), pair: bool) -> Vec<Pivots> {
    let (x, y) = edge;
    let mut out = Vec::new();
    if !pair {
        for z in g.neighbors(x).without(y).iter() {
            if c.color(x, z).is_some_and(|col| c.missing(y).contains(col)) {
                out.push(Pivots::Single { x, y, z });
            }
        }
    } else {
        let (x1, x2) = edge;
        for z in g.neighbors(x1).without(x2).iter() {
            if !c.color(x1, z).is_some_and(|col| c.missing(x2).contains(col)) {
                continue;
            }
            for y in g.neighbors(x2).without(x1).without(z).iter() {
                if c.color(x2, y).is_some_and(|col| c.missing(x1).contains(col)) {
                    out.push(Pivots::Pair { x1, x2, z, y });
                }
            }
        }
    }
    out
}

/// The dual of a `Single` coloring: `xy` takes the color of `xz` and `xz`
/// becomes the uncolored edge. The result is feasible for `(x, z, y)`.
pub fn dual_coloring(c: &EdgeColoring, pivots: Pivots) -> Result<(EdgeColoring, Pivots)> {
    let Pivots::Single { x, y, z } = pivots else {
        return Err(Error::BadParam("dual colorings exist for single pivots only".into()));
    };
    let col = c.color(x, z).ok_or_else(|| feasibility(format!("edge {x}-{z} is uncolored")))?;
    if c.color(x, y).is_some() {
        return Err(feasibility(format!("edge {x}-{y} must be uncolored")));
    }
    let mut d = c.clone();
    d.uncolor(x, z);
    d.set(x, y, col)?;
    Ok((d, Pivots::Single { x, y: z, z: y }))
}

/// The numerator `d(x) − 2`, or `d(x1) + d(x2) − Δ − 2`, of the `C_z`, `C_y`
/// bound.
pub fn statement_one_numerator(g: &Graph, pivots: Pivots) -> i64 {
    match pivots {
        Pivots::Single { x, .. } => g.degree(x) as i64 - 2,
        Pivots::Pair { x1, x2, .. } => (g.degree(x1) + g.degree(x2)) as i64 - g.max_degree() as i64 - 2,
    }
}

/// The bound on `|C_z|` and `|C_y|`.
pub fn statement_one_bound(g: &Graph, pivots: Pivots, q: &Rational) -> Rational {
    int(statement_one_numerator(g, pivots)) / (int(g.max_degree() as i64) - q)
}

/// The bound on `|T_0|` for some feasible coloring.
pub fn statement_two_bound(g: &Graph, pivots: Pivots, q: &Rational) -> Rational {
    let gap = int(g.max_degree() as i64) - q;
    let (lin, quad) = match pivots {
        Pivots::Single { x, .. } => {
            let d = g.degree(x) as i64;
            (4 * d - 4, 8 * (d - 2))
        }
        Pivots::Pair { x1, x2, .. } => {
            let s = (g.degree(x1) + g.degree(x2)) as i64 - g.max_degree() as i64;
            (4 * s, 8 * (s - 2))
        }
    };
    int(lin) / gap + int(quad) / (gap * gap)
}

/// Outcome of the `|C_z|, |C_y|` bound on one context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StatementOne {
    pub holds: bool,
    /// The strict bound cannot hold for nonempty sets because its
    /// numerator is not positive; the check then requires both sets empty.
    pub degenerate: bool,
}

pub fn statement_one(g: &Graph, ctx: &FeasibleContext) -> StatementOne {
    let bound = statement_one_bound(g, ctx.pivots, &ctx.q);
    let ok = |s: ColorSet| s.is_empty() || int(s.len() as i64) < bound;
    StatementOne { holds: ok(ctx.c_z) && ok(ctx.c_y), degenerate: statement_one_numerator(g, ctx.pivots) <= 0 }
}

/// The score maximized by optimal colorings: larger `|C_z| + |C_y|`, then
/// smaller `|C_z ∩ C_y|`.
pub fn optimality_score(ctx: &FeasibleContext) -> (usize, std::cmp::Reverse<usize>) {
    (ctx.c_z.len() + ctx.c_y.len(), std::cmp::Reverse(ctx.c_z.intersection(ctx.c_y).len()))
}
