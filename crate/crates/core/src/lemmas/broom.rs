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

//! Simple brooms.
//!
//! A simple broom for `e1 = y0y1` and a coloring `φ` of `G − e1` is a path
//! `y0, y1, y2` followed by edges `y2yi` for `i ≥ 3`, every edge after the
//! first colored from `Γ = φ̄(y0) ∪ φ̄(y1)`. On an edge-Δ-critical graph, a
//! simple broom with `|Γ| ≥ 4` and `min(d(y1), d(y2)) < Δ` is elementary.

use crate::bitset::VertexSet;
use crate::coloring::{elementary_witness, EdgeColoring, SharedMissing};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::Verdict;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SimpleBroom {
    pub y0: usize,
    pub y1: usize,
    pub y2: usize,
    /// `y3, .., yp`, each joined to `y2`.
    pub bristles: Vec<usize>,
}

impl SimpleBroom {
    pub fn vertex_set(&self) -> VertexSet {
        let mut s = VertexSet::singleton(self.y0).with(self.y1).with(self.y2);
        for &v in &self.bristles {
            s.insert(v);
        }
        s
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidBroom(msg.into())
}

pub fn validate_broom(g: &Graph, e: (usize, usize), c: &EdgeColoring, b: &SimpleBroom) -> Result<()> {
    let all = [b.y0, b.y1, b.y2].into_iter().chain(b.bristles.iter().copied());
    if all.clone().any(|v| v >= g.n()) {
        return Err(invalid("vertex out of range"));
    }
    if b.vertex_set().len() != 3 + b.bristles.len() {
        return Err(invalid("repeated vertex"));
    }
    if (b.y0.min(b.y1), b.y0.max(b.y1)) != (e.0.min(e.1), e.0.max(e.1)) {
        return Err(invalid("y0y1 is not the uncolored edge"));
    }
    if !g.has_edge(b.y0, b.y1) || c.color(b.y0, b.y1).is_some() {
        return Err(invalid("y0y1 must be an uncolored edge of the graph"));
    }
    let gamma = c.missing(b.y0).union(c.missing(b.y1));
    for (u, v) in std::iter::once((b.y1, b.y2)).chain(b.bristles.iter().map(|&w| (b.y2, w))) {
        if !g.has_edge(u, v) {
            return Err(invalid(format!("{u}-{v} is not an edge")));
        }
        if !c.color(u, v).is_some_and(|col| gamma.contains(col)) {
            return Err(invalid(format!("edge {u}-{v} is not colored from the missing sets of y0, y1")));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BroomCheck {
    pub verdict: Verdict,
    pub elementary: bool,
    pub shared: Option<SharedMissing>,
    /// `|φ̄(y0) ∪ φ̄(y1)|`.
    pub gamma_size: usize,
}

pub fn broom_check(g: &Graph, e: (usize, usize), c: &EdgeColoring, b: &SimpleBroom) -> Result<BroomCheck> {
    validate_broom(g, e, c, b)?;
    Ok(broom_verdict(g, c, b))
}

pub(crate) fn broom_verdict(g: &Graph, c: &EdgeColoring, b: &SimpleBroom) -> BroomCheck {
    let delta = g.max_degree();
    let gamma_size = c.missing(b.y0).union(c.missing(b.y1)).len();
    let premise = gamma_size >= 4 && g.degree(b.y1).min(g.degree(b.y2)) < delta;
    let shared = elementary_witness(c, b.vertex_set());
    let elementary = shared.is_none();
    let verdict = match (premise, elementary) {
        (false, _) => Verdict::PremiseUnsatisfied,
        (true, true) => Verdict::Holds,
        (true, false) => Verdict::Violated,
    };
    BroomCheck { verdict, elementary, shared, gamma_size }
}

/// For each orientation of `e` and each admissible `y2`, the simple broom
/// with every admissible bristle. Any simple broom is contained in one of
/// these, and elementarity passes to subsets.
pub fn maximal_brooms(g: &Graph, e: (usize, usize), c: &EdgeColoring) -> Vec<SimpleBroom> {
    let mut out = Vec::new();
    for (y0, y1) in [(e.0, e.1), (e.1, e.0)] {
        let gamma = c.missing(y0).union(c.missing(y1));
        let in_gamma = |u: usize, v: usize| c.color(u, v).is_some_and(|col| gamma.contains(col));
        for y2 in g.neighbors(y1).without(y0).iter().filter(|&y2| in_gamma(y1, y2)) {
            let bristles = g.neighbors(y2).without(y0).without(y1).iter().filter(|&w| in_gamma(y2, w)).collect();
            out.push(SimpleBroom { y0, y1, y2, bristles });
        }
    }
    out
}
