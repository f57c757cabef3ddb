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

//! (α, β)-chains and chain switches.

use super::EdgeColoring;
use crate::bitset::Color;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ChainKind {
    Path,
    EvenCycle,
}

/// The component of `E_α ∪ E_β` through a vertex.
///
/// For a path, `vertices` runs from one endpoint to the other; for a cycle
/// it lists the cycle once, starting at the anchor vertex. `edges[i]` joins
/// `vertices[i]` and its successor. A vertex that sees neither color gives
/// an empty path whose only vertex is the anchor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KempeChain {
    pub kind: ChainKind,
    pub alpha: Color,
    pub beta: Color,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl KempeChain {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Endpoints of a nonempty path.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        match self.kind {
            ChainKind::Path if !self.is_empty() => Some((self.vertices[0], *self.vertices.last().unwrap())),
            _ => None,
        }
    }
}

/// Follows the alternating walk from `start`, leaving on `first`. Returns
/// the visited vertices after `start` and whether the walk closed up.
fn walk(c: &EdgeColoring, start: usize, first: Color, alpha: Color, beta: Color) -> (Vec<usize>, bool) {
    let mut out = Vec::new();
    let (mut cur, mut col) = (start, first);
    while let Some(next) = c.partner(cur, col) {
        if next == start {
            return (out, true);
        }
        // an improper coloring could otherwise loop forever
        if out.contains(&next) {
            break;
        }
        out.push(next);
        cur = next;
        col = if col == alpha { beta } else { alpha };
    }
    (out, false)
}

pub fn kempe_chain(c: &EdgeColoring, v: usize, alpha: Color, beta: Color) -> KempeChain {
    assert!(alpha != beta, "a Kempe chain needs two distinct colors");
    assert!(alpha >= 1 && beta >= 1 && alpha <= c.k() && beta <= c.k(), "colors outside the palette");
    let sees_a = c.seen(v).contains(alpha);
    let sees_b = c.seen(v).contains(beta);

    let (kind, vertices) = match (sees_a, sees_b) {
        (false, false) => (ChainKind::Path, vec![v]),
        (true, false) | (false, true) => {
            let first = if sees_a { alpha } else { beta };
            let (rest, _) = walk(c, v, first, alpha, beta);
            (ChainKind::Path, std::iter::once(v).chain(rest).collect())
        }
        (true, true) => {
            let (forward, closed) = walk(c, v, alpha, alpha, beta);
            if closed {
                (ChainKind::EvenCycle, std::iter::once(v).chain(forward).collect())
            } else {
                let (backward, _) = walk(c, v, beta, alpha, beta);
                let mut vs: Vec<usize> = backward.into_iter().rev().collect();
                vs.push(v);
                vs.extend(forward);
                (ChainKind::Path, vs)
            }
        }
    };

    let mut edges: Vec<(usize, usize)> = vertices.windows(2).map(|w| (w[0], w[1])).collect();
    if kind == ChainKind::EvenCycle {
        edges.push((*vertices.last().unwrap(), vertices[0]));
    }
    KempeChain { kind, alpha, beta, vertices, edges }
}

/// φ / P_v(α, β, φ): swaps α and β on the chain through `v`.
pub fn kempe_switch(c: &EdgeColoring, v: usize, alpha: Color, beta: Color) -> EdgeColoring {
    let chain = kempe_chain(c, v, alpha, beta);
    switch_chain(c, &chain)
}

pub(crate) fn switch_chain(c: &EdgeColoring, chain: &KempeChain) -> EdgeColoring {
    let mut out = c.clone();
    for &(a, b) in &chain.edges {
        let col = c.color(a, b).expect("chain edges are colored");
        out.put(a, b, if col == chain.alpha { chain.beta } else { chain.alpha });
    }
    out
}
