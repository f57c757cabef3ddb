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

//! Proper edge colorings, missing-color sets and elementarity.

mod exact;
mod kempe;
mod sample;
mod vizing;

pub use exact::{chromatic_index, color_with, ChromaticIndexResult, Colorability, SolveStatus};
pub(crate) use kempe::switch_chain;
pub use kempe::{kempe_chain, kempe_switch, ChainKind, KempeChain};
pub use sample::KempeWalk;
pub use vizing::vizing_color;

use crate::bitset::{Color, ColorSet, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Marks an uncolored pair in the color matrix.
pub const UNCOLORED: Color = 0;

/// A partial edge coloring with palette `{1, .., k}`.
///
/// The coloring is a map from vertex pairs to colors and knows nothing about
/// the graph it colors; [`check_proper`] validates it against one. Values are
/// not required to be proper so that improper assignments can be built and
/// rejected, but every operation in this crate that returns a coloring
/// returns a proper one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    k: u8,
    matrix: Vec<Color>,
    seen: Vec<ColorSet>,
}

impl EdgeColoring {
    /// All pairs uncolored.
    pub fn new(n: usize, k: u8) -> Self {
        assert!(k <= 64, "palettes are limited to 64 colors");
        EdgeColoring { n, k, matrix: vec![UNCOLORED; n * n], seen: vec![ColorSet::EMPTY; n] }
    }

    pub fn from_assignments(n: usize, k: u8, colored: impl IntoIterator<Item = (usize, usize, Color)>) -> Result<Self> {
        let mut c = EdgeColoring::new(n, k);
        for (u, v, col) in colored {
            c.set(u, v, col)?;
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Palette size.
    pub fn k(&self) -> u8 {
        self.k
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        match self.matrix[u * self.n + v] {
            UNCOLORED => None,
            c => Some(c),
        }
    }

    /// Assigns `col` to the pair `uv`, replacing any previous color.
    pub fn set(&mut self, u: usize, v: usize, col: Color) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::OutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if col == UNCOLORED || col > self.k {
            return Err(Error::BadColor { color: col, k: self.k });
        }
        self.put(u, v, col);
        Ok(())
    }

    pub fn uncolor(&mut self, u: usize, v: usize) {
        self.put(u, v, UNCOLORED);
    }

    #[inline]
    pub(crate) fn put(&mut self, u: usize, v: usize, col: Color) {
        self.matrix[u * self.n + v] = col;
        self.matrix[v * self.n + u] = col;
        self.seen[u] = self.row_colors(u);
        self.seen[v] = self.row_colors(v);
    }

    fn row_colors(&self, v: usize) -> ColorSet {
        self.matrix[v * self.n..(v + 1) * self.n].iter().filter(|&&c| c != UNCOLORED).copied().collect()
    }

    /// Colors seen at `v`, φ(v).
    #[inline]
    pub fn seen(&self, v: usize) -> ColorSet {
        self.seen[v]
    }

    /// Colors missing at `v`, φ̄(v) = {1..k} \ φ(v).
    #[inline]
    pub fn missing(&self, v: usize) -> ColorSet {
        ColorSet::palette(self.k).difference(self.seen[v])
    }

    /// The neighbor joined to `v` by an edge of color `col`.
    pub fn partner(&self, v: usize, col: Color) -> Option<usize> {
        if col == UNCOLORED {
            return None;
        }
        self.matrix[v * self.n..(v + 1) * self.n].iter().position(|&c| c == col)
    }

    /// Colored pairs `(u, v, color)` with `u < v`, sorted.
    pub fn colored_edges(&self) -> Vec<(usize, usize, Color)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if let Some(c) = self.color(u, v) {
                    out.push((u, v, c));
                }
            }
        }
        out
    }

    /// Edges of `g` without a color.
    pub fn uncolored_edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edges().iter().copied().filter(|&(u, v)| self.color(u, v).is_none()).collect()
    }

    pub fn is_total(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.color(u, v).is_some())
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        self.seen.iter().fold(ColorSet::EMPTY, |a, &s| a.union(s)).len()
    }

    /// Applies a palette permutation; `perm[c - 1]` is the new color of `c`.
    pub fn permute_colors(&self, perm: &[Color]) -> EdgeColoring {
        assert_eq!(perm.len(), self.k as usize);
        let mut out = EdgeColoring::new(self.n, self.k);
        for (u, v, c) in self.colored_edges() {
            out.put(u, v, perm[c as usize - 1]);
        }
        out
    }
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "EdgeColoring(k={}, {:?})", self.k, self.colored_edges())
    }
}

/// `{"k": k, "edges": [[u, v, color], ..]}`
impl Serialize for EdgeColoring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let edges: Vec<[usize; 3]> = self.colored_edges().into_iter().map(|(u, v, c)| [u, v, c as usize]).collect();
        let mut st = s.serialize_struct("EdgeColoring", 2)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

/// True iff no two adjacent colored edges share a color.
pub fn check_proper(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    if c.n() != g.n() {
        return Err(Error::OutOfRange { vertex: c.n().max(g.n()) - 1, n: g.n().min(c.n()) });
    }
    if let Some(&(u, v, _)) = c.colored_edges().iter().find(|&&(u, v, _)| !g.has_edge(u, v)) {
        return Err(Error::UnknownEdge(u, v));
    }
    for v in 0..g.n() {
        let mut at_v = ColorSet::EMPTY;
        for w in g.neighbors(v) {
            if let Some(col) = c.color(v, w) {
                if at_v.contains(col) {
                    return Ok(false);
                }
                at_v.insert(col);
            }
        }
    }
    Ok(true)
}

pub fn missing_colors(c: &EdgeColoring, v: usize) -> ColorSet {
    c.missing(v)
}

/// Two distinct vertices of a set that miss a common color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SharedMissing {
    pub u: usize,
    pub v: usize,
    pub color: Color,
}

/// First pair (in vertex order) of `set` whose missing sets intersect.
pub fn elementary_witness(c: &EdgeColoring, set: VertexSet) -> Option<SharedMissing> {
    let members = set.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if let Some(color) = c.missing(u).intersection(c.missing(v)).first() {
                return Some(SharedMissing { u, v, color });
            }
        }
    }
    None
}

/// `set` is elementary if the missing sets of its members are pairwise disjoint.
pub fn is_elementary(c: &EdgeColoring, set: VertexSet) -> bool {
    elementary_witness(c, set).is_none()
}
