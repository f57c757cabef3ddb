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

//! Random walks over the Δ-colorings of a graph by Kempe switches.

use super::{kempe_chain, switch_chain, EdgeColoring};
use crate::bitset::Color;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A seeded walk that moves between colorings with the same palette and the
/// same uncolored edges.
///
/// Each step picks a vertex and two colors uniformly and switches the chain
/// through that vertex. Switches preserve properness and the set of colored
/// edges, so every visited coloring is a valid sample of the same family.
pub struct KempeWalk {
    current: EdgeColoring,
    vertices: Vec<usize>,
    rng: ChaCha8Rng,
}

impl KempeWalk {
    pub fn new(start: EdgeColoring, seed: u64) -> Self {
        let vertices = (0..start.n()).filter(|&v| !start.seen(v).is_empty()).collect();
        KempeWalk { current: start, vertices, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn current(&self) -> &EdgeColoring {
        &self.current
    }

    /// A random switch that has not been applied yet.
    pub fn propose(&mut self) -> Option<EdgeColoring> {
        let k = self.current.k();
        if k < 2 || self.vertices.is_empty() {
            return None;
        }
        let v = *self.vertices.choose(&mut self.rng).expect("nonempty");
        let alpha: Color = self.rng.gen_range(1..=k);
        let mut beta: Color = self.rng.gen_range(1..k);
        if beta >= alpha {
            beta += 1;
        }
        let chain = kempe_chain(&self.current, v, alpha, beta);
        Some(switch_chain(&self.current, &chain))
    }

    /// Replaces the current coloring; the caller vouches that it was
    /// produced by [`KempeWalk::propose`] or has the same colored edges.
    pub fn accept(&mut self, next: EdgeColoring) {
        self.current = next;
    }

    /// Applies one random switch.
    pub fn step(&mut self) -> &EdgeColoring {
        if let Some(next) = self.propose() {
            self.current = next;
        }
        &self.current
    }

    /// Relabels the palette by a random permutation.
    pub fn shuffle_palette(&mut self) {
        let mut perm: Vec<Color> = (1..=self.current.k()).collect();
        perm.shuffle(&mut self.rng);
        self.current = self.current.permute_colors(&perm);
    }

    /// Uniform random number in `[0, 1)` from the walk's own generator.
    pub fn coin(&mut self) -> f64 {
        self.rng.gen()
    }

    /// `count` colorings, taking one every `thin` steps. The starting
    /// coloring is the first sample.
    pub fn sample(&mut self, count: usize, thin: usize) -> Vec<EdgeColoring> {
        let mut out = Vec::with_capacity(count);
        if count == 0 {
            return out;
        }
        out.push(self.current.clone());
        while out.len() < count {
            for _ in 0..thin.max(1) {
                self.step();
            }
            out.push(self.current.clone());
        }
        out
    }
}
