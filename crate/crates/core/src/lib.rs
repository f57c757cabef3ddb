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

//! Machinery for checking structural results about edge-chromatic critical
//! graphs on small instances.
//!
//! The crate covers simple graphs up to 64 vertices with bitset adjacency,
//! proper edge colorings with Kempe chains and an exact chromatic-index
//! solver, criticality tests, adjacency and coloring lemmas checked in exact
//! rational arithmetic, and exact Hamiltonicity tools.
//!
//! ```
//! use chromatic_critic::graph::{generate, Family};
//! use chromatic_critic::critical::is_edge_delta_critical;
//!
//! let c5 = generate(&Family::Cycle(5)).unwrap();
//! let verdict = is_edge_delta_critical(&c5, 1_000_000).unwrap();
//! assert!(verdict.is_delta_critical);
//! ```

pub mod bitset;
pub mod coloring;
pub mod critical;
pub mod error;
pub mod graph;
pub mod hamilton;
pub mod lemmas;
pub mod rational;
pub mod report;

pub use bitset::{Color, ColorSet, VertexSet};
pub use coloring::EdgeColoring;
pub use error::{Error, Result};
pub use graph::Graph;
pub use rational::Rational;
pub use report::{LemmaReport, Verdict};
