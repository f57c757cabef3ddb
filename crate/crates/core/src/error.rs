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

use thiserror::Error;

/// Errors raised by graph construction, codecs and the checkers.
///
/// Exhausted search budgets are not errors for most operations: they are
/// reported through status fields so that a batch run can keep going.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed graph6 record: {0}")]
    Malformed(String),
    #[error("unsupported order {n} (maximum {max})")]
    UnsupportedOrder { n: usize, max: usize },
    #[error("bad generator parameter: {0}")]
    BadParam(String),
    #[error("coloring assigns a color to the non-edge {0}-{1}")]
    UnknownEdge(usize, usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("color {color} outside the palette 1..={k}")]
    BadColor { color: u8, k: u8 },
    #[error("coloring is not feasible for the requested pivots: {0}")]
    Feasibility(String),
    #[error("invalid Kierstead path: {0}")]
    InvalidPath(String),
    #[error("invalid simple broom: {0}")]
    InvalidBroom(String),
    #[error("input is not bipartite: {0}")]
    NotBipartite(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("search budget of {0} node expansions exhausted")]
    BudgetExhausted(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
