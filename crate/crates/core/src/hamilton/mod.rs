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

//! Closure, exact cycles, degree-constrained covers and the staged theorem
//! check.

pub mod checks;
pub mod closure;
pub mod cover;
pub mod cycles;
pub mod pipeline;

pub use checks::{
    brandt_veldman_check, circumference_formula, closure_equivalence_check, critical_hamiltonicity_reports,
    degree_sum_premise, double_cover_check, FormulaValue,
};
pub use closure::{bondy_chvatal_closure, closure_in_order, AddedEdge, ClosureTrace, ScanOrder};
pub use cover::{double_cover_subgraph, expansion_premise, CoverSubgraph, Expansion};
pub use cycles::{circumference, hamiltonian_cycle, Circumference, CycleCertificate, Hamiltonicity};
pub use pipeline::{theorem_pipeline, PipelineConfig, PipelineReport, Stage};
