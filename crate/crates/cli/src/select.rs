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

use crate::CliError;
use chromatic_critic::hamilton::checks::{
    BRANDT_VELDMAN, CLOSURE_EQUIVALENCE, DEGREE_SUM_HAMILTONIAN, DOUBLE_COVER, SMALL_CRITICAL_HAMILTONIAN,
};
use chromatic_critic::lemmas::adjacency::{ADJACENCY, WOODALL_COUNT, WOODALL_P, WOODALL_PRESUPPOSITION};
use chromatic_critic::lemmas::bounds::{SIGMA_BOUND_PAIR, SIGMA_BOUND_SINGLE};
use chromatic_critic::lemmas::statements::{FEASIBLE_ELEMENTARY, STATEMENT_ONE, STATEMENT_TWO};
use chromatic_critic::lemmas::{KIERSTEAD_FOUR, KIERSTEAD_LOW_INTERIOR, SIMPLE_BROOM, UNCOLORED_EDGE_DISJOINT};

/// A selectable unit of `verify`. Each group owns a fixed set of report
/// names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LemmaGroup {
    Adjacency,
    WoodallCount,
    WoodallP,
    SigmaSingle,
    SigmaPair,
    Kierstead,
    KiersteadFour,
    Broom,
    Circumference,
    DegreeSum,
    Closure,
    Cover,
    SmallCritical,
}

impl LemmaGroup {
    pub const ALL: [LemmaGroup; 13] = [
        LemmaGroup::Adjacency,
        LemmaGroup::WoodallCount,
        LemmaGroup::WoodallP,
        LemmaGroup::SigmaSingle,
        LemmaGroup::SigmaPair,
        LemmaGroup::Kierstead,
        LemmaGroup::KiersteadFour,
        LemmaGroup::Broom,
        LemmaGroup::Circumference,
        LemmaGroup::DegreeSum,
        LemmaGroup::Closure,
        LemmaGroup::Cover,
        LemmaGroup::SmallCritical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaGroup::Adjacency => "adjacency",
            LemmaGroup::WoodallCount => "woodall-count",
            LemmaGroup::WoodallP => "woodall-p",
            LemmaGroup::SigmaSingle => "sigma-single",
            LemmaGroup::SigmaPair => "sigma-pair",
            LemmaGroup::Kierstead => "kierstead",
            LemmaGroup::KiersteadFour => "kierstead-four",
            LemmaGroup::Broom => "broom",
            LemmaGroup::Circumference => "circumference",
            LemmaGroup::DegreeSum => "degree-sum",
            LemmaGroup::Closure => "closure",
            LemmaGroup::Cover => "cover",
            LemmaGroup::SmallCritical => "small-critical",
        }
    }

    /// Numeric selector accepted by `--lemmas`.
    pub fn number(self) -> u8 {
        match self {
            LemmaGroup::Adjacency => 1,
            LemmaGroup::WoodallCount => 2,
            LemmaGroup::WoodallP => 3,
            LemmaGroup::SigmaSingle => 4,
            LemmaGroup::SigmaPair => 5,
            LemmaGroup::Kierstead => 6,
            LemmaGroup::KiersteadFour => 7,
            LemmaGroup::Broom => 8,
            LemmaGroup::Circumference => 9,
            LemmaGroup::DegreeSum => 12,
            LemmaGroup::Closure => 13,
            LemmaGroup::Cover => 14,
            LemmaGroup::SmallCritical => 15,
        }
    }

    /// Report names this group produces.
    pub fn reports(self) -> &'static [&'static str] {
        match self {
            LemmaGroup::Adjacency => &[ADJACENCY],
            LemmaGroup::WoodallCount => &[WOODALL_COUNT, WOODALL_PRESUPPOSITION],
            LemmaGroup::WoodallP => &[WOODALL_P],
            LemmaGroup::SigmaSingle => &[SIGMA_BOUND_SINGLE, STATEMENT_ONE, STATEMENT_TWO, FEASIBLE_ELEMENTARY],
            LemmaGroup::SigmaPair => &[SIGMA_BOUND_PAIR, STATEMENT_ONE, STATEMENT_TWO, FEASIBLE_ELEMENTARY],
            LemmaGroup::Kierstead => &[UNCOLORED_EDGE_DISJOINT, KIERSTEAD_LOW_INTERIOR],
            LemmaGroup::KiersteadFour => &[KIERSTEAD_FOUR],
            LemmaGroup::Broom => &[SIMPLE_BROOM],
            LemmaGroup::Circumference => &[BRANDT_VELDMAN],
            LemmaGroup::DegreeSum => &[DEGREE_SUM_HAMILTONIAN],
            LemmaGroup::Closure => &[CLOSURE_EQUIVALENCE],
            LemmaGroup::Cover => &[DOUBLE_COVER],
            LemmaGroup::SmallCritical => &[SMALL_CRITICAL_HAMILTONIAN],
        }
    }

    /// Whether the group's statements assume an edge-critical graph.
    pub fn needs_criticality(self) -> bool {
        !matches!(self, LemmaGroup::Circumference | LemmaGroup::Closure | LemmaGroup::Cover)
    }

    pub fn parse(s: &str) -> Option<LemmaGroup> {
        let s = s.trim().to_ascii_lowercase().replace('_', "-");
        LemmaGroup::ALL.into_iter().find(|g| g.name() == s || s.parse::<u8>().ok() == Some(g.number()))
    }
}

/// Parses, deduplicates and orders a `--lemmas` list.
pub(crate) fn parse_lemmas(list: &[String]) -> Result<Vec<LemmaGroup>, CliError> {
    let mut groups = list
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| LemmaGroup::parse(s).ok_or_else(|| CliError::Usage(format!("unknown lemma group {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    groups.sort();
    groups.dedup();
    if groups.is_empty() {
        return Err(CliError::Usage("--lemmas selects nothing".into()));
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_numbers_round_trip() {
        for g in LemmaGroup::ALL {
            assert_eq!(LemmaGroup::parse(g.name()), Some(g));
            assert_eq!(LemmaGroup::parse(&g.number().to_string()), Some(g));
        }
        assert_eq!(LemmaGroup::parse("10"), None);
        assert_eq!(LemmaGroup::parse("Woodall_P"), Some(LemmaGroup::WoodallP));
    }

    #[test]
    fn lists_are_sorted_and_deduplicated() {
        let list: Vec<String> = ["3", "adjacency", "1"].iter().map(|s| s.to_string()).collect();
        assert_eq!(parse_lemmas(&list).unwrap(), vec![LemmaGroup::Adjacency, LemmaGroup::WoodallP]);
    }
}
