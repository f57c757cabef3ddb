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

//! Verdicts and per-graph reports shared by every check.

use crate::rational::{self, Rational};
use serde::Serialize;
use std::collections::BTreeMap;

/// Outcome of checking one statement on one instance.
///
/// Ordered by severity, so the verdict for a batch is the maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// The statement makes no claim about the instance.
    PremiseUnsatisfied,
    Holds,
    /// A bounded search ran out before deciding.
    Inconclusive,
    Violated,
}

impl Verdict {
    pub fn combine(self, other: Verdict) -> Verdict {
        self.max(other)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::PremiseUnsatisfied => "PREMISE_UNSATISFIED",
            Verdict::Holds => "HOLDS",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::Violated => "VIOLATED",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The result of one check on one graph.
///
/// `lhs` and `rhs` hold the tightest compared pair: the violating instance
/// when the verdict is [`Verdict::Violated`], otherwise the instance with the
/// least slack.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub graph6: String,
    pub params: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub witness: Option<serde_json::Value>,
    #[serde(serialize_with = "rational::serde_str::option::serialize")]
    pub lhs: Option<Rational>,
    #[serde(serialize_with = "rational::serde_str::option::serialize")]
    pub rhs: Option<Rational>,
    /// Instances examined (edges, vertices, colorings, ...).
    pub checked: u64,
    pub flags: Vec<String>,
}

impl LemmaReport {
    pub fn new(lemma: &str, graph6: &str) -> Self {
        LemmaReport {
            lemma: lemma.to_string(),
            graph6: graph6.to_string(),
            params: BTreeMap::new(),
            verdict: Verdict::PremiseUnsatisfied,
            witness: None,
            lhs: None,
            rhs: None,
            checked: 0,
            flags: Vec::new(),
        }
    }

    pub fn premise_unsatisfied(lemma: &str, graph6: &str, why: &str) -> Self {
        let mut r = LemmaReport::new(lemma, graph6);
        r.flag(why);
        r
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn flag(&mut self, flag: &str) {
        if !self.flags.iter().any(|f| f == flag) {
            self.flags.push(flag.to_string());
        }
    }

    pub fn is_violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }
}

/// Accumulates `lhs ≥ rhs` (or `lhs > rhs`) comparisons into a report.
///
/// The first violation is kept as the witness; while none is seen, the
/// comparison with the least slack is kept instead.
pub(crate) struct Tally {
    report: LemmaReport,
    slack: Option<Rational>,
}

impl Tally {
    pub fn new(report: LemmaReport) -> Self {
        Tally { report, slack: None }
    }

    pub fn record(&mut self, lhs: Rational, rhs: Rational, strict: bool, witness: impl FnOnce() -> serde_json::Value) {
        self.report.checked += 1;
        let ok = if strict { lhs > rhs } else { lhs >= rhs };
        if self.report.verdict == Verdict::Violated {
            return;
        }
        if !ok {
            self.report.verdict = Verdict::Violated;
            self.report.lhs = Some(lhs);
            self.report.rhs = Some(rhs);
            self.report.witness = Some(witness());
            return;
        }
        self.report.verdict = Verdict::Holds;
        let slack = lhs - rhs;
        if self.slack.is_none_or(|s| slack < s) {
            self.slack = Some(slack);
            self.report.lhs = Some(lhs);
            self.report.rhs = Some(rhs);
            self.report.witness = Some(witness());
        }
    }

    /// Records a boolean check without rational sides.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> serde_json::Value) {
        self.report.checked += 1;
        if self.report.verdict == Verdict::Violated {
            return;
        }
        if ok {
            self.report.verdict = Verdict::Holds;
        } else {
            self.report.verdict = Verdict::Violated;
            self.report.witness = Some(witness());
        }
    }

    pub fn finish(self) -> LemmaReport {
        self.report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use serde_json::json;

    #[test]
    fn verdict_order_is_severity() {
        assert_eq!(Verdict::Holds.combine(Verdict::PremiseUnsatisfied), Verdict::Holds);
        assert_eq!(Verdict::Holds.combine(Verdict::Inconclusive), Verdict::Inconclusive);
        assert_eq!(Verdict::Inconclusive.combine(Verdict::Violated), Verdict::Violated);
    }

    #[test]
    fn tally_keeps_tightest_then_first_violation() {
        let mut t = Tally::new(LemmaReport::new("demo", "Bw"));
        t.record(int(5), int(3), false, || json!(1));
        t.record(int(4), int(4), false, || json!(2));
        t.record(int(9), int(1), false, || json!(3));
        let r = t.finish();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.witness, Some(json!(2)));
        assert_eq!(r.checked, 3);

        let mut t = Tally::new(LemmaReport::new("demo", "Bw"));
        t.record(int(4), int(4), true, || json!("a"));
        t.record(int(0), int(4), true, || json!("b"));
        let r = t.finish();
        assert_eq!(r.verdict, Verdict::Violated);
        assert_eq!(r.witness, Some(json!("a")));
    }

    #[test]
    fn report_serializes_rationals_as_fractions() {
        let mut r = LemmaReport::new("demo", "Bw").param("q", "1");
        r.lhs = Some(int(20));
        r.rhs = Some(frac(98, 5));
        r.verdict = Verdict::Holds;
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["lhs"], "20");
        assert_eq!(v["rhs"], "98/5");
        assert_eq!(v["verdict"], "HOLDS");
    }
}
