//! Counters produced by the law checkers and proposition scans.

use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

/// Counterexamples kept per entry.
pub const MAX_WITNESSES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LawReport {
    pub law: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub pairs_tested: u64,
    pub defined_pairs: u64,
    pub violations: u64,
    pub witnesses: Vec<String>,
    /// Informational entries record a measurement; their violations do not fail a run.
    pub informational: bool,
}

impl LawReport {
    pub fn new(law: &str, k: Option<usize>) -> Self {
        LawReport {
            law: law.into(),
            k,
            pairs_tested: 0,
            defined_pairs: 0,
            violations: 0,
            witnesses: Vec::new(),
            informational: false,
        }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    /// One tested case. `holds` is ignored when the case is undefined.
    pub fn record<W: FnOnce() -> String>(&mut self, defined: bool, holds: bool, witness: W) {
        self.pairs_tested += 1;
        if !defined {
            return;
        }
        self.defined_pairs += 1;
        if !holds {
            self.violations += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn check<W: FnOnce() -> String>(&mut self, holds: bool, witness: W) {
        self.record(true, holds, witness);
    }

    pub fn merge(&mut self, other: &LawReport) {
        self.pairs_tested += other.pairs_tested;
        self.defined_pairs += other.defined_pairs;
        self.violations += other.violations;
        for w in &other.witnesses {
            if self.witnesses.len() >= MAX_WITNESSES {
                break;
            }
            self.witnesses.push(w.clone());
        }
    }

    /// True unless a non-informational entry has violations.
    pub fn passed(&self) -> bool {
        self.informational || self.violations == 0
    }
}

/// Outcome of evaluating one implication on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropOutcome {
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl PropOutcome {
    pub fn violated(&self) -> bool {
        self.hypothesis && !self.conclusion
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PropReport {
    pub prop: String,
    pub instances: u64,
    pub hypothesis_held: u64,
    pub conclusion_held: u64,
    pub violations: u64,
    /// Instances where the hypothesis failed, so nothing was asserted.
    pub vacuous: u64,
    pub witnesses: Vec<String>,
    pub informational: bool,
}

impl PropReport {
    pub fn new(prop: &str) -> Self {
        PropReport {
            prop: prop.into(),
            instances: 0,
            hypothesis_held: 0,
            conclusion_held: 0,
            violations: 0,
            vacuous: 0,
            witnesses: Vec::new(),
            informational: false,
        }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn record<W: FnOnce() -> String>(&mut self, outcome: PropOutcome, witness: W) {
        self.instances += 1;
        if outcome.hypothesis {
            self.hypothesis_held += 1;
        } else {
            self.vacuous += 1;
        }
        if outcome.conclusion {
            self.conclusion_held += 1;
        }
        if outcome.violated() {
            self.violations += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn merge(&mut self, other: &PropReport) {
        self.instances += other.instances;
        self.hypothesis_held += other.hypothesis_held;
        self.conclusion_held += other.conclusion_held;
        self.violations += other.violations;
        self.vacuous += other.vacuous;
        for w in &other.witnesses {
            if self.witnesses.len() >= MAX_WITNESSES {
                break;
            }
            self.witnesses.push(w.clone());
        }
    }

    pub fn passed(&self) -> bool {
        self.informational || self.violations == 0
    }
}
