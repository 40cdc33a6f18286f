//! Finite inference systems with corules and their three interpretations.
//!
//! All fixed points are computed by naive Kleene iteration over
//! [`JudgmentSet`]s: upward from the empty set for the inductive
//! interpretation, downward from the full universe for the coinductive one.
//! The generated interpretation composes the two: the inductive
//! interpretation of rules plus corules bounds the rules, and the coinductive
//! interpretation of the bounded rules is the result.

use std::collections::BTreeMap;
use std::collections::HashSet;

use crate::error::Error;
use crate::set::JudgmentSet;

/// Dense index of a judgment in its system's universe.
pub type Judgment = usize;

/// A rule `premises / conclusion`. Premises are kept as a sorted set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule {
    premises: Vec<Judgment>,
    conclusion: Judgment,
}

impl Rule {
    pub fn new<I: IntoIterator<Item = Judgment>>(premises: I, conclusion: Judgment) -> Self {
        let mut premises: Vec<Judgment> = premises.into_iter().collect();
        premises.sort_unstable();
        premises.dedup();
        Rule {
            premises,
            conclusion,
        }
    }

    pub fn axiom(conclusion: Judgment) -> Self {
        Rule {
            premises: Vec::new(),
            conclusion,
        }
    }

    pub fn premises(&self) -> &[Judgment] {
        &self.premises
    }

    pub fn conclusion(&self) -> Judgment {
        self.conclusion
    }

    pub fn is_axiom(&self) -> bool {
        self.premises.is_empty()
    }

    /// True when every premise is in `s`.
    pub fn fires_on(&self, s: &JudgmentSet) -> bool {
        self.premises.iter().all(|&p| s.contains(p))
    }

    fn max_id(&self) -> Option<Judgment> {
        self.premises.last().copied().max(Some(self.conclusion))
    }
}

/// A finite universe of judgments with a list of rules and a list of corules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InferenceSystem {
    universe_size: usize,
    rules: Vec<Rule>,
    corules: Vec<Rule>,
    labels: Option<Vec<String>>,
}

/// Result of a Kleene iteration, with the number of applications of the
/// one-step operator it took to observe the fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixpoint {
    pub set: JudgmentSet,
    pub iterations: usize,
}

/// Both phases of the generated interpretation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenTrace {
    /// Inductive interpretation of rules and corules together.
    pub bound: Fixpoint,
    /// Coinductive interpretation of the rules restricted to `bound`.
    pub result: Fixpoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FailureReason {
    /// A rule fires on the checked set but its conclusion is missing.
    NotClosed,
    /// A member of the checked set is not the conclusion of any rule whose premises lie in the set.
    Unsupported,
    /// A member of the checked set has no finite derivation using rules and corules.
    Unbounded,
}

impl FailureReason {
    pub fn tag(self) -> &'static str {
        match self {
            FailureReason::NotClosed => "not-closed",
            FailureReason::Unsupported => "unsupported",
            FailureReason::Unbounded => "unbounded",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub judgment: Judgment,
    pub reason: FailureReason,
    /// Index into the system's rule list, when a specific rule is at fault.
    pub rule: Option<usize>,
}

/// Outcome of a closure, consistency or boundedness check.
///
/// Failures are ordered by ascending judgment id, then by rule declaration order.
/// Witnesses map each checked judgment to the index of the rule supporting it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub failures: Vec<Failure>,
    pub witnesses: BTreeMap<Judgment, usize>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The two obligations of the bounded coinduction principle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedCoinductionReport {
    pub boundedness: CheckReport,
    pub consistency: CheckReport,
    /// Whether the specification is contained in the generated interpretation.
    /// Computed only when both obligations hold; `Some(false)` would mean the
    /// engine is broken.
    pub within_gen: Option<bool>,
}

impl BoundedCoinductionReport {
    pub fn ok(&self) -> bool {
        self.boundedness.ok() && self.consistency.ok()
    }
}

impl InferenceSystem {
    pub fn new(universe_size: usize, rules: Vec<Rule>, corules: Vec<Rule>) -> Result<Self, Error> {
        for rule in rules.iter().chain(&corules) {
            if let Some(id) = rule.max_id().filter(|&id| id >= universe_size) {
                return Err(Error::JudgmentOutOfRange { id, universe_size });
            }
        }
        Ok(InferenceSystem {
            universe_size,
            rules,
            corules,
            labels: None,
        })
    }

    /// Attaches one unique label per judgment.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, Error> {
        if labels.len() != self.universe_size {
            return Err(Error::LabelCount {
                labels: labels.len(),
                universe_size: self.universe_size,
            });
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn corules(&self) -> &[Rule] {
        &self.corules
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, j: Judgment) -> Option<&str> {
        self.labels
            .as_ref()
            .and_then(|l| l.get(j))
            .map(String::as_str)
    }

    /// Label of `j`, or `#j` when the system is unlabelled.
    pub fn display_name(&self, j: Judgment) -> String {
        match self.label(j) {
            Some(l) => l.to_string(),
            None => format!("#{j}"),
        }
    }

    pub fn find(&self, label: &str) -> Option<Judgment> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Same rules and labels with the corule list replaced.
    pub fn with_corules(&self, corules: Vec<Rule>) -> Result<Self, Error> {
        let mut sys = InferenceSystem::new(self.universe_size, self.rules.clone(), corules)?;
        sys.labels = self.labels.clone();
        Ok(sys)
    }

    pub fn without_corules(&self) -> Self {
        InferenceSystem {
            universe_size: self.universe_size,
            rules: self.rules.clone(),
            corules: Vec::new(),
            labels: self.labels.clone(),
        }
    }

    fn active_rules(&self, use_corules: bool) -> impl Iterator<Item = &Rule> {
        let corules: &[Rule] = if use_corules { &self.corules } else { &[] };
        self.rules.iter().chain(corules)
    }

    /// One-step operator: conclusions of every rule (and corule, when flagged) firing on `s`.
    pub fn apply_step(&self, use_corules: bool, s: &JudgmentSet) -> JudgmentSet {
        debug_assert_eq!(s.universe_size(), self.universe_size);
        let mut out = JudgmentSet::empty(self.universe_size);
        for rule in self.active_rules(use_corules) {
            if rule.fires_on(s) {
                out.insert(rule.conclusion);
            }
        }
        out
    }

    fn iterate(&self, use_corules: bool, start: JudgmentSet) -> Fixpoint {
        let mut current = start;
        let mut iterations = 0;
        loop {
            iterations += 1;
            let next = self.apply_step(use_corules, &current);
            if next == current {
                return Fixpoint {
                    set: current,
                    iterations,
                };
            }
            current = next;
        }
    }

    /// Least fixed point of the one-step operator, iterated upward from the empty set.
    pub fn ind_fixpoint(&self, use_corules: bool) -> Fixpoint {
        self.iterate(use_corules, JudgmentSet::empty(self.universe_size))
    }

    pub fn ind_interpretation(&self, use_corules: bool) -> JudgmentSet {
        self.ind_fixpoint(use_corules).set
    }

    /// Greatest fixed point of the rules-only operator, iterated downward from the full universe.
    pub fn coind_fixpoint(&self) -> Fixpoint {
        self.iterate(false, JudgmentSet::full(self.universe_size))
    }

    pub fn coind_interpretation(&self) -> JudgmentSet {
        self.coind_fixpoint().set
    }

    /// Keeps only the rules concluding in `s`; corules are dropped.
    pub fn restrict(&self, s: &JudgmentSet) -> InferenceSystem {
        InferenceSystem {
            universe_size: self.universe_size,
            rules: self
                .rules
                .iter()
                .filter(|r| s.contains(r.conclusion))
                .cloned()
                .collect(),
            corules: Vec::new(),
            labels: self.labels.clone(),
        }
    }

    pub fn gen_trace(&self) -> GenTrace {
        let bound = self.ind_fixpoint(true);
        let result = self.restrict(&bound.set).coind_fixpoint();
        GenTrace { bound, result }
    }

    pub fn gen_interpretation(&self) -> JudgmentSet {
        self.gen_trace().result.set
    }

    /// Every rule firing on `s` must have its conclusion in `s`.
    pub fn is_closed(&self, s: &JudgmentSet) -> CheckReport {
        let mut failures: Vec<Failure> = self
            .rules
            .iter()
            .enumerate()
            .filter(|(_, r)| r.fires_on(s) && !s.contains(r.conclusion))
            .map(|(i, r)| Failure {
                judgment: r.conclusion,
                reason: FailureReason::NotClosed,
                rule: Some(i),
            })
            .collect();
        // stable: rule order is kept within a judgment
        failures.sort_by_key(|f| f.judgment);
        CheckReport {
            failures,
            witnesses: BTreeMap::new(),
        }
    }

    /// First rule, in declaration order, concluding `j` with all premises in `s`.
    pub fn first_witness(&self, j: Judgment, s: &JudgmentSet) -> Option<usize> {
        self.rules
            .iter()
            .position(|r| r.conclusion == j && r.fires_on(s))
    }

    /// Every member of `s` must be the conclusion of a rule whose premises lie in `s`.
    pub fn is_consistent(&self, s: &JudgmentSet) -> CheckReport {
        let mut report = CheckReport::default();
        for j in s.iter() {
            match self.first_witness(j, s) {
                Some(i) => {
                    report.witnesses.insert(j, i);
                }
                None => report.failures.push(Failure {
                    judgment: j,
                    reason: FailureReason::Unsupported,
                    rule: None,
                }),
            }
        }
        report
    }

    /// Checks the two obligations under which `spec` is contained in the generated interpretation.
    pub fn bounded_coinduction_check(&self, spec: &JudgmentSet) -> BoundedCoinductionReport {
        let bound = self.ind_interpretation(true);
        let boundedness = CheckReport {
            failures: spec
                .difference(&bound)
                .iter()
                .map(|j| Failure {
                    judgment: j,
                    reason: FailureReason::Unbounded,
                    rule: None,
                })
                .collect(),
            witnesses: BTreeMap::new(),
        };
        let consistency = self.is_consistent(spec);
        let within_gen = (boundedness.ok() && consistency.ok())
            .then(|| spec.is_subset(&self.gen_interpretation()));
        BoundedCoinductionReport {
            boundedness,
            consistency,
            within_gen,
        }
    }
}
