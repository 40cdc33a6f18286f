//! List predicates over colists, each instantiated as a finite inference
//! system over the colist's suffix automaton.
//!
//! Every predicate comes with two independent references: a direct decider
//! that inspects the stored elements, and an index-quantified specification
//! evaluated by brute force over a window that covers one full period past
//! the prefix.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::colist::{Colist, SuffixAutomaton};
use crate::error::Error;
use crate::inference::{InferenceSystem, Judgment, Rule};
use crate::set::JudgmentSet;

/// A decidable predicate on list elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ElementPredicate {
    Positive,
    Even,
    Odd,
    Eq(u64),
    Gt(u64),
    /// Holds exactly on the listed values.
    Table(BTreeSet<u64>),
}

impl ElementPredicate {
    pub fn holds(&self, x: u64) -> bool {
        match self {
            ElementPredicate::Positive => x > 0,
            ElementPredicate::Even => x.is_multiple_of(2),
            ElementPredicate::Odd => x % 2 == 1,
            ElementPredicate::Eq(k) => x == *k,
            ElementPredicate::Gt(k) => x > *k,
            ElementPredicate::Table(t) => t.contains(&x),
        }
    }
}

impl FromStr for ElementPredicate {
    type Err = Error;

    /// Accepts `positive`, `even`, `odd`, `eq:<n>` and `gt:<n>`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::UnknownPredicate(s.to_string());
        match s {
            "positive" => Ok(ElementPredicate::Positive),
            "even" => Ok(ElementPredicate::Even),
            "odd" => Ok(ElementPredicate::Odd),
            _ => {
                let (name, arg) = s.split_once(':').ok_or_else(bad)?;
                let n: u64 = arg.parse().map_err(|_| bad())?;
                match name {
                    "eq" => Ok(ElementPredicate::Eq(n)),
                    "gt" => Ok(ElementPredicate::Gt(n)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

impl fmt::Display for ElementPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementPredicate::Positive => f.write_str("positive"),
            ElementPredicate::Even => f.write_str("even"),
            ElementPredicate::Odd => f.write_str("odd"),
            ElementPredicate::Eq(k) => write!(f, "eq:{k}"),
            ElementPredicate::Gt(k) => write!(f, "gt:{k}"),
            ElementPredicate::Table(t) => {
                let items: Vec<String> = t.iter().map(u64::to_string).collect();
                write!(f, "in{{{}}}", items.join(","))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PredicateKind {
    MemberOf,
    AllPos,
    Eventually,
    Always,
    InfinitelyOften,
    MaxElem,
}

/// Which interpretation of a generated system gives the predicate its meaning.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Interpretation {
    Inductive,
    Coinductive,
    Generated,
}

impl PredicateKind {
    pub const ALL: [PredicateKind; 6] = [
        PredicateKind::MemberOf,
        PredicateKind::AllPos,
        PredicateKind::Eventually,
        PredicateKind::Always,
        PredicateKind::InfinitelyOften,
        PredicateKind::MaxElem,
    ];

    pub fn interpretation(self) -> Interpretation {
        match self {
            PredicateKind::MemberOf | PredicateKind::Eventually => Interpretation::Inductive,
            PredicateKind::AllPos | PredicateKind::Always => Interpretation::Coinductive,
            PredicateKind::InfinitelyOften | PredicateKind::MaxElem => Interpretation::Generated,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PredicateKind::MemberOf => "member",
            PredicateKind::AllPos => "allpos",
            PredicateKind::Eventually => "eventually",
            PredicateKind::Always => "always",
            PredicateKind::InfinitelyOften => "infoften",
            PredicateKind::MaxElem => "max",
        }
    }
}

/// Maps the abstract judgments of a generated system to dense ids.
///
/// Candidate-indexed kinds (membership and maximum) use the universe
/// `candidates × states` with id `candidate_index * states + state`; the
/// other kinds use one judgment per state.
#[derive(Clone, Debug)]
pub struct JudgmentScheme {
    pub kind: PredicateKind,
    pub colist: Colist,
    pub automaton: SuffixAutomaton,
    /// Sorted; empty for the state-only kinds.
    pub candidates: Vec<u64>,
    pub predicate: Option<ElementPredicate>,
}

impl JudgmentScheme {
    fn new(
        kind: PredicateKind,
        colist: &Colist,
        candidates: Vec<u64>,
        predicate: Option<ElementPredicate>,
    ) -> Self {
        JudgmentScheme {
            kind,
            colist: colist.clone(),
            automaton: colist.suffix_automaton(),
            candidates,
            predicate,
        }
    }

    fn indexed(&self) -> bool {
        !self.candidates.is_empty()
    }

    pub fn state_count(&self) -> usize {
        self.automaton.state_count()
    }

    pub fn universe_size(&self) -> usize {
        self.state_count() * self.candidates.len().max(1)
    }

    /// Id of the judgment about `state` (state-only kinds).
    pub fn state_judgment(&self, state: usize) -> Judgment {
        debug_assert!(!self.indexed());
        state
    }

    /// Id of the judgment about `candidate` at `state`, if `candidate` is in the universe.
    pub fn judgment(&self, candidate: u64, state: usize) -> Option<Judgment> {
        let index = self.candidates.binary_search(&candidate).ok()?;
        Some(index * self.state_count() + state)
    }

    /// Inverse of the encoding: optional candidate and state.
    pub fn decode(&self, j: Judgment) -> (Option<u64>, usize) {
        let n = self.state_count();
        if self.indexed() {
            (Some(self.candidates[j / n]), j % n)
        } else {
            (None, j)
        }
    }

    pub fn label(&self, j: Judgment) -> String {
        match self.decode(j) {
            (Some(c), s) => format!("{}({c},s{s})", self.kind.name()),
            (None, s) => format!("{}(s{s})", self.kind.name()),
        }
    }

    fn labels(&self) -> Vec<String> {
        (0..self.universe_size()).map(|j| self.label(j)).collect()
    }

    /// The interpretation that gives this kind its intended meaning.
    pub fn interpret(&self, sys: &InferenceSystem) -> JudgmentSet {
        match self.kind.interpretation() {
            Interpretation::Inductive => sys.ind_interpretation(false),
            Interpretation::Coinductive => sys.coind_interpretation(),
            Interpretation::Generated => sys.gen_interpretation(),
        }
    }

    /// Judgments whose suffix colist satisfies the index specification of `query`.
    ///
    /// For candidate-indexed kinds the candidate overrides the query's own argument.
    pub fn specified(&self, query: &Query) -> JudgmentSet {
        let ids = (0..self.universe_size()).filter(|&j| {
            let (candidate, state) = self.decode(j);
            let q = match (query, candidate) {
                (Query::Member(_), Some(c)) => Query::Member(c),
                (Query::MaxElem { candidates, .. }, Some(c)) => Query::MaxElem {
                    m: c,
                    candidates: candidates.clone(),
                },
                (q, _) => q.clone(),
            };
            spec_oracle(&q, &self.colist.suffix(state))
        });
        JudgmentSet::from_ids(self.universe_size(), ids)
    }

    fn finish(self, rules: Vec<Rule>, corules: Vec<Rule>) -> (InferenceSystem, JudgmentScheme) {
        let sys = InferenceSystem::new(self.universe_size(), rules, corules)
            .and_then(|s| s.with_labels(self.labels()))
            .expect("generated judgments and labels are in range and unique");
        (sys, self)
    }
}

pub fn max(a: u64, b: u64) -> u64 {
    if a >= b {
        a
    } else {
        b
    }
}

/// Membership of `x`: the head is an element, and elements of the tail are elements.
pub fn gen_member_system(x: u64, xs: &Colist) -> (InferenceSystem, JudgmentScheme) {
    let scheme = JudgmentScheme::new(PredicateKind::MemberOf, xs, vec![x], None);
    let a = &scheme.automaton;
    let id = |s| scheme.judgment(x, s).unwrap();
    let mut rules = Vec::new();
    for (s, head) in a.cells() {
        if head == x {
            rules.push(Rule::axiom(id(s)));
        }
        if let Some(t) = a.next(s) {
            rules.push(Rule::new([id(t)], id(s)));
        }
    }
    scheme.finish(rules, Vec::new())
}

fn always_rules(p: &ElementPredicate, a: &SuffixAutomaton) -> Vec<Rule> {
    let mut rules: Vec<Rule> = a.empty_state().map(Rule::axiom).into_iter().collect();
    for (s, head) in a.cells() {
        if let Some(t) = a.next(s).filter(|_| p.holds(head)) {
            rules.push(Rule::new([t], s));
        }
    }
    rules
}

/// `p` holds on every element; meaningful coinductively.
pub fn gen_always_system(p: &ElementPredicate, xs: &Colist) -> (InferenceSystem, JudgmentScheme) {
    let scheme = JudgmentScheme::new(PredicateKind::Always, xs, Vec::new(), Some(p.clone()));
    let rules = always_rules(p, &scheme.automaton);
    scheme.finish(rules, Vec::new())
}

/// All elements strictly positive: the `positive` instance of [`gen_always_system`].
pub fn gen_allpos_system(xs: &Colist) -> (InferenceSystem, JudgmentScheme) {
    let p = ElementPredicate::Positive;
    let scheme = JudgmentScheme::new(PredicateKind::AllPos, xs, Vec::new(), Some(p.clone()));
    let rules = always_rules(&p, &scheme.automaton);
    scheme.finish(rules, Vec::new())
}

/// `p` holds on some element; meaningful inductively.
pub fn gen_eventually_system(
    p: &ElementPredicate,
    xs: &Colist,
) -> (InferenceSystem, JudgmentScheme) {
    let scheme = JudgmentScheme::new(PredicateKind::Eventually, xs, Vec::new(), Some(p.clone()));
    let a = &scheme.automaton;
    let mut rules = Vec::new();
    for (s, head) in a.cells() {
        if p.holds(head) {
            rules.push(Rule::axiom(s));
        }
        if let Some(t) = a.next(s) {
            rules.push(Rule::new([t], s));
        }
    }
    scheme.finish(rules, Vec::new())
}

/// `p` holds on infinitely many elements: the eventually system with its axiom turned into a coaxiom.
pub fn gen_infoften_system(p: &ElementPredicate, xs: &Colist) -> (InferenceSystem, JudgmentScheme) {
    let scheme = JudgmentScheme::new(
        PredicateKind::InfinitelyOften,
        xs,
        Vec::new(),
        Some(p.clone()),
    );
    let a = &scheme.automaton;
    let mut rules = Vec::new();
    let mut corules = Vec::new();
    for (s, head) in a.cells() {
        if let Some(t) = a.next(s) {
            rules.push(Rule::new([t], s));
        }
        if p.holds(head) {
            corules.push(Rule::axiom(s));
        }
    }
    scheme.finish(rules, corules)
}

/// Maximum element, over a finite candidate set that must contain every element of `xs`.
///
/// Rules: `max(x, x:[])` as an axiom, `max(y, xs) / max(max(x, y), x:xs)`;
/// corule: `max(x, x:xs)` as a coaxiom.
pub fn gen_maxelem_system(
    xs: &Colist,
    candidates: &BTreeSet<u64>,
) -> Result<(InferenceSystem, JudgmentScheme), Error> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    if let Some(&missing) = xs.elements().difference(candidates).next() {
        return Err(Error::MissingCandidate(missing));
    }
    let scheme = JudgmentScheme::new(
        PredicateKind::MaxElem,
        xs,
        candidates.iter().copied().collect(),
        None,
    );
    let a = &scheme.automaton;
    let id = |c, s| scheme.judgment(c, s);
    let mut rules = Vec::new();
    let mut corules = Vec::new();
    for (s, head) in a.cells() {
        let next = a.next(s);
        if let Some(t) = next.filter(|&t| a.is_empty_state(t)) {
            debug_assert_eq!(t + 1, a.state_count());
            rules.push(Rule::axiom(id(head, s).unwrap()));
        }
        if let Some(t) = next {
            for &y in &scheme.candidates {
                if let Some(z) = id(max(head, y), s) {
                    rules.push(Rule::new([id(y, t).unwrap()], z));
                }
            }
        }
        corules.push(Rule::axiom(id(head, s).unwrap()));
    }
    Ok(scheme.finish(rules, corules))
}

/// A predicate question about a colist, asked of its whole list (state 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Query {
    Member(u64),
    AllPos,
    Always(ElementPredicate),
    Eventually(ElementPredicate),
    InfinitelyOften(ElementPredicate),
    /// Is `m` the maximum? Candidates default to the list's elements plus `m`.
    MaxElem {
        m: u64,
        candidates: Option<BTreeSet<u64>>,
    },
}

impl Query {
    pub fn kind(&self) -> PredicateKind {
        match self {
            Query::Member(_) => PredicateKind::MemberOf,
            Query::AllPos => PredicateKind::AllPos,
            Query::Always(_) => PredicateKind::Always,
            Query::Eventually(_) => PredicateKind::Eventually,
            Query::InfinitelyOften(_) => PredicateKind::InfinitelyOften,
            Query::MaxElem { .. } => PredicateKind::MaxElem,
        }
    }

    fn max_candidates(m: u64, candidates: &Option<BTreeSet<u64>>, xs: &Colist) -> BTreeSet<u64> {
        candidates.clone().unwrap_or_else(|| {
            let mut c = xs.elements();
            c.insert(m);
            c
        })
    }

    /// The inference system for this query's predicate over `xs`.
    pub fn build(&self, xs: &Colist) -> Result<(InferenceSystem, JudgmentScheme), Error> {
        Ok(match self {
            Query::Member(x) => gen_member_system(*x, xs),
            Query::AllPos => gen_allpos_system(xs),
            Query::Always(p) => gen_always_system(p, xs),
            Query::Eventually(p) => gen_eventually_system(p, xs),
            Query::InfinitelyOften(p) => gen_infoften_system(p, xs),
            Query::MaxElem { m, candidates } => {
                gen_maxelem_system(xs, &Self::max_candidates(*m, candidates, xs))?
            }
        })
    }

    /// The judgment this query asks about, or `None` when it falls outside the universe
    /// (a maximum candidate that was not declared).
    pub fn root(&self, scheme: &JudgmentScheme) -> Option<Judgment> {
        let initial = scheme.automaton.initial();
        match self {
            Query::Member(x) | Query::MaxElem { m: x, .. } => scheme.judgment(*x, initial),
            _ => Some(scheme.state_judgment(initial)),
        }
    }
}

/// The inference engine's verdict for `query` on the whole of `xs`.
pub fn engine_verdict(query: &Query, xs: &Colist) -> Result<bool, Error> {
    let (sys, scheme) = query.build(xs)?;
    // an undeclared candidate is not an element, so it cannot be the maximum
    Ok(query
        .root(&scheme)
        .is_some_and(|j| scheme.interpret(&sys).contains(j)))
}

/// Maximum over the stored elements; `None` for the empty list.
pub fn direct_max(xs: &Colist) -> Option<u64> {
    xs.elements().last().copied()
}

/// Decides `query` by inspecting the stored prefix and loop elements.
pub fn decide_direct(query: &Query, xs: &Colist) -> bool {
    let mut stored = xs.prefix().iter().chain(xs.cycle().unwrap_or(&[]));
    match query {
        Query::Member(x) => stored.any(|e| e == x),
        Query::AllPos => stored.all(|&e| e > 0),
        Query::Always(p) => stored.all(|&e| p.holds(e)),
        Query::Eventually(p) => stored.any(|&e| p.holds(e)),
        Query::InfinitelyOften(p) => xs.cycle().is_some_and(|c| c.iter().any(|&e| p.holds(e))),
        Query::MaxElem { m, .. } => direct_max(xs) == Some(*m),
    }
}

/// Length of the index window that decides every specification by periodicity.
pub fn oracle_window(xs: &Colist) -> usize {
    match xs.cycle() {
        None => xs.prefix().len(),
        Some(cycle) => xs.prefix().len() + 2 * cycle.len(),
    }
}

/// Evaluates the index-quantified specification of `query` over positions `0..B`.
pub fn spec_oracle(query: &Query, xs: &Colist) -> bool {
    let b = oracle_window(xs);
    let sat = |p: &dyn Fn(u64) -> bool, i: usize| xs.get(i).is_some_and(p);
    let member = |x: u64| (0..b).any(|i| xs.get(i) == Some(x));
    match query {
        Query::Member(x) => member(*x),
        Query::AllPos => (0..b).all(|i| sat(&|e| e > 0, i)),
        Query::Always(p) => (0..b).all(|i| sat(&|e| p.holds(e), i)),
        Query::Eventually(p) => (0..b).any(|i| sat(&|e| p.holds(e), i)),
        // at least one starting index, so the empty list is not vacuously accepted
        Query::InfinitelyOften(p) => {
            (0..b.max(1)).all(|i| (i + 1..=i + b).any(|n| sat(&|e| p.holds(e), n)))
        }
        Query::MaxElem { m, .. } => {
            member(*m) && (0..b).all(|i| xs.get(i).is_some_and(|e| *m == max(*m, e)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lasso(u: &[u64], v: &[u64]) -> Colist {
        Colist::lasso(u.to_vec(), v.to_vec()).unwrap()
    }

    fn fin(xs: &[u64]) -> Colist {
        Colist::finite(xs.to_vec())
    }

    fn cands(c: &[u64]) -> BTreeSet<u64> {
        c.iter().copied().collect()
    }

    #[test]
    fn predicate_names() {
        for name in ["positive", "even", "odd", "eq:3", "gt:0"] {
            let p: ElementPredicate = name.parse().unwrap();
            assert_eq!(p.to_string(), name);
        }
        assert!("eq:x".parse::<ElementPredicate>().is_err());
        assert!("lt:3".parse::<ElementPredicate>().is_err());
        assert!("prime".parse::<ElementPredicate>().is_err());
    }

    #[test]
    fn max_examples() {
        assert_eq!(max(0, 7), 7);
        assert_eq!(max(3, 2), 3);
        assert_eq!(max(2, 2), 2);
    }

    #[test]
    fn member_examples() {
        let xs = fin(&[2, 1]);
        let (sys, scheme) = gen_member_system(1, &xs);
        let ind = sys.ind_interpretation(false);
        assert!(ind.contains(scheme.judgment(1, 0).unwrap()));
        assert!(ind.contains(scheme.judgment(1, 1).unwrap()));
        assert!(!ind.contains(scheme.judgment(1, 2).unwrap()));

        let (sys, _) = gen_member_system(3, &xs);
        assert!(sys.ind_interpretation(false).is_empty());

        let (sys, scheme) = gen_member_system(2, &lasso(&[], &[1, 2]));
        assert!(sys
            .ind_interpretation(false)
            .contains(scheme.judgment(2, 0).unwrap()));
    }

    #[test]
    fn always_examples() {
        let (sys, _) = gen_allpos_system(&lasso(&[], &[1]));
        assert_eq!(sys.coind_interpretation(), JudgmentSet::full(1));
        assert!(sys.ind_interpretation(false).is_empty());

        let (sys, _) = gen_always_system(&ElementPredicate::Positive, &fin(&[1, 2]));
        assert_eq!(sys.ind_interpretation(false), JudgmentSet::full(3));
        assert_eq!(sys.coind_interpretation(), JudgmentSet::full(3));

        let (sys, _) = gen_always_system(&ElementPredicate::Positive, &lasso(&[1], &[0]));
        assert!(!sys.coind_interpretation().contains(0));
    }

    #[test]
    fn eventually_examples() {
        let (sys, _) = gen_eventually_system(&ElementPredicate::Eq(1), &lasso(&[2], &[1, 3]));
        assert!(sys.ind_interpretation(false).contains(0));
        let (sys, _) = gen_eventually_system(&ElementPredicate::Eq(9), &fin(&[1, 2]));
        assert!(sys.ind_interpretation(false).is_empty());
        let (sys, _) = gen_eventually_system(&ElementPredicate::Eq(9), &lasso(&[2], &[1, 3]));
        assert_eq!(sys.coind_interpretation(), JudgmentSet::full(3));
    }

    #[test]
    fn infoften_examples() {
        let xs = lasso(&[1], &[2]);
        let (sys, _) = gen_infoften_system(&ElementPredicate::Even, &xs);
        assert!(sys.gen_interpretation().contains(0));
        let (sys, _) = gen_infoften_system(&ElementPredicate::Eq(1), &xs);
        assert!(!sys.gen_interpretation().contains(0));
        let (sys, _) = gen_infoften_system(&ElementPredicate::Even, &fin(&[2, 4]));
        assert!(sys.gen_interpretation().is_empty());
    }

    #[test]
    fn maxelem_examples() {
        let (sys, scheme) = gen_maxelem_system(&lasso(&[], &[1, 2]), &cands(&[1, 2, 3])).unwrap();
        let gen = sys.gen_interpretation();
        let coind = sys.coind_interpretation();
        let at0 = |set: &JudgmentSet| -> Vec<u64> {
            set.iter()
                .filter_map(|j| match scheme.decode(j) {
                    (Some(c), 0) => Some(c),
                    _ => None,
                })
                .collect()
        };
        assert_eq!(at0(&gen), vec![2]);
        assert_eq!(at0(&coind), vec![2, 3]);

        let (sys, scheme) = gen_maxelem_system(&fin(&[5]), &cands(&[5])).unwrap();
        let j = scheme.judgment(5, 0).unwrap();
        assert_eq!(sys.gen_interpretation().to_vec(), vec![j]);
        assert_eq!(sys.ind_interpretation(false).to_vec(), vec![j]);

        let (sys, scheme) = gen_maxelem_system(&fin(&[1, 2]), &cands(&[1, 2])).unwrap();
        let gen = sys.gen_interpretation();
        assert!(gen.contains(scheme.judgment(2, 0).unwrap()));
        assert!(!gen.contains(scheme.judgment(1, 0).unwrap()));
    }

    #[test]
    fn maxelem_rejects_bad_candidates() {
        let xs = fin(&[1, 4]);
        assert_eq!(
            gen_maxelem_system(&xs, &cands(&[])).unwrap_err(),
            Error::EmptyCandidates
        );
        assert_eq!(
            gen_maxelem_system(&xs, &cands(&[1])).unwrap_err(),
            Error::MissingCandidate(4)
        );
    }

    #[test]
    fn direct_examples() {
        assert_eq!(direct_max(&lasso(&[], &[1, 2])), Some(2));
        assert_eq!(direct_max(&fin(&[])), None);
        assert!(!decide_direct(
            &Query::InfinitelyOften(ElementPredicate::Even),
            &fin(&[2, 4])
        ));
        assert!(decide_direct(
            &Query::Always(ElementPredicate::Positive),
            &fin(&[])
        ));
    }

    #[test]
    fn oracle_examples() {
        assert!(spec_oracle(&Query::Member(2), &lasso(&[], &[1, 2])));
        // window of 1 | 2 has B = 3: indices 0..3 hold 1 2 2, and the windows (i, i+3] never see 1 again
        assert!(!spec_oracle(
            &Query::InfinitelyOften(ElementPredicate::Eq(1)),
            &lasso(&[1], &[2])
        ));
        assert!(spec_oracle(
            &Query::InfinitelyOften(ElementPredicate::Even),
            &lasso(&[1], &[2])
        ));
        let q = Query::MaxElem {
            m: 3,
            candidates: None,
        };
        assert!(!spec_oracle(&q, &lasso(&[], &[1, 2])));
        assert!(!spec_oracle(
            &Query::InfinitelyOften(ElementPredicate::Even),
            &fin(&[])
        ));
        assert!(spec_oracle(&Query::AllPos, &fin(&[])));
    }

    #[test]
    fn engine_on_periodic_max_query() {
        let xs = lasso(&[], &[1, 2]);
        let probe = |m| Query::MaxElem {
            m,
            candidates: Some(cands(&[1, 2, 3])),
        };
        assert_eq!(engine_verdict(&probe(2), &xs), Ok(true));
        assert_eq!(engine_verdict(&probe(3), &xs), Ok(false));
        // undeclared candidate
        assert_eq!(engine_verdict(&probe(7), &xs), Ok(false));
    }

    #[test]
    fn scheme_encoding_is_a_bijection() {
        let (_, scheme) = gen_maxelem_system(&lasso(&[4], &[1, 2]), &cands(&[1, 2, 4, 9])).unwrap();
        let mut seen = BTreeSet::new();
        for &c in &scheme.candidates {
            for s in scheme.automaton.states() {
                let j = scheme.judgment(c, s).unwrap();
                assert_eq!(scheme.decode(j), (Some(c), s));
                seen.insert(j);
            }
        }
        assert_eq!(seen.len(), scheme.universe_size());
        assert_eq!(*seen.last().unwrap(), scheme.universe_size() - 1);
    }
}
