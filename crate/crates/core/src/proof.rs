//! Derivation witnesses: finite proof trees for inductive membership and
//! rational (cyclic) proof trees for membership in the generated
//! interpretation.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::{self, Write};

use crate::error::ProofError;
use crate::inference::{InferenceSystem, Judgment, Rule};
use crate::set::JudgmentSet;

/// Reference to a rule or a corule of a system, by declaration index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleRef {
    Rule(usize),
    Corule(usize),
}

impl fmt::Display for RuleRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleRef::Rule(i) => write!(f, "rule {i}"),
            RuleRef::Corule(i) => write!(f, "corule {i}"),
        }
    }
}

fn resolve(sys: &InferenceSystem, rule: RuleRef) -> Result<&Rule, ProofError> {
    match rule {
        RuleRef::Rule(index) => sys.rules().get(index).ok_or(ProofError::RuleOutOfRange {
            index,
            len: sys.rules().len(),
        }),
        RuleRef::Corule(index) => sys
            .corules()
            .get(index)
            .ok_or(ProofError::CoruleOutOfRange {
                index,
                len: sys.corules().len(),
            }),
    }
}

fn check_judgment(sys: &InferenceSystem, id: Judgment) -> Result<(), ProofError> {
    if id < sys.universe_size() {
        Ok(())
    } else {
        Err(ProofError::JudgmentOutOfRange {
            id,
            universe_size: sys.universe_size(),
        })
    }
}

/// One child per distinct premise, and the child judgments are exactly the premises.
fn premises_match(rule: &Rule, children: impl ExactSizeIterator<Item = Judgment>) -> bool {
    if children.len() != rule.premises().len() {
        return false;
    }
    let kids: BTreeSet<Judgment> = children.collect();
    kids.len() == rule.premises().len() && kids.iter().copied().eq(rule.premises().iter().copied())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteProofTree {
    pub judgment: Judgment,
    pub rule: RuleRef,
    pub children: Vec<FiniteProofTree>,
}

impl FiniteProofTree {
    /// Number of nodes on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(Self::depth).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Self::size).sum::<usize>()
    }

    /// Indented text, two spaces per level.
    pub fn render(&self, sys: &InferenceSystem) -> String {
        let mut out = String::new();
        self.render_into(sys, 0, &mut out);
        out
    }

    fn render_into(&self, sys: &InferenceSystem, level: usize, out: &mut String) {
        let _ = writeln!(
            out,
            "{:indent$}{} [{}]",
            "",
            sys.display_name(self.judgment),
            self.rule,
            indent = 2 * level
        );
        for child in &self.children {
            child.render_into(sys, level + 1, out);
        }
    }

    fn check_structure(&self, sys: &InferenceSystem) -> Result<(), ProofError> {
        check_judgment(sys, self.judgment)?;
        resolve(sys, self.rule)?;
        self.children
            .iter()
            .try_for_each(|c| c.check_structure(sys))
    }

    fn is_valid(&self, sys: &InferenceSystem, allow_corules: bool) -> bool {
        if matches!(self.rule, RuleRef::Corule(_)) && !allow_corules {
            return false;
        }
        let rule = match resolve(sys, self.rule) {
            Ok(rule) => rule,
            Err(_) => return false,
        };
        rule.conclusion() == self.judgment
            && premises_match(rule, self.children.iter().map(|c| c.judgment))
            && self.children.iter().all(|c| c.is_valid(sys, allow_corules))
    }
}

/// Checks that every node of `tree` is an instance of a rule of `sys`
/// (or of a corule, when `allow_corules` is set).
pub fn check_finite(
    tree: &FiniteProofTree,
    sys: &InferenceSystem,
    allow_corules: bool,
) -> Result<bool, ProofError> {
    tree.check_structure(sys)?;
    Ok(tree.is_valid(sys, allow_corules))
}

/// Kleene round at which each judgment first becomes derivable (1-based).
fn rounds(sys: &InferenceSystem, use_corules: bool) -> Vec<Option<usize>> {
    let mut round = vec![None; sys.universe_size()];
    let mut current = JudgmentSet::empty(sys.universe_size());
    let mut k = 0;
    loop {
        k += 1;
        let next = sys.apply_step(use_corules, &current);
        if next == current {
            return round;
        }
        for j in next.iter() {
            round[j].get_or_insert(k);
        }
        current = next;
    }
}

/// First rule (then corule) concluding `j` whose premises all appeared strictly before round `r`.
fn earlier_rule<'a>(
    sys: &'a InferenceSystem,
    use_corules: bool,
    round: &[Option<usize>],
    j: Judgment,
    r: usize,
) -> Option<(RuleRef, &'a Rule)> {
    let earlier = |rule: &Rule| {
        rule.conclusion() == j
            && rule
                .premises()
                .iter()
                .all(|&p| round[p].is_some_and(|q| q < r))
    };
    let rules = sys
        .rules()
        .iter()
        .enumerate()
        .map(|(i, rule)| (RuleRef::Rule(i), rule));
    let corules = sys
        .corules()
        .iter()
        .enumerate()
        .filter(|_| use_corules)
        .map(|(i, rule)| (RuleRef::Corule(i), rule));
    rules.chain(corules).find(|(_, rule)| earlier(rule))
}

/// A finite derivation of `j`, present iff `j` is in the inductive interpretation.
///
/// Each node uses the first rule whose premises were all derived in an
/// earlier Kleene round, so rounds strictly decrease toward the leaves.
pub fn extract_finite_proof(
    sys: &InferenceSystem,
    allow_corules: bool,
    j: Judgment,
) -> Option<FiniteProofTree> {
    if j >= sys.universe_size() {
        return None;
    }
    let round = rounds(sys, allow_corules);
    let mut memo: HashMap<Judgment, FiniteProofTree> = HashMap::new();
    build_finite(sys, allow_corules, &round, j, &mut memo)
}

fn build_finite(
    sys: &InferenceSystem,
    use_corules: bool,
    round: &[Option<usize>],
    j: Judgment,
    memo: &mut HashMap<Judgment, FiniteProofTree>,
) -> Option<FiniteProofTree> {
    if let Some(tree) = memo.get(&j) {
        return Some(tree.clone());
    }
    let r = round[j]?;
    let (rule_ref, rule) = earlier_rule(sys, use_corules, round, j, r)
        .expect("a judgment first derived at round r has a rule firing on round r - 1");
    let children = rule
        .premises()
        .iter()
        .map(|&p| build_finite(sys, use_corules, round, p, memo))
        .collect::<Option<Vec<_>>>()?;
    let tree = FiniteProofTree {
        judgment: j,
        rule: rule_ref,
        children,
    };
    memo.insert(j, tree.clone());
    Some(tree)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalNode {
    pub judgment: Judgment,
    /// Index into the system's rule list; corules never appear here.
    pub rule: usize,
    pub children: Vec<usize>,
}

/// A regular, possibly infinite, proof tree stored as a rooted graph.
/// Back-edges stand for the infinite unfolding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalProofTree {
    pub nodes: Vec<RationalNode>,
    pub root: usize,
}

impl RationalProofTree {
    pub fn is_acyclic(&self) -> bool {
        // 0 unvisited, 1 on stack, 2 done
        fn visit(tree: &RationalProofTree, n: usize, color: &mut [u8]) -> bool {
            match color[n] {
                1 => return false,
                2 => return true,
                _ => {}
            }
            color[n] = 1;
            for &c in &tree.nodes[n].children {
                if !visit(tree, c, color) {
                    return false;
                }
            }
            color[n] = 2;
            true
        }
        let mut color = vec![0u8; self.nodes.len()];
        visit(self, self.root, &mut color)
    }

    /// Indented text; a node already printed is referenced as `^n`.
    pub fn render(&self, sys: &InferenceSystem) -> String {
        let mut out = String::new();
        let mut printed = vec![false; self.nodes.len()];
        self.render_into(sys, self.root, 0, &mut printed, &mut out);
        out
    }

    fn render_into(
        &self,
        sys: &InferenceSystem,
        n: usize,
        level: usize,
        printed: &mut [bool],
        out: &mut String,
    ) {
        let indent = 2 * level;
        if printed[n] {
            let _ = writeln!(out, "{:indent$}^{n}", "");
            return;
        }
        printed[n] = true;
        let node = &self.nodes[n];
        let _ = writeln!(
            out,
            "{:indent$}#{n} {} [rule {}]",
            "",
            sys.display_name(node.judgment),
            node.rule
        );
        for &c in &node.children {
            self.render_into(sys, c, level + 1, printed, out);
        }
    }

    fn check_structure(&self, sys: &InferenceSystem) -> Result<(), ProofError> {
        let len = self.nodes.len();
        let in_range = |index: usize| {
            if index < len {
                Ok(())
            } else {
                Err(ProofError::NodeOutOfRange { index, len })
            }
        };
        in_range(self.root)?;
        for node in &self.nodes {
            check_judgment(sys, node.judgment)?;
            resolve(sys, RuleRef::Rule(node.rule))?;
            node.children.iter().try_for_each(|&c| in_range(c))?;
        }
        let mut seen = vec![false; len];
        let mut queue = VecDeque::from([self.root]);
        while let Some(n) = queue.pop_front() {
            if std::mem::replace(&mut seen[n], true) {
                continue;
            }
            queue.extend(self.nodes[n].children.iter().copied());
        }
        match seen.iter().position(|&s| !s) {
            Some(n) => Err(ProofError::Unreachable(n)),
            None => Ok(()),
        }
    }
}

/// Accepts `tree` iff every node instantiates a rule (corules excluded) and
/// every node's judgment has a finite derivation using rules and corules.
pub fn check_rational_in_gen(
    tree: &RationalProofTree,
    sys: &InferenceSystem,
) -> Result<bool, ProofError> {
    tree.check_structure(sys)?;
    let bound = sys.ind_interpretation(true);
    Ok(tree.nodes.iter().all(|node| {
        let rule = &sys.rules()[node.rule];
        rule.conclusion() == node.judgment
            && premises_match(rule, node.children.iter().map(|&c| tree.nodes[c].judgment))
            && bound.contains(node.judgment)
    }))
}

/// A rational derivation of `j`, present iff `j` is in the generated interpretation.
///
/// Judgments with a finite rules-only derivation reuse the round-decreasing
/// choice of [`extract_finite_proof`], so that part of the graph is acyclic;
/// every other judgment takes its first consistency witness inside the
/// generated interpretation. Nodes are shared per judgment.
pub fn extract_rational_proof(sys: &InferenceSystem, j: Judgment) -> Option<RationalProofTree> {
    if j >= sys.universe_size() {
        return None;
    }
    let gen = sys.gen_interpretation();
    if !gen.contains(j) {
        return None;
    }
    let round = rounds(sys, false);
    let mut ids: HashMap<Judgment, usize> = HashMap::new();
    let mut nodes: Vec<RationalNode> = Vec::new();
    let mut pending = VecDeque::new();
    ids.insert(j, 0);
    nodes.push(RationalNode {
        judgment: j,
        rule: usize::MAX,
        children: Vec::new(),
    });
    pending.push_back(j);
    while let Some(k) = pending.pop_front() {
        let rule_index = match round[k] {
            Some(r) => match earlier_rule(sys, false, &round, k, r) {
                Some((RuleRef::Rule(i), _)) => i,
                _ => unreachable!("rules-only rounds select rules"),
            },
            None => sys
                .first_witness(k, &gen)
                .expect("the generated interpretation is consistent"),
        };
        let mut children = Vec::new();
        for &p in sys.rules()[rule_index].premises() {
            let id = *ids.entry(p).or_insert_with(|| {
                nodes.push(RationalNode {
                    judgment: p,
                    rule: usize::MAX,
                    children: Vec::new(),
                });
                pending.push_back(p);
                nodes.len() - 1
            });
            children.push(id);
        }
        let node = &mut nodes[ids[&k]];
        node.rule = rule_index;
        node.children = children;
    }
    Some(RationalProofTree { nodes, root: 0 })
}
