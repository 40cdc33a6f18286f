//! Possibly infinite lists of naturals, represented exactly as finite
//! sequences or lassos `prefix · loop^ω`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::Error;

#[derive(Clone, Debug)]
enum Repr {
    Finite(Vec<u64>),
    Lasso { prefix: Vec<u64>, cycle: Vec<u64> },
}

/// A finite list or an eventually periodic infinite list.
///
/// Equality is semantic: two colists are equal when they denote the same
/// element sequence, whatever their prefix/loop decomposition.
#[derive(Clone, Debug)]
pub struct Colist(Repr);

impl Colist {
    pub fn finite(elements: Vec<u64>) -> Self {
        Colist(Repr::Finite(elements))
    }

    pub fn lasso(prefix: Vec<u64>, cycle: Vec<u64>) -> Result<Self, Error> {
        if cycle.is_empty() {
            return Err(Error::EmptyLoop);
        }
        Ok(Colist(Repr::Lasso { prefix, cycle }))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.0, Repr::Finite(_))
    }

    /// The finite part: all elements of a finite list, or the prefix of a lasso.
    pub fn prefix(&self) -> &[u64] {
        match &self.0 {
            Repr::Finite(xs) => xs,
            Repr::Lasso { prefix, .. } => prefix,
        }
    }

    /// The repeated part of a lasso.
    pub fn cycle(&self) -> Option<&[u64]> {
        match &self.0 {
            Repr::Finite(_) => None,
            Repr::Lasso { cycle, .. } => Some(cycle),
        }
    }

    /// Number of stored elements (prefix plus loop).
    pub fn stored_len(&self) -> usize {
        self.prefix().len() + self.cycle().map_or(0, <[u64]>::len)
    }

    /// Element at position `i`, if the list is that long.
    pub fn get(&self, i: usize) -> Option<u64> {
        match &self.0 {
            Repr::Finite(xs) => xs.get(i).copied(),
            Repr::Lasso { prefix, cycle } => Some(if i < prefix.len() {
                prefix[i]
            } else {
                cycle[(i - prefix.len()) % cycle.len()]
            }),
        }
    }

    /// Every element occurring in the list.
    pub fn elements(&self) -> BTreeSet<u64> {
        self.prefix()
            .iter()
            .chain(self.cycle().unwrap_or(&[]))
            .copied()
            .collect()
    }

    pub fn suffix_automaton(&self) -> SuffixAutomaton {
        match &self.0 {
            Repr::Finite(xs) => {
                let n = xs.len();
                SuffixAutomaton {
                    heads: xs.iter().copied().map(Some).chain([None]).collect(),
                    next: (0..n).map(|i| Some(i + 1)).chain([None]).collect(),
                }
            }
            Repr::Lasso { prefix, cycle } => {
                let total = prefix.len() + cycle.len();
                SuffixAutomaton {
                    heads: prefix.iter().chain(cycle).copied().map(Some).collect(),
                    next: (0..total)
                        .map(|i| Some(if i + 1 < total { i + 1 } else { prefix.len() }))
                        .collect(),
                }
            }
        }
    }

    /// The colist observed from automaton state `state`.
    ///
    /// Panics if `state` is not a state of this colist's automaton.
    pub fn suffix(&self, state: usize) -> Colist {
        match &self.0 {
            Repr::Finite(xs) => {
                assert!(state <= xs.len(), "state {state} out of range");
                Colist::finite(xs[state..].to_vec())
            }
            Repr::Lasso { prefix, cycle } => {
                assert!(
                    state < prefix.len() + cycle.len(),
                    "state {state} out of range"
                );
                if state < prefix.len() {
                    Colist(Repr::Lasso {
                        prefix: prefix[state..].to_vec(),
                        cycle: cycle.clone(),
                    })
                } else {
                    let mut rotated = cycle.clone();
                    rotated.rotate_left(state - prefix.len());
                    Colist(Repr::Lasso {
                        prefix: Vec::new(),
                        cycle: rotated,
                    })
                }
            }
        }
    }
}

impl PartialEq for Colist {
    fn eq(&self, other: &Self) -> bool {
        equal(self, other)
    }
}

impl Eq for Colist {}

/// Literal form: `a b` is finite, `a | b c` a lasso, the empty string the empty list.
impl fmt::Display for Colist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        match &self.0 {
            Repr::Finite(xs) => f.write_str(&join(xs)),
            Repr::Lasso { prefix, cycle } if prefix.is_empty() => write!(f, "| {}", join(cycle)),
            Repr::Lasso { prefix, cycle } => write!(f, "{} | {}", join(prefix), join(cycle)),
        }
    }
}

/// Deterministic automaton whose states are the suffixes of a colist.
///
/// State 0 is the whole list. A finite list of `n` elements has `n + 1`
/// states, the last one empty; a lasso has one state per stored element
/// and no empty state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuffixAutomaton {
    heads: Vec<Option<u64>>,
    next: Vec<Option<usize>>,
}

impl SuffixAutomaton {
    pub fn state_count(&self) -> usize {
        self.heads.len()
    }

    pub fn initial(&self) -> usize {
        0
    }

    /// Head element of `state`; `None` only for the empty state.
    pub fn head(&self, state: usize) -> Option<u64> {
        self.heads[state]
    }

    pub fn next(&self, state: usize) -> Option<usize> {
        self.next[state]
    }

    pub fn is_empty_state(&self, state: usize) -> bool {
        self.heads[state].is_none()
    }

    pub fn empty_state(&self) -> Option<usize> {
        self.heads.iter().position(Option::is_none)
    }

    pub fn states(&self) -> std::ops::Range<usize> {
        0..self.state_count()
    }

    /// Non-empty states, in order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.heads
            .iter()
            .enumerate()
            .filter_map(|(s, h)| h.map(|h| (s, h)))
    }

    /// States reachable from `state`, including itself, in discovery order.
    pub fn reachable_from(&self, state: usize) -> Vec<usize> {
        let mut seen = vec![false; self.state_count()];
        let mut out = Vec::new();
        let mut cur = Some(state);
        while let Some(s) = cur {
            if seen[s] {
                break;
            }
            seen[s] = true;
            out.push(s);
            cur = self.next[s];
        }
        out
    }
}

/// Bisimulation on the product of both suffix automata.
pub fn equal(xs: &Colist, ys: &Colist) -> bool {
    pointwise(|a, b| a == b, xs, ys)
}

/// True iff both colists have the same shape and `r` holds position by position.
pub fn pointwise<R: Fn(u64, u64) -> bool>(r: R, xs: &Colist, ys: &Colist) -> bool {
    let left = xs.suffix_automaton();
    let right = ys.suffix_automaton();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([(left.initial(), right.initial())]);
    while let Some((a, b)) = queue.pop_front() {
        if !seen.insert((a, b)) {
            continue;
        }
        match (left.head(a), right.head(b)) {
            (None, None) => {}
            (Some(x), Some(y)) if r(x, y) => {}
            _ => return false,
        }
        if let (Some(na), Some(nb)) = (left.next(a), right.next(b)) {
            queue.push_back((na, nb));
        }
    }
    true
}
