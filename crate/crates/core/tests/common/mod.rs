//! Test-only oracles and generators.
//!
//! The oracles work on raw `u64` masks and enumerate all `2^n` subsets of
//! the universe; they do not call any interpretation code of the crate.

#![allow(dead_code)]

use gis_core::colist::Colist;
use gis_core::{InferenceSystem, JudgmentSet, Rule};
use rand::Rng;

/// `(premise mask, conclusion)` pairs.
pub type RawRules = Vec<(u64, usize)>;

pub fn raw(rules: &[Rule]) -> RawRules {
    rules
        .iter()
        .map(|r| {
            (
                r.premises().iter().fold(0u64, |m, &p| m | 1 << p),
                r.conclusion(),
            )
        })
        .collect()
}

fn closed(rules: &RawRules, s: u64) -> bool {
    rules
        .iter()
        .all(|&(pre, c)| pre & s != pre || s >> c & 1 == 1)
}

fn consistent(rules: &RawRules, s: u64) -> bool {
    (0..64)
        .filter(|&j| s >> j & 1 == 1)
        .all(|j| rules.iter().any(|&(pre, c)| c == j && pre & s == pre))
}

/// Intersection of all closed subsets.
pub fn brute_lfp(n: usize, rules: &RawRules) -> u64 {
    let full = (1u64 << n) - 1;
    (0..=full)
        .filter(|&s| closed(rules, s))
        .fold(full, |acc, s| acc & s)
}

/// Union of all consistent subsets.
pub fn brute_gfp(n: usize, rules: &RawRules) -> u64 {
    let full = (1u64 << n) - 1;
    (0..=full)
        .filter(|&s| consistent(rules, s))
        .fold(0, |acc, s| acc | s)
}

pub fn brute_ind(sys: &InferenceSystem, use_corules: bool) -> JudgmentSet {
    let mut rules = raw(sys.rules());
    if use_corules {
        rules.extend(raw(sys.corules()));
    }
    JudgmentSet::from_mask(sys.universe_size(), brute_lfp(sys.universe_size(), &rules))
}

pub fn brute_coind(sys: &InferenceSystem) -> JudgmentSet {
    JudgmentSet::from_mask(
        sys.universe_size(),
        brute_gfp(sys.universe_size(), &raw(sys.rules())),
    )
}

pub fn brute_gen(sys: &InferenceSystem) -> JudgmentSet {
    let n = sys.universe_size();
    let mut all = raw(sys.rules());
    all.extend(raw(sys.corules()));
    let bound = brute_lfp(n, &all);
    let kept: RawRules = raw(sys.rules())
        .into_iter()
        .filter(|&(_, c)| bound >> c & 1 == 1)
        .collect();
    JudgmentSet::from_mask(n, brute_gfp(n, &kept))
}

pub fn coaxioms_everywhere(sys: &InferenceSystem) -> InferenceSystem {
    sys.with_corules((0..sys.universe_size()).map(Rule::axiom).collect())
        .unwrap()
}

fn random_rule<R: Rng>(rng: &mut R, n: usize) -> Rule {
    let arity = match rng.gen_range(0..10) {
        0..=2 => 0,
        3..=6 => 1,
        7..=8 => 2,
        _ => 3,
    };
    let premises: Vec<usize> = (0..arity).map(|_| rng.gen_range(0..n)).collect();
    Rule::new(premises, rng.gen_range(0..n))
}

/// Universe in `1..=max_universe`, up to `max_rules` rules and `max_corules` corules.
pub fn random_system<R: Rng>(
    rng: &mut R,
    max_universe: usize,
    max_rules: usize,
    max_corules: usize,
) -> InferenceSystem {
    let n = rng.gen_range(1..=max_universe);
    let rules = (0..rng.gen_range(0..=max_rules))
        .map(|_| random_rule(rng, n))
        .collect();
    let corules = (0..rng.gen_range(0..=max_corules))
        .map(|_| random_rule(rng, n))
        .collect();
    InferenceSystem::new(n, rules, corules).unwrap()
}

/// Lasso with elements in `0..=max_elem`, prefix length `0..=max_prefix`, loop length `1..=max_loop`.
pub fn random_lasso<R: Rng>(
    rng: &mut R,
    max_elem: u64,
    max_prefix: usize,
    max_loop: usize,
) -> Colist {
    let prefix = (0..rng.gen_range(0..=max_prefix))
        .map(|_| rng.gen_range(0..=max_elem))
        .collect();
    let cycle = (0..rng.gen_range(1..=max_loop))
        .map(|_| rng.gen_range(0..=max_elem))
        .collect();
    Colist::lasso(prefix, cycle).unwrap()
}

/// Every finite list over `0..=max_elem` of length at most `max_len`.
pub fn all_finite(max_elem: u64, max_len: usize) -> Vec<Colist> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for xs in &frontier {
            for e in 0..=max_elem {
                let mut ys: Vec<u64> = xs.clone();
                ys.push(e);
                next.push(ys);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter().map(Colist::finite).collect()
}

/// First `n` elements, or fewer for a short finite list.
pub fn unroll(xs: &Colist, n: usize) -> Vec<u64> {
    (0..n).map_while(|i| xs.get(i)).collect()
}

pub mod strategies {
    use gis_core::colist::Colist;
    use gis_core::{InferenceSystem, Rule};
    use proptest::collection::vec;
    use proptest::prelude::*;

    fn rules(n: usize, max: usize) -> impl Strategy<Value = Vec<Rule>> {
        vec((vec(0..n, 0..=2), 0..n), 0..=max)
            .prop_map(|rs| rs.into_iter().map(|(p, c)| Rule::new(p, c)).collect())
    }

    pub fn system(
        max_universe: usize,
        max_rules: usize,
        max_corules: usize,
    ) -> impl Strategy<Value = InferenceSystem> {
        (1..=max_universe)
            .prop_flat_map(move |n| (Just(n), rules(n, max_rules), rules(n, max_corules)))
            .prop_map(|(n, r, c)| InferenceSystem::new(n, r, c).unwrap())
    }

    /// Finite lists of length at most 4 and lassos with short prefixes and loops, elements `0..=4`.
    pub fn colist() -> impl Strategy<Value = Colist> {
        let elems = |r: std::ops::RangeInclusive<usize>| vec(0u64..=4, r);
        prop_oneof![
            elems(0..=4).prop_map(Colist::finite),
            (elems(0..=3), elems(1..=3)).prop_map(|(u, v)| Colist::lasso(u, v).unwrap()),
        ]
    }
}
