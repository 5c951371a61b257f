//! Ideals of the concatenation poset under the two textbook definitions:
//! closure under (defined) joins, and down-closed + upward directed.

use alloc::vec::Vec;

use super::{join, ConcatPattern, PatternSpace};
use crate::error::{Error, Result};

/// Largest `k` for [`enumerate_ideals`].
pub const IDEAL_CAP: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealDefinition {
    /// `x, y ∈ I` ⇒ `x ∨ y ∈ I` whenever the join exists.
    JoinClosed,
    /// Down-closed, and any two members have an upper bound inside `I`.
    DownDirected,
}

/// Why a set fails an ideal definition.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdealWitness {
    pub x: ConcatPattern,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<ConcatPattern>,
    pub reason: &'static str,
    /// Every common upper bound of `x` and `y` (only for pair witnesses).
    pub common_upper_bounds: Vec<ConcatPattern>,
}

fn same_k(set: &[ConcatPattern]) -> Result<()> {
    if let Some(first) = set.first() {
        if let Some(bad) = set.iter().find(|p| p.k() != first.k()) {
            return Err(Error::SizeMismatch(first.k(), bad.k()));
        }
    }
    Ok(())
}

fn common_upper_bounds(x: &ConcatPattern, y: &ConcatPattern) -> Vec<ConcatPattern> {
    x.coarsenings()
        .into_iter()
        .filter(|u| y.leq_unchecked(u))
        .collect()
}

/// Every reason `set` fails `definition`; empty when it is an ideal.
pub fn ideal_witnesses(set: &[ConcatPattern], definition: IdealDefinition) -> Result<Vec<IdealWitness>> {
    same_k(set)?;
    let mut out = Vec::new();
    match definition {
        IdealDefinition::JoinClosed => {
            for (i, x) in set.iter().enumerate() {
                for y in &set[i + 1..] {
                    if let Some(j) = join(x, y)? {
                        if !set.contains(&j) {
                            out.push(IdealWitness {
                                x: x.clone(),
                                y: Some(y.clone()),
                                reason: "join not in set",
                                common_upper_bounds: common_upper_bounds(x, y),
                            });
                        }
                    }
                }
            }
        }
        IdealDefinition::DownDirected => {
            for a in set {
                for z in a.refinements() {
                    if !set.contains(&z) {
                        out.push(IdealWitness {
                            x: z,
                            y: None,
                            reason: "not down-closed",
                            common_upper_bounds: Vec::new(),
                        });
                    }
                }
            }
            for (i, x) in set.iter().enumerate() {
                for y in &set[i + 1..] {
                    let bounds = common_upper_bounds(x, y);
                    if !bounds.iter().any(|u| set.contains(u)) {
                        out.push(IdealWitness {
                            x: x.clone(),
                            y: Some(y.clone()),
                            reason: "no upper bound in set",
                            common_upper_bounds: bounds,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn is_ideal_joinclosed(set: &[ConcatPattern]) -> Result<bool> {
    Ok(ideal_witnesses(set, IdealDefinition::JoinClosed)?.is_empty())
}

pub fn is_ideal_downdirected(set: &[ConcatPattern]) -> Result<bool> {
    Ok(ideal_witnesses(set, IdealDefinition::DownDirected)?.is_empty())
}

/// Every non-empty down-closed subset of the `k`-pattern poset that satisfies
/// `definition`. Members are listed in enumeration order.
pub fn enumerate_ideals(k: usize, definition: IdealDefinition) -> Result<Vec<Vec<ConcatPattern>>> {
    if k > IDEAL_CAP {
        return Err(Error::CapacityExceeded { k, cap: IDEAL_CAP });
    }
    let space = PatternSpace::new(k)?;
    let sets = match definition {
        // a finite directed down-set has a greatest element
        IdealDefinition::DownDirected => (0..space.len())
            .map(|c| space.poset().down_set(c).iter().collect())
            .collect(),
        IdealDefinition::JoinClosed => {
            let space = space.clone().with_tables();
            let mut out = Vec::new();
            let mut status = alloc::vec![Status::Open; space.len()];
            join_closed_down_sets(&space, 0, &mut status, &mut out);
            out
        }
    };
    Ok(sets
        .into_iter()
        .map(|s: Vec<usize>| s.into_iter().map(|i| space.pattern(i).clone()).collect())
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Open,
    In,
    Out,
}

/// Decides elements in index order (a linear extension, since indices are level-sorted).
fn join_closed_down_sets(space: &PatternSpace, i: usize, status: &mut Vec<Status>, out: &mut Vec<Vec<usize>>) {
    let n = space.len();
    if i == n {
        let set: Vec<usize> = (0..n).filter(|&x| status[x] == Status::In).collect();
        if !set.is_empty() {
            out.push(set);
        }
        return;
    }
    let below_in = space
        .poset()
        .down_set(i)
        .iter()
        .all(|z| z == i || status[z] == Status::In);

    if below_in {
        let saved = status.clone();
        if include(space, i, status) {
            join_closed_down_sets(space, i + 1, status, out);
        }
        *status = saved;
    }
    if status[i] == Status::Open {
        status[i] = Status::Out;
        join_closed_down_sets(space, i + 1, status, out);
        status[i] = Status::Open;
    }
}

/// Marks `i` as a member and forces the down-sets of its joins with current members.
fn include(space: &PatternSpace, i: usize, status: &mut [Status]) -> bool {
    status[i] = Status::In;
    let members: Vec<usize> = (0..space.len()).filter(|&b| status[b] == Status::In && b != i).collect();
    for b in members {
        if let Some(c) = space.join_index(i, b) {
            for z in space.poset().down_set(c).iter() {
                match status[z] {
                    Status::Out => return false,
                    _ => status[z] = Status::In,
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::super::{enumerate_patterns, p};
    use super::*;
    use alloc::collections::BTreeSet;

    fn set(texts: &[&str]) -> Vec<ConcatPattern> {
        texts.iter().map(|t| p(t)).collect()
    }

    #[test]
    fn whole_space_is_an_ideal() {
        let all = enumerate_patterns(3).unwrap();
        assert!(is_ideal_joinclosed(&all).unwrap());
        assert!(is_ideal_downdirected(&all).unwrap());
    }

    #[test]
    fn three_element_example() {
        // K⊗G⊗H, K⊗H⊗G, K⊗G⊙H
        let s = set(&["3*1*2", "3*2*1", "3*1.2"]);
        assert!(is_ideal_joinclosed(&s).unwrap());
        assert!(is_ideal_downdirected(&s).unwrap());
    }

    #[test]
    fn five_element_example_fails_both() {
        // K⊗G⊙H, K⊙H⊗G, K⊗G⊗H, K⊗H⊗G, H⊗K⊗G
        let s = set(&["3*1.2", "2.3*1", "3*1*2", "3*2*1", "2*3*1"]);
        let w = ideal_witnesses(&s, IdealDefinition::JoinClosed).unwrap();
        assert!(w.iter().any(|w| w.x == p("3*1.2") && w.y == Some(p("2.3*1"))));
        let w = ideal_witnesses(&s, IdealDefinition::DownDirected).unwrap();
        let pair = w
            .iter()
            .find(|w| w.x == p("3*1.2") && w.y == Some(p("2.3*1")))
            .unwrap();
        assert_eq!(pair.common_upper_bounds, [p("1.2.3")]);
    }

    #[test]
    fn singleton_minimal() {
        let s = set(&["1*2*3"]);
        assert!(is_ideal_joinclosed(&s).unwrap());
        assert!(is_ideal_downdirected(&s).unwrap());
    }

    #[test]
    fn mixed_k_is_an_error() {
        assert!(is_ideal_joinclosed(&[p("1*2"), p("1*2*3")]).is_err());
    }

    /// Brute force over all 2^13 subsets of the k = 3 poset.
    fn brute_force(def: IdealDefinition) -> BTreeSet<Vec<ConcatPattern>> {
        let all = enumerate_patterns(3).unwrap();
        let mut out = BTreeSet::new();
        for mask in 1u32..1 << all.len() {
            let s: Vec<ConcatPattern> = (0..all.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| all[i].clone())
                .collect();
            let down = s.iter().all(|a| a.refinements().iter().all(|z| s.contains(z)));
            let ok = match def {
                IdealDefinition::JoinClosed => down && is_ideal_joinclosed(&s).unwrap(),
                IdealDefinition::DownDirected => is_ideal_downdirected(&s).unwrap(),
            };
            if ok {
                out.insert(s);
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force_k3() {
        for def in [IdealDefinition::JoinClosed, IdealDefinition::DownDirected] {
            let got: BTreeSet<Vec<ConcatPattern>> = enumerate_ideals(3, def).unwrap().into_iter().collect();
            assert_eq!(got, brute_force(def), "{def:?}");
        }
    }

    #[test]
    fn k4_enumeration_and_cap() {
        let v2 = enumerate_ideals(4, IdealDefinition::DownDirected).unwrap();
        assert_eq!(v2.len(), 75);
        let v1 = enumerate_ideals(4, IdealDefinition::JoinClosed).unwrap();
        assert!(v1.len() >= v2.len());
        for s in &v1 {
            assert!(is_ideal_joinclosed(s).unwrap());
        }
        assert!(enumerate_ideals(5, IdealDefinition::JoinClosed).is_err());
    }
}
