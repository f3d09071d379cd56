//! Abstract set systems: accessibility, strong accessibility, and the
//! accessible-graph predicate.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::cutset::{cut_sets, unmixed_violation, CutSetFamily};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::report::{Stats, VerdictReport, Witness};

/// A collection of subsets of `[ground_n]`, duplicate-free, in canonical
/// order. Membership queries hash the bitmask encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    ground_n: usize,
    sets: Vec<VertexSet>,
    masks: HashSet<u64>,
}

#[derive(Serialize, Deserialize)]
struct SetSystemRepr {
    n: usize,
    sets: Vec<VertexSet>,
}

impl SetSystem {
    pub fn new(ground_n: usize, mut sets: Vec<VertexSet>) -> Result<SetSystem> {
        let full = VertexSet::full(ground_n);
        let mut masks = HashSet::with_capacity(sets.len());
        for &s in &sets {
            if !s.is_subset_of(full) {
                return Err(Error::NotASubset { set: s, of: full });
            }
            if !masks.insert(s.mask()) {
                return Err(Error::DuplicateSet(s));
            }
        }
        sets.sort();
        Ok(SetSystem { ground_n, sets, masks })
    }

    pub fn from_json(json: &str) -> Result<SetSystem> {
        let repr: SetSystemRepr = serde_json::from_str(json)
            .map_err(|e| Error::InvalidInput(format!("bad set-system JSON: {e}")))?;
        SetSystem::new(repr.n, repr.sets)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SetSystemRepr { n: self.ground_n, sets: self.sets.clone() })
            .expect("set system serializes")
    }

    pub fn ground_n(&self) -> usize {
        self.ground_n
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.masks.contains(&s.mask())
    }
}

impl From<&CutSetFamily> for SetSystem {
    fn from(family: &CutSetFamily) -> SetSystem {
        SetSystem::new(family.ground_n, family.sets.clone()).expect("cut-set family is canonical")
    }
}

/// The three equivalent formulations of strong accessibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Characterization {
    /// Some element of `T \ S` can be added to `S` staying in the system.
    Augmentation,
    /// Some element of `T \ S` can be deleted from `T` staying in the system.
    Deletion,
    /// `T \ S` admits an ordering whose prefixes added to `S` stay inside.
    Chain,
}

/// Every nonempty member loses some element and stays a member.
pub fn is_accessible(sys: &SetSystem) -> VerdictReport {
    let mut stats = Stats::default();
    for &s in sys.sets() {
        if s.is_empty() {
            continue;
        }
        stats.work_units += 1;
        if !s.iter().any(|v| sys.contains(s.without(v))) {
            return VerdictReport::fail_with(Witness::Set { set: s }, stats);
        }
    }
    VerdictReport::pass_with(stats)
}

/// Strong accessibility under the chosen characterization. All three agree on
/// every input; `Deletion` is the reference form.
///
/// On failure the witness is the canonically smallest offending pair `(S, T)`.
pub fn is_strongly_accessible(sys: &SetSystem, ch: Characterization) -> VerdictReport {
    let mut stats = Stats::default();
    for &s in sys.sets() {
        for &t in sys.sets() {
            if s == t || !s.is_subset_of(t) {
                continue;
            }
            stats.work_units += 1;
            let ok = match ch {
                Characterization::Augmentation => {
                    t.difference(s).iter().any(|v| sys.contains(s.with(v)))
                }
                Characterization::Deletion => {
                    t.difference(s).iter().any(|v| sys.contains(t.without(v)))
                }
                Characterization::Chain => chain_reachable(sys, s, t),
            };
            if !ok {
                return VerdictReport::fail_with(Witness::SetPair { small: s, large: t }, stats);
            }
        }
    }
    VerdictReport::pass_with(stats)
}

fn chain_reachable(sys: &SetSystem, s: VertexSet, t: VertexSet) -> bool {
    let mut seen = HashSet::new();
    let mut stack = vec![s];
    seen.insert(s.mask());
    while let Some(cur) = stack.pop() {
        if cur == t {
            return true;
        }
        for v in t.difference(cur).iter() {
            let next = cur.with(v);
            if sys.contains(next) && seen.insert(next.mask()) {
                stack.push(next);
            }
        }
    }
    false
}

/// A graph is accessible when it is unmixed and the cut sets of each connected
/// component form an accessible system.
pub fn is_accessible_graph(g: &Graph) -> VerdictReport {
    let family = cut_sets(g);
    is_accessible_graph_with(g, &family)
}

pub(crate) fn is_accessible_graph_with(g: &Graph, family: &CutSetFamily) -> VerdictReport {
    let c0 = g.component_count(VertexSet::EMPTY);
    if let Some((s, c)) = unmixed_violation(g, family) {
        return VerdictReport::fail(Witness::UnmixedFailure {
            set: s,
            components: c,
            expected: s.len() + c0,
        });
    }
    if c0 <= 1 {
        let report = is_accessible(&SetSystem::from(family));
        return report;
    }
    // Reduce to connected components; map any witness back to original labels.
    let mut stats = Stats::default();
    for comp in g.components(VertexSet::EMPTY).components {
        let (sub, labels) = g.induced(comp);
        let report = is_accessible(&SetSystem::from(&cut_sets(&sub)));
        stats.work_units += report.stats.work_units;
        if !report.verdict {
            let witness = match report.witness {
                Some(Witness::Set { set }) => Witness::Set {
                    set: VertexSet::from_labels(set.iter().map(|v| labels[v - 1])),
                },
                other => other.expect("failing report carries a witness"),
            };
            return VerdictReport::fail_with(witness, stats);
        }
    }
    VerdictReport::pass_with(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{g5, g7, g9};

    fn sys(ground: usize, sets: &[&[usize]]) -> SetSystem {
        SetSystem::new(
            ground,
            sets.iter().map(|s| VertexSet::from_labels(s.iter().copied())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn accessibility_examples() {
        let c = sys(3, &[&[], &[2], &[3], &[1, 2], &[1, 2, 3]]);
        assert!(is_accessible(&c).verdict);

        let bad = sys(2, &[&[], &[1, 2]]);
        let report = is_accessible(&bad);
        assert!(!report.verdict);
        assert_eq!(
            report.witness,
            Some(Witness::Set { set: VertexSet::from_labels([1, 2]) })
        );

        assert!(is_accessible(&sys(1, &[&[]])).verdict);
    }

    #[test]
    fn strong_accessibility_examples() {
        let c = sys(3, &[&[], &[2], &[3], &[1, 2], &[1, 2, 3]]);
        for ch in [
            Characterization::Augmentation,
            Characterization::Deletion,
            Characterization::Chain,
        ] {
            let report = is_strongly_accessible(&c, ch);
            assert!(!report.verdict);
            assert_eq!(
                report.witness,
                Some(Witness::SetPair {
                    small: VertexSet::singleton(3),
                    large: VertexSet::from_labels([1, 2, 3]),
                })
            );
        }

        // downward-closed systems are strongly accessible
        let closed = sys(3, &[&[], &[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]]);
        assert!(is_strongly_accessible(&closed, Characterization::Deletion).verdict);

        let g5_cuts = SetSystem::from(&cut_sets(&g5()));
        assert!(is_strongly_accessible(&g5_cuts, Characterization::Deletion).verdict);
    }

    use crate::cutset::cut_sets;

    #[test]
    fn accessible_graph_examples() {
        assert!(is_accessible_graph(&g5()).verdict);
        assert!(is_accessible_graph(&g9()).verdict);

        let report = is_accessible_graph(&g7());
        assert!(!report.verdict);
        assert_eq!(
            report.witness,
            Some(Witness::UnmixedFailure {
                set: VertexSet::singleton(3),
                components: 3,
                expected: 2,
            })
        );
    }

    #[test]
    fn accessible_graph_handles_disconnected_input() {
        // two disjoint copies of a 3-path: unmixed and accessible per component
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (4, 5), (5, 6)]).unwrap();
        assert!(is_accessible_graph(&g).verdict);
    }

    use crate::graph::Graph;

    #[test]
    fn set_system_json_round_trip() {
        let c = sys(3, &[&[], &[1, 2], &[1, 3], &[2, 3]]);
        let json = c.to_json();
        assert_eq!(SetSystem::from_json(&json).unwrap(), c);
        assert!(SetSystem::from_json("{\"n\":2,\"sets\":[[1],[1]]}").is_err());
    }
}
