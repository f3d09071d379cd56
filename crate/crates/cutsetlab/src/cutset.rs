//! Cut sets, unmixedness, transversals, the reconnection relation, and the
//! constructive reduction of an arbitrary proper subset to a cut set.
//!
//! A set `S` is a cut set when `S = ∅` or removing any single `i ∈ S` from
//! `S` strictly lowers the component count of `G - S`.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The family of all cut sets of a graph, in canonical order
/// (size, then lexicographic).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutSetFamily {
    pub ground_n: usize,
    pub sets: Vec<VertexSet>,
    #[serde(skip)]
    masks: HashSet<u64>,
}

impl CutSetFamily {
    fn new(ground_n: usize, mut sets: Vec<VertexSet>) -> CutSetFamily {
        sets.sort();
        let masks = sets.iter().map(|s| s.mask()).collect();
        CutSetFamily { ground_n, sets, masks }
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.masks.contains(&s.mask())
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.sets.iter().copied()
    }
}

/// Step-by-step record of a reduction to a cut set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub input: VertexSet,
    pub result: VertexSet,
    pub removed_order: Vec<usize>,
    pub avoid: VertexSet,
}

/// Indices (into `g.components(s)`) of the components that contain a
/// neighbor of `v`; `v` reconnects components iff there are at least two.
pub fn reconnected_components(g: &Graph, s: VertexSet, v: usize) -> Result<Vec<usize>> {
    if !s.contains(v) {
        return Err(Error::VertexNotInSet { v, set: s });
    }
    let nb = g.neighbors(v)?;
    Ok(g.components(s)
        .components
        .iter()
        .enumerate()
        .filter(|(_, comp)| !comp.intersection(nb).is_empty())
        .map(|(i, _)| i)
        .collect())
}

fn reconnect_degree(g: &Graph, removed: u64, v: usize) -> usize {
    let nb = g.neighbors_mask(v);
    let mut hit = 0usize;
    for comp in g.component_masks(removed) {
        if comp & nb != 0 {
            hit += 1;
            if hit >= 2 {
                break;
            }
        }
    }
    hit
}

pub fn is_cut_set(g: &Graph, s: VertexSet) -> bool {
    if s.is_empty() {
        return true;
    }
    let c = g.component_count(s);
    s.iter().all(|i| g.component_count(s.without(i)) < c)
}

/// All cut sets, by brute force over the `2^n` subsets.
pub fn cut_sets(g: &Graph) -> CutSetFamily {
    let n = g.n();
    assert!(n <= 24, "cut-set enumeration is limited to n <= 24");
    let total: u64 = 1 << n;
    let mut counts = vec![0u8; total as usize];
    for mask in 0..total {
        counts[mask as usize] = g.component_count(VertexSet::from_mask(mask)) as u8;
    }
    let mut sets = Vec::new();
    'subset: for mask in 0..total {
        let c = counts[mask as usize];
        let mut m = mask;
        while m != 0 {
            let low = m & m.wrapping_neg();
            m &= m - 1;
            if counts[(mask & !low) as usize] >= c {
                continue 'subset;
            }
        }
        sets.push(VertexSet::from_mask(mask));
    }
    CutSetFamily::new(n, sets)
}

/// Unmixedness in the combinatorial form: `c_G(S) = |S| + c_G(∅)` for every
/// cut set `S`.
pub fn is_unmixed(g: &Graph) -> bool {
    is_unmixed_family(g, &cut_sets(g))
}

pub(crate) fn is_unmixed_family(g: &Graph, family: &CutSetFamily) -> bool {
    unmixed_violation(g, family).is_none()
}

/// First cut set violating unmixedness, with its component count.
pub fn unmixed_violation(g: &Graph, family: &CutSetFamily) -> Option<(VertexSet, usize)> {
    let c0 = g.component_count(VertexSet::EMPTY);
    for s in family.iter() {
        let c = g.component_count(s);
        if c != s.len() + c0 {
            return Some((s, c));
        }
    }
    None
}

/// All transversals of `G - s`: one vertex per component, enumerated in
/// lexicographic order of the per-component choices (components ordered by
/// minimum element).
pub fn transversals(g: &Graph, s: VertexSet) -> Result<Vec<VertexSet>> {
    if !is_cut_set(g, s) {
        return Err(Error::NotACutSet(s));
    }
    let comps: Vec<Vec<usize>> =
        g.components(s).components.iter().map(|c| c.to_vec()).collect();
    if comps.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(comps.iter().map(Vec::len).product());
    let mut choice = vec![0usize; comps.len()];
    loop {
        out.push(VertexSet::from_labels(
            choice.iter().enumerate().map(|(i, &j)| comps[i][j]),
        ));
        // odometer increment, last component fastest
        let mut pos = comps.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < comps[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Reduces a proper subset `u` to a cut set `T ⊆ u` with `c_G(T) >= c_G(u)`
/// by repeatedly deleting a vertex that reconnects no components.
///
/// Removal policy: when a vertex from `avoid` is removable, the smallest such
/// is removed; otherwise the smallest removable vertex. If the greedy pass
/// leaves an `avoid` vertex in the result, every removal order is searched
/// before reporting the avoid set infeasible.
pub fn reduce_to_cut_set(g: &Graph, u: VertexSet, avoid: VertexSet) -> Result<ReductionTrace> {
    let full = g.vertices();
    if !u.is_subset_of(full) {
        return Err(Error::NotASubset { set: u, of: full });
    }
    if u == full {
        return Err(Error::FullVertexSet);
    }
    if !avoid.is_subset_of(u) {
        return Err(Error::NotASubset { set: avoid, of: u });
    }

    let mut current = u;
    let mut removed_order = Vec::new();
    loop {
        if is_cut_set(g, current) {
            if current.intersection(avoid).is_empty() {
                return Ok(ReductionTrace { input: u, result: current, removed_order, avoid });
            }
            break;
        }
        let removable =
            current.iter().filter(|&v| reconnect_degree(g, current.mask(), v) <= 1);
        let pick = {
            let mut first = None;
            let mut first_avoid = None;
            for v in removable {
                first.get_or_insert(v);
                if avoid.contains(v) {
                    first_avoid = Some(v);
                    break;
                }
            }
            first_avoid.or(first).expect("a non-cut set always has a removable vertex")
        };
        current.remove(pick);
        removed_order.push(pick);
    }

    // Greedy left an avoid vertex in a cut set; exhaust removal orders.
    let mut seen = HashMap::new();
    match search_avoiding(g, u, avoid, &mut seen) {
        Some(order) => {
            let result = order.iter().fold(u, |s, &v| s.without(v));
            Ok(ReductionTrace { input: u, result, removed_order: order, avoid })
        }
        None => Err(Error::AvoidInfeasible { avoid }),
    }
}

fn search_avoiding(
    g: &Graph,
    current: VertexSet,
    avoid: VertexSet,
    seen: &mut HashMap<u64, bool>,
) -> Option<Vec<usize>> {
    if is_cut_set(g, current) && current.intersection(avoid).is_empty() {
        return Some(Vec::new());
    }
    if let Some(&false) = seen.get(&current.mask()) {
        return None;
    }
    // avoid-listed candidates first, then the rest
    let candidates = current
        .iter()
        .filter(|&v| avoid.contains(v))
        .chain(current.iter().filter(|&v| !avoid.contains(v)));
    for v in candidates {
        if reconnect_degree(g, current.mask(), v) > 1 {
            continue;
        }
        if let Some(mut order) = search_avoiding(g, current.without(v), avoid, seen) {
            order.insert(0, v);
            return Some(order);
        }
    }
    seen.insert(current.mask(), false);
    None
}
