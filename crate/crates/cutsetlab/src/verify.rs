//! Terai-style (S₂) verification, exhaustive small-graph sweeps, bridging
//! cut-set search, and bounded realizability of set systems.

use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{delta_complex, SimplicialComplex};
use crate::cutset::{
    cut_sets, is_cut_set, is_unmixed_family, reconnected_components, reduce_to_cut_set,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::report::{Stats, VerdictReport, Witness};
use crate::system::{is_accessible, is_accessible_graph_with, is_strongly_accessible,
    Characterization, SetSystem};

/// Hard upper bound for exhaustive enumeration; `CUTSETLAB_MAX_N` may lower
/// the effective cap but never raise it past this.
pub const HARD_CAP: usize = 8;

pub fn effective_cap() -> usize {
    std::env::var("CUTSETLAB_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(HARD_CAP)
        .min(HARD_CAP)
}

// ---------------------------------------------------------------------------
// labeled graph enumeration

/// Vertex pairs of `[n]` in lexicographic order; bit `k` of an edge mask
/// selects `pairs(n)[k]`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n.max(1) - 1) / 2);
    for u in 1..=n {
        for v in (u + 1)..=n {
            out.push((u, v));
        }
    }
    out
}

pub fn graph_from_edge_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::new(n).expect("valid n");
    for (k, &(u, v)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            g.add_edge(u, v).expect("pairs are valid simple edges");
        }
    }
    g
}

/// All labeled graphs on exactly `n` vertices, edge masks ascending.
pub fn graphs_on(n: usize) -> impl Iterator<Item = Graph> {
    let ps = pairs(n);
    let total: u64 = 1 << ps.len();
    (0..total).map(move |mask| graph_from_edge_mask(n, &ps, mask))
}

/// Connected labeled graphs on exactly `n` vertices, edge masks ascending.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    graphs_on(n).filter(Graph::is_connected)
}

// ---------------------------------------------------------------------------
// transversal predicates

/// `w` avoids `s` and meets every component of `G − s` at most once, i.e.
/// it extends to a transversal of `G − s`.
fn is_partial_transversal(g: &Graph, s: VertexSet, w: VertexSet) -> bool {
    if !w.intersection(s).is_empty() {
        return false;
    }
    let mut hit = 0usize;
    for comp in g.components(s).components {
        match comp.intersection(w).len() {
            0 => {}
            1 => hit += 1,
            _ => return false,
        }
    }
    hit == w.len()
}

fn is_transversal(g: &Graph, s: VertexSet, w: VertexSet) -> bool {
    w.len() == g.component_count(s) && is_partial_transversal(g, s, w)
}

// ---------------------------------------------------------------------------
// (S₂) via links

/// Terai's criterion: every face whose link has dimension ≥ 1 must have a
/// connected link. Faces are scanned in canonical order, so the first
/// offending face is reported.
pub fn satisfies_s2(c: &SimplicialComplex) -> VerdictReport {
    let mut stats = Stats::default();
    for f in c.all_faces() {
        stats.faces_examined += 1;
        let link = c.link(f).expect("enumerated faces are faces");
        if link.dimension() < 1 {
            continue;
        }
        stats.links_checked += 1;
        if !link.is_connected() {
            return VerdictReport::fail_with(
                Witness::Face {
                    face: f.to_string(),
                    link_facets: link.facets().iter().map(|x| x.to_string()).collect(),
                },
                stats,
            );
        }
    }
    VerdictReport::pass_with(stats)
}

/// The two sides of the main equivalence: (S₂) for Δ_G versus accessibility
/// of G. Verdict is true when they agree; disagreement is a refutation.
pub fn check_s2_equiv_accessible(g: &Graph) -> Result<VerdictReport> {
    let s2 = satisfies_s2(&delta_complex(g)?.complex);
    let acc = is_accessible_graph_with(g, &cut_sets(g));
    let mut stats = s2.stats;
    stats.work_units += acc.stats.work_units;
    if s2.verdict == acc.verdict {
        Ok(VerdictReport::pass_with(stats))
    } else {
        Ok(VerdictReport::fail_with(
            Witness::Mismatch {
                relation: "s2(delta_G) <-> accessible(G)".into(),
                left: s2.verdict,
                right: acc.verdict,
            },
            stats,
        ))
    }
}

// ---------------------------------------------------------------------------
// sweep checks

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Check {
    S2EquivAccessible,
    AccessibleEquivStronglyAccessible,
    FreeVertexCount,
    UnmixedEquivalences,
    ReductionProperties,
    UnionRemark,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::S2EquivAccessible,
        Check::AccessibleEquivStronglyAccessible,
        Check::FreeVertexCount,
        Check::UnmixedEquivalences,
        Check::ReductionProperties,
        Check::UnionRemark,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::S2EquivAccessible => "s2-equiv-accessible",
            Check::AccessibleEquivStronglyAccessible => "accessible-equiv-strongly-accessible",
            Check::FreeVertexCount => "free-vertex-count",
            Check::UnmixedEquivalences => "unmixed-equivalences",
            Check::ReductionProperties => "reduction-properties",
            Check::UnionRemark => "union-remark",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown check {s:?}")))
    }
}

/// Runs one check on one connected graph. `None` means the graph passes or
/// the check's hypotheses do not apply to it.
pub fn run_check(g: &Graph, check: Check) -> Option<Witness> {
    match check {
        Check::S2EquivAccessible => {
            let report = check_s2_equiv_accessible(g).expect("connected input");
            (!report.verdict).then(|| report.witness.unwrap())
        }
        Check::AccessibleEquivStronglyAccessible => {
            let family = cut_sets(g);
            if !is_unmixed_family(g, &family) {
                return None;
            }
            let sys = SetSystem::from(&family);
            let a = is_accessible(&sys).verdict;
            let sa = is_strongly_accessible(&sys, Characterization::Deletion).verdict;
            (a != sa).then(|| Witness::Mismatch {
                relation: "accessible <-> strongly accessible".into(),
                left: a,
                right: sa,
            })
        }
        Check::FreeVertexCount => check_free_vertices(g),
        Check::UnmixedEquivalences => check_unmixed_equivalences(g),
        Check::ReductionProperties => check_reduction_properties(g),
        Check::UnionRemark => check_union_remark(g),
    }
}

fn check_free_vertices(g: &Graph) -> Option<Witness> {
    let family = cut_sets(g);
    // the free-vertex bound needs at least one edge; K1 is vacuously accessible
    if g.n() >= 2 && is_accessible_graph_with(g, &family).verdict {
        let free = g.free_vertices();
        if free.len() < 2 {
            return Some(Witness::Message {
                detail: format!("accessible graph with free vertices {free}"),
            });
        }
        let apexes = delta_complex(g).expect("connected").complex.cone_apexes();
        for v in free.iter() {
            if !apexes.y.contains(v) {
                return Some(Witness::Message {
                    detail: format!("free vertex {v} is not a cone apex"),
                });
            }
        }
    }
    if g.n() >= 2 && g.is_bipartite() && is_unmixed_family(g, &cut_sets(g)) {
        let free = g.free_vertices();
        if free.len() != 2 {
            return Some(Witness::Message {
                detail: format!("bipartite unmixed graph with free vertices {free}"),
            });
        }
    }
    None
}

/// For connected unmixed G and every S:
/// S ∈ 𝒞(G) ⟺ c_G(S) = |S|+1 ⟺ c_G(S) ≥ |S|+1.
fn check_unmixed_equivalences(g: &Graph) -> Option<Witness> {
    let family = cut_sets(g);
    if !is_unmixed_family(g, &family) {
        return None;
    }
    for mask in 0..(1u64 << g.n()) {
        let s = VertexSet::from_mask(mask);
        let c = g.component_count(s);
        let member = family.contains(s);
        let eq = c == s.len() + 1;
        let ge = c > s.len();
        if member != eq || eq != ge {
            return Some(Witness::Mismatch {
                relation: format!("cut-set characterizations at S = {s}"),
                left: member,
                right: ge,
            });
        }
    }
    None
}

/// Reduction contract on every proper subset `u`: the result is a cut set
/// inside `u`; distinct components of `G − u` stay distinct in `G − T` (so
/// partial transversals survive); removed vertices reconnect nothing in
/// `G − u`; and `c_G(T) = c_G(u)` whenever `u` sits inside a cut set.
fn check_reduction_properties(g: &Graph) -> Option<Witness> {
    let n = g.n();
    let family = cut_sets(g);
    let fail = |u: VertexSet, what: &str| {
        Some(Witness::Message { detail: format!("reduction of U = {u}: {what}") })
    };
    for mask in 0..(1u64 << n) - 1 {
        let u = VertexSet::from_mask(mask);
        let trace = match reduce_to_cut_set(g, u, VertexSet::EMPTY) {
            Ok(t) => t,
            Err(e) => return fail(u, &format!("errored: {e}")),
        };
        let t = trace.result;
        if !t.is_subset_of(u) || !is_cut_set(g, t) {
            return fail(u, "result is not a cut set inside U");
        }
        let cu = g.component_count(u);
        let ct = g.component_count(t);
        if ct < cu {
            return fail(u, "component count dropped");
        }
        // (i) no two components of G − u merge in G − t
        let coarse = g.components(t).components;
        let mut images = Vec::new();
        for comp in g.components(u).components {
            let rep = comp.min().expect("components are nonempty");
            let img = coarse.iter().position(|c| c.contains(rep)).expect("t ⊆ u");
            if images.contains(&img) {
                return fail(u, "two components merged");
            }
            images.push(img);
        }
        // (ii) removed vertices reconnect nothing in G − u
        for &v in &trace.removed_order {
            if reconnected_components(g, u, v).expect("v ∈ u").len() >= 2 {
                return fail(u, &format!("removed vertex {v} reconnects components"));
            }
        }
        // (iii) equality when u is contained in some cut set
        if family.iter().any(|s| u.is_subset_of(s)) && ct != cu {
            return fail(u, "c_G(T) != c_G(U) despite U inside a cut set");
        }
    }
    None
}

/// For connected unmixed G and every cut set S: membership of S ∪ {s} and
/// S ∖ {s} is governed by cut vertices / double reconnection, and no two
/// vertices of S reconnect the same pair of components and nothing else.
fn check_union_remark(g: &Graph) -> Option<Witness> {
    let family = cut_sets(g);
    if !is_unmixed_family(g, &family) {
        return None;
    }
    let all = g.vertices();
    for s in family.iter() {
        let c = g.component_count(s);
        for v in all.difference(s).iter() {
            let grows = g.component_count(s.with(v)) > c;
            if family.contains(s.with(v)) != grows {
                return Some(Witness::Message {
                    detail: format!("S = {s}, s = {v}: cut-vertex criterion fails"),
                });
            }
        }
        let mut pair_seen = Vec::new();
        for v in s.iter() {
            let rec = reconnected_components(g, s, v).expect("v ∈ s");
            if family.contains(s.without(v)) != (rec.len() == 2) {
                return Some(Witness::Message {
                    detail: format!("S = {s}, s = {v}: double-reconnection criterion fails"),
                });
            }
            if rec.len() == 2 {
                let pair = (rec[0], rec[1]);
                if pair_seen.contains(&pair) {
                    return Some(Witness::Message {
                        detail: format!("S = {s}: two vertices reconnect only pair {pair:?}"),
                    });
                }
                pair_seen.push(pair);
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// sweeps

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_n: usize,
    pub connected_only: bool,
    pub checks: Vec<Check>,
    /// Restricts the edge-mask integer to `[lo, hi)` within each vertex
    /// count, for resumable partial sweeps.
    pub range: Option<(u64, u64)>,
    pub workers: Option<usize>,
}

impl SweepConfig {
    pub fn new(max_n: usize, checks: Vec<Check>) -> SweepConfig {
        SweepConfig { max_n, connected_only: true, checks, range: None, workers: None }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepWitness {
    pub graph: String,
    pub payload: Witness,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepSummary {
    pub check: String,
    pub max_n: usize,
    pub graphs: u64,
    pub failures: u64,
    pub witness: Option<SweepWitness>,
    pub elapsed_ms: u128,
}

/// Runs every configured check over all labeled graphs on 1..=max_n
/// vertices. A failing graph halts the sweep for that check; the witness is
/// the minimal (n, edge mask) failure found before the halt.
pub fn sweep(config: &SweepConfig) -> Result<Vec<SweepSummary>> {
    let cap = effective_cap();
    if config.max_n > cap {
        return Err(Error::CapExceeded { requested: config.max_n, cap });
    }
    let run = |summaries: &mut Vec<SweepSummary>| {
        for &check in &config.checks {
            summaries.push(sweep_one(config, check));
        }
    };
    let mut summaries = Vec::new();
    match config.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| Error::InvalidInput(e.to_string()))?
            .install(|| run(&mut summaries)),
        None => run(&mut summaries),
    }
    Ok(summaries)
}

fn sweep_one(config: &SweepConfig, check: Check) -> SweepSummary {
    let start = Instant::now();
    let mut graphs = 0u64;
    let mut best: Option<(u64, Witness, Graph)> = None;
    for n in 1..=config.max_n {
        let ps = pairs(n);
        let total: u64 = 1 << ps.len();
        let (lo, hi) = match config.range {
            Some((lo, hi)) => (lo.min(total), hi.min(total)),
            None => (0, total),
        };
        let halted = AtomicBool::new(false);
        let (count, found) = (lo..hi)
            .into_par_iter()
            .fold(
                || (0u64, None::<(u64, Witness, Graph)>),
                |(mut count, mut local_best), mask| {
                    if halted.load(Ordering::Relaxed) && local_best.is_none() {
                        return (count, local_best);
                    }
                    let g = graph_from_edge_mask(n, &ps, mask);
                    if config.connected_only && !g.is_connected() {
                        return (count, local_best);
                    }
                    count += 1;
                    if let Some(w) = run_check(&g, check) {
                        halted.store(true, Ordering::Relaxed);
                        if local_best.as_ref().is_none_or(|(m, _, _)| mask < *m) {
                            local_best = Some((mask, w, g));
                        }
                    }
                    (count, local_best)
                },
            )
            .reduce(
                || (0u64, None),
                |(c1, b1), (c2, b2)| {
                    let best = match (b1, b2) {
                        (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
                        (a, b) => a.or(b),
                    };
                    (c1 + c2, best)
                },
            );
        graphs += count;
        if let Some(hit) = found {
            best = Some(hit);
            break;
        }
    }
    SweepSummary {
        check: check.name().to_string(),
        max_n: config.max_n,
        graphs,
        failures: best.is_some() as u64,
        witness: best.map(|(_, payload, g)| SweepWitness { graph: g.to_text(), payload }),
        elapsed_ms: start.elapsed().as_millis(),
    }
}

// ---------------------------------------------------------------------------
// bridging cut sets

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaVariant {
    ContainedTransversals,
    ClosedNeighborhood,
    CommonTransversal,
}

impl FromStr for LemmaVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<LemmaVariant> {
        match s {
            "4.3" => Ok(LemmaVariant::ContainedTransversals),
            "4.5" => Ok(LemmaVariant::ClosedNeighborhood),
            "4.7" => Ok(LemmaVariant::CommonTransversal),
            _ => Err(Error::InvalidInput(format!("unknown lemma variant {s:?}"))),
        }
    }
}

/// Searches `T ⊆ T₁ ∪ T₂` for a bridging cut set satisfying the chosen
/// lemma's conclusion. Unmet hypotheses yield a false verdict with a
/// `hypotheses_unmet` witness; a failed search under satisfied hypotheses is
/// a refutation.
///
/// Submasks of `T₁ ∪ T₂` are tried in descending mask order, so among
/// equal-size candidates the one with larger labels is found first.
pub fn find_bridging_cutset(
    g: &Graph,
    t1: VertexSet,
    t2: VertexSet,
    w1: VertexSet,
    w2: Option<VertexSet>,
    variant: LemmaVariant,
) -> VerdictReport {
    if let Some(reason) = hypothesis_failure(g, t1, t2, w1, w2, variant) {
        return VerdictReport::fail(Witness::HypothesesUnmet { reason });
    }
    let full = t1.union(t2);
    let mut stats = Stats::default();
    let mut sub = full.mask();
    loop {
        let t = VertexSet::from_mask(sub);
        stats.work_units += 1;
        if let Some(witness) = bridging_candidate(g, t, t1, t2, w1, w2, variant) {
            return VerdictReport { verdict: true, witness: Some(witness), stats };
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & full.mask();
    }
    VerdictReport::fail_with(
        Witness::Refutation {
            detail: format!("no bridging cut set inside T1 ∪ T2 = {full}"),
        },
        stats,
    )
}

fn hypothesis_failure(
    g: &Graph,
    t1: VertexSet,
    t2: VertexSet,
    w1: VertexSet,
    w2: Option<VertexSet>,
    variant: LemmaVariant,
) -> Option<String> {
    if !g.is_connected() {
        return Some("graph is not connected".into());
    }
    if !is_accessible_graph_with(g, &cut_sets(g)).verdict {
        return Some("graph is not accessible".into());
    }
    for (name, t) in [("T1", t1), ("T2", t2)] {
        if !is_cut_set(g, t) {
            return Some(format!("{name} = {t} is not a cut set"));
        }
    }
    let both = |w2: VertexSet| -> Option<String> {
        if !is_transversal(g, t1, w1) {
            return Some(format!("W1 = {w1} is not a transversal of G - T1"));
        }
        if !is_transversal(g, t2, w2) {
            return Some(format!("W2 = {w2} is not a transversal of G - T2"));
        }
        if !w1.is_subset_of(w2) {
            return Some("W1 is not contained in W2".into());
        }
        None
    };
    match variant {
        LemmaVariant::ContainedTransversals => {
            let w2 = w2?;
            if t1.is_subset_of(t2) {
                return Some("T1 is contained in T2".into());
            }
            if t1.len() >= t2.len() {
                return Some("|T1| >= |T2|".into());
            }
            if let Some(r) = both(w2) {
                return Some(r);
            }
            if let Some(v) =
                t2.difference(t1).iter().find(|&v| is_cut_set(g, t1.with(v)))
            {
                return Some(format!("T1 ∪ {{{v}}} is a cut set"));
            }
            if w2.difference(w1).is_subset_of(t1) {
                return Some("W2 ∖ W1 is contained in T1".into());
            }
            None
        }
        LemmaVariant::ClosedNeighborhood => {
            let w2 = w2?;
            if t1.is_subset_of(t2) {
                return Some("T1 is contained in T2".into());
            }
            if let Some(r) = both(w2) {
                return Some(r);
            }
            let union = t1.union(t2);
            if !t1
                .difference(t2)
                .iter()
                .any(|f| g.neighbors(f).expect("f is a vertex").is_subset_of(union))
            {
                return Some("no f in T1 ∖ T2 has N(f) ⊆ T1 ∪ T2".into());
            }
            None
        }
        LemmaVariant::CommonTransversal => {
            if t1.difference(t2).len() < 2 {
                return Some("|T1 ∖ T2| < 2".into());
            }
            if !is_transversal(g, t1, w1) || !is_transversal(g, t2, w1) {
                return Some(format!("W = {w1} is not a transversal of both deletions"));
            }
            let union = t1.union(t2);
            let mut sub = union.mask();
            loop {
                let h = VertexSet::from_mask(sub);
                if is_cut_set(g, h)
                    && g.component_count(h) > w1.len()
                    && is_partial_transversal(g, h, w1)
                {
                    return Some(format!(
                        "cut set {h} inside T1 ∪ T2 has a transversal strictly containing W"
                    ));
                }
                if sub == 0 {
                    return None;
                }
                sub = (sub - 1) & union.mask();
            }
        }
    }
}

fn bridging_candidate(
    g: &Graph,
    t: VertexSet,
    t1: VertexSet,
    t2: VertexSet,
    w1: VertexSet,
    w2: Option<VertexSet>,
    variant: LemmaVariant,
) -> Option<Witness> {
    if !is_cut_set(g, t) {
        return None;
    }
    match variant {
        LemmaVariant::ContainedTransversals => {
            if t1.is_subset_of(t) || t2.difference(t1).is_subset_of(t) {
                return None;
            }
            if !is_partial_transversal(g, t, w1) {
                return None;
            }
            // companion pairs: each f ∈ W2 ∖ W1 off T1 needs a c ∈ T2 ∖ T1
            // with T ∪ {c} a cut set and W1 ∪ {f} inside a transversal of it
            let mut pairs = Vec::new();
            for f in w2?.difference(w1).iter().filter(|&f| !t1.contains(f)) {
                let c = t2.difference(t1).iter().find(|&c| {
                    !t.contains(c)
                        && is_cut_set(g, t.with(c))
                        && is_partial_transversal(g, t.with(c), w1.with(f))
                })?;
                pairs.push((f, c));
            }
            Some(Witness::Bridging { cut_set: t, pairs })
        }
        LemmaVariant::ClosedNeighborhood => {
            if t1.difference(t2).is_subset_of(t) || t2.difference(t1).is_subset_of(t) {
                return None;
            }
            is_partial_transversal(g, t, w1)
                .then_some(Witness::Bridging { cut_set: t, pairs: Vec::new() })
        }
        LemmaVariant::CommonTransversal => {
            if t1.difference(t2).is_subset_of(t) || t2.difference(t1).is_subset_of(t) {
                return None;
            }
            is_transversal(g, t, w1)
                .then_some(Witness::Bridging { cut_set: t, pairs: Vec::new() })
        }
    }
}

// ---------------------------------------------------------------------------
// bounded realizability

/// Searches all labeled graphs on `ground_n..=max_n` vertices for one whose
/// cut-set family equals `sys` verbatim. A miss is only "none within bound".
pub fn realize_system(sys: &SetSystem, max_n: usize) -> Result<VerdictReport> {
    if !sys.contains(VertexSet::EMPTY) {
        return Err(Error::InvalidInput("set system must contain the empty set".into()));
    }
    let cap = effective_cap();
    if max_n > cap {
        return Err(Error::CapExceeded { requested: max_n, cap });
    }
    if max_n < sys.ground_n() {
        return Err(Error::InvalidInput(format!(
            "max_n = {max_n} is below the ground set size {}",
            sys.ground_n()
        )));
    }
    for n in sys.ground_n().max(1)..=max_n {
        // small subsets first so most candidates are rejected early
        let mut subsets: Vec<VertexSet> =
            (0..(1u64 << n)).map(VertexSet::from_mask).collect();
        subsets.sort();
        let ps = pairs(n);
        let hit = (0..(1u64 << ps.len())).into_par_iter().find_first(|&mask| {
            let g = graph_from_edge_mask(n, &ps, mask);
            subsets.iter().all(|&s| is_cut_set(&g, s) == sys.contains(s))
        });
        if let Some(mask) = hit {
            let g = graph_from_edge_mask(n, &ps, mask);
            return Ok(VerdictReport {
                verdict: true,
                witness: Some(Witness::Realized { graph: g.to_text() }),
                stats: Stats::default(),
            });
        }
    }
    Ok(VerdictReport::fail(Witness::Message {
        detail: format!("none within bound (searched up to {max_n} vertices)"),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{g5, g7, g9};

    fn vs(labels: &[usize]) -> VertexSet {
        VertexSet::from_labels(labels.iter().copied())
    }

    #[test]
    fn connected_graph_counts() {
        // 1, 1, 4, 38, 728 connected labeled graphs on 1..=5 vertices
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    #[test]
    fn enumeration_order_is_edge_mask_ascending() {
        let ps = pairs(3);
        assert_eq!(ps, vec![(1, 2), (1, 3), (2, 3)]);
        let first = graph_from_edge_mask(3, &ps, 0b011);
        assert_eq!(first.edges(), vec![(1, 2), (1, 3)]);
    }

    #[test]
    fn s2_examples() {
        let d5 = delta_complex(&g5()).unwrap().complex;
        assert!(satisfies_s2(&d5).verdict);
        let d9 = delta_complex(&g9()).unwrap().complex;
        assert!(satisfies_s2(&d9).verdict);
    }

    #[test]
    fn s2_fails_on_two_disjoint_triangles() {
        let c = SimplicialComplex::from_faces(
            6,
            vec!["y1y2y3".parse().unwrap(), "y4y5y6".parse().unwrap()],
        )
        .unwrap();
        let report = satisfies_s2(&c);
        assert!(!report.verdict);
        match report.witness.unwrap() {
            Witness::Face { face, .. } => assert_eq!(face, "∅"),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn equivalence_check_examples() {
        assert!(check_s2_equiv_accessible(&g5()).unwrap().verdict);
        // both sides false for the non-unmixed seven-vertex example
        assert!(check_s2_equiv_accessible(&g7()).unwrap().verdict);
        assert!(!satisfies_s2(&delta_complex(&g7()).unwrap().complex).verdict);
        let k4 = Graph::complete(4).unwrap();
        assert!(check_s2_equiv_accessible(&k4).unwrap().verdict);
    }

    use crate::graph::Graph;

    #[test]
    fn sweep_small() {
        let config = SweepConfig::new(3, vec![Check::S2EquivAccessible]);
        let summary = &sweep(&config).unwrap()[0];
        // 1 + 1 + 4 connected labeled graphs on up to three vertices
        assert_eq!(summary.graphs, 6);
        assert_eq!(summary.failures, 0);
        assert!(summary.witness.is_none());
        let json = serde_json::to_value(summary).unwrap();
        for key in ["check", "max_n", "graphs", "failures", "witness", "elapsed_ms"] {
            assert!(json.get(key).is_some(), "missing key {key}");
        }
    }

    #[test]
    fn sweep_range_restricts_masks() {
        let mut config = SweepConfig::new(3, vec![Check::UnmixedEquivalences]);
        config.range = Some((0, 1));
        // only the edgeless graphs survive, and only K1 is connected
        assert_eq!(sweep(&config).unwrap()[0].graphs, 1);
    }

    #[test]
    fn sweep_respects_cap() {
        let config = SweepConfig::new(9, vec![Check::UnmixedEquivalences]);
        assert!(matches!(sweep(&config), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn bridging_worked_examples() {
        let g = g9();
        let report = find_bridging_cutset(
            &g,
            vs(&[7, 8]),
            vs(&[3, 4, 8]),
            vs(&[1, 6, 9]),
            Some(vs(&[1, 5, 6, 9])),
            LemmaVariant::ContainedTransversals,
        );
        assert!(report.verdict);
        match report.witness.unwrap() {
            Witness::Bridging { cut_set, pairs } => {
                assert_eq!(cut_set, vs(&[4, 8]));
                assert_eq!(pairs, vec![(5, 3)]);
            }
            other => panic!("unexpected witness {other:?}"),
        }

        let report = find_bridging_cutset(
            &g,
            vs(&[2, 4, 8]),
            vs(&[2, 5, 7, 8]),
            vs(&[1, 3, 6, 9]),
            Some(vs(&[1, 3, 4, 6, 9])),
            LemmaVariant::ClosedNeighborhood,
        );
        assert!(report.verdict);
        match report.witness.unwrap() {
            Witness::Bridging { cut_set, .. } => assert_eq!(cut_set, vs(&[2, 7, 8])),
            other => panic!("unexpected witness {other:?}"),
        }

        let report = find_bridging_cutset(
            &g,
            vs(&[3, 4, 8]),
            vs(&[2, 7, 8]),
            vs(&[1, 5, 6, 9]),
            None,
            LemmaVariant::CommonTransversal,
        );
        assert!(report.verdict);
        match report.witness.unwrap() {
            Witness::Bridging { cut_set, .. } => assert_eq!(cut_set, vs(&[2, 4, 8])),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn bridging_reports_unmet_hypotheses() {
        let g = g9();
        let report = find_bridging_cutset(
            &g,
            vs(&[7, 8]),
            vs(&[3, 4, 8]),
            vs(&[1, 6, 9]),
            Some(vs(&[1, 6, 9])), // not a transversal of G - T2
            LemmaVariant::ContainedTransversals,
        );
        assert!(!report.verdict);
        assert!(matches!(report.witness, Some(Witness::HypothesesUnmet { .. })));
    }

    #[test]
    fn realize_examples() {
        let trivial = SetSystem::new(2, vec![VertexSet::EMPTY]).unwrap();
        let report = realize_system(&trivial, 2).unwrap();
        assert!(report.verdict);
        match report.witness.unwrap() {
            Witness::Realized { graph } => {
                let g = Graph::parse_text(&graph).unwrap();
                assert_eq!(cut_sets(&g).sets, vec![VertexSet::EMPTY]);
            }
            other => panic!("unexpected witness {other:?}"),
        }

        let five = SetSystem::new(
            5,
            vec![VertexSet::EMPTY, vs(&[2]), vs(&[1, 2])],
        )
        .unwrap();
        let report = realize_system(&five, 5).unwrap();
        assert!(report.verdict);
        match report.witness.unwrap() {
            Witness::Realized { graph } => {
                let g = Graph::parse_text(&graph).unwrap();
                assert_eq!(cut_sets(&g).sets, vec![VertexSet::EMPTY, vs(&[2]), vs(&[1, 2])]);
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn realize_rejects_bad_input() {
        let no_empty = SetSystem::new(2, vec![vs(&[1])]).unwrap();
        assert!(realize_system(&no_empty, 2).is_err());
        let trivial = SetSystem::new(2, vec![VertexSet::EMPTY]).unwrap();
        assert!(matches!(
            realize_system(&trivial, 9),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn transversal_predicates() {
        let g = g5();
        let s = vs(&[2]);
        assert!(is_transversal(&g, s, vs(&[1, 3])));
        assert!(is_partial_transversal(&g, s, vs(&[3])));
        assert!(!is_partial_transversal(&g, s, vs(&[1, 4])));
        assert!(!is_partial_transversal(&g, s, vs(&[2, 3])));
        assert!(!is_transversal(&g, s, vs(&[3])));
    }

    #[test]
    fn spot_check_sweep_checks_on_examples() {
        for check in Check::ALL {
            assert!(run_check(&g5(), check).is_none(), "{}", check.name());
            assert!(run_check(&g9(), check).is_none(), "{}", check.name());
            assert!(run_check(&g7(), check).is_none(), "{}", check.name());
        }
    }

    #[test]
    fn check_names_round_trip() {
        for check in Check::ALL {
            assert_eq!(check.name().parse::<Check>().unwrap(), check);
        }
        assert!("bogus".parse::<Check>().is_err());
    }
}
