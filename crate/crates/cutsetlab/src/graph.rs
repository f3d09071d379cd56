//! Graphs on labeled vertices `1..=n` and the vertex-set currency used
//! throughout the crate.
//!
//! Vertices are 1-based. A [`VertexSet`] is a bitmask over one machine word,
//! so `n <= 64`; the exhaustive harnesses cap far below that.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertex labels from `1..=n`, stored as a bitmask (bit `v-1` = vertex `v`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1 << (v - 1))
    }

    /// The full set `{1, ..., n}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (MAX_VERTICES - n))
        }
    }

    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in labels {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        self.0 |= 1 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        self.0 &= !(1 << (v - 1));
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> VertexSet {
        let mut s = self;
        s.insert(v);
        s
    }

    pub fn without(self, v: usize) -> VertexSet {
        let mut s = self;
        s.remove(v);
        s
    }

    /// Smallest label, or `None` for the empty set.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Ascending iteration over labels.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let v = mask.trailing_zeros() as usize + 1;
                mask &= mask - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Canonical order: by size, then lexicographically on the ascending
/// element sequence. This is the order used for families of sets.
impl Ord for VertexSet {
    fn cmp(&self, other: &VertexSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &VertexSet) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a comma-separated list of 1-based labels; the empty string is ∅.
impl FromStr for VertexSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<VertexSet> {
        let mut set = VertexSet::EMPTY;
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(set);
        }
        for part in trimmed.split(',') {
            let v: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad vertex label {part:?}")))?;
            if !(1..=MAX_VERTICES).contains(&v) {
                return Err(Error::VertexOutOfRange { v, n: MAX_VERTICES });
            }
            set.insert(v);
        }
        Ok(set)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let labels: Vec<usize> = Vec::deserialize(deserializer)?;
        for &v in &labels {
            if !(1..=MAX_VERTICES).contains(&v) {
                return Err(D::Error::custom(format!("vertex label {v} out of range")));
            }
        }
        Ok(VertexSet::from_labels(labels))
    }
}

/// Connected components of `G - removed`, ordered ascending by minimum element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentPartition {
    pub removed: VertexSet,
    pub components: Vec<VertexSet>,
}

impl ComponentPartition {
    /// `c_G(removed)`.
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

/// Block (biconnected-component) decomposition of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    /// Indices into `blocks` of the blocks containing exactly one cut vertex.
    pub terminal_blocks: Vec<usize>,
}

/// A finite simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for u in 1..=n {
            for v in (u + 1)..=n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for v in 1..n {
            g.add_edge(v, v + 1)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::InvalidEdge { u, v, reason: "loop".into() });
        }
        for w in [u, v] {
            if !(1..=self.n).contains(&w) {
                return Err(Error::VertexOutOfRange { v: w, n: self.n });
            }
        }
        if self.adj[u - 1] & (1 << (v - 1)) != 0 {
            return Err(Error::InvalidEdge { u, v, reason: "duplicate edge".into() });
        }
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in VertexSet(self.adj[u - 1]).iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && VertexSet(self.adj[u - 1]).contains(v)
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        if !(1..=self.n).contains(&v) {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(VertexSet(self.adj[v - 1]))
    }

    pub(crate) fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    /// Component vertex masks of `G - removed`, ascending by minimum element.
    pub(crate) fn component_masks(&self, removed: u64) -> Vec<u64> {
        let mut rest = VertexSet::full(self.n).mask() & !removed;
        let mut out = Vec::new();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut grown = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    grown |= self.adj[v] & rest;
                }
                frontier = grown & !comp;
                comp |= frontier;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// `c_G(removed)` without materializing the partition.
    pub fn component_count(&self, removed: VertexSet) -> usize {
        let mut rest = VertexSet::full(self.n).mask() & !removed.mask();
        let mut count = 0;
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut grown = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    grown |= self.adj[v] & rest;
                }
                frontier = grown & !comp;
                comp |= frontier;
            }
            count += 1;
            rest &= !comp;
        }
        count
    }

    /// Connected components of the induced subgraph on `[n] \ removed`.
    pub fn components(&self, removed: VertexSet) -> ComponentPartition {
        let removed = removed.intersection(self.vertices());
        let components = self
            .component_masks(removed.mask())
            .into_iter()
            .map(VertexSet::from_mask)
            .collect();
        ComponentPartition { removed, components }
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(VertexSet::EMPTY) <= 1
    }

    /// Vertices whose neighborhood induces a complete subgraph.
    ///
    /// Equivalent to membership in a unique maximal clique; the test suite
    /// cross-checks this against exhaustive maximal-clique enumeration.
    pub fn free_vertices(&self) -> VertexSet {
        let mut free = VertexSet::EMPTY;
        'outer: for v in 1..=self.n {
            let nb = self.adj[v - 1];
            let mut m = nb;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                if nb & !(self.adj[u] | (1 << u)) != 0 {
                    continue 'outer;
                }
            }
            free.insert(v);
        }
        free
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![2u8; self.n];
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let mut m = self.adj[v];
                while m != 0 {
                    let u = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if color[u] == 2 {
                        color[u] = 1 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Biconnected-component decomposition. Rejects disconnected input.
    pub fn block_decomposition(&self) -> Result<BlockDecomposition> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut blocks: Vec<VertexSet> = Vec::new();
        if self.n == 1 {
            blocks.push(VertexSet::singleton(1));
        } else {
            let mut state = BlockDfs {
                g: self,
                disc: vec![0; self.n],
                low: vec![0; self.n],
                timer: 0,
                edge_stack: Vec::new(),
                blocks: Vec::new(),
            };
            state.visit(0, usize::MAX);
            blocks = state.blocks;
        }
        let mut cut_vertices = VertexSet::EMPTY;
        if self.n > 1 {
            let base = self.component_count(VertexSet::EMPTY);
            for v in 1..=self.n {
                if self.component_count(VertexSet::singleton(v)) > base {
                    cut_vertices.insert(v);
                }
            }
        }
        blocks.sort();
        let terminal_blocks = blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.intersection(cut_vertices).len() == 1)
            .map(|(i, _)| i)
            .collect();
        Ok(BlockDecomposition { blocks, cut_vertices, terminal_blocks })
    }

    /// Induced subgraph on `sub`, relabeled to `1..=|sub|`.
    /// Returns the subgraph and the old label of each new vertex.
    pub fn induced(&self, sub: VertexSet) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = sub.intersection(self.vertices()).iter().collect();
        let mut g = Graph { n: labels.len(), adj: vec![0; labels.len()] };
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        (g, labels)
    }

    /// Text format: line 1 is `n`; each following non-empty, non-`#` line is
    /// an edge `u v` with `1 <= u < v <= n`. Duplicate edges are rejected.
    pub fn parse_text(input: &str) -> Result<Graph> {
        let mut g: Option<Graph> = None;
        for (idx, raw) in input.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = idx + 1;
            match g {
                None => {
                    let n: usize = line.parse().map_err(|_| Error::Parse {
                        line: lineno,
                        msg: format!("expected vertex count, got {line:?}"),
                    })?;
                    g = Some(Graph::new(n)?);
                }
                Some(ref mut graph) => {
                    let mut it = line.split_whitespace();
                    let (u, v) = match (it.next(), it.next(), it.next()) {
                        (Some(a), Some(b), None) => {
                            let u: usize = a.parse().map_err(|_| Error::Parse {
                                line: lineno,
                                msg: format!("bad vertex {a:?}"),
                            })?;
                            let v: usize = b.parse().map_err(|_| Error::Parse {
                                line: lineno,
                                msg: format!("bad vertex {b:?}"),
                            })?;
                            (u, v)
                        }
                        _ => {
                            return Err(Error::Parse {
                                line: lineno,
                                msg: format!("expected \"u v\", got {line:?}"),
                            })
                        }
                    };
                    if u >= v {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("edges must satisfy u < v, got {u} {v}"),
                        });
                    }
                    graph.add_edge(u, v).map_err(|e| Error::Parse {
                        line: lineno,
                        msg: e.to_string(),
                    })?;
                }
            }
        }
        g.ok_or(Error::Parse { line: 0, msg: "empty input".into() })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Header-less graph6 (bytes offset by 63, upper triangle column-major).
    pub fn parse_graph6(input: &str) -> Result<Graph> {
        let bytes = input.trim().as_bytes();
        if bytes.is_empty() {
            return Err(Error::Graph6("empty input".into()));
        }
        let (n, rest) = if bytes[0] == 126 {
            if bytes.len() < 4 || bytes[1] == 126 {
                return Err(Error::Graph6("unsupported or truncated size field".into()));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                if !(63..=126).contains(&b) {
                    return Err(Error::Graph6(format!("byte {b} out of range")));
                }
                n = (n << 6) | (b as usize - 63);
            }
            (n, &bytes[4..])
        } else {
            if !(63..=126).contains(&bytes[0]) {
                return Err(Error::Graph6(format!("byte {} out of range", bytes[0])));
            }
            (bytes[0] as usize - 63, &bytes[1..])
        };
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let nbits = n * (n.saturating_sub(1)) / 2;
        let nbytes = nbits.div_ceil(6);
        if rest.len() != nbytes {
            return Err(Error::Graph6(format!(
                "expected {nbytes} data bytes for n={n}, got {}",
                rest.len()
            )));
        }
        let mut g = Graph::new(n)?;
        let mut k = 0usize;
        for v in 1..n {
            for u in 0..v {
                let byte = rest[k / 6];
                if !(63..=126).contains(&byte) {
                    return Err(Error::Graph6(format!("byte {byte} out of range")));
                }
                let bit = (byte as usize - 63) >> (5 - k % 6) & 1;
                if bit == 1 {
                    g.add_edge(u + 1, v + 1)?;
                }
                k += 1;
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

struct BlockDfs<'a> {
    g: &'a Graph,
    disc: Vec<u32>,
    low: Vec<u32>,
    timer: u32,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
}

impl BlockDfs<'_> {
    // 0-based vertices; recursion depth is bounded by MAX_VERTICES.
    fn visit(&mut self, v: usize, parent: usize) {
        self.timer += 1;
        self.disc[v] = self.timer;
        self.low[v] = self.timer;
        let mut m = self.g.adj[v];
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            if u == parent {
                continue;
            }
            if self.disc[u] == 0 {
                self.edge_stack.push((v, u));
                self.visit(u, v);
                self.low[v] = self.low[v].min(self.low[u]);
                if self.low[u] >= self.disc[v] {
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.edge_stack.pop() {
                        block.insert(a + 1);
                        block.insert(b + 1);
                        if (a, b) == (v, u) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if self.disc[u] < self.disc[v] {
                self.edge_stack.push((v, u));
                self.low[v] = self.low[v].min(self.disc[u]);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{g5, g7, g9};

    #[test]
    fn vertex_set_basics() {
        let s = VertexSet::from_labels([3, 1, 3]);
        assert_eq!(s.to_vec(), vec![1, 3]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(VertexSet::EMPTY.to_string(), "∅");
        assert_eq!("2,4,8".parse::<VertexSet>().unwrap().to_vec(), vec![2, 4, 8]);
        assert_eq!("".parse::<VertexSet>().unwrap(), VertexSet::EMPTY);
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut sets = vec![
            VertexSet::from_labels([2, 3]),
            VertexSet::from_labels([1, 4]),
            VertexSet::from_labels([3]),
            VertexSet::EMPTY,
        ];
        sets.sort();
        assert_eq!(
            sets,
            vec![
                VertexSet::EMPTY,
                VertexSet::from_labels([3]),
                VertexSet::from_labels([1, 4]),
                VertexSet::from_labels([2, 3]),
            ]
        );
    }

    #[test]
    fn components_of_g5_minus_2() {
        let part = g5().components(VertexSet::singleton(2));
        assert_eq!(part.count(), 2);
        assert_eq!(part.components[0].to_vec(), vec![1, 4, 5]);
        assert_eq!(part.components[1].to_vec(), vec![3]);
    }

    #[test]
    fn components_of_connected_graph_with_nothing_removed() {
        let g = g9();
        let part = g.components(VertexSet::EMPTY);
        assert_eq!(part.count(), 1);
        assert_eq!(part.components[0], g.vertices());
    }

    #[test]
    fn components_of_g9_minus_248() {
        let part = g9().components(VertexSet::from_labels([2, 4, 8]));
        assert_eq!(part.count(), 4);
        let comps: Vec<Vec<usize>> = part.components.iter().map(|c| c.to_vec()).collect();
        assert_eq!(comps, vec![vec![1], vec![3, 5], vec![6, 7], vec![9]]);
    }

    #[test]
    fn removing_all_vertices_leaves_empty_partition() {
        let g = g5();
        let part = g.components(g.vertices());
        assert_eq!(part.count(), 0);
    }

    #[test]
    fn neighbors_examples() {
        assert_eq!(g5().neighbors(3).unwrap().to_vec(), vec![2]);
        assert_eq!(g9().neighbors(8).unwrap().to_vec(), vec![2, 3, 5, 7, 9]);
        let isolated = Graph::new(3).unwrap();
        assert_eq!(isolated.neighbors(2).unwrap(), VertexSet::EMPTY);
        assert!(g5().neighbors(6).is_err());
    }

    #[test]
    fn free_vertices_examples() {
        assert_eq!(g5().free_vertices().to_vec(), vec![3, 4, 5]);
        assert_eq!(Graph::complete(4).unwrap().free_vertices(), VertexSet::full(4));
        assert_eq!(Graph::path(4).unwrap().free_vertices().to_vec(), vec![1, 4]);
    }

    #[test]
    fn block_decomposition_of_p4() {
        let bd = Graph::path(4).unwrap().block_decomposition().unwrap();
        assert_eq!(
            bd.blocks,
            vec![
                VertexSet::from_labels([1, 2]),
                VertexSet::from_labels([2, 3]),
                VertexSet::from_labels([3, 4]),
            ]
        );
        assert_eq!(bd.cut_vertices.to_vec(), vec![2, 3]);
        assert_eq!(bd.terminal_blocks, vec![0, 2]);
    }

    #[test]
    fn block_decomposition_of_complete_graph() {
        let bd = Graph::complete(5).unwrap().block_decomposition().unwrap();
        assert_eq!(bd.blocks, vec![VertexSet::full(5)]);
        assert_eq!(bd.cut_vertices, VertexSet::EMPTY);
        assert!(bd.terminal_blocks.is_empty());
    }

    #[test]
    fn block_decomposition_of_g5() {
        let bd = g5().block_decomposition().unwrap();
        assert_eq!(
            bd.blocks,
            vec![VertexSet::from_labels([2, 3]), VertexSet::from_labels([1, 2, 4, 5])]
        );
        assert_eq!(bd.cut_vertices.to_vec(), vec![2]);
        assert_eq!(bd.terminal_blocks, vec![0, 1]);
    }

    #[test]
    fn block_decomposition_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(matches!(g.block_decomposition(), Err(Error::Disconnected)));
    }

    #[test]
    fn parse_text_round_trip_and_errors() {
        let g = Graph::parse_text("5\n# comment\n1 2\n2 3\n1 4\n2 4\n2 5\n1 5\n").unwrap();
        assert_eq!(g, g5());
        assert!(Graph::parse_text("3\n2 1\n").is_err());
        assert!(Graph::parse_text("3\n1 2\n1 2\n").is_err());
        assert!(Graph::parse_text("3\n1 4\n").is_err());
        let back = Graph::parse_text(&g7().to_text()).unwrap();
        assert_eq!(back, g7());
    }

    #[test]
    fn parse_graph6_known_string() {
        // 5 vertices, edges 1-3, 1-5, 2-4, 4-5.
        let g = Graph::parse_graph6("DQc").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(1, 3), (1, 5), (2, 4), (4, 5)]);
    }

    #[test]
    fn g9_matches_figure_adjacencies() {
        let g = g9();
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.neighbors(1).unwrap().to_vec(), vec![2]);
        assert_eq!(g.neighbors(4).unwrap().to_vec(), vec![2, 5, 7]);
    }
}
