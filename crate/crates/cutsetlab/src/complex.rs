//! The simplicial complex built from cut sets and transversals, plus the
//! generic face/link machinery it needs.
//!
//! Faces live on the 2n symbols y_1..y_n, x_1..x_n and are stored as a pair
//! of bitmasks. Canonical vertex order puts the whole Y block before the X
//! block; facet *printing* instead follows the x-then-y monomial convention
//! ("x1x3y1y3y4y5").

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cutset::{cut_sets, transversals};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Y,
    X,
}

/// One of the 2n symbols. `Ord` is Y-block-then-X-block, index ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComplexVertex {
    pub kind: VertexKind,
    pub index: usize,
}

impl fmt::Display for ComplexVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            VertexKind::Y => 'y',
            VertexKind::X => 'x',
        };
        write!(f, "{letter}{}", self.index)
    }
}

/// A face: y-symbols and x-symbols as vertex sets over [n].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face {
    pub y: VertexSet,
    pub x: VertexSet,
}

impl Face {
    pub const EMPTY: Face = Face { y: VertexSet::EMPTY, x: VertexSet::EMPTY };

    pub fn new(y: VertexSet, x: VertexSet) -> Face {
        Face { y, x }
    }

    pub fn len(&self) -> usize {
        self.y.len() + self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty() && self.x.is_empty()
    }

    pub fn is_subset_of(&self, other: Face) -> bool {
        self.y.is_subset_of(other.y) && self.x.is_subset_of(other.x)
    }

    pub fn intersection(&self, other: Face) -> Face {
        Face::new(self.y.intersection(other.y), self.x.intersection(other.x))
    }

    pub fn difference(&self, other: Face) -> Face {
        Face::new(self.y.difference(other.y), self.x.difference(other.x))
    }

    pub fn union(&self, other: Face) -> Face {
        Face::new(self.y.union(other.y), self.x.union(other.x))
    }

    pub fn is_disjoint_from(&self, other: Face) -> bool {
        self.intersection(other).is_empty()
    }

    /// Vertices in canonical (Y-block then X-block) order.
    pub fn vertices(&self) -> impl Iterator<Item = ComplexVertex> + '_ {
        self.y
            .iter()
            .map(|i| ComplexVertex { kind: VertexKind::Y, index: i })
            .chain(self.x.iter().map(|j| ComplexVertex { kind: VertexKind::X, index: j }))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Face) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Face {
    /// Size first, then lexicographic on the canonical vertex sequence, so ∅
    /// is the first face in any enumeration.
    fn cmp(&self, other: &Face) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vertices().cmp(other.vertices()))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        for j in self.x.iter() {
            write!(f, "x{j}")?;
        }
        for i in self.y.iter() {
            write!(f, "y{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Face {
    type Err = Error;

    fn from_str(s: &str) -> Result<Face> {
        let s = s.trim();
        if s.is_empty() || s == "∅" || s == "{}" {
            return Ok(Face::EMPTY);
        }
        let mut y = VertexSet::EMPTY;
        let mut x = VertexSet::EMPTY;
        let mut chars = s.chars().peekable();
        while let Some(letter) = chars.next() {
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let index: usize = digits.parse().map_err(|_| Error::FaceParse { input: s.to_string(), msg: "expected x<i>/y<i> tokens".to_string() })?;
            if index == 0 || index > crate::graph::MAX_VERTICES {
                return Err(Error::FaceParse { input: s.to_string(), msg: "expected x<i>/y<i> tokens".to_string() });
            }
            match letter {
                'y' => y = y.with(index),
                'x' => x = x.with(index),
                _ => return Err(Error::FaceParse { input: s.to_string(), msg: "expected x<i>/y<i> tokens".to_string() }),
            }
        }
        Ok(Face { y, x })
    }
}

/// A facet of Δ_G in its (S, W) coordinates: y-symbols on [n]∖S, x-symbols
/// on the transversal W.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    #[serde(rename = "S")]
    pub cut_set: VertexSet,
    #[serde(rename = "W")]
    pub transversal: VertexSet,
}

impl Facet {
    pub fn face(&self, n: usize) -> Face {
        Face::new(VertexSet::full(n).difference(self.cut_set), self.transversal)
    }
}

/// A simplicial complex given by its facets, pairwise incomparable and in
/// canonical order. The empty complex {∅} is stored as the single facet ∅.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds a complex from face generators: duplicates and non-maximal
    /// faces are dropped, the rest sorted canonically.
    pub fn from_faces(n: usize, faces: Vec<Face>) -> Result<SimplicialComplex> {
        if faces.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let mut facets: Vec<Face> = Vec::new();
        for f in faces {
            if facets.iter().any(|g| f.is_subset_of(*g)) {
                continue;
            }
            facets.retain(|g| !g.is_subset_of(f));
            facets.push(f);
        }
        facets.sort();
        Ok(SimplicialComplex { n, facets })
    }

    pub fn parse(n: usize, text: &str) -> Result<SimplicialComplex> {
        let mut faces = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            faces.push(line.parse()?);
        }
        SimplicialComplex::from_faces(n, faces)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.facets[0].len())
    }

    /// Max facet size minus one; the complex {∅} has dimension −1.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// Vertices contained in every facet.
    pub fn cone_apexes(&self) -> Face {
        self.facets
            .iter()
            .copied()
            .reduce(|a, b| a.intersection(b))
            .unwrap_or(Face::EMPTY)
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.facets.iter().any(|g| f.is_subset_of(*g))
    }

    /// Every subset of every facet, each once, in canonical order.
    pub fn all_faces(&self) -> Vec<Face> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for facet in &self.facets {
            // walk all submasks of the combined (y, x) pair
            let ym = facet.y.mask();
            let xm = facet.x.mask();
            let mut ys = ym;
            loop {
                let mut xs = xm;
                loop {
                    if seen.insert((ys, xs)) {
                        out.push(Face::new(VertexSet::from_mask(ys), VertexSet::from_mask(xs)));
                    }
                    if xs == 0 {
                        break;
                    }
                    xs = (xs - 1) & xm;
                }
                if ys == 0 {
                    break;
                }
                ys = (ys - 1) & ym;
            }
        }
        out.sort();
        out
    }

    /// link(F) via the facet formula { L ∖ F : L facet, F ⊆ L }. The results
    /// are pairwise incomparable because the facets are.
    pub fn link(&self, f: Face) -> Result<SimplicialComplex> {
        let link_facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|l| f.is_subset_of(**l))
            .map(|l| l.difference(f))
            .collect();
        if link_facets.is_empty() {
            return Err(Error::NotAFace { face: f.to_string() });
        }
        SimplicialComplex::from_faces(self.n, link_facets)
    }

    /// Connectivity of the facet-overlap graph (facets adjacent when they
    /// share a vertex). {∅} and single-facet complexes count as connected.
    pub fn is_connected(&self) -> bool {
        let k = self.facets.len();
        if k <= 1 {
            return true;
        }
        let mut visited = vec![false; k];
        let mut stack = vec![0usize];
        visited[0] = true;
        let mut reached = 1;
        while let Some(i) = stack.pop() {
            for (j, seen) in visited.iter_mut().enumerate() {
                if !*seen && !self.facets[i].is_disjoint_from(self.facets[j]) {
                    *seen = true;
                    reached += 1;
                    stack.push(j);
                }
            }
        }
        reached == k
    }
}

/// Δ_G together with the (S, W) coordinates of its facets.
#[derive(Clone, Debug)]
pub struct DeltaComplex {
    pub facets: Vec<Facet>,
    pub complex: SimplicialComplex,
}

/// Facets F(S, W) over all cut sets S and transversals W of G − S, ordered by
/// (|S|, S, W). Defined for connected graphs only; split disconnected input
/// into components first.
pub fn delta_complex(g: &Graph) -> Result<DeltaComplex> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut facets = Vec::new();
    for &s in &cut_sets(g).sets {
        for w in transversals(g, s)? {
            facets.push(Facet { cut_set: s, transversal: w });
        }
    }
    let faces = facets.iter().map(|f| f.face(n)).collect();
    Ok(DeltaComplex { facets, complex: SimplicialComplex::from_faces(n, faces)? })
}
