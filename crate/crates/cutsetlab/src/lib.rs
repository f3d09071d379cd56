//! Combinatorics of cut sets in graphs: unmixedness, accessible set systems,
//! the simplicial complex Δ_G built from cut sets and transversals, Serre's
//! (S₂) condition via links, and exhaustive small-graph certification of the
//! theorems tying them together.

pub mod complex;
pub mod cutset;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod report;
pub mod system;
pub mod verify;

pub use complex::{delta_complex, DeltaComplex, Face, Facet, SimplicialComplex};
pub use cutset::{
    cut_sets, is_cut_set, is_unmixed, reconnected_components, reduce_to_cut_set, transversals,
    CutSetFamily, ReductionTrace,
};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use report::{Stats, VerdictReport, Witness};
pub use system::{
    is_accessible, is_accessible_graph, is_strongly_accessible, Characterization, SetSystem,
};
pub use verify::{
    check_s2_equiv_accessible, find_bridging_cutset, realize_system, satisfies_s2, sweep, Check,
    LemmaVariant, SweepConfig, SweepSummary,
};
