//! coverdeal: exact minimal-vertex-cover machinery for sensor-network
//! topologies built from a clique with star attachments, together with the
//! monomial algebra it encodes.
//!
//! The crate turns a simple graph into its edge ideal and its ideal of
//! vertex covers, enumerates minimal covers as hypergraph transversals,
//! certifies linear quotients of the cover ideal, derives Betti data and
//! standard ring invariants from closed formulas, and plans gateway/leader
//! placement from minimum covers.
//!
//! With the default `parallel` feature the antichain kernels run on rayon
//! for large inputs; building with `--no-default-features` selects the
//! sequential fallback with identical results.

pub mod chordal;
pub mod covers;
pub mod error;
mod exec;
pub mod graph;
pub mod hfamily;
pub mod ideal;
pub mod input;
pub mod invariants;
pub mod planner;
pub mod quotients;
pub mod vset;

pub use chordal::{chordality, Chordality};
pub use covers::{
    has_cover_of_size, minimal_covers, minimal_transversals, predicted_covers_h, CoverCollection,
    DEFAULT_ANTICHAIN_CAP,
};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use hfamily::HFamilySpec;
pub use ideal::{
    closed_form_cover_ideal_h, cover_ideal_by_intersection, cover_ideal_from_covers, edge_ideal,
    Monomial, MonomialIdeal,
};
pub use input::GraphInput;
pub use invariants::{
    cover_ideal_invariants, edge_ideal_invariants, height_check, unmixedness_check, HeightCheck,
    IdealSubject, InvariantReport,
};
pub use planner::{plan_placement, PlacementPlan};
pub use quotients::{
    betti_from_certificate, h_family_order, search_linear_quotients, verify_linear_quotients,
    QuotientCertificate, QuotientCheck, ResolutionShape, SearchOutcome, DEFAULT_SEARCH_BOUND,
};
pub use vset::VertexSet;
