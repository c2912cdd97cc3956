//! Diagram-level knot and link invariants: Kauffman bracket and Jones
//! polynomials, Turaev genus, warping span, Goeritz signatures, Khovanov
//! homology over the two-element field, generators for torus-derived link
//! families, and interval-valued distance reports that combine computed and
//! cited bounds.

pub mod alternating;
pub mod bracket;
pub mod braid;
pub mod diagram;
pub mod error;
pub mod families;
pub mod hfk;
pub mod khovanov;
pub mod parse;
pub mod signature;
pub mod poly;
pub mod turaev;
pub mod warping;

pub use bracket::{jones_polynomial, jones_span, kauffman_bracket, DEFAULT_BRACKET_CAP};
pub use braid::{braid_closure, BraidWord};
pub use diagram::{Crossing, Pass, PlanarDiagram, Resolution, StateAssignment};
pub use error::{Error, Result};
pub use families::{
    desk_corpus, figure_eight, known_values, modified_torus_braid, pretzel, torus_braid,
    toroidal_alternating_check, whitehead_double, whitehead_iterate_diagram, Fact, FactValue,
    Family, FamilyFacts,
};
pub use hfk::{hfk_whitehead_dims, hfk_width};
pub use khovanov::{kh_delta_width, khovanov_f2, BigradedDimensions, GradingScheme, DEFAULT_KH_CAP};
pub use parse::{parse_braid, parse_line, parse_pd, parse_pd_named, parse_tangle, DiagramSource};
pub use poly::{LaurentPolynomial, Var};
pub use signature::{
    goeritz_form, goeritz_signature, modified_torus_bounds, symmetric_signature,
    torus_s_invariant, torus_signature_closed, torus_signature_recursive, GoeritzForm,
    ModifiedTorusBounds, RatInterval,
};
pub use turaev::{state_loop_count, tangle_extend, turaev_genus_diagram, Tangle};
pub use warping::{edge_weights, warp_report, warping_span_diagram, WeightedTraversal};
