//! Levelable graphs: graphs admitting strictly positive integer vertex
//! weights under which every maximal independent set has the same total.
//!
//! The crate decides levelability exactly (rational simplex over the
//! maximal-independent-set constraints), emits certificates that can be
//! re-checked independently, classifies several graph families in closed
//! form, and computes socle vectors of the associated artinian monomial
//! quotients.

pub mod algebra;
pub mod chordal;
pub mod constructions;
pub mod error;
pub mod experiments;
pub mod families;
pub mod generators;
pub mod graph;
pub mod level;
pub mod lp;
pub mod mis;
pub mod rational;
pub mod wcw;

pub use algebra::{
    independence_complex, is_level_quotient, monomial_basis, socle_vector, vtz_feasible,
    ExponentVector, FacetComplex, SocleVector,
};
pub use constructions::{
    attach_graphs, duplicate_vertex, expand_vertex, realize_weight_profile, WeightProfile,
};
pub use error::{Error, Result};
pub use experiments::{wcw_dim_zero_fraction, DimZeroReport};
pub use families::{classify, classify_family, FamilyTag, FamilyVerdict};
pub use generators::{generate_family, CwSpec, FamilySpec};
pub use graph::{parse_graph, Graph};
pub use level::{
    decide_levelable, find_obstruction, validate_weights, verify_certificate, DecideConfig,
    Decider, LevelCertificate, ObstructionQuadruple, WeightFunction,
};
pub use mis::{enumerate_max_independent_sets, independence_number, is_well_covered, MaxIndFamily};
pub use rational::{Rational, RationalVector};
pub use wcw::{constraint_matrix, is_wcw_weighting, wcw_basis, WcwBasis};
