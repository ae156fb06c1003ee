//! Exact invariants of nonsingular Smale flows on the 3-sphere.
//!
//! The crate computes, in exact integer arithmetic, the knot-theoretic
//! data attached to a Smale flow: structure and linking matrices of its
//! basic saddle sets, Franks' determinant formulas for the
//! attractor-repeller linking number and the Alexander polynomials,
//! Fox-calculus Alexander polynomials from group presentations, the
//! periodic-orbit combinatorics of the Lorenz template, and the
//! classification of Lorenz-Smale flow configurations. Flows are
//! descriptors, not vector fields; no integration is performed.

pub mod classifier;
pub mod compose;
pub mod franks;
pub mod group;
pub mod knot;
pub mod laurent;
pub mod symbolic;
pub mod template;

pub use classifier::{
    fixed_point_variant, invariants_of, validate, ArLink, ConfigInvariants, ConfigProposal,
    LorenzSmaleConfig, Rejection,
};
pub use compose::{
    alexander_of_flow, compose_split, compose_sum, realize_any_knot, ComposeError, FlowDescriptor,
    SaddleWitness,
};
pub use franks::{
    alexander_from_linking_matrix, build_lorenz_linking_matrix, linking_attractor_repeller,
    validate_simple_flow_linking_matrix, FranksError, LinkingMatrix, SaddleData,
};
pub use group::{
    alexander_from_presentation, alexander_with_deleted_column, fox_derivative,
    solve_rank1_abelianization, unknot_certificate, AbelianizationMap, GroupError,
    GroupPresentation, GroupWord, UnknotCertificate,
};
pub use knot::{KnotError, KnotType, PrimeKnot};
pub use laurent::{LaurentError, LaurentMatrix, LaurentPoly};
pub use symbolic::{
    count_closed_orbits, count_periodic_points, enumerate_orbits, strip_labels, IncidenceMatrix,
    OrbitWord, StructureMatrix, SymbolicError,
};
pub use template::{
    branch_line_order, linking_number, self_crossings, BranchPoint, LorenzEmbedding, TemplateError,
};
