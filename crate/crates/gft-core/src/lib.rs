//! Computational toolkit for geometric function theory on the unit disk.
//!
//! The crate provides four layers that the binary front end composes:
//!
//! * [`series`] — truncated Taylor arithmetic over complex coefficients,
//!   including branch-anchored log/exp/power recurrences;
//! * [`catalog`] — closed-form extremal functions (Koebe-type powers,
//!   half-plane map, logarithm, tilted spirals, pure power maps) exposing
//!   values, derivatives, and exact coefficient generators;
//! * [`transform`] — the integral operators (Alexander integral, scalar
//!   action on the derivative, derivative-product addition, ratio powers,
//!   Cesaro-type averaging), each realized both on coefficients and through
//!   adaptive path quadrature with branch tracking;
//! * [`analysis`] — pre-Schwarzian norm scans, family-membership margins,
//!   univalence falsification, and exact parameter-set predicates.

pub mod analysis;
pub mod catalog;
pub mod func;
pub mod grid;
pub mod quadrature;
pub mod series;
pub mod transform;

pub use analysis::{
    alexander_spiral_univalence, membership_margin, norm_estimate, radial_norm_limit,
    royster_segment_univalent, royster_univalent, set_membership, univalence_falsify, value_scale,
    ClassSpec, CollisionWitness, MembershipReport, NormEstimate, RadialLimit, UnivalenceSet,
    DEFAULT_SEPARATION,
};
pub use catalog::{AnalyticFn, CatalogError, CatalogSpec};
pub use func::{DiskFunction, EvalError, EvalResult};
pub use grid::DiskGrid;
pub use quadrature::{integrate_segment, QuadratureOpts};
pub use series::{SeriesError, TaylorPoly, DEFAULT_DEGREE};
pub use transform::{
    alexander, cesaro_beta, cesaro_beta_unchecked, hornich_add, hornich_scale, j_gamma,
    TransformedFn,
};

pub use num_complex::Complex64;
