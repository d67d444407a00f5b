//! Exact computation of equivariant point-count characters for families of
//! marked curves assembled into necklace configurations.
//!
//! The crate is organized bottom-up:
//!
//! - [`partition`]: integer partitions, cycle types, `z_λ` and signs,
//! - [`lpoly`]: integer and rational polynomials in the Lefschetz class,
//! - [`series`]: truncated symmetric series in the power-sum basis with
//!   plethysm, Adams operations, and sign/Schur pairings,
//! - [`genus_zero`]: cycle-type point counts for marked rational curves and
//!   the generating series built from them,
//! - [`necklace`]: rotation- and reflection-averaged necklace strata, their
//!   sign multiplicities, and a direct fixed-point oracle,
//! - [`torsors`]: pair-torsor bookkeeping for level structures on the
//!   boundary, with cusp and component counts,
//! - [`dimensions`]: classical modular-form dimension formulas and the
//!   cancellation report that ties everything together.
//!
//! All arithmetic is exact (`num-bigint` / `num-rational`); nothing in the
//! public API returns a float.

pub mod arith;
mod cache;
pub mod dimensions;
pub mod error;
pub mod genus_zero;
pub mod lpoly;
pub mod necklace;
pub mod partition;
pub mod series;
pub mod torsors;

pub use dimensions::{
    cancellation_check, cancellation_check_with_adjustment, cusp_form_dimension,
    curve_invariants, eisenstein_dimension, interior_ledger, CancellationReport,
    CurveInvariants, MotiveLedger,
};
pub use error::{Error, Result};
pub use genus_zero::{
    closed_point_weight, configuration_character, configuration_series,
    twisted_configuration_count, CycleTypeChar,
};
pub use lpoly::{LPolynomial, RatPoly};
pub use necklace::{
    bead_series, bead_swap_series, cyclic_necklace_series, dihedral_necklace_series,
    necklace_alternating, reflection_average_series, strata_alternating, NecklaceStratum,
    NecklaceSymmetry,
};
pub use partition::{cycle_type, partitions_of, Partition};
pub use series::{CyclicScale, SymSeries, MAX_TRUNCATION};
pub use torsors::{
    boundary_component_count, boundary_components_by_enumeration, cusp_count,
    full_order_element_count, propagate_decorations, DecoratedNecklace, GroupElement, HalfEdge,
};
