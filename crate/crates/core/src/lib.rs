//! Exact proportions of r-regular elements in the finite exceptional groups
//! of Lie type.
//!
//! Two independent engines compute the same rational number:
//!
//! * [`tables`] evaluates closed-form rows, polynomials in `1/phi` where
//!   `phi` is the r-part of a cyclotomic value `Phi_i(q)`;
//! * [`torus`] sums `|C|/|W| * 1/|T_C|_r` over the maximal tori of the group.
//!
//! [`verify`] cross-checks the two and the number theory underneath them.

pub mod arith;
pub mod cyclotomic;
pub mod error;
pub mod family;
pub mod tables;
pub mod torus;
pub mod verify;

pub use arith::{is_prime, mult_order, prime_power_decompose, r_part, Prime, Rational};
pub use cyclotomic::{cyclotomic_eval, phi_r_part, phi_r_part_oracle, CycIndex};
pub use error::{Error, Result};
pub use family::{CenterSpec, FamilyId, GroupParams};
pub use tables::{
    center_adjust, constant_infimum, global_infimum, proportion_formula, proportion_torus,
    row_lookup, table_emit, Engine, FormulaRow, ProportionReport, RClass, RowGuard,
};
pub use torus::{
    builtin_catalog, load_catalog, parse_catalog, proportion_by_catalog, proportion_by_torus_sum,
    render_catalog, torus_order, validate_catalog, Catalog, Factor, Provenance, TorusClass,
    TwistedFactorKind,
};
