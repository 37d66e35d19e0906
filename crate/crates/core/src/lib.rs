//! Exact conjugacy-class and irreducible-character censuses of the finite
//! general linear and unitary groups GL_n(q), SL_n(q), GU_n(q), SU_n(q).
//!
//! The library has two independent routes to every count and checks them
//! against each other:
//!
//! - a symbolic route ([`census`], [`series`]): class labels built from
//!   orbits of irreducible polynomials, the counting polynomials
//!   c_{nu,k}(q) and c_{n,k}(q), and the generating functions
//!   c_k(t) = prod (1 - eps t^(kr)) / (1 - q t^(kr));
//! - a brute-force route ([`matgroup`]): the groups themselves, enumerated
//!   as explicit matrices over explicit fields ([`gf`]), with their full
//!   conjugacy tables, classification flags and central actions.
//!
//! Everything is exact: integer polynomials, exact rationals, table-backed
//! finite fields. No floating point appears anywhere in a verification
//! path. All contexts are immutable after construction and safe to share
//! across threads.
//!
//! [`verify::verify_all`] runs the full cross-check suite; the `lie-census`
//! binary exposes it together with the individual censuses.

pub mod census;
pub mod error;
pub mod gf;
pub mod intpoly;
pub mod matgroup;
pub mod matrix;
pub mod partitions;
pub mod polyspace;
pub mod series;
pub mod verify;

mod polyarith;

pub use error::{Error, Result};

/// Enumeration budgets. Every operation that could blow up checks one of
/// these and returns [`Error::CapExceeded`] instead of running away.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Largest group order the oracle will hold in memory.
    pub max_group_order: u64,
    /// Order above which building a group is worth a diagnostic warning.
    pub soft_warn_order: u64,
    /// Largest candidate-matrix space the oracle will filter.
    pub max_candidates: u64,
    /// Largest polynomial-enumeration space per degree.
    pub max_poly_enum: u64,
    /// Largest number of class labels a single enumeration may produce.
    pub max_labels: u64,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            max_group_order: 2_000_000,
            soft_warn_order: 100_000,
            max_candidates: 10_000_000,
            max_poly_enum: polyspace::DEFAULT_POLY_ENUM_CAP,
            max_labels: 1_000_000,
        }
    }
}

impl Caps {
    /// Overrides the group-order cap, keeping everything else at default.
    pub fn with_max_order(max_group_order: u64) -> Caps {
        Caps {
            max_group_order,
            ..Caps::default()
        }
    }
}
