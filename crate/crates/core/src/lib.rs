//! Classification machinery for optimal quaternary Hermitian LCD codes of
//! dimension 2.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! * [`gf4`]: the field GF(4) with conjugation,
//! * [`linalg`]: dense matrices over GF(4) (Hermitian inner product, Gram
//!   matrix, rank, determinant, Hermitian null space),
//! * [`code`]: linear codes (weight enumerator, Hermitian dual, hull, LCD test),
//! * [`family`]: the parametric construction `C(a)`, the optimal distance
//!   bound, admissibility conditions, equivalence moves and the closed-form
//!   family table,
//! * [`classify`]: multiplicity vectors, canonical forms under monomial
//!   equivalence, the exhaustive census and the table verifier.

#![no_std]

extern crate alloc;

pub mod classify;
pub mod code;
pub mod family;
pub mod gf4;
pub mod linalg;

mod error;

pub use classify::{
    are_equivalent, canonical_form, census, classify_optimal, code_to_multvector,
    induced_point_permutations, multvector_to_code, verify_tables, CensusFilter, Check, CheckId,
    EquivClass, MultVector, PointGroup, VerificationReport,
};
pub use code::{LinearCode, WeightEnumerator};
pub use error::Error;
pub use family::{dmax, ATuple, BTuple, FamilyEntry};
pub use gf4::F4;
pub use linalg::Matrix;
