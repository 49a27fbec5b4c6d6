//! Exact homology-level invariants of Lefschetz fibrations.
//!
//! Dehn twists act on `H_1` of the fiber by symplectic transvections. From a
//! monodromy factorization this crate computes the first homology, Euler
//! characteristic and signature of the total space, with all arithmetic over
//! arbitrary-precision integers and rationals. The Korkmaz relators `W_g` and
//! their twisted fiber sums `W_g(n)` are built in [`atlas`].

pub mod atlas;
pub mod error;
pub mod fibration;
pub mod homology;
pub mod linalg;
pub mod meyer;
pub mod plumbing;
pub mod report;

pub use atlas::{korkmaz_curves, korkmaz_word, twisted_relator, AtlasCurve, CurveAtlas};
pub use error::{Error, Result};
pub use fibration::{fiber_sum, verify_relator, Base, Fibration, RelatorReport, VanishingCycle};
pub use homology::{
    conjugate_word, intersection_pairing, is_symplectic, twist_matrix, twist_power_matrix,
    word_matrix, Handedness, HomologyClass, Letter, Surface, SymplecticMatrix, TwistWord,
};
pub use linalg::{
    cokernel, form_signature, smith_normal_form, AbelianGroup, IntegerMatrix,
    RationalSymmetricForm, SmithForm,
};
pub use meyer::meyer_cocycle;
pub use plumbing::{plumbing_boundary_h1, PlumbingGraph, PlumbingVertex};
pub use report::{filling_report, FillingReport};
