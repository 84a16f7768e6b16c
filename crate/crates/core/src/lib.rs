//! Exact-arithmetic models for the arithmetic geometry of paramodular Siegel
//! threefolds: Weil-Deligne representations with a weight-monodromy purity
//! checker, the catalog of paramodular-spherical local representations of
//! GSp(4), the incidence combinatorics of supersingular loci over a biregular
//! tree, a Picard-Lefschetz ledger with integral component groups, a level
//! lowering decision procedure, and classical / Siegel dimension identities.
//!
//! All linear algebra is exact: big-integer matrices where the objects are
//! integral, big-rational matrices and subspaces everywhere else. There is no
//! floating point in this crate.

pub mod dimensions;
pub mod local_reps;
pub mod matrix;
pub mod picard_lefschetz;
pub mod snf;
pub mod ss_locus;
pub mod wd;

pub use matrix::{IntMatrix, MatrixError, RatMatrix, Subspace};
pub use snf::{smith_normal_form, SmithNormalForm};
pub use wd::{
    monodromy_filtration, EigenvalueSymbol, Monomial, MonodromyFiltration, PurityCertificate,
    WdError, WeilDeligneRep,
};
