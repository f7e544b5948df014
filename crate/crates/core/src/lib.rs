//! Cohomology of homogeneous bundles on GL(n) flag varieties and
//! Grassmannians via the Bott algorithm, and Ext-vanishing checks for
//! bundle collections pulled back to the cotangent bundle of a Grassmannian.
//!
//! Layering, bottom up:
//!
//! - [`weights`]: integer weights, partitions, the rho-shifted action.
//! - [`bott`]: line-bundle cohomology on the full flag variety.
//! - [`schur`]: tensor products of Schur functors (Littlewood-Richardson).
//! - [`grassmann`]: Schur-functor bundles on `G(k, n)` and graded Homs
//!   against `Sym^d` of the tangent bundle.
//! - [`totalspace`]: graded Hom profiles on `T*G(k, n)`, tilting and
//!   vanishing checks.

pub mod bott;
mod decimal;
pub mod error;
pub mod grassmann;
pub mod schur;
pub mod totalspace;
pub mod weights;

pub use bott::{
    bott, bott_walk, canonical_weight, cech_p1_oracle, euler_characteristic, serre_dual, weyl_dim,
    BottResult,
};
pub use error::{Error, Result};
pub use grassmann::{
    hom_grassmann, hom_grassmann_terms, kapranov_reduce, sym_tangent_cauchy, DegreeMap,
    GrassmannContext, MixedBundle,
};
pub use schur::{lr_coefficients, tensor_weights, SchurExpansion};
pub use totalspace::{
    check_lemma_vanishing, check_tilting, hom_total, reproduce_g24_cases, GradedHomProfile,
    TiltingReport, VanishingReport, DEFAULT_CUTOFF,
};
pub use weights::{partitions, Partition, Weight};
