//! Cohomology of Schur-functor bundles on the Grassmannian `G(k, V)`,
//! `dim V = n`.
//!
//! `U` is the tautological rank-`k` subbundle and `U^⊥` the dual of the
//! quotient (rank `n - k`). A bundle `Σ^α U^∨ ⊗ Σ^β U^⊥` with dominant `α`,
//! `β` has the same cohomology as the line bundle `O(α, β)` on the full
//! flag variety, so everything here bottoms out in [`crate::bott`].
//!
//! Internally every bundle is normalised to the form "Schur functor of
//! `U^∨` on the sub side, Schur functor of `U^⊥` on the quotient side":
//! `Σ^μ U = Σ^{dual μ} U^∨` and `Σ^ν (U^⊥)^∨ = Σ^{dual ν} U^⊥`.
//!
//! Graded Homs use `Hom^i(A, B) = H^i(A^∨ ⊗ B)` and
//! `Sym^d T_G = ⊕_{|λ| = d} Σ^λ U^∨ ⊗ Σ^λ (U^⊥)^∨` with λ running over
//! partitions with at most `min(k, n - k)` rows.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bott::{bott, euler_characteristic, BottResult};
use crate::error::{Error, Result};
use crate::schur::{tensor_weights, SchurExpansion};
use crate::weights::{partitions, Partition, Weight};

/// Degree -> dimension, zeros omitted.
pub type DegreeMap = BTreeMap<usize, BigUint>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawContext")]
pub struct GrassmannContext {
    k: usize,
    n: usize,
}

#[derive(Deserialize)]
struct RawContext {
    k: usize,
    n: usize,
}

impl TryFrom<RawContext> for GrassmannContext {
    type Error = Error;

    fn try_from(raw: RawContext) -> Result<Self> {
        GrassmannContext::new(raw.k, raw.n)
    }
}

impl GrassmannContext {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidContext { k, n });
        }
        Ok(GrassmannContext { k, n })
    }

    /// Projective space `P^{n-1} = G(1, n)`.
    pub fn projective(dim: usize) -> Result<Self> {
        Self::new(1, dim + 1)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of `U^⊥`.
    pub fn corank(&self) -> usize {
        self.n - self.k
    }

    /// `dim G = k (n - k)`.
    pub fn dim(&self) -> usize {
        self.k * (self.n - self.k)
    }

    /// Maximum number of rows of λ in the Cauchy decomposition.
    pub fn max_rows(&self) -> usize {
        self.k.min(self.n - self.k)
    }
}

/// `Σ^α U^∨ ⊗ Σ^β U^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedBundle {
    alpha: Weight,
    beta: Weight,
}

impl MixedBundle {
    /// `alpha` is a Schur weight on `U^∨`, `beta` on `U^⊥`.
    pub fn new(ctx: &GrassmannContext, alpha: Weight, beta: Weight) -> Result<Self> {
        alpha.check_len(ctx.k)?;
        beta.check_len(ctx.corank())?;
        alpha.ensure_dominant()?;
        beta.ensure_dominant()?;
        Ok(MixedBundle { alpha, beta })
    }

    /// `Σ^mu U ⊗ Σ^nu (U^⊥)^∨`, rewritten in normal form.
    pub fn from_u_and_quotient(ctx: &GrassmannContext, mu: &Weight, nu: &Weight) -> Result<Self> {
        mu.ensure_dominant()?;
        nu.ensure_dominant()?;
        Self::new(ctx, mu.dual(), nu.dual())
    }

    pub fn alpha(&self) -> &Weight {
        &self.alpha
    }

    pub fn beta(&self) -> &Weight {
        &self.beta
    }
}

/// Flag-variety weight `(α_1..α_k, β_1..β_{n-k})` with
/// `H^i(G, Σ^α U^∨ ⊗ Σ^β U^⊥) = H^i(F(V), O(Δ))`.
pub fn kapranov_reduce(ctx: &GrassmannContext, bundle: &MixedBundle) -> Result<Weight> {
    bundle.alpha.check_len(ctx.k)?;
    bundle.beta.check_len(ctx.corank())?;
    Ok(bundle.alpha.concat(&bundle.beta))
}

pub fn cohomology(ctx: &GrassmannContext, bundle: &MixedBundle) -> Result<BottResult> {
    Ok(bott(&kapranov_reduce(ctx, bundle)?))
}

/// One summand `Σ^λ U^∨ ⊗ Σ^λ (U^⊥)^∨` of `Sym^d T_G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyTerm {
    pub lambda: Partition,
    /// λ as a weight on `U^∨` (length `k`).
    pub on_u_dual: Weight,
    /// λ as a weight on `(U^⊥)^∨` (length `n - k`).
    pub on_quotient_dual: Weight,
}

/// Summands of `Sym^{degree} T_G` from the Cauchy formula, λ in reverse
/// lexicographic order.
pub fn sym_tangent_cauchy(ctx: &GrassmannContext, degree: u32) -> Vec<CauchyTerm> {
    partitions(degree, ctx.max_rows())
        .into_iter()
        .map(|lambda| {
            let on_u_dual = lambda.with_ambient(ctx.k).expect("rows <= k").to_weight();
            let on_quotient_dual = lambda
                .with_ambient(ctx.corank())
                .expect("rows <= n-k")
                .to_weight();
            CauchyTerm {
                lambda,
                on_u_dual,
                on_quotient_dual,
            }
        })
        .collect()
}

/// Cohomology contributed by a single λ of the Cauchy decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaContribution {
    pub lambda: Partition,
    pub by_degree: DegreeMap,
    /// Sum of Euler characteristics of all flag weights, computed without
    /// Bott sorting.
    pub euler: BigInt,
    /// Flag weights `Δ` of the irreducible summands with multiplicities.
    pub summands: Vec<(Weight, BigUint)>,
}

/// `Σ^α U^∨ ⊗ Σ^β U = Σ^α U^∨ ⊗ Σ^{dual β} U^∨`, the λ-independent part of
/// `Hom(Σ^α U, Σ^β U)`.
fn hom_kernel(ctx: &GrassmannContext, alpha: &Weight, beta: &Weight) -> Result<SchurExpansion> {
    alpha.check_len(ctx.k)?;
    beta.check_len(ctx.k)?;
    alpha.ensure_dominant()?;
    beta.ensure_dominant()?;
    tensor_weights(alpha, &beta.dual())
}

fn contribution(
    ctx: &GrassmannContext,
    kernel: &SchurExpansion,
    term: &CauchyTerm,
) -> Result<LambdaContribution> {
    let u_side = kernel.tensor_with(&term.on_u_dual)?;
    let quotient = term.on_quotient_dual.dual();
    let mut by_degree = DegreeMap::new();
    let mut euler = BigInt::default();
    let mut summands = Vec::with_capacity(u_side.len());
    for (gamma, mult) in u_side {
        let bundle = MixedBundle::new(ctx, gamma, quotient.clone())?;
        let delta = kapranov_reduce(ctx, &bundle)?;
        if let BottResult::Concentrated { degree, dim, .. } = bott(&delta) {
            *by_degree.entry(degree).or_default() += &mult * dim;
        }
        euler += BigInt::from(mult.clone()) * euler_characteristic(&delta);
        summands.push((delta, mult));
    }
    Ok(LambdaContribution {
        lambda: term.lambda.clone(),
        by_degree,
        euler,
        summands,
    })
}

/// Per-λ breakdown of `Hom^i_G(Σ^α U, Σ^β U ⊗ Sym^{degree} T_G)`, in the
/// order of [`sym_tangent_cauchy`].
pub fn hom_grassmann_terms(
    ctx: &GrassmannContext,
    alpha: &Weight,
    beta: &Weight,
    degree: u32,
) -> Result<Vec<LambdaContribution>> {
    let kernel = hom_kernel(ctx, alpha, beta)?;
    sym_tangent_cauchy(ctx, degree)
        .par_iter()
        .map(|term| contribution(ctx, &kernel, term))
        .collect()
}

/// `dim Hom^i_G(Σ^α U, Σ^β U ⊗ Sym^{degree} T_G)` for every `i` with a
/// nonzero answer. `α` and `β` are weights on `U` of length `k`.
pub fn hom_grassmann(
    ctx: &GrassmannContext,
    alpha: &Weight,
    beta: &Weight,
    degree: u32,
) -> Result<DegreeMap> {
    let mut out = DegreeMap::new();
    for c in hom_grassmann_terms(ctx, alpha, beta, degree)? {
        for (i, d) in c.by_degree {
            *out.entry(i).or_default() += d;
        }
    }
    Ok(out)
}
