//! Graded Hom data on the cotangent bundle `X₀ = T*G` of a Grassmannian,
//! and the checks built on it.
//!
//! Functions on `X₀` pushed down to `G` are `⊕_d Sym^d T_G`, so
//! `Hom^i_{X₀}(π*Σ^α U, π*Σ^β U) = ⊕_d Hom^i_G(Σ^α U, Σ^β U ⊗ Sym^d T_G)`.
//! Each graded piece is computed exactly by [`crate::grassmann`].
//!
//! For the one-parameter deformation `X` (total space of the extension of
//! `O_G` by `Ω_G`) the pushforward of `O_X` is filtered with the same graded
//! pieces, so vanishing of every piece in degree `i` gives vanishing of
//! `Hom^i_X`. A nonzero piece is exact on `X₀` but only an upper bound on `X`.
//!
//! All verdicts are certified up to a cutoff on the symmetric degree `d`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bott::{bott, BottResult};
use crate::error::{Error, Result};
use crate::grassmann::{hom_grassmann_terms, GrassmannContext};
use crate::weights::{Partition, Weight};

/// Symmetric-degree cutoff used when the caller does not pick one.
pub const DEFAULT_CUTOFF: u32 = 30;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileEntry {
    pub i: usize,
    pub n: u32,
    #[serde(with = "crate::decimal")]
    pub dim: BigUint,
}

/// Contribution of one λ of the Cauchy decomposition in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub i: usize,
    pub n: u32,
    pub lambda: Partition,
    #[serde(with = "crate::decimal")]
    pub dim: BigUint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeformationStatus {
    /// Every graded piece vanishes up to the cutoff, so `Hom^i_X` does too.
    CertifiedZero,
    /// Some graded piece is nonzero; its dimension bounds `Hom^i_X` from
    /// above only.
    UpperBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub i: usize,
    /// `sum_d dim Hom^i_G(.., Sym^d)` for `d <= cutoff`: exact on `X₀`.
    #[serde(with = "crate::decimal")]
    pub x0: BigUint,
    pub x: DeformationStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedHomProfile {
    pub context: GrassmannContext,
    pub src: Weight,
    pub dst: Weight,
    pub cutoff: u32,
    /// Nonzero `(i, d) -> dim`, sorted by `(i, d)`.
    pub entries: Vec<ProfileEntry>,
    /// Nonzero per-λ pieces, sorted by `(i, d)` then Cauchy order.
    pub pieces: Vec<Piece>,
    /// One row per degree `0..=dim G`.
    pub degrees: Vec<DegreeSummary>,
}

impl GradedHomProfile {
    pub fn dim(&self, i: usize, n: u32) -> BigUint {
        self.entries
            .iter()
            .find(|e| e.i == i && e.n == n)
            .map(|e| e.dim.clone())
            .unwrap_or_default()
    }

    pub fn entries_in_degree(&self, i: usize) -> impl Iterator<Item = &ProfileEntry> {
        self.entries.iter().filter(move |e| e.i == i)
    }

    /// Smallest symmetric degree with a nonzero piece in cohomological
    /// degree `i`, with the first such λ in Cauchy order.
    pub fn witness(&self, i: usize) -> Option<&Piece> {
        self.pieces.iter().find(|p| p.i == i)
    }

    pub fn piece(&self, i: usize, n: u32, lambda: &[u32]) -> Option<&Piece> {
        self.pieces
            .iter()
            .find(|p| p.i == i && p.n == n && p.lambda.parts() == lambda)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.entries.iter().map(|e| e.i).max()
    }
}

/// Graded `Hom^i(π*Σ^src U, π*Σ^dst U)` on `T*G` for symmetric degrees
/// `0..=cutoff`.
pub fn hom_total(
    ctx: &GrassmannContext,
    src: &Weight,
    dst: &Weight,
    cutoff: u32,
) -> Result<GradedHomProfile> {
    let per_degree: Vec<_> = (0..=cutoff)
        .into_par_iter()
        .map(|n| hom_grassmann_terms(ctx, src, dst, n).map(|terms| (n, terms)))
        .collect::<Result<_>>()?;

    let mut table: BTreeMap<(usize, u32), BigUint> = BTreeMap::new();
    let mut pieces = Vec::new();
    for (n, terms) in per_degree {
        for term in terms {
            for (i, dim) in term.by_degree {
                *table.entry((i, n)).or_default() += &dim;
                pieces.push(Piece {
                    i,
                    n,
                    lambda: term.lambda.clone(),
                    dim,
                });
            }
        }
    }
    // stable: keeps Cauchy order within each (i, n)
    pieces.sort_by_key(|p| (p.i, p.n));

    let entries: Vec<ProfileEntry> = table
        .into_iter()
        .map(|((i, n), dim)| ProfileEntry { i, n, dim })
        .collect();
    let degrees = (0..=ctx.dim())
        .map(|i| {
            let x0: BigUint = entries.iter().filter(|e| e.i == i).map(|e| &e.dim).sum();
            let x = if x0 == BigUint::default() {
                DeformationStatus::CertifiedZero
            } else {
                DeformationStatus::UpperBound
            };
            DegreeSummary { i, x0, x }
        })
        .collect();

    Ok(GradedHomProfile {
        context: *ctx,
        src: src.clone(),
        dst: dst.clone(),
        cutoff,
        entries,
        pieces,
        degrees,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub n: u32,
    pub lambda: Partition,
    #[serde(with = "crate::decimal")]
    pub dim: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum VerdictStatus {
    CertifiedZero,
    Nonzero { witness: Witness },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub src: Weight,
    pub dst: Weight,
    pub i: usize,
    #[serde(flatten)]
    pub status: VerdictStatus,
}

impl Verdict {
    pub fn is_zero(&self) -> bool {
        matches!(self.status, VerdictStatus::CertifiedZero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingReport {
    pub context: GrassmannContext,
    pub collection: Vec<Weight>,
    pub cutoff: u32,
    /// Ordered pairs in collection order, then `i = 1..=dim G`.
    pub verdicts: Vec<Verdict>,
}

impl TiltingReport {
    /// No `Hom^i` with `i != 0` between any two members, up to the cutoff.
    pub fn is_tilting(&self) -> bool {
        self.verdicts.iter().all(Verdict::is_zero)
    }

    pub fn witnesses(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.is_zero())
    }
}

/// Checks `Hom^i(π*E_a, π*E_b) = 0` for all `i != 0` and every ordered pair
/// of `collection` (weights on `U`). Negative degrees are zero for sheaves
/// and are not listed.
pub fn check_tilting(
    ctx: &GrassmannContext,
    collection: &[Weight],
    cutoff: u32,
) -> Result<TiltingReport> {
    if collection.is_empty() {
        return Err(Error::EmptyCollection);
    }
    for w in collection {
        w.check_len(ctx.k())?;
        w.ensure_dominant()?;
    }
    let pairs: Vec<(&Weight, &Weight)> = collection
        .iter()
        .flat_map(|a| collection.iter().map(move |b| (a, b)))
        .collect();
    let profiles: Vec<GradedHomProfile> = pairs
        .par_iter()
        .map(|(a, b)| hom_total(ctx, a, b, cutoff))
        .collect::<Result<_>>()?;

    let mut verdicts = Vec::with_capacity(profiles.len() * ctx.dim());
    for profile in &profiles {
        for i in 1..=ctx.dim() {
            let status = match profile.witness(i) {
                None => VerdictStatus::CertifiedZero,
                Some(p) => VerdictStatus::Nonzero {
                    witness: Witness {
                        n: p.n,
                        lambda: p.lambda.clone(),
                        dim: p.dim.clone(),
                    },
                },
            };
            verdicts.push(Verdict {
                src: profile.src.clone(),
                dst: profile.dst.clone(),
                i,
                status,
            });
        }
    }
    Ok(TiltingReport {
        context: *ctx,
        collection: collection.to_vec(),
        cutoff,
        verdicts,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingRow {
    pub j: u32,
    /// Nonzero `(i, d)` entries with `i > 0`; empty when the check holds.
    pub offending: Vec<ProfileEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingReport {
    pub context: GrassmannContext,
    pub j_max: u32,
    pub cutoff: u32,
    pub rows: Vec<VanishingRow>,
}

impl VanishingReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.offending.is_empty())
    }
}

/// `H^i(X₀, O_X(j)) = 0` for `i > 0`, `0 <= j <= j_max`, where
/// `O_X(1) = π*Σ^{(-1,..,-1)} U = π* det U^∨`.
pub fn check_lemma_vanishing(
    ctx: &GrassmannContext,
    j_max: u32,
    cutoff: u32,
) -> Result<VanishingReport> {
    let trivial = Weight::zero(ctx.k())?;
    let rows = (0..=j_max)
        .into_par_iter()
        .map(|j| {
            let twist = Weight::constant(ctx.k(), -i64::from(j))?;
            let profile = hom_total(ctx, &trivial, &twist, cutoff)?;
            let offending = profile.entries.into_iter().filter(|e| e.i > 0).collect();
            Ok(VanishingRow { j, offending })
        })
        .collect::<Result<_>>()?;
    Ok(VanishingReport {
        context: *ctx,
        j_max,
        cutoff,
        rows,
    })
}

/// Which branch of the case analysis for
/// `Δ = (λ1 - j, λ2 - j, -λ2, -λ1)` on `F(C^4)` a cell falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum G24Case {
    /// `λ2 - j >= -λ2`: Δ is already dominant.
    Dominant,
    /// `λ2 - j + 1 = -λ2`: vanishes in every degree.
    Wall,
    /// `λ2 - j + 1 < -λ2` and `λ1 - j >= -1`: one tilde-transposition
    /// makes Δ dominant.
    ReflectedDegreeOne,
    /// `λ2 - j + 1 < -λ2` and `λ1 - j + 1 = -1`.
    ReflectedWall,
    /// `λ2 - j + 1 < -λ2` and `λ1 - j + 1 < -1`, forcing `λ1 = 0`, `j = 3`.
    ReflectedCorner,
}

impl G24Case {
    /// 1, 2 or 3: the top-level bullet.
    pub fn bullet(self) -> u8 {
        match self {
            G24Case::Dominant => 1,
            G24Case::Wall => 2,
            _ => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Prediction {
    Vanishes,
    OnlyDegree(usize),
}

impl Prediction {
    pub fn matches(self, r: &BottResult) -> bool {
        match self {
            Prediction::Vanishes => r.vanishes(),
            Prediction::OnlyDegree(d) => r.degree() == Some(d),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G24Cell {
    pub j: i64,
    pub lambda: [i64; 2],
    pub delta: Weight,
    pub case: G24Case,
    pub predicted: Prediction,
    /// `σ̃₂Δ`, present in the reflected cases.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reflected: Option<Weight>,
    pub bott: BottResult,
    /// Prediction matches `bott` and the side conditions the case asserts
    /// (`λ2 = 0`, `j ∈ {2,3}`, the shape of `σ̃₂Δ`, `λ1 = 0` with `j = 3`) hold.
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G24CaseTable {
    pub cutoff: u32,
    pub cells: Vec<G24Cell>,
}

impl G24CaseTable {
    pub fn all_agree(&self) -> bool {
        self.cells.iter().all(|c| c.agrees)
    }

    /// `(j, case) -> count`.
    pub fn counts(&self) -> BTreeMap<(i64, G24Case), usize> {
        let mut out = BTreeMap::new();
        for c in &self.cells {
            *out.entry((c.j, c.case)).or_default() += 1;
        }
        out
    }
}

/// Classifies a single `(j, λ1, λ2)` with `λ1 >= λ2 >= 0` by the
/// inequalities alone, and compares with Bott on the concrete Δ.
pub fn classify_g24(j: i64, l1: i64, l2: i64) -> Result<G24Cell> {
    Partition::new(&[l1, l2], 2)?;
    let delta = Weight::new(vec![l1 - j, l2 - j, -l2, -l1])?;

    let mut side_conditions = true;
    let mut reflected = None;
    let (case, predicted) = if l2 - j >= -l2 {
        (G24Case::Dominant, Prediction::OnlyDegree(0))
    } else if l2 - j + 1 == -l2 {
        (G24Case::Wall, Prediction::Vanishes)
    } else {
        side_conditions &= l2 == 0 && (j == 2 || j == 3);
        let r = delta.tilde_transpose(1)?;
        side_conditions &= r == Weight::new(vec![l1 - j, -1, -j + 1, -l1])?;
        reflected = Some(r);
        if l1 - j >= -1 {
            (G24Case::ReflectedDegreeOne, Prediction::OnlyDegree(1))
        } else if l1 - j + 1 == -1 {
            (G24Case::ReflectedWall, Prediction::Vanishes)
        } else {
            side_conditions &= l1 == 0 && j == 3;
            (G24Case::ReflectedCorner, Prediction::Vanishes)
        }
    };

    let result = bott(&delta);
    let agrees = side_conditions && predicted.matches(&result);
    Ok(G24Cell {
        j,
        lambda: [l1, l2],
        delta,
        case,
        predicted,
        reflected,
        bott: result,
        agrees,
    })
}

/// The case table for `Hom^i(O, O(-j))` on `T*G(2,4)`, `j ∈ {1,2,3}`, over
/// all λ with `|λ| <= cutoff`.
pub fn reproduce_g24_cases(cutoff: u32) -> Result<G24CaseTable> {
    let mut cells = Vec::new();
    for j in 1..=3 {
        for size in 0..=i64::from(cutoff) {
            for l2 in 0..=size / 2 {
                cells.push(classify_g24(j, size - l2, l2)?);
            }
        }
    }
    Ok(G24CaseTable { cutoff, cells })
}
