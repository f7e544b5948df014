//! Cohomology of line bundles `O(d)` on the full flag variety `F(V)` of
//! GL(V), `dim V = m`.
//!
//! Bott's theorem: if `d + rho` has a repeated entry every cohomology group
//! vanishes; otherwise there is a unique permutation sorting `d + rho` into
//! strictly decreasing order, the cohomology sits in degree equal to the
//! length of that permutation (its inversion count), and it is the
//! irreducible representation whose highest weight is the sorted vector
//! minus `rho`.
//!
//! [`bott`] computes this by sorting. [`bott_walk`] replays the procedure
//! one adjacent tilde-transposition at a time; in debug builds [`bott`]
//! checks that both agree.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::weights::Weight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BottResult {
    Vanishes,
    Concentrated {
        degree: usize,
        dominant: Weight,
        dim: BigUint,
    },
}

impl BottResult {
    pub fn vanishes(&self) -> bool {
        matches!(self, BottResult::Vanishes)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            BottResult::Vanishes => None,
            BottResult::Concentrated { degree, .. } => Some(*degree),
        }
    }

    /// `dim H^i`.
    pub fn h(&self, i: usize) -> BigUint {
        match self {
            BottResult::Concentrated { degree, dim, .. } if *degree == i => dim.clone(),
            _ => BigUint::zero(),
        }
    }

    /// `sum (-1)^i dim H^i`.
    pub fn signed_dim(&self) -> BigInt {
        match self {
            BottResult::Vanishes => BigInt::zero(),
            BottResult::Concentrated { degree, dim, .. } => {
                let sign = if degree % 2 == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                BigInt::from_biguint(sign, dim.clone())
            }
        }
    }

    /// Nonzero cohomology as a `degree -> dim` map (empty or one entry).
    pub fn by_degree(&self) -> BTreeMap<usize, BigUint> {
        match self {
            BottResult::Vanishes => BTreeMap::new(),
            BottResult::Concentrated { degree, dim, .. } => [(*degree, dim.clone())].into(),
        }
    }
}

// {"vanishes":true} | {"degree":1,"dominant":[...],"dim":"15"}
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum BottResultRepr {
    Vanishes {
        vanishes: bool,
    },
    Concentrated {
        degree: usize,
        dominant: Weight,
        dim: String,
    },
}

impl Serialize for BottResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            BottResult::Vanishes => BottResultRepr::Vanishes { vanishes: true },
            BottResult::Concentrated {
                degree,
                dominant,
                dim,
            } => BottResultRepr::Concentrated {
                degree: *degree,
                dominant: dominant.clone(),
                dim: dim.to_string(),
            },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BottResult {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match BottResultRepr::deserialize(d)? {
            BottResultRepr::Vanishes { vanishes: true } => Ok(BottResult::Vanishes),
            BottResultRepr::Vanishes { vanishes: false } => {
                Err(D::Error::custom("\"vanishes\" must be true when present"))
            }
            BottResultRepr::Concentrated {
                degree,
                dominant,
                dim,
            } => {
                let dim = dim
                    .parse::<BigUint>()
                    .map_err(|e| D::Error::custom(format!("bad dim {dim:?}: {e}")))?;
                Ok(BottResult::Concentrated {
                    degree,
                    dominant,
                    dim,
                })
            }
        }
    }
}

/// `H^*(F(V), O(delta))` via sorting `delta + rho`.
pub fn bott(delta: &Weight) -> BottResult {
    let mut shifted = delta.rho_shifted();
    let degree = count_inversions(&shifted);
    shifted.sort_unstable_by(|a, b| b.cmp(a));
    let result = if shifted.windows(2).any(|w| w[0] == w[1]) {
        BottResult::Vanishes
    } else {
        let dominant = Weight::from_rho_shifted(&shifted).expect("length preserved");
        let dim = weyl_dim(&dominant).expect("sorted weight is dominant");
        BottResult::Concentrated {
            degree,
            dominant,
            dim,
        }
    };
    debug_assert_eq!(
        result,
        bott_walk(delta),
        "sort and walk disagree on {delta}"
    );
    result
}

// pairs i < j with x_i < x_j; ties are not inversions
fn count_inversions(x: &[i64]) -> usize {
    let mut count = 0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            if x[i] < x[j] {
                count += 1;
            }
        }
    }
    count
}

/// Step-by-step Bott procedure: apply adjacent tilde-transpositions to push
/// out-of-order entries into place, stopping with vanishing as soon as some
/// adjacent pair satisfies `d_{l+1} = d_l + 1`.
pub fn bott_walk(delta: &Weight) -> BottResult {
    let mut current = delta.clone();
    let mut steps = 0usize;
    loop {
        let d = current.entries();
        if d.windows(2).any(|w| w[1] == w[0] + 1) {
            return BottResult::Vanishes;
        }
        match d.windows(2).position(|w| w[1] > w[0] + 1) {
            Some(pos) => {
                current = current.tilde_transpose(pos).expect("pos < len - 1");
                steps += 1;
            }
            None => {
                debug_assert!(current.is_non_increasing());
                let dim = weyl_dim(&current).expect("walk ends dominant");
                return BottResult::Concentrated {
                    degree: steps,
                    dominant: current,
                    dim,
                };
            }
        }
    }
}

/// Dimension of the irreducible GL(m) representation with highest weight
/// `dominant`: `prod_{i<j} (d_i - d_j + j - i) / (j - i)`.
pub fn weyl_dim(dominant: &Weight) -> Result<BigUint> {
    dominant.ensure_dominant()?;
    let value = weyl_product(dominant);
    Ok(value.magnitude().clone())
}

/// Euler characteristic `sum (-1)^i h^i(F(V), O(delta))`, evaluated as the
/// Weyl product without any sorting.
pub fn euler_characteristic(delta: &Weight) -> BigInt {
    weyl_product(delta)
}

fn weyl_product(w: &Weight) -> BigInt {
    let d = w.entries();
    let m = d.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        for j in i + 1..m {
            let gap = (j - i) as i64;
            num *= d[i] - d[j] + gap;
            den *= gap;
        }
    }
    debug_assert!((&num % &den).is_zero());
    let q = num / den;
    debug_assert!(!q.is_negative() || !w.is_non_increasing());
    q
}

/// Weight of the canonical bundle of `F(V)`: `κ_i = 2i - m - 1`
/// (1-based `i`), so `κ + rho` is `rho` reversed. For `m = 2` this is
/// `(-1, 1)`, i.e. `O(-2)` on the projective line.
pub fn canonical_weight(m: usize) -> Weight {
    let m = m as i64;
    Weight::new((1..=m).map(|i| 2 * i - m - 1).collect()).expect("m >= 1")
}

/// Serre dual `κ - Δ` of a line bundle on `F(V)`: `h^i(Δ) = h^{N-i}(κ - Δ)`
/// with `N = m(m-1)/2`. Line bundles dualise entrywise, without the
/// reversal used for Schur functors.
pub fn serre_dual(delta: &Weight) -> Weight {
    canonical_weight(delta.len())
        .sub(delta)
        .expect("same length")
}

/// `(h^0, h^1)` of `O(d)` on the projective line by counting Cech
/// monomials: `x^a y^b` with `a, b >= 0`, `a + b = d` span `H^0`, and
/// `x^a y^b` with `a, b <= -1`, `a + b = d` span `H^1`.
pub fn cech_p1_oracle(d: i64) -> (u64, u64) {
    let h0 = (0..=d.max(0)).filter(|&a| d - a >= 0).count() as u64;
    let h1 = if d <= -2 {
        (d + 1..=-1).filter(|&a| d - a <= -1).count() as u64
    } else {
        0
    };
    (h0, h1)
}
