//! Integer weights of GL(m) and the partitions that index polynomial
//! Schur functors.
//!
//! A [`Weight`] is a fixed-length integer vector `(d_1, ..., d_m)`. It is
//! *dominant* (non-increasing) when `d_1 >= ... >= d_m`; dominant weights
//! index the irreducible representations of GL(m) and hence the Schur
//! functors of a rank-`m` bundle. The Bott algorithm moves weights around
//! with the rho-shifted ("tilde") action of the symmetric group,
//! `s~(w) = s(w + rho) - rho`, where `rho = (m-1, m-2, ..., 0)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyWeight);
        }
        Ok(Weight(entries))
    }

    /// The constant weight `(c, ..., c)` of length `len`, i.e. the `c`-th
    /// power of the determinant.
    pub fn constant(len: usize, c: i64) -> Result<Self> {
        Self::new(vec![c; len])
    }

    pub fn zero(len: usize) -> Result<Self> {
        Self::constant(len, 0)
    }

    /// `rho = (m-1, m-2, ..., 0)`.
    pub fn rho(len: usize) -> Result<Self> {
        Self::new((0..len).rev().map(|x| x as i64).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    /// Sum of the entries (the degree of the determinant character).
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn min_entry(&self) -> i64 {
        *self.0.iter().min().expect("weights are non-empty")
    }

    pub fn is_non_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn ensure_dominant(&self) -> Result<()> {
        if self.is_non_increasing() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.clone()))
        }
    }

    /// Tilde action of the adjacent transposition swapping positions `pos`
    /// and `pos + 1` (0-based):
    /// `(.., d_pos, d_pos+1, ..) -> (.., d_pos+1 - 1, d_pos + 1, ..)`.
    pub fn tilde_transpose(&self, pos: usize) -> Result<Self> {
        if pos + 1 >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: pos,
                len: self.len(),
            });
        }
        let mut out = self.0.clone();
        out[pos] = self.0[pos + 1] - 1;
        out[pos + 1] = self.0[pos] + 1;
        Ok(Weight(out))
    }

    /// Plain (unshifted) transposition of positions `pos` and `pos + 1`.
    pub fn transpose(&self, pos: usize) -> Result<Self> {
        if pos + 1 >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: pos,
                len: self.len(),
            });
        }
        let mut out = self.0.clone();
        out.swap(pos, pos + 1);
        Ok(Weight(out))
    }

    /// Highest weight of the dual representation: `(-d_m, ..., -d_1)`.
    pub fn dual(&self) -> Self {
        Weight(self.0.iter().rev().map(|x| -x).collect())
    }

    /// Tensor with the `c`-th power of the determinant.
    pub fn det_twist(&self, c: i64) -> Self {
        Weight(self.0.iter().map(|x| x + c).collect())
    }

    /// Entrywise negation, which is the dual of a line bundle `O(w)` on the
    /// full flag variety (no reversal, unlike [`Weight::dual`]).
    pub fn negate(&self) -> Self {
        Weight(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Weight) -> Result<Self> {
        self.check_len(other.len())?;
        Ok(Weight(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &Weight) -> Result<Self> {
        self.check_len(other.len())?;
        Ok(Weight(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// `self + rho`.
    pub fn rho_shifted(&self) -> Vec<i64> {
        let m = self.len() as i64;
        self.0
            .iter()
            .enumerate()
            .map(|(i, d)| d + m - 1 - i as i64)
            .collect()
    }

    /// Inverse of [`Weight::rho_shifted`].
    pub fn from_rho_shifted(shifted: &[i64]) -> Result<Self> {
        let m = shifted.len() as i64;
        Self::new(
            shifted
                .iter()
                .enumerate()
                .map(|(i, d)| d - (m - 1 - i as i64))
                .collect(),
        )
    }

    pub fn concat(&self, tail: &Weight) -> Self {
        let mut out = self.0.clone();
        out.extend_from_slice(&tail.0);
        Weight(out)
    }

    pub fn check_len(&self, expected: usize) -> Result<()> {
        if self.len() == expected {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected,
                found: self.len(),
            })
        }
    }
}

impl TryFrom<Vec<i64>> for Weight {
    type Error = Error;

    fn try_from(value: Vec<i64>) -> Result<Self> {
        Weight::new(value)
    }
}

impl From<Weight> for Vec<i64> {
    fn from(w: Weight) -> Self {
        w.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A partition with an explicit ambient length: `parts` has exactly
/// `ambient` entries, non-increasing and non-negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition of ambient length `ambient`. Trailing zeros may be
    /// omitted from `parts`; more than `ambient` nonzero parts is an error.
    pub fn new(parts: &[i64], ambient: usize) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts.to_vec()));
        }
        let rows = parts.iter().take_while(|&&p| p > 0).count();
        if rows > ambient {
            return Err(Error::TooManyRows {
                parts: parts.to_vec(),
                rows,
                max: ambient,
            });
        }
        let mut out: Vec<u32> = parts[..rows].iter().map(|&p| p as u32).collect();
        out.resize(ambient, 0);
        Ok(Partition { parts: out })
    }

    pub fn from_weight(w: &Weight) -> Result<Self> {
        Self::new(w.entries(), w.len())
    }

    pub fn empty(ambient: usize) -> Self {
        Partition {
            parts: vec![0; ambient],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn ambient(&self) -> usize {
        self.parts.len()
    }

    /// `|lambda|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn rows(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// The same partition in a different ambient length.
    pub fn with_ambient(&self, ambient: usize) -> Result<Self> {
        let trimmed: Vec<i64> = self.parts[..self.rows()]
            .iter()
            .map(|&p| p as i64)
            .collect();
        Self::new(&trimmed, ambient)
    }

    /// The partition as a (dominant) weight of the ambient length.
    pub fn to_weight(&self) -> Weight {
        debug_assert!(!self.parts.is_empty(), "zero ambient length");
        Weight(self.parts.iter().map(|&p| p as i64).collect())
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(value: Vec<i64>) -> Result<Self> {
        let ambient = value.len();
        Partition::new(&value, ambient)
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Self {
        p.parts.into_iter().map(|x| x as i64).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        write!(f, "(")?;
        for (i, p) in self.parts[..rows.max(1).min(self.parts.len())]
            .iter()
            .enumerate()
        {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `size` with at most `max_rows` nonzero parts, padded to
/// ambient length `max_rows`, in reverse lexicographic order (`(2)` before
/// `(1,1)`).
pub fn partitions(size: u32, max_rows: usize) -> Vec<Partition> {
    fn go(remaining: u32, cap: u32, rows_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        if rows_left == 0 {
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            cur.push(p);
            go(remaining - p, p, rows_left - 1, cur, out);
            cur.pop();
        }
    }

    let mut raw = Vec::new();
    if max_rows == 0 {
        if size == 0 {
            raw.push(Vec::new());
        }
    } else {
        go(size, size, max_rows, &mut Vec::new(), &mut raw);
    }
    raw.into_iter()
        .map(|mut parts| {
            parts.resize(max_rows, 0);
            Partition { parts }
        })
        .collect()
}
