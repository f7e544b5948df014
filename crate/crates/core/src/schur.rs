//! Tensor products of Schur functors of a rank-`m` bundle.
//!
//! `Σ^λ ⊗ Σ^μ = ⊕ c^ν_{λμ} Σ^ν` with Littlewood-Richardson coefficients
//! computed by the tableau rule. Arbitrary dominant weights are reduced to
//! partitions by twisting with a power of the determinant.

pub mod poly;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bott::weyl_dim;
use crate::error::{Error, Result};
use crate::weights::{Partition, Weight};

/// A finite sum of irreducibles `⊕ mult(ν) Σ^ν` for a fixed rank.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Weight, BigUint>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(w: Weight) -> Result<Self> {
        w.ensure_dominant()?;
        let mut out = Self::new();
        out.terms.insert(w, BigUint::one());
        Ok(out)
    }

    /// Adds `mult` copies of `Σ^w`. Zero multiplicities are dropped.
    pub fn add(&mut self, w: Weight, mult: BigUint) {
        debug_assert!(w.is_non_increasing());
        if mult.is_zero() {
            return;
        }
        *self.terms.entry(w).or_default() += mult;
    }

    pub fn get(&self, w: &Weight) -> BigUint {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic order of weight.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigUint)> {
        self.terms.iter()
    }

    /// Total multiplicity (number of irreducible summands with repetition).
    pub fn total_multiplicity(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// `sum mult(ν) * dim Σ^ν`.
    pub fn total_dimension(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(w, m)| m * weyl_dim(w).expect("keys are dominant"))
            .sum()
    }

    /// `self ⊗ Σ^w`.
    pub fn tensor_with(&self, w: &Weight) -> Result<Self> {
        let mut out = Self::new();
        for (key, mult) in &self.terms {
            for (nu, c) in tensor_weights(key, w)?.terms {
                out.add(nu, mult * c);
            }
        }
        Ok(out)
    }
}

impl IntoIterator for SchurExpansion {
    type Item = (Weight, BigUint);
    type IntoIter = std::collections::btree_map::IntoIter<Weight, BigUint>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    weight: Weight,
    mult: String,
}

impl Serialize for SchurExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(w, m)| TermRepr {
                weight: w.clone(),
                mult: m.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let terms = Vec::<TermRepr>::deserialize(d)?;
        let mut out = SchurExpansion::new();
        for t in terms {
            if !t.weight.is_non_increasing() {
                return Err(D::Error::custom(format!("non-dominant key {}", t.weight)));
            }
            let mult: BigUint = t
                .mult
                .parse()
                .map_err(|e| D::Error::custom(format!("bad mult {:?}: {e}", t.mult)))?;
            if mult.is_zero() {
                return Err(D::Error::custom("multiplicities must be positive"));
            }
            out.add(t.weight, mult);
        }
        Ok(out)
    }
}

/// Littlewood-Richardson expansion of `Σ^λ ⊗ Σ^μ` for a rank-`rank` bundle.
///
/// Enumerates LR tableaux of content `μ` on skew shapes `ν/λ`, row by row:
/// rows weakly increase, columns strictly increase, and the reverse reading
/// word (right to left, top to bottom) is a lattice word. Only `ν` with at
/// most `rank` rows are produced.
pub fn lr_coefficients(lambda: &Partition, mu: &Partition, rank: usize) -> Result<SchurExpansion> {
    let lambda = lambda.with_ambient(rank)?;
    let mu = mu.with_ambient(rank)?;
    let content: Vec<u32> = mu.parts()[..mu.rows()].to_vec();

    let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    let mut state = LrState {
        lambda: lambda.parts().to_vec(),
        content,
        used: vec![0; mu.rows()],
        rows: Vec::with_capacity(rank),
        shape: Vec::with_capacity(rank),
    };
    state.fill_row(0, rank, &mut counts);

    let mut out = SchurExpansion::new();
    for (nu, c) in counts {
        let w = Weight::new(nu.into_iter().map(i64::from).collect())?;
        out.add(w, BigUint::from(c));
    }
    Ok(out)
}

struct LrState {
    lambda: Vec<u32>,
    content: Vec<u32>,
    // letters of each letter value already placed in rows above
    used: Vec<u32>,
    // per row: letters in columns lambda[r]..shape[r] (0-based letter values)
    rows: Vec<Vec<u32>>,
    shape: Vec<u32>,
}

impl LrState {
    fn fill_row(&mut self, r: usize, rank: usize, out: &mut BTreeMap<Vec<u32>, u64>) {
        if r == rank {
            if self.used == self.content {
                *out.entry(self.shape.clone()).or_default() += 1;
            }
            return;
        }
        // letter j (0-based) can only occur in rows r >= j
        let letters = self.content.len().min(r + 1);
        let mut row = Vec::new();
        self.choose_letter(r, rank, 0, letters, &mut row, out);
    }

    fn choose_letter(
        &mut self,
        r: usize,
        rank: usize,
        letter: usize,
        letters: usize,
        row: &mut Vec<u32>,
        out: &mut BTreeMap<Vec<u32>, u64>,
    ) {
        if letter == letters {
            let len = self.lambda[r] + row.len() as u32;
            if r > 0 && len > self.shape[r - 1] {
                return;
            }
            self.rows.push(row.clone());
            self.shape.push(len);
            for &l in row.iter() {
                self.used[l as usize] += 1;
            }
            self.fill_row(r + 1, rank, out);
            for &l in row.iter() {
                self.used[l as usize] -= 1;
            }
            self.shape.pop();
            self.rows.pop();
            return;
        }

        let remaining = self.content[letter] - self.used[letter];
        // lattice: letters of value `letter` read so far in this row come
        // before any smaller letters of the same row
        let cap = if letter == 0 {
            remaining
        } else {
            let allowed = self.used[letter - 1] - self.used[letter];
            remaining.min(allowed)
        };
        for count in 0..=cap {
            let start = row.len();
            row.extend(std::iter::repeat_n(letter as u32, count as usize));
            if self.columns_ok(r, start, row) {
                self.choose_letter(r, rank, letter + 1, letters, row, out);
            } else {
                row.truncate(start);
                // more copies only push further right, where the row above is
                // no better
                break;
            }
            row.truncate(start);
        }
    }

    // cells of `row[start..]` in row r must sit below a cell of row r-1 that
    // is either in lambda or holds a strictly smaller letter
    fn columns_ok(&self, r: usize, start: usize, row: &[u32]) -> bool {
        if r == 0 {
            return true;
        }
        let above_lambda = self.lambda[r - 1] as usize;
        let above = &self.rows[r - 1];
        for (offset, &letter) in row.iter().enumerate().skip(start) {
            let col = self.lambda[r] as usize + offset;
            if col < above_lambda {
                continue;
            }
            match above.get(col - above_lambda) {
                Some(&a) if a < letter => {}
                _ => return false,
            }
        }
        true
    }
}

/// `Σ^a ⊗ Σ^b` for dominant weights of equal length `m`.
///
/// Each factor is twisted by `c = -min(entries)` so that its last entry is
/// zero, the partitions are multiplied by [`lr_coefficients`], and every key
/// is twisted back by the total `-(c_a + c_b)`. The result's total dimension
/// is checked against `dim Σ^a * dim Σ^b`.
pub fn tensor_weights(a: &Weight, b: &Weight) -> Result<SchurExpansion> {
    a.ensure_dominant()?;
    b.ensure_dominant()?;
    b.check_len(a.len())?;
    let m = a.len();

    let ca = -a.min_entry();
    let cb = -b.min_entry();
    let pa = Partition::from_weight(&a.det_twist(ca))?;
    let pb = Partition::from_weight(&b.det_twist(cb))?;
    let product = lr_coefficients(&pa, &pb, m)?;

    let mut out = SchurExpansion::new();
    for (nu, c) in product {
        out.add(nu.det_twist(-(ca + cb)), c);
    }

    let expected = weyl_dim(a)? * weyl_dim(b)?;
    let found = out.total_dimension();
    if expected != found {
        return Err(Error::DimensionMismatch {
            left: a.clone(),
            right: b.clone(),
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec()).unwrap()
    }

    fn p(v: &[i64], m: usize) -> Partition {
        Partition::new(v, m).unwrap()
    }

    fn terms(e: &SchurExpansion) -> Vec<(Vec<i64>, u64)> {
        e.iter()
            .map(|(w, m)| (w.entries().to_vec(), u64::try_from(m).unwrap()))
            .collect()
    }

    #[test]
    fn box_times_box() {
        let e = lr_coefficients(&p(&[1], 2), &p(&[1], 2), 2).unwrap();
        assert_eq!(terms(&e), vec![(vec![1, 1], 1), (vec![2, 0], 1)]);
        // rank 1 kills (1,1)
        let e = lr_coefficients(&p(&[1], 1), &p(&[1], 1), 1).unwrap();
        assert_eq!(terms(&e), vec![(vec![2], 1)]);
    }

    #[test]
    fn unit_factor() {
        let lam = p(&[4, 2, 1], 3);
        let e = lr_coefficients(&lam, &Partition::empty(3), 3).unwrap();
        assert_eq!(terms(&e), vec![(vec![4, 2, 1], 1)]);
        let e = lr_coefficients(&Partition::empty(3), &lam, 3).unwrap();
        assert_eq!(terms(&e), vec![(vec![4, 2, 1], 1)]);
    }

    #[test]
    fn adjoint_squared_gl3() {
        // s21 * s21 in 3 variables; frozen from the polynomial oracle
        let e = lr_coefficients(&p(&[2, 1], 3), &p(&[2, 1], 3), 3).unwrap();
        assert_eq!(
            terms(&e),
            vec![
                (vec![2, 2, 2], 1),
                (vec![3, 2, 1], 2),
                (vec![3, 3, 0], 1),
                (vec![4, 1, 1], 1),
                (vec![4, 2, 0], 1),
            ]
        );
        assert_eq!(e.total_dimension(), BigUint::from(64u32));
    }

    #[test]
    fn row_violation_is_an_error() {
        let lam = p(&[1, 1, 1], 3);
        assert!(matches!(
            lr_coefficients(&lam, &p(&[1], 2), 2),
            Err(Error::TooManyRows { .. })
        ));
    }

    #[test]
    fn determinant_factor_is_a_single_twist() {
        for j in 0..4 {
            for l1 in 0..5 {
                for l2 in 0..=l1 {
                    let e = tensor_weights(&w(&[j, j]), &w(&[-l2, -l1])).unwrap();
                    assert_eq!(terms(&e), vec![(vec![j - l2, j - l1], 1)]);
                }
            }
        }
    }

    #[test]
    fn trivial_factor() {
        let b = w(&[3, -1]);
        assert_eq!(
            terms(&tensor_weights(&w(&[0, 0]), &b).unwrap()),
            vec![(vec![3, -1], 1)]
        );
    }

    #[test]
    fn adjoint_squared_gl4() {
        let adj = w(&[1, 0, 0, -1]);
        let e = tensor_weights(&adj, &adj).unwrap();
        assert_eq!(e.total_dimension(), BigUint::from(225u32));
        // the trivial representation appears once, the adjoint twice
        assert_eq!(e.get(&w(&[0, 0, 0, 0])), BigUint::one());
        assert_eq!(e.get(&adj), BigUint::from(2u32));
    }

    #[test]
    fn tensor_rejects_bad_input() {
        assert!(matches!(
            tensor_weights(&w(&[0, 1]), &w(&[0, 0])),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(
            tensor_weights(&w(&[0, 0]), &w(&[0, 0, 0])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn json_sorted_array() {
        let e = lr_coefficients(&p(&[1], 2), &p(&[1], 2), 2).unwrap();
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(
            s,
            r#"[{"weight":[1,1],"mult":"1"},{"weight":[2,0],"mult":"1"}]"#
        );
        assert_eq!(serde_json::from_str::<SchurExpansion>(&s).unwrap(), e);
        assert!(
            serde_json::from_str::<SchurExpansion>(r#"[{"weight":[0,1],"mult":"1"}]"#).is_err()
        );
    }
}
