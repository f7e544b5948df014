//! Brute-force Schur polynomials, used as an independent check on the
//! Littlewood-Richardson rule.
//!
//! `s_λ(x_1..x_m)` is built by enumerating semistandard tableaux, products
//! are expanded monomially, and the result is peeled back into Schur
//! polynomials by repeatedly subtracting the lex-leading term.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::Result;
use crate::weights::{Partition, Weight};

use super::SchurExpansion;

/// Dense polynomial: exponent vector -> coefficient.
pub type Polynomial = BTreeMap<Vec<u32>, i128>;

/// `s_λ` in `vars` variables as a sum over semistandard tableaux of shape λ
/// with entries in `1..=vars`.
pub fn schur_poly_oracle(lambda: &Partition, vars: usize) -> Polynomial {
    let shape: Vec<usize> = lambda.parts()[..lambda.rows()]
        .iter()
        .map(|&p| p as usize)
        .collect();
    let mut out = Polynomial::new();
    if shape.len() > vars {
        return out;
    }
    let mut tableau: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    fill(&shape, 0, 0, vars, &mut tableau, &mut out);
    out
}

fn fill(
    shape: &[usize],
    row: usize,
    col: usize,
    vars: usize,
    t: &mut Vec<Vec<usize>>,
    out: &mut Polynomial,
) {
    if row == shape.len() {
        let mut exps = vec![0u32; vars];
        for r in t.iter() {
            for &v in r {
                exps[v] += 1;
            }
        }
        *out.entry(exps).or_default() += 1;
        return;
    }
    if col == shape[row] {
        fill(shape, row + 1, 0, vars, t, out);
        return;
    }
    let lo_left = if col > 0 { t[row][col - 1] } else { 0 };
    let lo_above = if row > 0 { t[row - 1][col] + 1 } else { 0 };
    for v in lo_left.max(lo_above)..vars {
        t[row][col] = v;
        fill(shape, row, col + 1, vars, t, out);
    }
}

pub fn multiply(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut out = Polynomial::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Writes a symmetric polynomial in `vars` variables as a sum of Schur
/// polynomials by peeling off the lex-leading monomial. Returns `None` when
/// a negative coefficient shows up (not Schur-positive) or the leading
/// exponent is not a partition (not symmetric).
pub fn decompose_schur(poly: &Polynomial, vars: usize) -> Option<BTreeMap<Vec<u32>, u64>> {
    let mut rest = poly.clone();
    rest.retain(|_, c| *c != 0);
    let mut out = BTreeMap::new();
    while let Some((lead, &c)) = rest.last_key_value() {
        if c < 0 || lead.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        let lead = lead.clone();
        let parts: Vec<i64> = lead.iter().map(|&x| i64::from(x)).collect();
        let nu = Partition::new(&parts, vars).ok()?;
        for (e, coeff) in schur_poly_oracle(&nu, vars) {
            *rest.entry(e).or_default() -= c * coeff;
        }
        rest.retain(|_, c| *c != 0);
        out.insert(lead, c as u64);
    }
    Some(out)
}

/// `Σ^λ ⊗ Σ^μ` for a rank-`rank` bundle computed entirely through
/// polynomial multiplication and greedy decomposition.
pub fn lr_oracle(lambda: &Partition, mu: &Partition, rank: usize) -> Result<SchurExpansion> {
    let lambda = lambda.with_ambient(rank)?;
    let mu = mu.with_ambient(rank)?;
    let product = multiply(
        &schur_poly_oracle(&lambda, rank),
        &schur_poly_oracle(&mu, rank),
    );
    let decomposed =
        decompose_schur(&product, rank).expect("products of Schur polynomials are Schur-positive");
    let mut out = SchurExpansion::new();
    for (nu, c) in decomposed {
        out.add(
            Weight::new(nu.into_iter().map(i64::from).collect())?,
            BigUint::from(c),
        );
    }
    Ok(out)
}
