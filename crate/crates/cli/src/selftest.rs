//! Oracle suites runnable from the command line.

use anyhow::Result;
use bbw_tilt::bott::{bott, bott_walk, cech_p1_oracle, euler_characteristic, serre_dual};
use bbw_tilt::schur::poly::lr_oracle;
use bbw_tilt::{lr_coefficients, partitions, reproduce_g24_cases, Weight};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

fn check(name: &str, failures: Vec<String>, total: usize) -> Check {
    let passed = failures.is_empty();
    let detail = if passed {
        format!("{total} cases")
    } else {
        format!(
            "{} of {total} failed, first: {}",
            failures.len(),
            failures[0]
        )
    };
    Check {
        name: name.to_string(),
        passed,
        detail,
    }
}

fn random_weight(rng: &mut ChaCha8Rng, m: usize, range: i64) -> Weight {
    Weight::new((0..m).map(|_| rng.gen_range(-range..=range)).collect()).expect("m >= 1")
}

pub fn box_weights(m: usize, lo: i64, hi: i64) -> Vec<Weight> {
    let width = (hi - lo + 1) as usize;
    (0..width.pow(m as u32))
        .map(|mut idx| {
            let entries = (0..m)
                .map(|_| {
                    let x = lo + (idx % width) as i64;
                    idx /= width;
                    x
                })
                .collect();
            Weight::new(entries).expect("m >= 1")
        })
        .collect()
}

pub fn euler_box() -> Check {
    let cases = box_weights(4, -4, 4);
    let failures = cases
        .iter()
        .filter(|d| euler_characteristic(d) != bott(d).signed_dim())
        .map(ToString::to_string)
        .collect();
    check(
        "euler characteristic vs bott, [-4,4]^4",
        failures,
        cases.len(),
    )
}

pub fn euler_random(seed: u64, count: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let failures = (0..count)
        .map(|_| random_weight(&mut rng, 4, 8))
        .filter(|d| euler_characteristic(d) != bott(d).signed_dim())
        .map(|d| d.to_string())
        .collect();
    check(
        "euler characteristic vs bott, random [-8,8]^4",
        failures,
        count,
    )
}

pub fn walk_vs_sort(seed: u64, count: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let failures = (0..count)
        .map(|_| {
            let m = rng.gen_range(1..=6);
            random_weight(&mut rng, m, 8)
        })
        .filter(|d| bott_walk(d) != bott(d))
        .map(|d| d.to_string())
        .collect();
    check("tilde-transposition walk vs sort", failures, count)
}

pub fn serre(seed: u64, count: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let mut failures = Vec::new();
    for _ in 0..count {
        let m = rng.gen_range(2..=4);
        let top = m * (m - 1) / 2;
        let delta = random_weight(&mut rng, m, 8);
        let (a, b) = (bott(&delta), bott(&serre_dual(&delta)));
        if (0..=top).any(|i| a.h(i) != b.h(top - i)) {
            failures.push(delta.to_string());
        }
    }
    check("Serre duality h^i(D) = h^(N-i)(K - D)", failures, count)
}

pub fn p1() -> Check {
    let failures = (-10..=10)
        .filter(|&d| {
            let r = bott(&Weight::new(vec![d, 0]).expect("len 2"));
            let (h0, h1) = cech_p1_oracle(d);
            (r.h(0), r.h(1)) != (BigUint::from(h0), BigUint::from(h1))
        })
        .map(|d| format!("d={d}"))
        .collect();
    check(
        "P^1 against Cech monomial count, d in [-10,10]",
        failures,
        21,
    )
}

pub fn lr_box(max_size: u32, max_rank: usize) -> Result<Check> {
    let mut failures = Vec::new();
    let mut total = 0;
    for m in 1..=max_rank {
        let parts: Vec<_> = (0..=max_size).flat_map(|s| partitions(s, m)).collect();
        for lam in &parts {
            for mu in &parts {
                total += 1;
                if lr_coefficients(lam, mu, m)? != lr_oracle(lam, mu, m)? {
                    failures.push(format!("{lam} * {mu} rank {m}"));
                }
            }
        }
    }
    Ok(check(
        &format!(
            "LR rule vs Schur polynomial products, |lambda|,|mu| <= {max_size}, rank <= {max_rank}"
        ),
        failures,
        total,
    ))
}

pub fn g24(cutoff: u32) -> Result<Check> {
    let table = reproduce_g24_cases(cutoff)?;
    let failures = table
        .cells
        .iter()
        .filter(|c| !c.agrees)
        .map(|c| format!("j={} lambda={:?}", c.j, c.lambda))
        .collect();
    Ok(check(
        &format!("G(2,4) case analysis vs bott, |lambda| <= {cutoff}"),
        failures,
        table.cells.len(),
    ))
}

pub fn run(seed: u64) -> Result<SelftestReport> {
    let checks = vec![
        euler_box(),
        euler_random(seed, 1000),
        walk_vs_sort(seed, 1000),
        serre(seed, 500),
        p1(),
        lr_box(6, 4)?,
        g24(30)?,
    ];
    Ok(SelftestReport {
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}
