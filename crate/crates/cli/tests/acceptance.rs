//! Acceptance gate. Every criterion is exact (integer) with tolerance 0 and
//! a wall-clock budget; one PASS/FAIL line is printed per criterion.
//!
//! Run with `cargo test -p bbw-tilt-cli --test acceptance -- --nocapture`.

use std::process::Command;
use std::time::{Duration, Instant};

use bbw_tilt::bott::bott;
use bbw_tilt::schur::poly::lr_oracle;
use bbw_tilt::{
    cech_p1_oracle, euler_characteristic, lr_coefficients, partitions, tensor_weights, Weight,
};
use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec()).unwrap()
}

/// Runs the CLI, returning (exit code, parsed JSON stdout).
fn cli(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_bbw-tilt"))
        .args(args)
        .output()
        .expect("spawn bbw-tilt");
    let code = out.status.code().unwrap_or(-1);
    let stdout = String::from_utf8(out.stdout).expect("utf8");
    let json = serde_json::from_str(&stdout).unwrap_or_else(|e| {
        panic!(
            "bbw-tilt {args:?} printed non-JSON ({e}): {stdout}\nstderr: {}",
            String::from_utf8_lossy(&out.stderr)
        )
    });
    (code, json)
}

fn dim(v: &Value) -> BigUint {
    v.as_str()
        .expect("dims are strings")
        .parse()
        .expect("decimal")
}

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

// Weyl product computed independently of the library.
fn weyl_product_i128(d: &[i64]) -> i128 {
    let m = d.len();
    let (mut num, mut den) = (1i128, 1i128);
    for i in 0..m {
        for j in i + 1..m {
            num *= (d[i] - d[j] + (j - i) as i64) as i128;
            den *= (j - i) as i128;
        }
    }
    num / den
}

fn criterion_1() -> Outcome {
    let mut lines = Vec::new();
    for j in 1..=3 {
        let beta = format!("{j},{j}");
        let (code, p) = cli(&[
            "hom-total",
            "--k",
            "2",
            "--n",
            "4",
            "--alpha",
            "0,0",
            "--beta",
            &beta,
            "--cutoff",
            "30",
            "--vanish-from",
            "2",
        ]);
        let high: Vec<&Value> = p["entries"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|e| e["i"].as_u64().unwrap() >= 2)
            .collect();
        if code != 0 || !high.is_empty() {
            return Err(format!("j={j}: exit {code}, i>=2 entries {high:?}"));
        }
        lines.push(format!("j={j}: 0 entries with i>=2"));
    }
    Ok(lines.join(", "))
}

fn criterion_2() -> Outcome {
    let (code, r) = cli(&["reproduce", "g24"]);
    if code != 0 || r["all_agree"] != Value::Bool(true) {
        return Err(format!("exit {code}, all_agree {}", r["all_agree"]));
    }
    let cells = r["table"]["cells"].as_array().unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for c in cells {
        let j = c["j"].as_i64().unwrap();
        let l1 = c["lambda"][0].as_i64().unwrap();
        let l2 = c["lambda"][1].as_i64().unwrap();
        seen.insert((j, l1, l2));
        let concrete = bott(&w(&[l1 - j, l2 - j, -l2, -l1]));
        let reported: bbw_tilt::BottResult = serde_json::from_value(c["bott"].clone()).unwrap();
        if reported != concrete {
            return Err(format!(
                "cell j={j} lambda=({l1},{l2}) reports {reported:?}, bott gives {concrete:?}"
            ));
        }
        let ok = match c["case"].as_str().unwrap() {
            "dominant" => concrete.degree() == Some(0),
            "wall" | "reflected-wall" | "reflected-corner" => concrete.vanishes(),
            "reflected-degree-one" => concrete.degree() == Some(1),
            other => return Err(format!("unknown case {other}")),
        };
        if !ok {
            return Err(format!(
                "cell j={j} lambda=({l1},{l2}) case {} vs {concrete:?}",
                c["case"]
            ));
        }
    }
    let mut expected = std::collections::BTreeSet::new();
    for j in 1..=3 {
        for s in 0..=30i64 {
            for l2 in 0..=s / 2 {
                expected.insert((j, s - l2, l2));
            }
        }
    }
    if seen != expected || cells.len() != expected.len() {
        return Err(format!(
            "covered {} cells, expected {}",
            cells.len(),
            expected.len()
        ));
    }
    Ok(format!(
        "{} cells classified, all agree with bott",
        cells.len()
    ))
}

fn criterion_3() -> Outcome {
    for n in 2..=5u64 {
        let ns = n.to_string();
        let (code, r) = cli(&["reproduce", "beilinson", &ns]);
        if code != 0 {
            return Err(format!("n={n}: exit {code}"));
        }
        let rows = r["rows"].as_array().unwrap();
        if rows.len() as u64 != (n + 1) * (n + 1) {
            return Err(format!("n={n}: {} rows", rows.len()));
        }
        for row in rows {
            let (a, b) = (row["a"].as_u64().unwrap(), row["b"].as_u64().unwrap());
            let ext = row["ext"].as_object().unwrap();
            if ext.keys().any(|k| k != "0") {
                return Err(format!("n={n} a={a} b={b}: higher Ext {ext:?}"));
            }
            let hom = ext.get("0").map(dim).unwrap_or_default();
            let expected = if a >= b {
                binomial(a - b + n, n)
            } else {
                BigUint::default()
            };
            if hom != expected {
                return Err(format!("n={n} a={a} b={b}: Hom {hom}, expected {expected}"));
            }
        }
    }
    Ok("n=2..5: Ext^i = 0 for i != 0, Hom = C(a-b+n, n)".into())
}

fn criterion_4() -> Outcome {
    for n in [2usize, 3] {
        let coll = (0..=n).map(|a| a.to_string()).collect::<Vec<_>>().join(";");
        let big_n = (n + 1).to_string();
        let (code, r) = cli(&[
            "check-tilting",
            "--k",
            "1",
            "--n",
            &big_n,
            "--collection",
            &coll,
            "--cutoff",
            "20",
        ]);
        let verdicts = r["verdicts"].as_array().unwrap();
        let nonzero: Vec<&Value> = verdicts
            .iter()
            .filter(|v| v["status"] != "certified-zero")
            .collect();
        let expected_cells = (n + 1) * (n + 1) * n;
        if code != 0 || !nonzero.is_empty() || verdicts.len() != expected_cells {
            return Err(format!(
                "T*P^{n}: exit {code}, {} verdicts, nonzero {nonzero:?}",
                verdicts.len()
            ));
        }
    }
    Ok("T*P^2, T*P^3: every (pair, i != 0) certified zero up to d=20".into())
}

fn criterion_5() -> Outcome {
    let (code, r) = cli(&[
        "check-vanishing",
        "--k",
        "2",
        "--n",
        "4",
        "--jmax",
        "5",
        "--cutoff",
        "30",
    ]);
    let rows = r["rows"].as_array().unwrap();
    let bad: Vec<&Value> = rows
        .iter()
        .filter(|row| !row["offending"].as_array().unwrap().is_empty())
        .collect();
    if code != 0 || rows.len() != 6 || !bad.is_empty() {
        return Err(format!(
            "exit {code}, {} rows, offending {bad:?}",
            rows.len()
        ));
    }
    Ok("j=0..5: no i>0 entries up to d=30".into())
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for a in -4..=4 {
        for b in -4..=4 {
            for c in -4..=4 {
                for d in -4..=4 {
                    let delta = w(&[a, b, c, d]);
                    if euler_characteristic(&delta) != bott(&delta).signed_dim() {
                        return Err(format!("box {delta}"));
                    }
                    count += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let delta = w(&(0..4).map(|_| rng.gen_range(-8..=8)).collect::<Vec<_>>());
        let product = BigInt::from(weyl_product_i128(delta.entries()));
        if euler_characteristic(&delta) != product || product != bott(&delta).signed_dim() {
            return Err(format!("random {delta}"));
        }
        count += 1;
    }
    Ok(format!("{count} weights"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..500 {
        let m = rng.gen_range(2..=4usize);
        let top = m * (m - 1) / 2;
        let delta: Vec<i64> = (0..m).map(|_| rng.gen_range(-8..=8)).collect();
        // κ_i = 2i - m - 1 (1-based); line bundles dualise entrywise
        let dual: Vec<i64> = (0..m)
            .map(|i| 2 * (i as i64 + 1) - m as i64 - 1 - delta[i])
            .collect();
        let (a, b) = (bott(&w(&delta)), bott(&w(&dual)));
        for i in 0..=top {
            if a.h(i) != b.h(top - i) {
                return Err(format!(
                    "{delta:?} degree {i}: {} vs {}",
                    a.h(i),
                    b.h(top - i)
                ));
            }
        }
    }
    Ok("500 weights, m in {2,3,4}, D* = K - D".into())
}

fn criterion_8() -> Outcome {
    let mut products = 0;
    for m in 1..=4 {
        let parts: Vec<_> = (0..=6).flat_map(|s| partitions(s, m)).collect();
        for lam in &parts {
            for mu in &parts {
                let fast = lr_coefficients(lam, mu, m).map_err(|e| e.to_string())?;
                let slow = lr_oracle(lam, mu, m).map_err(|e| e.to_string())?;
                if fast != slow {
                    return Err(format!("{lam} * {mu} rank {m}"));
                }
                // tensor_weights errors if total dimension is not conserved
                tensor_weights(&lam.to_weight(), &mu.to_weight().dual())
                    .map_err(|e| e.to_string())?;
                products += 1;
            }
        }
    }
    Ok(format!(
        "{products} products agree with the polynomial oracle"
    ))
}

fn criterion_9() -> Outcome {
    for d in -10..=10 {
        let r = bott(&w(&[d, 0]));
        let (h0, h1) = cech_p1_oracle(d);
        if (r.h(0), r.h(1)) != (BigUint::from(h0), BigUint::from(h1)) {
            return Err(format!("d={d}"));
        }
    }
    Ok("d in [-10,10]".into())
}

fn criterion_10() -> Outcome {
    let (code, p) = cli(&[
        "hom-total",
        "--k",
        "2",
        "--n",
        "4",
        "--alpha",
        "0,0",
        "--beta",
        "2,2",
        "--cutoff",
        "30",
    ]);
    let oracle = weyl_product_i128(&[0, -2, 0, -2]).unsigned_abs();
    let piece = p["pieces"]
        .as_array()
        .unwrap()
        .iter()
        .find(|x| x["i"] == 1 && x["n"] == 2 && x["lambda"] == serde_json::json!([2, 0]));
    match piece {
        Some(x) if code == 0 && dim(&x["dim"]) == BigUint::from(oracle) && oracle == 15 => {
            Ok(format!("piece (i=1, n=2, lambda=(2,0)) has dim {oracle}"))
        }
        other => Err(format!("exit {code}, piece {other:?}, oracle {oracle}")),
    }
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (
            "1 G(2,4) target vanishing, i>=2, j=1,2,3",
            Duration::from_secs(10),
            criterion_1,
        ),
        (
            "2 G(2,4) case table vs bott",
            Duration::from_secs(10),
            criterion_2,
        ),
        (
            "3 Beilinson collection on P^n, n=2..5",
            Duration::from_secs(5),
            criterion_3,
        ),
        (
            "4 T*P^n tilting, n=2,3",
            Duration::from_secs(10),
            criterion_4,
        ),
        (
            "5 ample twists on T*G(2,4)",
            Duration::from_secs(10),
            criterion_5,
        ),
        ("6 Euler oracle", Duration::from_secs(5), criterion_6),
        ("7 Serre duality", Duration::from_secs(5), criterion_7),
        (
            "8 LR oracle + dimension conservation",
            Duration::from_secs(30),
            criterion_8,
        ),
        ("9 P^1 exhaustive", Duration::from_secs(1), criterion_9),
        (
            "10 witness realization",
            Duration::from_secs(1),
            criterion_10,
        ),
    ];

    let mut failed = Vec::new();
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget {elapsed:?} > {budget:?}")),
            Err(e) => (false, e),
        };
        println!(
            "[{}] criterion {name}: {detail} ({:.3}s)",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        if !ok {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
