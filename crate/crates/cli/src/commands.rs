use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::Result;
use bbw_tilt::grassmann::GrassmannContext;
use bbw_tilt::totalspace::{
    DeformationStatus, G24Case, G24CaseTable, VanishingReport, VerdictStatus,
};
use bbw_tilt::{
    bott, check_lemma_vanishing, check_tilting, hom_grassmann, hom_total, lr_coefficients,
    reproduce_g24_cases, BottResult, GradedHomProfile, Partition, SchurExpansion, TiltingReport,
    Weight,
};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::args::{Command, GrassmannArgs, Reproduce};
use crate::selftest::{self, SelftestReport};

/// Rendered report plus whether every requested check held.
pub struct Outcome {
    pub json: String,
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn new<T: Serialize>(report: &T, text: String, ok: bool) -> Result<Self> {
        Ok(Outcome {
            json: serde_json::to_string(report)?,
            text,
            ok,
        })
    }
}

/// `BigUint` rendered as a JSON decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Decimal(pub BigUint);

impl From<Decimal> for String {
    fn from(d: Decimal) -> String {
        d.0.to_string()
    }
}

impl TryFrom<String> for Decimal {
    type Error = num_bigint::ParseBigIntError;

    fn try_from(s: String) -> std::result::Result<Self, Self::Error> {
        s.parse().map(Decimal)
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub rank: usize,
    pub terms: SchurExpansion,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomGrassmannReport {
    pub context: GrassmannContext,
    pub alpha: Weight,
    pub beta: Weight,
    pub sym_degree: u32,
    pub h: BTreeMap<usize, Decimal>,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseCount {
    pub j: i64,
    pub case: G24Case,
    pub count: usize,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G24Report {
    pub all_agree: bool,
    pub counts: Vec<CaseCount>,
    pub table: G24CaseTable,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeilinsonRow {
    pub a: usize,
    pub b: usize,
    pub ext: BTreeMap<usize, Decimal>,
    pub expected_hom: Decimal,
    pub ok: bool,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeilinsonReport {
    pub n: usize,
    pub ok: bool,
    pub rows: Vec<BeilinsonRow>,
}

pub fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Bott { delta } => {
            let delta = Weight::new(delta)?;
            let r = bott(&delta);
            let text = match &r {
                BottResult::Vanishes => format!("H^*(F, O{delta}) = 0\n"),
                BottResult::Concentrated {
                    degree,
                    dominant,
                    dim,
                } => format!("H^{degree}(F, O{delta}) = S^{dominant} V, dim {dim}; all other degrees vanish\n"),
            };
            Outcome::new(&r, text, true)
        }
        Command::Lr { lambda, mu, rank } => {
            let lambda = Partition::new(&lambda.0, rank)?;
            let mu = Partition::new(&mu.0, rank)?;
            let terms = lr_coefficients(&lambda, &mu, rank)?;
            let mut text = format!("S^{lambda} ⊗ S^{mu} (rank {rank}) =\n");
            for (nu, c) in terms.iter() {
                writeln!(text, "  {c} x S^{nu}")?;
            }
            let report = LrReport {
                lambda,
                mu,
                rank,
                terms,
            };
            Outcome::new(&report, text, true)
        }
        Command::HomGrassmann {
            ctx,
            alpha,
            beta,
            sym_degree,
        } => {
            let ctx = context(&ctx)?;
            let h = hom_grassmann(&ctx, &alpha, &beta, sym_degree)?;
            let mut text = format!(
                "G({},{}): Hom^i(S^{alpha} U, S^{beta} U ⊗ Sym^{sym_degree} T)\n",
                ctx.k(),
                ctx.n()
            );
            if h.is_empty() {
                text.push_str("  all degrees vanish\n");
            }
            for (i, d) in &h {
                writeln!(text, "  i={i}: {d}")?;
            }
            let report = HomGrassmannReport {
                context: ctx,
                alpha,
                beta,
                sym_degree,
                h: h.into_iter().map(|(i, d)| (i, Decimal(d))).collect(),
            };
            Outcome::new(&report, text, true)
        }
        Command::HomTotal {
            ctx,
            alpha,
            beta,
            cutoff,
            vanish_from,
        } => {
            let ctx = context(&ctx)?;
            let profile = hom_total(&ctx, &alpha, &beta, cutoff)?;
            let ok = vanish_from.is_none_or(|from| profile.entries.iter().all(|e| e.i < from));
            let text = profile_text(&profile);
            Outcome::new(&profile, text, ok)
        }
        Command::CheckTilting {
            ctx,
            collection,
            cutoff,
        } => {
            let ctx = context(&ctx)?;
            let report = check_tilting(&ctx, &collection.0, cutoff)?;
            let text = tilting_text(&report);
            Outcome::new(&report, text, report.is_tilting())
        }
        Command::CheckVanishing { ctx, jmax, cutoff } => {
            let ctx = context(&ctx)?;
            let report = check_lemma_vanishing(&ctx, jmax, cutoff)?;
            let text = vanishing_text(&report);
            Outcome::new(&report, text, report.holds())
        }
        Command::Reproduce(Reproduce::G24 { cutoff }) => {
            let report = g24_report(cutoff)?;
            let text = g24_text(&report);
            Outcome::new(&report, text, report.all_agree)
        }
        Command::Reproduce(Reproduce::Beilinson { n }) => {
            let report = beilinson(n)?;
            let text = beilinson_text(&report);
            Outcome::new(&report, text, report.ok)
        }
        Command::Reproduce(Reproduce::Tpn { n, cutoff }) => {
            let ctx = GrassmannContext::projective(n)?;
            let collection: Vec<Weight> = (0..=n as i64)
                .map(|a| Weight::new(vec![a]))
                .collect::<bbw_tilt::Result<_>>()?;
            let report = check_tilting(&ctx, &collection, cutoff)?;
            let text = tilting_text(&report);
            Outcome::new(&report, text, report.is_tilting())
        }
        Command::Selftest { seed } => {
            let report = selftest::run(seed)?;
            let text = selftest_text(&report);
            Outcome::new(&report, text, report.passed)
        }
    }
}

fn context(args: &GrassmannArgs) -> bbw_tilt::Result<GrassmannContext> {
    GrassmannContext::new(args.k, args.n)
}

pub fn g24_report(cutoff: u32) -> Result<G24Report> {
    let table = reproduce_g24_cases(cutoff)?;
    let counts = table
        .counts()
        .into_iter()
        .map(|((j, case), count)| CaseCount { j, case, count })
        .collect();
    Ok(G24Report {
        all_agree: table.all_agree(),
        counts,
        table,
    })
}

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

/// `Ext^i(O(-a), O(-b))` on `P^n` for `0 <= a, b <= n`.
pub fn beilinson(n: usize) -> Result<BeilinsonReport> {
    let ctx = GrassmannContext::projective(n)?;
    let mut rows = Vec::new();
    for a in 0..=n {
        for b in 0..=n {
            let ext = hom_grassmann(
                &ctx,
                &Weight::new(vec![a as i64])?,
                &Weight::new(vec![b as i64])?,
                0,
            )?;
            let expected_hom = if a >= b {
                binomial((a - b + n) as u64, n as u64)
            } else {
                BigUint::default()
            };
            let hom = ext.get(&0).cloned().unwrap_or_default();
            let ok = ext.keys().all(|&i| i == 0) && hom == expected_hom;
            rows.push(BeilinsonRow {
                a,
                b,
                ext: ext.into_iter().map(|(i, d)| (i, Decimal(d))).collect(),
                expected_hom: Decimal(expected_hom),
                ok,
            });
        }
    }
    Ok(BeilinsonReport {
        n,
        ok: rows.iter().all(|r| r.ok),
        rows,
    })
}

fn profile_text(p: &GradedHomProfile) -> String {
    let mut s = format!(
        "T*G({},{}): Hom^i(S^{} U, S^{} U), symmetric degrees 0..={}\n",
        p.context.k(),
        p.context.n(),
        p.src,
        p.dst,
        p.cutoff
    );
    for d in &p.degrees {
        let x = match d.x {
            DeformationStatus::CertifiedZero => "certified zero",
            DeformationStatus::UpperBound => "bounded above",
        };
        let _ = writeln!(s, "  i={}: X0 total {} | X {}", d.i, d.x0, x);
        for e in p.entries_in_degree(d.i) {
            let _ = writeln!(s, "      d={:<3} dim {}", e.n, e.dim);
        }
    }
    s
}

fn tilting_text(r: &TiltingReport) -> String {
    let mut s = format!(
        "T*G({},{}): collection {}, cutoff {}\n",
        r.context.k(),
        r.context.n(),
        r.collection
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" "),
        r.cutoff
    );
    for v in r.witnesses() {
        if let VerdictStatus::Nonzero { witness } = &v.status {
            let _ = writeln!(
                s,
                "  Hom^{}({}, {}) != 0: d={} lambda={} dim {}",
                v.i, v.src, v.dst, witness.n, witness.lambda, witness.dim
            );
        }
    }
    let zero = r.verdicts.iter().filter(|v| v.is_zero()).count();
    let _ = writeln!(
        s,
        "{} of {} (pair, i != 0) cells certified zero: {}",
        zero,
        r.verdicts.len(),
        if r.is_tilting() {
            "tilting up to cutoff"
        } else {
            "NOT tilting"
        }
    );
    s
}

fn vanishing_text(r: &VanishingReport) -> String {
    let mut s = format!(
        "T*G({},{}): H^i(O(j)), i > 0, 0 <= j <= {}, cutoff {}\n",
        r.context.k(),
        r.context.n(),
        r.j_max,
        r.cutoff
    );
    for row in &r.rows {
        if row.offending.is_empty() {
            let _ = writeln!(s, "  j={}: all i > 0 vanish", row.j);
        } else {
            for e in &row.offending {
                let _ = writeln!(
                    s,
                    "  j={}: H^{} nonzero at d={} (dim {})",
                    row.j, e.i, e.n, e.dim
                );
            }
        }
    }
    s
}

fn g24_text(r: &G24Report) -> String {
    let mut s = format!(
        "Delta = (l1-j, l2-j, -l2, -l1) on F(C^4), |lambda| <= {}\n",
        r.table.cutoff
    );
    for c in &r.counts {
        let what = match c.case {
            G24Case::Dominant => "1st: l2-j >= -l2            nonzero only at i=0",
            G24Case::Wall => "2nd: l2-j+1 = -l2           vanishes",
            G24Case::ReflectedDegreeOne => "3rd: l1-j >= -1             nonzero only at i=1",
            G24Case::ReflectedWall => "3rd: l1-j+1 = -1            vanishes",
            G24Case::ReflectedCorner => "3rd: l1-j+1 < -1 (l1=0,j=3) vanishes",
        };
        let _ = writeln!(s, "  j={} {:<50} {:>4} cells", c.j, what, c.count);
    }
    let bad = r.table.cells.iter().filter(|c| !c.agrees).count();
    let _ = writeln!(
        s,
        "{} cells, {} disagreements with Bott",
        r.table.cells.len(),
        bad
    );
    s
}

fn beilinson_text(r: &BeilinsonReport) -> String {
    let mut s = format!("P^{}: Ext^i(O(-a), O(-b))\n", r.n);
    for row in &r.rows {
        let ext = if row.ext.is_empty() {
            "0".to_string()
        } else {
            row.ext
                .iter()
                .map(|(i, d)| format!("Ext^{i}={}", d.0))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let _ = writeln!(
            s,
            "  a={} b={}: {:<16} expected Hom {} {}",
            row.a,
            row.b,
            ext,
            row.expected_hom.0,
            if row.ok { "ok" } else { "MISMATCH" }
        );
    }
    s
}

fn selftest_text(r: &SelftestReport) -> String {
    let mut s = String::new();
    for c in &r.checks {
        let _ = writeln!(
            s,
            "[{}] {}: {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    s
}
