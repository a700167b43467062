//! Parallel verification sweeps over the catalog. Work is spread over a
//! rayon pool (bounded by `SUPERGRAPH_THREADS` when set); results are
//! collected in catalog order so output does not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::time::Instant;

use anyhow::{Context, Result};
use rayon::prelude::*;
use supergraph_core::catalog::{default_catalog, CatalogEntry};
use supergraph_core::harness::{check_universality, small_graphs, verify_group, Theorem, Verdict, VerificationReport};
use supergraph_core::Group;

pub const THREADS_VAR: &str = "SUPERGRAPH_THREADS";

/// Runs `f` on a pool sized by `SUPERGRAPH_THREADS`, or rayon's default.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(value) = std::env::var(THREADS_VAR) {
        let n: usize = value
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .with_context(|| format!("{THREADS_VAR} must be a positive integer, got `{value}`"))?;
        builder = builder.num_threads(n);
    }
    Ok(builder.build()?.install(f))
}

pub fn catalog_up_to(max_order: usize) -> Vec<CatalogEntry> {
    default_catalog().into_iter().filter(|e| e.order <= max_order as u64).collect()
}

fn wanted(theorems: &[Theorem], t: Theorem) -> bool {
    theorems.is_empty() || theorems.contains(&t)
}

/// Per-group checks on `g`. With `timings`, each theorem runs separately
/// and its reports carry the elapsed time, graph construction included.
pub fn verify_one(g: &Group, theorems: &[Theorem], timings: bool) -> Result<Vec<VerificationReport>> {
    if !timings {
        return Ok(verify_group(g, theorems)?);
    }
    let mut out = Vec::new();
    for t in Theorem::ALL.into_iter().filter(|&t| t.is_per_group() && wanted(theorems, t)) {
        let start = Instant::now();
        let mut reports = verify_group(g, &[t])?;
        let us = start.elapsed().as_micros() as u64;
        for r in &mut reports {
            r.runtime_us = Some(us);
        }
        out.extend(reports);
    }
    Ok(out)
}

pub fn verify_universality(timings: bool) -> Result<Vec<VerificationReport>> {
    small_graphs()
        .into_par_iter()
        .map(|(name, gamma)| {
            let start = Instant::now();
            let mut r = check_universality(name, &gamma)?;
            if timings {
                r.runtime_us = Some(start.elapsed().as_micros() as u64);
            }
            Ok(r)
        })
        .collect()
}

/// All selected checks on the given groups, followed by the universality
/// checks when selected.
pub fn verify_groups(groups: &[Group], theorems: &[Theorem], timings: bool) -> Result<Vec<VerificationReport>> {
    let per_group: Vec<Vec<VerificationReport>> = groups
        .par_iter()
        .map(|g| verify_one(g, theorems, timings).with_context(|| format!("verifying {}", g.name())))
        .collect::<Result<_>>()?;
    let mut out: Vec<VerificationReport> = per_group.into_iter().flatten().collect();
    if wanted(theorems, Theorem::Universality) {
        out.extend(verify_universality(timings)?);
    }
    Ok(out)
}

pub fn build_all(entries: &[CatalogEntry]) -> Result<Vec<Group>> {
    entries.par_iter().map(|e| e.build().with_context(|| format!("building {}", e.name))).collect()
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub info: usize,
    pub unverified: usize,
}

impl Tally {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Info => self.info += 1,
            Verdict::Unverified => self.unverified += 1,
        }
    }
}

pub fn summarize(reports: &[VerificationReport]) -> BTreeMap<Theorem, Tally> {
    let mut out: BTreeMap<Theorem, Tally> = BTreeMap::new();
    for r in reports {
        out.entry(r.theorem).or_default().add(r.verdict);
    }
    out
}

pub fn summary_table(reports: &[VerificationReport]) -> String {
    let tallies = summarize(reports);
    let mut total = Tally::default();
    let mut s = String::new();
    writeln!(s, "{:<22}{:>7}{:>7}{:>7}{:>12}", "theorem", "pass", "fail", "info", "unverified").unwrap();
    for (t, c) in &tallies {
        writeln!(s, "{:<22}{:>7}{:>7}{:>7}{:>12}", t.as_str(), c.pass, c.fail, c.info, c.unverified).unwrap();
        total.pass += c.pass;
        total.fail += c.fail;
        total.info += c.info;
        total.unverified += c.unverified;
    }
    writeln!(s, "{:<22}{:>7}{:>7}{:>7}{:>12}", "total", total.pass, total.fail, total.info, total.unverified).unwrap();
    s
}
