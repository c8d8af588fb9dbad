//! Full sweep over `t`, artifact writers and the gold comparison.

use std::fs;
use std::io;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Result, SearchError};
use crate::gold;
use crate::multiplicity::{enumerate_multiplicity_arrays, Candidate};
use crate::refinement::{refute_all, RefutationReport};
use crate::spectral::{check_t, enumerate_spectral};
use crate::toggles::Toggles;
use crate::valency::enumerate_valency_arrays;
use crate::Int;

pub const TABLE1_HEADER: &str = "t,|S|,|K|,|M|";
pub const TABLE2_HEADER: &str = "t,n,s,m,valencies,multiplicities,status,reason";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub t_min: Int,
    pub t_max: Int,
    /// Worker cap; 0 lets rayon decide.
    pub jobs: usize,
    pub toggles: Toggles,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            t_min: crate::spectral::T_MIN,
            t_max: crate::spectral::T_MAX,
            jobs: 0,
            toggles: Toggles::default(),
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        check_t(self.t_min)?;
        check_t(self.t_max)?;
        if self.t_min > self.t_max {
            return Err(SearchError::Invalid(format!(
                "t_min = {} exceeds t_max = {}",
                self.t_min, self.t_max
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCounts {
    pub t: Int,
    pub s: usize,
    pub k: usize,
    pub m: usize,
}

#[derive(Clone, Debug)]
pub struct TResult {
    pub counts: StageCounts,
    pub candidates: Vec<Candidate>,
    pub seconds: f64,
}

/// Runs the three stages for one `t`. `|K|` counts parameter arrays with at
/// least one valency array, `|M|` those with at least one multiplicity array.
pub fn search_t(t: Int, toggles: &Toggles) -> Result<TResult> {
    let start = Instant::now();
    let params = enumerate_spectral(t, toggles)?;
    let mut counts = StageCounts {
        t,
        s: params.len(),
        k: 0,
        m: 0,
    };
    let mut candidates = Vec::new();
    for p in &params {
        let arrays = enumerate_valency_arrays(p, toggles)?;
        if arrays.is_empty() {
            continue;
        }
        counts.k += 1;
        let before = candidates.len();
        for v in arrays {
            for counts in enumerate_multiplicity_arrays(&v) {
                candidates.push(Candidate::new(v.clone(), counts)?);
            }
        }
        if candidates.len() > before {
            counts.m += 1;
        }
    }
    Ok(TResult {
        counts,
        candidates,
        seconds: start.elapsed().as_secs_f64(),
    })
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub config: SearchConfig,
    pub per_t: Vec<TResult>,
    pub report: RefutationReport,
}

impl SweepOutcome {
    pub fn counts(&self) -> Vec<StageCounts> {
        self.per_t.iter().map(|r| r.counts).collect()
    }
}

pub fn run_sweep(config: &SearchConfig) -> Result<SweepOutcome> {
    config.validate()?;
    let ts: Vec<Int> = (config.t_min..=config.t_max).collect();
    let toggles = config.toggles;
    let work = || {
        ts.par_iter()
            .map(|&t| search_t(t, &toggles))
            .collect::<Result<Vec<_>>>()
    };
    let per_t = if config.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| SearchError::Invalid(format!("thread pool: {e}")))?
            .install(work)?
    } else {
        work()?
    };
    let survivors: Vec<Candidate> = per_t.iter().flat_map(|r| r.candidates.iter().cloned()).collect();
    let report = refute_all(&survivors, &toggles);
    Ok(SweepOutcome {
        config: *config,
        per_t,
        report,
    })
}

/// CSV fields are ASCII; the few mathematical symbols in reasons are spelled out.
pub fn ascii(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '≠' => out.push_str("!="),
            '·' => out.push('*'),
            '√' => out.push_str("sqrt"),
            'τ' => out.push_str("tau"),
            'ν' => out.push_str("nu"),
            '≤' => out.push_str("<="),
            '≥' => out.push_str(">="),
            '−' => out.push('-'),
            c if c.is_ascii() => out.push(c),
            _ => out.push('?'),
        }
    }
    out
}

fn csv_string(header: &str, rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header.split(',')).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

fn join(v: &[Int]) -> String {
    v.iter().map(Int::to_string).collect::<Vec<_>>().join(" ")
}

pub fn table1_csv(counts: &[StageCounts]) -> String {
    csv_string(
        TABLE1_HEADER,
        counts
            .iter()
            .map(|c| vec![c.t.to_string(), c.s.to_string(), c.k.to_string(), c.m.to_string()]),
    )
}

pub fn table2_csv(report: &RefutationReport) -> String {
    csv_string(
        TABLE2_HEADER,
        report.entries.iter().map(|e| {
            let c = &e.candidate;
            let p = c.params;
            vec![
                p.t.to_string(),
                p.n.to_string(),
                p.s.to_string(),
                p.m.to_string(),
                join(&c.valencies.valencies()),
                join(&c.counts.counts),
                c.status.label().to_string(),
                ascii(c.status.reason()),
            ]
        }),
    )
}

fn candidate_value(c: &Candidate) -> Value {
    let p = c.params;
    json!({
        "t": p.t,
        "n": p.n,
        "s": p.s,
        "m": p.m,
        "omega": c.valencies.omega,
        "valencies": c.valencies.valencies(),
        "multiplicities": c.counts.counts,
        "status": c.status.label(),
        "reason": c.status.reason(),
    })
}

/// Canonical JSON: object keys sorted, candidates in search order.
pub fn candidates_json(report: &RefutationReport) -> String {
    let list: Vec<Value> = report.entries.iter().map(|e| candidate_value(&e.candidate)).collect();
    let mut s = serde_json::to_string_pretty(&Value::Array(list)).expect("serialisable");
    s.push('\n');
    s
}

pub fn manifest_json(outcome: &SweepOutcome) -> String {
    let cfg = &outcome.config;
    let per_t: Vec<Value> = outcome
        .per_t
        .iter()
        .map(|r| {
            json!({
                "t": r.counts.t,
                "s": r.counts.s,
                "k": r.counts.k,
                "m": r.counts.m,
                "candidates": r.candidates.len(),
                "seconds": (r.seconds * 1000.0).round() / 1000.0,
            })
        })
        .collect();
    let v = json!({
        "tool": "tev",
        "version": env!("CARGO_PKG_VERSION"),
        "t_min": cfg.t_min,
        "t_max": cfg.t_max,
        "toggles": serde_json::to_value(cfg.toggles).expect("serialisable"),
        "per_t": per_t,
        "totals": {
            "candidates": outcome.report.entries.len(),
            "open": outcome.report.open(),
            "flagged": outcome.report.flagged(),
            "refuted": outcome.report.refuted(),
        },
    });
    let mut s = serde_json::to_string_pretty(&v).expect("serialisable");
    s.push('\n');
    s
}

/// Writes the four artifacts into `dir`, creating it if needed.
pub fn write_outputs(outcome: &SweepOutcome, dir: &Path) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join("manifest.json"), manifest_json(outcome))?;
    fs::write(dir.join("table1.csv"), table1_csv(&outcome.counts()))?;
    fs::write(dir.join("table2.csv"), table2_csv(&outcome.report))?;
    fs::write(dir.join("candidates.json"), candidates_json(&outcome.report))?;
    Ok(())
}

/// Differences from the bundled gold tables, restricted to the swept range.
pub fn compare_gold(outcome: &SweepOutcome) -> Vec<String> {
    let mut diffs = Vec::new();
    for c in outcome.counts() {
        match gold::table1_row(c.t) {
            Some(g) if (g.s, g.k, g.m) != (c.s, c.k, c.m) => diffs.push(format!(
                "t={}: computed (|S|,|K|,|M|) = ({}, {}, {}), expected ({}, {}, {})",
                c.t, c.s, c.k, c.m, g.s, g.k, g.m
            )),
            Some(_) => {}
            None => diffs.push(format!("t={}: no gold row", c.t)),
        }
    }
    let key = |t: Int, n: Int, s: Int, m: Int, ks: Vec<Int>, ns: Vec<Int>| (t, n, s, m, ks, ns);
    let (lo, hi) = (outcome.config.t_min, outcome.config.t_max);
    let expected: Vec<_> = gold::TABLE2
        .iter()
        .filter(|r| (lo..=hi).contains(&r.t))
        .map(|r| key(r.t, r.n, r.s, r.m, r.valencies.to_vec(), r.multiplicities.to_vec()))
        .collect();
    let found: Vec<_> = outcome
        .report
        .entries
        .iter()
        .map(|e| {
            let c = &e.candidate;
            key(
                c.params.t,
                c.params.n,
                c.params.s,
                c.params.m,
                c.valencies.valencies(),
                c.counts.counts.clone(),
            )
        })
        .collect();
    for f in &found {
        if !expected.contains(f) {
            diffs.push(format!(
                "unexpected survivor t={} (n,s,m)=({},{},{}) k={:?} n_i={:?}",
                f.0, f.1, f.2, f.3, f.4, f.5
            ));
        }
    }
    for e in &expected {
        if !found.contains(e) {
            diffs.push(format!(
                "missing survivor t={} (n,s,m)=({},{},{}) k={:?} n_i={:?}",
                e.0, e.1, e.2, e.3, e.4, e.5
            ));
        }
    }
    diffs
}

/// Recounts the record files in `dir` and compares them with the manifest.
pub fn check_consistency(dir: &Path) -> std::result::Result<(), String> {
    let read = |name: &str| fs::read_to_string(dir.join(name)).map_err(|e| format!("{name}: {e}"));
    let manifest: Value = serde_json::from_str(&read("manifest.json")?).map_err(|e| format!("manifest.json: {e}"))?;
    let candidates: Value =
        serde_json::from_str(&read("candidates.json")?).map_err(|e| format!("candidates.json: {e}"))?;
    let table1 = read("table1.csv")?;
    let table2 = read("table2.csv")?;

    let per_t = manifest["per_t"].as_array().ok_or("manifest.json: missing per_t")?;
    let rows: Vec<&str> = table1.lines().skip(1).collect();
    if rows.len() != per_t.len() {
        return Err(format!(
            "table1.csv has {} rows, manifest lists {} values of t",
            rows.len(),
            per_t.len()
        ));
    }
    for (row, entry) in rows.iter().zip(per_t) {
        let expect = format!("{},{},{},{}", entry["t"], entry["s"], entry["k"], entry["m"]);
        if *row != expect {
            return Err(format!("table1.csv row {row:?} disagrees with manifest {expect:?}"));
        }
    }
    let total: u64 = per_t.iter().filter_map(|e| e["candidates"].as_u64()).sum();
    let listed = candidates.as_array().map(Vec::len).unwrap_or(0) as u64;
    let table2_rows = table2.lines().skip(1).count() as u64;
    if total != listed || total != table2_rows || Some(total) != manifest["totals"]["candidates"].as_u64() {
        return Err(format!(
            "candidate counts disagree: manifest {total}, candidates.json {listed}, table2.csv {table2_rows}"
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(SearchConfig::default().validate().is_ok());
        let bad = SearchConfig {
            t_min: 5,
            t_max: 4,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = SearchConfig {
            t_min: 2,
            ..Default::default()
        };
        assert!(matches!(bad.validate(), Err(SearchError::TOutOfRange(2))));
    }

    #[test]
    fn single_t_sweep() {
        let cfg = SearchConfig {
            t_min: 3,
            t_max: 3,
            jobs: 1,
            ..Default::default()
        };
        let out = run_sweep(&cfg).unwrap();
        assert_eq!(table1_csv(&out.counts()), "t,|S|,|K|,|M|\n3,128,58,0\n");
        assert_eq!(table2_csv(&out.report), format!("{TABLE2_HEADER}\n"));
        assert!(compare_gold(&out).is_empty());
    }

    #[test]
    fn ascii_spelling() {
        assert_eq!(ascii("45 = 9·10/2"), "45 = 9*10/2");
        assert_eq!(ascii("(141 ≠ 145)"), "(141 != 145)");
        assert_eq!(ascii("τ=76"), "tau=76");
    }

    #[test]
    fn written_artifacts_are_consistent() {
        let dir = std::env::temp_dir().join(format!("tev-pipeline-{}", std::process::id()));
        let cfg = SearchConfig {
            t_min: 4,
            t_max: 5,
            jobs: 2,
            ..Default::default()
        };
        let out = run_sweep(&cfg).unwrap();
        write_outputs(&out, &dir).unwrap();
        check_consistency(&dir).unwrap();
        let t2 = fs::read_to_string(dir.join("table2.csv")).unwrap();
        assert!(t2.is_ascii());
        assert_eq!(t2.lines().count(), 4);
        fs::write(dir.join("table1.csv"), "t,|S|,|K|,|M|\n4,1,1,1\n5,277,113,2\n").unwrap();
        assert!(check_consistency(&dir).is_err());
        fs::remove_dir_all(&dir).unwrap();
    }
}
