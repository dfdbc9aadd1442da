//! Parameter grid sweeps: solve and cross-check every instance of a grid,
//! one JSONL report line per instance followed by a summary line.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use dioph_core::{EquationParams, SearchBox};
use rayon::prelude::*;

use crate::error::CliError;
use crate::report::{InstanceReport, SummaryLine, SweepSummary};
use crate::run_instance;

/// Inclusive interval `lo..=hi` with `1 <= lo <= hi`. Parses `"3"`, `"1..5"`
/// and `"1..=5"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: u32,
    pub hi: u32,
}

impl Interval {
    pub fn iter(self) -> impl Iterator<Item = u32> + Clone {
        self.lo..=self.hi
    }
}

impl FromStr for Interval {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
            None => (s, s),
        };
        let parse = |v: &str| v.trim().parse::<u32>().map_err(|e| format!("'{v}': {e}"));
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo == 0 {
            return Err("interval endpoints must be ≥ 1".into());
        }
        if lo > hi {
            return Err(format!("empty interval {lo}..{hi}"));
        }
        Ok(Self { lo, hi })
    }
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub n: Interval,
    pub m: Interval,
    pub k: Interval,
    pub l: Interval,
    pub c: Interval,
    pub search_box: SearchBox,
    pub bound: u64,
    pub out: PathBuf,
}

impl SweepSpec {
    /// Every instance, ordered by `(n, m, k, l, c)`.
    pub fn instances(&self) -> Vec<EquationParams> {
        let mut out = Vec::new();
        for n in self.n.iter() {
            for m in self.m.iter() {
                for k in self.k.iter() {
                    for l in self.l.iter() {
                        for c in self.c.iter() {
                            out.push(
                                EquationParams::new(n, m, k, l, c)
                                    .expect("interval endpoints are ≥ 1"),
                            );
                        }
                    }
                }
            }
        }
        out
    }
}

pub struct SweepOutcome {
    pub summary: SummaryLine,
    pub defective: usize,
}

/// Runs the sweep on the current rayon pool and writes the report file.
///
/// The output file is opened before any work starts, so an unwritable path
/// fails fast.
pub fn run(spec: &SweepSpec) -> Result<SweepOutcome, CliError> {
    let io_err = |source| CliError::Output {
        path: spec.out.clone(),
        source,
    };
    let file = File::create(&spec.out).map_err(io_err)?;
    let start = Instant::now();

    let reports: Vec<(InstanceReport, usize)> = spec
        .instances()
        .into_par_iter()
        .map(|p| run_instance(&p, spec.bound, Some(&spec.search_box)))
        .collect::<Result<_, _>>()?;

    let mut w = BufWriter::new(file);
    let mut instances = 0usize;
    let mut certified = 0usize;
    let mut defective = 0usize;
    let mut discrepancies = 0usize;
    let mut kinds: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut cases: BTreeMap<&'static str, usize> = BTreeMap::new();
    for (r, d) in &reports {
        serde_json::to_writer(&mut w, r).map_err(|e| io_err(e.into()))?;
        w.write_all(b"\n").map_err(io_err)?;
        instances += 1;
        certified += usize::from(r.kind != "bounded_incomplete");
        defective += usize::from(*d > 0);
        discrepancies += d;
        *kinds.entry(r.kind).or_default() += 1;
        *cases.entry(r.case).or_default() += 1;
    }

    let strings =
        |m: BTreeMap<&'static str, usize>| m.into_iter().map(|(k, v)| (k, v.to_string())).collect();
    let summary = SummaryLine {
        summary: SweepSummary {
            instances: instances.to_string(),
            certified: certified.to_string(),
            bounded: (instances - certified).to_string(),
            defective: defective.to_string(),
            discrepancies: discrepancies.to_string(),
            kinds: strings(kinds),
            cases: strings(cases),
            elapsed_ms: start.elapsed().as_millis().to_string(),
        },
    };
    serde_json::to_writer(&mut w, &summary).map_err(|e| io_err(e.into()))?;
    w.write_all(b"\n").map_err(io_err)?;
    w.flush().map_err(io_err)?;

    Ok(SweepOutcome { summary, defective })
}
