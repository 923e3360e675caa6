//! Exhaustive census of all single orbits and all unordered pairs of
//! distinct orbits.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{classical_bound, BoundReport, OrbitSet};
use crate::error::{Error, Result};
use crate::model::Model;
use crate::permgroup::{CosetCoord, GroupTable, GROUP_ORDER};
use crate::reference::LISTED_PAIRS;

/// Number of unordered pairs of distinct orbits.
pub const PAIR_COUNT: usize = GROUP_ORDER * (GROUP_ORDER - 1) / 2;

/// Classical bound with no known witness pair before the census.
pub const UNSEEN_BOUND: u32 = 10;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub singles: Vec<BoundReport<f64>>,
    pub pairs: Vec<BoundReport<f64>>,
    /// Pair count per classical bound, every value from 8 to 16 present.
    pub b_histogram: BTreeMap<u32, usize>,
    pub violations: Vec<[CosetCoord; 2]>,
    pub single_violations: Vec<CosetCoord>,
}

/// All pairs `c1 < c2` in lexicographic `(α, l)` order.
pub fn ordered_pairs() -> Vec<[CosetCoord; 2]> {
    let all: Vec<CosetCoord> = CosetCoord::all().collect();
    let mut out = Vec::with_capacity(PAIR_COUNT);
    for (i, &a) in all.iter().enumerate() {
        for &b in &all[i + 1..] {
            out.push([a, b]);
        }
    }
    out
}

/// Runs the full census on `workers` threads (0 picks the rayon default).
/// The result does not depend on the worker count.
pub fn scan_all(model: &Model<f64>, workers: usize) -> Result<ScanReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let singles_in: Vec<Vec<CosetCoord>> = CosetCoord::all().map(|c| vec![c]).collect();
    let pairs_in: Vec<Vec<CosetCoord>> = ordered_pairs().iter().map(|p| p.to_vec()).collect();
    let run = |sets: &[Vec<CosetCoord>]| -> Result<Vec<BoundReport<f64>>> {
        pool.install(|| {
            sets.par_iter()
                .map(|labels| BoundReport::compute(model, &OrbitSet::from_labels(labels)?))
                .collect()
        })
    };
    let singles = run(&singles_in)?;
    let pairs = run(&pairs_in)?;

    let mut b_histogram: BTreeMap<u32, usize> = (8..=16).map(|b| (b, 0)).collect();
    for r in &pairs {
        *b_histogram.entry(r.classical_bound).or_default() += 1;
    }
    let violations = pairs
        .iter()
        .filter(|r| r.violation)
        .map(|r| [r.orbit_set.labels[0], r.orbit_set.labels[1]])
        .collect();
    let single_violations = singles
        .iter()
        .filter(|r| r.violation)
        .map(|r| r.orbit_set.labels[0])
        .collect();
    Ok(ScanReport {
        singles,
        pairs,
        b_histogram,
        violations,
        single_violations,
    })
}

impl ScanReport {
    pub fn pair(&self, a: CosetCoord, b: CosetCoord) -> Option<&BoundReport<f64>> {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.pairs.iter().find(|r| r.orbit_set.labels == [a, b])
    }

    /// Pairs whose two orbits differ by an element of the subgroup `H`.
    /// Their classical bound should be 8.
    pub fn subgroup_pairs(&self, group: &GroupTable) -> Vec<&BoundReport<f64>> {
        self.pairs
            .iter()
            .filter(|r| {
                let [g1, g2] = [r.orbit_set.gtildes[0], r.orbit_set.gtildes[1]];
                group.in_subgroup(&g1.inverse().compose(&g2))
            })
            .collect()
    }

    /// True when the structural invariants of the census hold.
    pub fn is_consistent(&self, group: &GroupTable) -> bool {
        self.singles.len() == GROUP_ORDER
            && self.pairs.len() == PAIR_COUNT
            && self.b_histogram.values().sum::<usize>() == PAIR_COUNT
            && self
                .subgroup_pairs(group)
                .iter()
                .all(|r| r.classical_bound == 8)
            && self
                .pairs
                .iter()
                .chain(&self.singles)
                .all(|r| r.is_consistent())
            && self
                .pairs
                .iter()
                .filter(|r| r.violation)
                .all(|r| r.quantum_bound <= 16.0 + 1e-9 && r.classical_bound >= 8)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))
    }

    /// One row per orbit set, singles first.
    pub fn to_csv(&self) -> Result<String> {
        reports_to_csv(self.singles.iter().chain(&self.pairs))
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "single orbits: {}", self.singles.len());
        let _ = writeln!(
            s,
            "single-orbit violations: {}",
            self.single_violations.len()
        );
        let _ = writeln!(s, "orbit pairs: {}", self.pairs.len());
        let _ = writeln!(s);
        let _ = writeln!(s, "classical bound  pairs");
        for (b, n) in &self.b_histogram {
            let flag = if *b == UNSEEN_BOUND {
                if *n == 0 {
                    "  (finding: no pair attains this bound)"
                } else {
                    "  (finding: pairs attain this bound)"
                }
            } else {
                ""
            };
            let _ = writeln!(s, "{b:>15}  {n:>5}{flag}");
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "violations: {}", self.violations.len());
        for [a, b] in &self.violations {
            if let Some(r) = self.pair(*a, *b) {
                let _ = writeln!(
                    s,
                    "  {a} {b}  quantum {:.6} ({})  classical {}  cycle {}  ratio {:.4}",
                    r.quantum_bound,
                    r.quantum_arg,
                    r.classical_bound,
                    r.cycle_lower_bound
                        .map_or("-".to_string(), |c| c.to_string()),
                    r.violation_ratio,
                );
            }
        }
        s
    }

    /// Writes `scan.json`, `scan.csv` and `scan.txt` into `dir`.
    pub fn write_all(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("scan.json"), self.to_json()?)?;
        fs::write(dir.join("scan.csv"), self.to_csv()?)?;
        fs::write(dir.join("scan.txt"), self.summary())?;
        Ok(())
    }
}

/// CSV with the columns `orbits, classical_bound, cycle_lower_bound,
/// quantum_bound, quantum_arg, violation`.
pub fn reports_to_csv<'a>(
    reports: impl IntoIterator<Item = &'a BoundReport<f64>>,
) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Error::Io(e.to_string());
    w.write_record([
        "orbits",
        "classical_bound",
        "cycle_lower_bound",
        "quantum_bound",
        "quantum_arg",
        "violation",
    ])
    .map_err(err)?;
    for r in reports {
        w.write_record([
            r.orbit_set.to_string(),
            r.classical_bound.to_string(),
            r.cycle_lower_bound.map_or(String::new(), |c| c.to_string()),
            format!("{:?}", r.quantum_bound),
            r.quantum_arg.to_string(),
            r.violation.to_string(),
        ])
        .map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// Outcome of checking one hand-worked pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListCheck {
    pub pair: [CosetCoord; 2],
    pub expected: u32,
    pub computed: u32,
    pub pass: bool,
}

/// Recomputes the classical bound of every published pair.
pub fn check_listed_pairs() -> Result<Vec<ListCheck>> {
    let group = GroupTable::s4();
    LISTED_PAIRS
        .iter()
        .map(|p| {
            let a = CosetCoord::new(p.first.0, p.first.1)?;
            let b = CosetCoord::new(p.second.0, p.second.1)?;
            let computed = classical_bound(group, &OrbitSet::from_labels(&[a, b])?)?.value;
            Ok(ListCheck {
                pair: [a, b],
                expected: p.bound,
                computed,
                pass: computed == p.bound,
            })
        })
        .collect()
}
