//! Cross-algorithm benchmark harness.
//!
//! Every (kind, n, m, seed) cell is generated once and handed to all four
//! checkers `repeat` times. Only the checker call is timed; verification
//! runs afterwards. Rows come out sorted by
//! (algorithm, kind, n, m, seed, rep).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use crate::algo::{run_unverified, Algorithm};
use crate::error::{Error, Result};
use crate::generate::{generate, Density, GenKind, GenSpec};

pub const BENCH_HEADER: &str = "algorithm,kind,n,m,seed,rep,verdict,elapsed_ns,ops_counter";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub algorithm: Algorithm,
    pub kind: GenKind,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub rep: usize,
    pub verdict: &'static str,
    pub elapsed_ns: u64,
    pub ops: u64,
}

impl BenchRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.algorithm,
            self.kind,
            self.n,
            self.m,
            self.seed,
            self.rep,
            self.verdict,
            self.elapsed_ns,
            self.ops
        )
    }

    fn sort_key(&self) -> (Algorithm, GenKind, usize, usize, u64, usize) {
        (
            self.algorithm,
            self.kind,
            self.n,
            self.m,
            self.seed,
            self.rep,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    /// Requested (n, m) per cell.
    pub sizes: Vec<(usize, usize)>,
    pub seeds: Vec<u64>,
    pub kinds: Vec<GenKind>,
    pub repeat: usize,
    /// Cycle length used for `planted-odd-cycle` cells.
    pub cycle_len: usize,
}

/// Maps a bench cell onto a generator spec.
///
/// Planted bipartite cells split `n` into halves. Planted odd-cycle cells
/// spend `cycle_len` vertices and `cycle_len + 1` edges on the cycle and its
/// bridge, and the rest on the bipartite base. Forest cells ignore `m`.
pub fn cell_spec(
    kind: GenKind,
    n: usize,
    m: usize,
    seed: u64,
    cycle_len: usize,
) -> Result<GenSpec> {
    Ok(match kind {
        GenKind::Random => GenSpec::random(n, Density::Edges(m), seed),
        GenKind::PlantedBipartite => {
            GenSpec::planted_bipartite(n / 2, n - n / 2, Density::Edges(m), seed)
        }
        GenKind::PlantedOddCycle => {
            let base = n.checked_sub(cycle_len).ok_or_else(|| {
                Error::InvalidInput(format!(
                    "n = {n} is smaller than the cycle length {cycle_len}"
                ))
            })?;
            let base_edges = m.saturating_sub(cycle_len + usize::from(base > 0));
            GenSpec::planted_odd_cycle(
                base / 2,
                base - base / 2,
                Density::Edges(base_edges),
                cycle_len,
                seed,
            )
        }
        GenKind::Forest => GenSpec::forest(n, seed),
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BenchOutcome {
    /// Rows of every group whose checkers agreed and verified, sorted.
    pub rows: Vec<BenchRow>,
    /// One message per group that failed agreement or verification.
    pub failures: Vec<String>,
}

impl BenchOutcome {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(BENCH_HEADER);
        out.push('\n');
        for row in &self.rows {
            let _ = writeln!(out, "{}", row.csv());
        }
        out
    }
}

pub fn run_bench(config: &BenchConfig) -> Result<BenchOutcome> {
    if config.repeat == 0 {
        return Err(Error::InvalidInput("repeat must be at least 1".into()));
    }
    // (kind, n, m, seed) -> rows of that group
    let mut groups: BTreeMap<(GenKind, usize, usize, u64), Vec<BenchRow>> = BTreeMap::new();
    let mut failures = Vec::new();
    for &kind in &config.kinds {
        for &(n, m) in &config.sizes {
            for &seed in &config.seeds {
                let g = generate(&cell_spec(kind, n, m, seed, config.cycle_len)?)?;
                let key = (kind, g.vertex_count(), g.edge_count(), seed);
                let mut rows = Vec::new();
                let mut broken = false;
                for algorithm in Algorithm::ALL {
                    for rep in 0..config.repeat {
                        let start = Instant::now();
                        let run = run_unverified(&g, algorithm);
                        let elapsed_ns = start.elapsed().as_nanos() as u64;
                        if !run.outcome.verify(&g) {
                            broken = true;
                            failures.push(format!(
                                "{algorithm} produced an unverifiable certificate on {kind} n={} m={} seed={seed}",
                                key.1, key.2
                            ));
                        }
                        rows.push(BenchRow {
                            algorithm,
                            kind,
                            n: key.1,
                            m: key.2,
                            seed,
                            rep,
                            verdict: run.outcome.verdict(),
                            elapsed_ns,
                            ops: run.ops,
                        });
                    }
                }
                if rows.iter().any(|r| r.verdict != rows[0].verdict) {
                    broken = true;
                    failures.push(format!(
                        "checkers disagree on {kind} n={} m={} seed={seed}",
                        key.1, key.2
                    ));
                }
                if !broken {
                    groups.entry(key).or_default().extend(rows);
                }
            }
        }
    }
    let mut rows: Vec<BenchRow> = groups.into_values().flatten().collect();
    rows.sort_by_key(BenchRow::sort_key);
    Ok(BenchOutcome { rows, failures })
}
