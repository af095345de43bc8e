//! Four independent certifying bipartiteness checkers.
//!
//! | name     | strategy                                                       |
//! |----------|----------------------------------------------------------------|
//! | `growth` | grow a maximal bipartite connected induced subgraph per component |
//! | `flip`   | insert edges into a bipartite spanning subgraph, flipping the smaller component on conflict |
//! | `dsu`    | insert edges into a union-find that tracks side parity lazily  |
//! | `forest` | 2-color a spanning forest by leaf peeling, then re-check the remaining edges |
//!
//! Every checker handles loops up front (a loop is a length-1 odd cycle),
//! processes edges in id order and seeds components from their smallest
//! vertex, so outputs are fully deterministic. Odd cycles are returned in
//! [`OddCycle::canonical`] form; bipartitions are returned as computed.

mod dsu;
mod flip;
mod forest;
mod growth;

use std::fmt;
use std::str::FromStr;

pub use dsu::{check_dsu_parity, ParityDsu, UnionResult};
pub use flip::check_incremental_flip;
pub use forest::{check_forest_recolor, leaf_peel_two_color};
pub use growth::check_growth_induced;

use crate::certificate::{CheckOutcome, OddCycle};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Growth,
    Flip,
    Dsu,
    Forest,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Growth,
        Algorithm::Flip,
        Algorithm::Dsu,
        Algorithm::Forest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Growth => "growth",
            Algorithm::Flip => "flip",
            Algorithm::Dsu => "dsu",
            Algorithm::Forest => "forest",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown algorithm `{s}`")))
    }
}

/// A checker's outcome plus its work counter: vertices absorbed for
/// `growth`, component flips for `flip`, unions for `dsu`, non-forest edges
/// examined for `forest`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRun {
    pub outcome: CheckOutcome,
    pub ops: u64,
}

/// Runs a checker without verifying its output.
pub fn run_unverified(g: &Graph, algorithm: Algorithm) -> CheckRun {
    match algorithm {
        Algorithm::Growth => growth::run(g),
        Algorithm::Flip => flip::run(g),
        Algorithm::Dsu => dsu::run(g),
        Algorithm::Forest => forest::run(g),
    }
}

/// Runs a checker and verifies the returned certificate against `g`.
///
/// A rejected certificate means the checker is broken, and is reported as
/// [`Error::Invariant`].
pub fn check_with_stats(g: &Graph, algorithm: Algorithm) -> Result<CheckRun> {
    let run = run_unverified(g, algorithm);
    if run.outcome.verify(g) {
        Ok(run)
    } else {
        Err(Error::Invariant(format!(
            "{algorithm} returned a {} certificate that does not verify",
            run.outcome.verdict()
        )))
    }
}

pub fn check(g: &Graph, algorithm: Algorithm) -> Result<CheckOutcome> {
    check_with_stats(g, algorithm).map(|run| run.outcome)
}

fn loop_certificate(g: &Graph) -> Option<OddCycle> {
    g.first_loop().map(|e| OddCycle::from_loop(e.u, e.id))
}
