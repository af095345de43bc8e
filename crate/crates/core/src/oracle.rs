//! Brute-force ground truth for small graphs.
//!
//! Nothing here shares code with the checkers beyond the graph type and the
//! certificate verifiers: bipartitions come from trying every side
//! assignment, odd cycles from enumerating simple cycles.

use crate::certificate::{verify_bipartition, Bipartition, OddCycle, Side};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Largest vertex count accepted by the assignment enumerators.
pub const MAX_ASSIGNMENT_VERTICES: usize = 20;
/// Largest vertex count accepted by the cycle enumerator.
pub const MAX_CYCLE_VERTICES: usize = 12;

fn guard(g: &Graph, limit: usize) -> Result<()> {
    if g.vertex_count() > limit {
        Err(Error::TooLarge {
            n: g.vertex_count(),
            limit,
        })
    } else {
        Ok(())
    }
}

/// Assignments in lexicographic order of the side vector (vertex 0 is the
/// most significant position), as bitmasks with bit `n - 1 - v` for `v`.
fn proper_masks(g: &Graph) -> impl Iterator<Item = u32> + '_ {
    let n = g.vertex_count();
    let edge_masks: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|e| (1u32 << (n - 1 - e.u), 1u32 << (n - 1 - e.v)))
        .collect();
    (0..(1u32 << n)).filter(move |&mask| {
        edge_masks
            .iter()
            .all(|&(bu, bv)| (mask & bu == 0) != (mask & bv == 0))
    })
}

fn mask_to_bipartition(n: usize, mask: u32) -> Bipartition {
    Bipartition::new(
        (0..n)
            .map(|v| Side::from_bit(((mask >> (n - 1 - v)) & 1) as u8))
            .collect(),
    )
}

/// The lexicographically first proper side assignment, if any.
pub fn brute_force_bipartite(g: &Graph) -> Result<Option<Bipartition>> {
    guard(g, MAX_ASSIGNMENT_VERTICES)?;
    let found = proper_masks(g)
        .next()
        .map(|mask| mask_to_bipartition(g.vertex_count(), mask));
    if let Some(bp) = &found {
        debug_assert!(verify_bipartition(g, bp)?);
    }
    Ok(found)
}

/// Number of proper side assignments (ordered: swapping `X` and `Y` counts
/// as a different assignment).
pub fn count_proper_2colorings(g: &Graph) -> Result<u64> {
    guard(g, MAX_ASSIGNMENT_VERTICES)?;
    Ok(proper_masks(g).count() as u64)
}

/// First odd simple cycle in canonical enumeration order: by smallest
/// vertex, then lexicographically by (neighbor, edge id) along the walk.
/// A loop at the start vertex is reported before any longer cycle through it.
pub fn find_odd_cycle_exhaustive(g: &Graph) -> Result<Option<OddCycle>> {
    guard(g, MAX_CYCLE_VERTICES)?;
    let n = g.vertex_count();
    let mut search = CycleSearch {
        g,
        start: 0,
        on_path: vec![false; n],
        vertices: Vec::with_capacity(n),
        edges: Vec::with_capacity(n),
    };
    for s in 0..n {
        if let Some(l) = g.neighbors(s).iter().find(|inc| inc.to == s) {
            return Ok(Some(OddCycle::from_loop(s, l.edge)));
        }
        search.start = s;
        search.on_path[s] = true;
        search.vertices.push(s);
        let found = search.extend(s);
        if found.is_some() {
            return Ok(found);
        }
        search.vertices.pop();
        search.on_path[s] = false;
    }
    Ok(None)
}

struct CycleSearch<'g> {
    g: &'g Graph,
    start: VertexId,
    on_path: Vec<bool>,
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl CycleSearch<'_> {
    /// Depth-first over simple paths from `start` through larger vertices.
    fn extend(&mut self, cur: VertexId) -> Option<OddCycle> {
        for inc in self.g.neighbors(cur) {
            if inc.to == self.start {
                let closes = !self.edges.is_empty() && inc.edge != self.edges[0];
                if closes && self.edges.len().is_multiple_of(2) {
                    let mut edge_ids = self.edges.clone();
                    edge_ids.push(inc.edge);
                    return Some(OddCycle {
                        vertices: self.vertices.clone(),
                        edge_ids,
                    });
                }
            } else if inc.to > self.start && !self.on_path[inc.to] {
                self.on_path[inc.to] = true;
                self.vertices.push(inc.to);
                self.edges.push(inc.edge);
                let found = self.extend(inc.to);
                if found.is_some() {
                    return found;
                }
                self.edges.pop();
                self.vertices.pop();
                self.on_path[inc.to] = false;
            }
        }
        None
    }
}

/// Combined brute-force verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub bipartition: Option<Bipartition>,
    pub odd_cycle: Option<OddCycle>,
    pub coloring_count: u64,
}

impl OracleVerdict {
    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

/// Runs all three enumerators. Limited to graphs the cycle enumerator
/// accepts.
pub fn oracle_verdict(g: &Graph) -> Result<OracleVerdict> {
    guard(g, MAX_CYCLE_VERTICES)?;
    Ok(OracleVerdict {
        bipartition: brute_force_bipartite(g)?,
        odd_cycle: find_odd_cycle_exhaustive(g)?,
        coloring_count: count_proper_2colorings(g)?,
    })
}
