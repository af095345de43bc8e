//! Forest checker: 2-color a spanning forest, then re-check the edges the
//! forest left out.
//!
//! Any acyclic graph has a vertex of degree at most one. Peeling such
//! vertices one at a time and coloring in reverse removal order (each vertex
//! opposite its single remaining neighbor) colors the whole forest. A
//! non-forest edge with endpoints on different sides keeps the coloring
//! proper. One with endpoints on the same side sits on an even forest path,
//! and together they form an odd cycle.

use std::collections::VecDeque;

use super::{loop_certificate, CheckRun};
use crate::certificate::{Bipartition, CheckOutcome, OddCycle, Side};
use crate::error::{Error, Result};
use crate::graph::{connected_components, shortest_path, Graph, VertexId};

/// 2-colors an acyclic graph by repeatedly removing a vertex of degree at
/// most one. The result is canonicalized: the smallest vertex of each tree
/// is on `X`.
///
/// Fails with [`Error::NotAcyclic`] if `g` has a loop, a parallel pair or
/// any longer cycle.
pub fn leaf_peel_two_color(g: &Graph) -> Result<Bipartition> {
    let n = g.vertex_count();
    let components = connected_components(g).count;
    // A graph is a forest iff m = n - c; loops and parallel pairs break it.
    if g.first_loop().is_some() || g.edge_count() + components != n {
        return Err(Error::NotAcyclic);
    }

    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queued: Vec<bool> = degree.iter().map(|&d| d <= 1).collect();
    let mut queue: VecDeque<VertexId> = (0..n).filter(|&v| queued[v]).collect();
    // (vertex, its remaining neighbor at removal time)
    let mut order: Vec<(VertexId, Option<VertexId>)> = Vec::with_capacity(n);
    while let Some(x) = queue.pop_front() {
        let y = g
            .neighbors(x)
            .iter()
            .map(|inc| inc.to)
            .find(|&to| !removed[to]);
        removed[x] = true;
        if let Some(y) = y {
            degree[y] -= 1;
            if degree[y] <= 1 && !queued[y] {
                queued[y] = true;
                queue.push_back(y);
            }
        }
        order.push((x, y));
    }
    debug_assert_eq!(order.len(), n);

    let mut sides = vec![Side::X; n];
    for &(x, y) in order.iter().rev() {
        sides[x] = match y {
            Some(y) => sides[y].opposite(),
            None => Side::X,
        };
    }
    Ok(Bipartition::new(sides).canonicalized(g))
}

pub(super) fn run(g: &Graph) -> CheckRun {
    if let Some(c) = loop_certificate(g) {
        return CheckRun {
            outcome: CheckOutcome::OddCycle(c),
            ops: 0,
        };
    }
    let n = g.vertex_count();
    let mut in_forest = vec![false; g.edge_count()];
    let mut visited = vec![false; n];
    let mut queue = VecDeque::new();
    for seed in 0..n {
        if visited[seed] {
            continue;
        }
        visited[seed] = true;
        queue.push_back(seed);
        while let Some(x) = queue.pop_front() {
            for inc in g.neighbors(x) {
                if !visited[inc.to] {
                    visited[inc.to] = true;
                    in_forest[inc.edge] = true;
                    queue.push_back(inc.to);
                }
            }
        }
    }

    let forest_pairs: Vec<_> = g
        .edges()
        .iter()
        .filter(|e| in_forest[e.id])
        .map(|e| (e.u, e.v))
        .collect();
    let forest = Graph::new(n, &forest_pairs).expect("same vertex set");
    let coloring = leaf_peel_two_color(&forest).expect("traversal forests are acyclic");

    let mut examined = 0u64;
    for e in g.edges().iter().filter(|e| !in_forest[e.id]) {
        examined += 1;
        if coloring.side(e.u) == coloring.side(e.v) {
            let path = shortest_path(g, e.u, e.v, |_| true, |id| in_forest[id])
                .expect("endpoints share a tree");
            return CheckRun {
                outcome: CheckOutcome::OddCycle(OddCycle::close_path(path, e.id).canonical()),
                ops: examined,
            };
        }
    }
    CheckRun {
        outcome: CheckOutcome::Bipartite(coloring),
        ops: examined,
    }
}

/// Colors a breadth-first spanning forest by leaf peeling and checks every
/// remaining edge against that coloring.
pub fn check_forest_recolor(g: &Graph) -> CheckOutcome {
    run(g).outcome
}
