//! Parity union-find checker.
//!
//! Each vertex stores the side difference to its union-find parent, so the
//! side of a vertex relative to its root is the xor along its root path.
//! Joining two sets with an edge fixes the relative parity of the roots, which
//! performs the component flip lazily. An edge inside one set whose endpoints
//! have equal parity closes an odd cycle.
//!
//! The certificate path is read from a separate, never-compressed spanning
//! forest of the edges that caused unions.

use super::{loop_certificate, CheckRun};
use crate::certificate::{Bipartition, CheckOutcome, OddCycle, Side};
use crate::graph::{shortest_path, Graph, VertexId};

/// Effect of [`ParityDsu::union_opposite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnionResult {
    /// Two sets were joined.
    Joined,
    /// Already in one set with opposite parity.
    Implied,
    /// Already in one set with equal parity.
    Conflict,
}

/// Union-find with a parity bit per vertex: `parity[v]` is the side
/// difference between `v` and `parent[v]`.
#[derive(Debug, Clone)]
pub struct ParityDsu {
    parent: Vec<VertexId>,
    rank: Vec<u8>,
    parity: Vec<u8>,
}

impl ParityDsu {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
            parity: vec![0; n],
        }
    }

    /// Root of `v` and the side difference between `v` and that root.
    /// Compresses the path, folding parities into the shortcut links.
    pub fn find(&mut self, v: VertexId) -> (VertexId, u8) {
        let mut root = v;
        let mut total = 0u8;
        while self.parent[root] != root {
            total ^= self.parity[root];
            root = self.parent[root];
        }
        // `to_root` is the parity of `cur` to the root.
        let mut cur = v;
        let mut to_root = total;
        while self.parent[cur] != cur {
            let next = self.parent[cur];
            let next_to_root = to_root ^ self.parity[cur];
            self.parent[cur] = root;
            self.parity[cur] = to_root;
            cur = next;
            to_root = next_to_root;
        }
        (root, total)
    }

    /// Records that `a` and `b` lie on opposite sides.
    pub fn union_opposite(&mut self, a: VertexId, b: VertexId) -> UnionResult {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return if pa != pb {
                UnionResult::Implied
            } else {
                UnionResult::Conflict
            };
        }
        let (child, root) = if self.rank[ra] < self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[child] = root;
        self.parity[child] = pa ^ pb ^ 1;
        if self.rank[ra] == self.rank[rb] {
            self.rank[root] += 1;
        }
        UnionResult::Joined
    }
}

pub(super) fn run(g: &Graph) -> CheckRun {
    if let Some(c) = loop_certificate(g) {
        return CheckRun {
            outcome: CheckOutcome::OddCycle(c),
            ops: 0,
        };
    }
    let n = g.vertex_count();
    let mut dsu = ParityDsu::new(n);
    let mut cert_forest = vec![false; g.edge_count()];
    let mut unions = 0u64;
    for e in g.edges() {
        match dsu.union_opposite(e.u, e.v) {
            UnionResult::Joined => {
                cert_forest[e.id] = true;
                unions += 1;
            }
            UnionResult::Implied => {}
            UnionResult::Conflict => {
                let path = shortest_path(g, e.u, e.v, |_| true, |id| cert_forest[id])
                    .expect("same set implies a forest path");
                return CheckRun {
                    outcome: CheckOutcome::OddCycle(OddCycle::close_path(path, e.id).canonical()),
                    ops: unions,
                };
            }
        }
    }
    let sides = (0..n).map(|v| Side::from_bit(dsu.find(v).1)).collect();
    CheckRun {
        outcome: CheckOutcome::Bipartite(Bipartition::new(sides)),
        ops: unions,
    }
}

/// Processes edges through a parity union-find; the first edge whose
/// endpoints are forced onto the same side yields the odd cycle.
pub fn check_dsu_parity(g: &Graph) -> CheckOutcome {
    run(g).outcome
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_after_canonicalization() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let out = check_dsu_parity(&g);
        assert_eq!(
            out.bipartition().unwrap().canonicalized(&g).bits(),
            vec![0, 1, 0, 1]
        );
    }

    #[test]
    fn c5_reported_at_closing_edge() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let run = run(&g);
        let c = run.outcome.odd_cycle().unwrap();
        assert_eq!(c.vertices, vec![0, 1, 2, 3, 4]);
        assert!(c.edge_ids.contains(&4));
        assert_eq!(run.ops, 4);
    }

    #[test]
    fn parity_survives_path_compression() {
        let mut dsu = ParityDsu::new(6);
        for v in 0..5 {
            assert_eq!(dsu.union_opposite(v, v + 1), UnionResult::Joined);
        }
        for v in 0..6 {
            let (_, p) = dsu.find(v);
            let (_, p0) = dsu.find(0);
            assert_eq!(p ^ p0, (v % 2) as u8);
        }
        assert_eq!(dsu.union_opposite(0, 5), UnionResult::Implied);
        assert_eq!(dsu.union_opposite(0, 4), UnionResult::Conflict);
    }
}
