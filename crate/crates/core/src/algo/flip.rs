//! Flip checker: grow a bipartite spanning subgraph `H` edge by edge.
//!
//! `H` starts edgeless with every vertex on `X`. An edge whose endpoints sit
//! on different sides is accepted. An edge inside one component of `H` with
//! both endpoints on the same side closes an odd cycle with the (even) path
//! between them in `H`. An edge between two components with endpoints on the
//! same side is accepted after flipping one whole component.
//!
//! Components are intrusive linked lists. The smaller component is flipped
//! and relabelled into the larger one, so each vertex moves O(log n) times.

use super::{loop_certificate, CheckRun};
use crate::certificate::{Bipartition, CheckOutcome, OddCycle, Side};
use crate::graph::{shortest_path, Graph, VertexId};

struct FlipState {
    side: Vec<Side>,
    comp_id: Vec<usize>,
    comp_size: Vec<usize>,
    comp_head: Vec<VertexId>,
    next: Vec<VertexId>,
    accepted: Vec<bool>,
    flips: u64,
}

impl FlipState {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        Self {
            side: vec![Side::X; n],
            comp_id: (0..n).collect(),
            comp_size: vec![1; n],
            comp_head: (0..n).collect(),
            next: vec![usize::MAX; n],
            accepted: vec![false; g.edge_count()],
            flips: 0,
        }
    }

    /// Moves every member of `from` into `into`, toggling sides if asked.
    fn absorb(&mut self, into: usize, from: usize, toggle: bool) {
        let mut v = self.comp_head[from];
        let mut last = v;
        while v != usize::MAX {
            self.comp_id[v] = into;
            if toggle {
                self.side[v] = self.side[v].opposite();
            }
            last = v;
            v = self.next[v];
        }
        self.next[last] = self.comp_head[into];
        self.comp_head[into] = self.comp_head[from];
        self.comp_size[into] += self.comp_size[from];
        self.comp_size[from] = 0;
        if toggle {
            self.flips += 1;
        }
    }
}

pub(super) fn run(g: &Graph) -> CheckRun {
    if let Some(c) = loop_certificate(g) {
        return CheckRun {
            outcome: CheckOutcome::OddCycle(c),
            ops: 0,
        };
    }
    let mut state = FlipState::new(g);
    for e in g.edges() {
        let (a, b) = (e.u, e.v);
        let (ca, cb) = (state.comp_id[a], state.comp_id[b]);
        let same_side = state.side[a] == state.side[b];
        if ca == cb {
            if same_side {
                let accepted = &state.accepted;
                let path = shortest_path(g, a, b, |_| true, |id| accepted[id])
                    .expect("endpoints share a component of H");
                return CheckRun {
                    outcome: CheckOutcome::OddCycle(OddCycle::close_path(path, e.id).canonical()),
                    ops: state.flips,
                };
            }
        } else {
            // Ties flip the component of `a`.
            let (small, large) = if state.comp_size[ca] <= state.comp_size[cb] {
                (ca, cb)
            } else {
                (cb, ca)
            };
            state.absorb(large, small, same_side);
        }
        state.accepted[e.id] = true;
    }
    CheckRun {
        outcome: CheckOutcome::Bipartite(Bipartition::new(state.side)),
        ops: state.flips,
    }
}

/// Maintains a maximal bipartite spanning subgraph under edge insertion,
/// flipping the smaller component whenever an edge joins two components on
/// the same side.
pub fn check_incremental_flip(g: &Graph) -> CheckOutcome {
    run(g).outcome
}
