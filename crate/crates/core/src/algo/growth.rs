//! Growth checker: keep a connected induced subgraph `H` that is known to be
//! bipartite and absorb one adjacent vertex at a time.
//!
//! A candidate `z` whose neighbors in `H` all sit on one side joins the other
//! side. If `z` sees both sides, through `x1` on `X` and `x2` on `Y`, then
//! any `x1`-`x2` path inside `H` has odd length and closing it through `z`
//! gives an odd cycle.

use std::collections::VecDeque;

use super::{loop_certificate, CheckRun};
use crate::certificate::{Bipartition, CheckOutcome, OddCycle, Side};
use crate::graph::{shortest_path, EdgeId, Graph, VertexId};

struct GrowthState {
    in_h: Vec<bool>,
    queued: Vec<bool>,
    side: Vec<Side>,
    frontier: VecDeque<VertexId>,
}

impl GrowthState {
    fn new(n: usize) -> Self {
        Self {
            in_h: vec![false; n],
            queued: vec![false; n],
            side: vec![Side::X; n],
            frontier: VecDeque::new(),
        }
    }

    fn absorb(&mut self, g: &Graph, v: VertexId, side: Side) {
        self.in_h[v] = true;
        self.side[v] = side;
        for inc in g.neighbors(v) {
            if !self.in_h[inc.to] && !self.queued[inc.to] {
                self.queued[inc.to] = true;
                self.frontier.push_back(inc.to);
            }
        }
    }

    /// First neighbor of `z` in `H` on each side, with the connecting edge.
    fn attachments(&self, g: &Graph, z: VertexId) -> [Option<(VertexId, EdgeId)>; 2] {
        let mut found = [None, None];
        for inc in g.neighbors(z) {
            if self.in_h[inc.to] {
                let slot = &mut found[self.side[inc.to].bit() as usize];
                if slot.is_none() {
                    *slot = Some((inc.to, inc.edge));
                }
            }
        }
        found
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
    let mut state = GrowthState::new(n);
    let mut absorbed = 0u64;
    for seed in 0..n {
        if state.in_h[seed] {
            continue;
        }
        state.absorb(g, seed, Side::X);
        absorbed += 1;
        while let Some(z) = state.frontier.pop_front() {
            match state.attachments(g, z) {
                [Some((x1, e1)), Some((x2, e2))] => {
                    let in_h = &state.in_h;
                    let path =
                        shortest_path(g, x1, x2, |v| in_h[v], |_| true).expect("H is connected");
                    let mut cycle = path;
                    cycle.vertices.push(z);
                    cycle.edge_ids.push(e2);
                    let cycle = OddCycle::close_path(cycle, e1);
                    return CheckRun {
                        outcome: CheckOutcome::OddCycle(cycle.canonical()),
                        ops: absorbed,
                    };
                }
                [Some(_), None] => state.absorb(g, z, Side::Y),
                [None, Some(_)] => state.absorb(g, z, Side::X),
                [None, None] => unreachable!("frontier vertices touch H"),
            }
            absorbed += 1;
        }
    }
    CheckRun {
        outcome: CheckOutcome::Bipartite(Bipartition::new(state.side)),
        ops: absorbed,
    }
}

/// Grows a maximal bipartite connected induced subgraph from the smallest
/// unvisited vertex of each component.
pub fn check_growth_induced(g: &Graph) -> CheckOutcome {
    run(g).outcome
}
