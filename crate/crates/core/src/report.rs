use std::fmt::Write as _;

use serde::Serialize;

use crate::algo::Algorithm;
use crate::certificate::{CheckOutcome, Side};
use crate::graph::{EdgeId, Graph, VertexId};

/// User-facing summary of one checker run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultReport {
    pub algorithm: String,
    pub verdict: &'static str,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sides: Option<[Vec<VertexId>; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<VertexId>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle_edges: Option<Vec<EdgeId>>,
    /// Wall time of the checker call. Left out unless timing was requested,
    /// which keeps default output byte-reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ns: Option<u64>,
}

impl ResultReport {
    pub fn new(
        g: &Graph,
        algorithm: Algorithm,
        outcome: &CheckOutcome,
        elapsed_ns: Option<u64>,
    ) -> Self {
        let (sides, cycle, cycle_edges) = match outcome {
            CheckOutcome::Bipartite(bp) => {
                (Some([bp.members(Side::X), bp.members(Side::Y)]), None, None)
            }
            CheckOutcome::OddCycle(c) => (None, Some(c.vertices.clone()), Some(c.edge_ids.clone())),
        };
        Self {
            algorithm: algorithm.name().to_string(),
            verdict: outcome.verdict(),
            n: g.vertex_count(),
            m: g.edge_count(),
            sides,
            cycle,
            cycle_edges,
            elapsed_ns,
        }
    }

    pub fn to_text(&self) -> String {
        fn join(ids: &[usize]) -> String {
            ids.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
        let mut out = String::new();
        let _ = writeln!(out, "algorithm: {}", self.algorithm);
        let _ = writeln!(out, "verdict: {}", self.verdict);
        let _ = writeln!(out, "n: {}  m: {}", self.n, self.m);
        if let Some([x, y]) = &self.sides {
            let _ = writeln!(out, "X ({}): {}", x.len(), join(x));
            let _ = writeln!(out, "Y ({}): {}", y.len(), join(y));
        }
        if let (Some(c), Some(e)) = (&self.cycle, &self.cycle_edges) {
            let _ = writeln!(out, "cycle ({}): {}", c.len(), join(c));
            let _ = writeln!(out, "cycle edges: {}", join(e));
        }
        if let Some(ns) = self.elapsed_ns {
            let _ = writeln!(out, "elapsed_ns: {ns}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algo::check;

    #[test]
    fn bipartite_report() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let out = check(&g, Algorithm::Growth).unwrap();
        let r = ResultReport::new(&g, Algorithm::Growth, &out, None);
        assert_eq!(r.sides, Some([vec![0, 2], vec![1, 3]]));
        assert!(r.cycle.is_none());
        assert_eq!(
            r.to_text(),
            "algorithm: growth\nverdict: bipartite\nn: 4  m: 4\nX (2): 0 2\nY (2): 1 3\n"
        );
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"algorithm":"growth","verdict":"bipartite","n":4,"m":4,"sides":[[0,2],[1,3]]}"#
        );
    }

    #[test]
    fn odd_cycle_report() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let out = check(&g, Algorithm::Dsu).unwrap();
        let r = ResultReport::new(&g, Algorithm::Dsu, &out, Some(12));
        assert_eq!(r.cycle, Some(vec![0, 1, 2]));
        assert!(r.sides.is_none());
        assert!(r.to_text().contains("cycle (3): 0 1 2\n"));
        assert!(r.to_text().ends_with("elapsed_ns: 12\n"));
    }
}
