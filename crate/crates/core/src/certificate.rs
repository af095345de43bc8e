//! The two kinds of answer a checker can give, and their verifiers.
//!
//! A graph is bipartite exactly when it has no odd cycle, so every check
//! ends in one of two certificates: a [`Bipartition`] (two stable sides) or
//! an [`OddCycle`]. Both are cheap to verify independently of the algorithm
//! that produced them.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{connected_components, ComponentLabeling, EdgeId, Graph, Path, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[repr(u8)]
pub enum Side {
    X = 0,
    Y = 1,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }

    pub fn from_bit(bit: u8) -> Side {
        if bit & 1 == 0 {
            Side::X
        } else {
            Side::Y
        }
    }

    pub fn bit(self) -> u8 {
        self as u8
    }
}

/// A total side assignment. Side `X` is listed first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    sides: Vec<Side>,
}

impl Bipartition {
    pub fn new(sides: Vec<Side>) -> Self {
        Self { sides }
    }

    /// Builds from 0/1 values; any nonzero value means `Y`.
    pub fn from_bits(bits: &[u8]) -> Self {
        Self::new(
            bits.iter()
                .map(|&b| Side::from_bit((b != 0) as u8))
                .collect(),
        )
    }

    pub fn all_x(n: usize) -> Self {
        Self::new(vec![Side::X; n])
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn side(&self, v: VertexId) -> Side {
        self.sides[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn bits(&self) -> Vec<u8> {
        self.sides.iter().map(|s| s.bit()).collect()
    }

    /// Vertices on `side`, ascending.
    pub fn members(&self, side: Side) -> Vec<VertexId> {
        (0..self.sides.len())
            .filter(|&v| self.sides[v] == side)
            .collect()
    }

    /// Swaps sides per component so the smallest vertex of every component
    /// of `g` lands on `X`.
    pub fn canonicalized(&self, g: &Graph) -> Bipartition {
        let labels = connected_components(g);
        let mut swap = vec![None; labels.count];
        let mut sides = self.sides.clone();
        for (v, side) in sides.iter_mut().enumerate() {
            let c = labels.component_of[v];
            let s = *swap[c].get_or_insert(self.sides[v] == Side::Y);
            if s {
                *side = side.opposite();
            }
        }
        Bipartition { sides }
    }
}

/// True iff no edge of `g`, loops included, has both endpoints on one side.
pub fn verify_bipartition(g: &Graph, bp: &Bipartition) -> Result<bool> {
    if bp.len() != g.vertex_count() {
        return Err(Error::PartialAssignment {
            expected: g.vertex_count(),
            got: bp.len(),
        });
    }
    Ok(g.edges().iter().all(|e| bp.sides[e.u] != bp.sides[e.v]))
}

/// A simple cycle of odd length. Edge `i` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`; a single vertex with one loop edge is the
/// length-1 case.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OddCycle {
    pub vertices: Vec<VertexId>,
    pub edge_ids: Vec<EdgeId>,
}

impl OddCycle {
    pub fn from_loop(v: VertexId, edge: EdgeId) -> Self {
        Self {
            vertices: vec![v],
            edge_ids: vec![edge],
        }
    }

    /// Closes an `a`-`b` path with the edge `closing` between `b` and `a`.
    pub fn close_path(path: Path, closing: EdgeId) -> Self {
        let Path {
            vertices,
            mut edge_ids,
        } = path;
        edge_ids.push(closing);
        Self { vertices, edge_ids }
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    /// Same cycle, rotated to start at its smallest vertex and oriented
    /// towards the smaller of that vertex's two cycle neighbors.
    pub fn canonical(&self) -> OddCycle {
        let k = self.vertices.len();
        if k <= 1 || k != self.edge_ids.len() {
            return self.clone();
        }
        let start = (0..k).min_by_key(|&i| self.vertices[i]).unwrap();
        let mut vertices: Vec<_> = (0..k).map(|i| self.vertices[(start + i) % k]).collect();
        let mut edge_ids: Vec<_> = (0..k).map(|i| self.edge_ids[(start + i) % k]).collect();
        if k > 2 && vertices[k - 1] < vertices[1] {
            vertices[1..].reverse();
            edge_ids.reverse();
        }
        OddCycle { vertices, edge_ids }
    }
}

/// True iff `c` is a simple odd cycle of `g` whose cited edges exist with
/// the claimed endpoints. Malformed certificates are rejected, not errors.
pub fn verify_odd_cycle(g: &Graph, c: &OddCycle) -> bool {
    let k = c.vertices.len();
    if k == 0 || k.is_multiple_of(2) || c.edge_ids.len() != k {
        return false;
    }
    let mut seen = HashSet::with_capacity(k);
    if !c
        .vertices
        .iter()
        .all(|&v| v < g.vertex_count() && seen.insert(v))
    {
        return false;
    }
    c.edge_ids.iter().enumerate().all(|(i, &id)| {
        let (a, b) = (c.vertices[i], c.vertices[(i + 1) % k]);
        g.edge(id)
            .is_some_and(|e| (e.u == a && e.v == b) || (e.u == b && e.v == a))
    })
}

/// Exactly one of the two certificates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CheckOutcome {
    Bipartite(Bipartition),
    OddCycle(OddCycle),
}

impl CheckOutcome {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, CheckOutcome::Bipartite(_))
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            CheckOutcome::Bipartite(_) => "bipartite",
            CheckOutcome::OddCycle(_) => "odd_cycle",
        }
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        match self {
            CheckOutcome::Bipartite(bp) => Some(bp),
            CheckOutcome::OddCycle(_) => None,
        }
    }

    pub fn odd_cycle(&self) -> Option<&OddCycle> {
        match self {
            CheckOutcome::Bipartite(_) => None,
            CheckOutcome::OddCycle(c) => Some(c),
        }
    }

    /// Runs the verifier matching the carried certificate.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            CheckOutcome::Bipartite(bp) => verify_bipartition(g, bp).unwrap_or(false),
            CheckOutcome::OddCycle(c) => verify_odd_cycle(g, c),
        }
    }
}

/// Toggles the side of every vertex in `comp`; duplicates count once.
///
/// Panics if `comp` names a vertex outside the assignment.
pub fn flip_component(bp: &Bipartition, comp: &[VertexId]) -> Bipartition {
    let mut toggle = vec![false; bp.len()];
    for &v in comp {
        toggle[v] = true;
    }
    Bipartition {
        sides: bp
            .sides
            .iter()
            .zip(toggle)
            .map(|(&s, t)| if t { s.opposite() } else { s })
            .collect(),
    }
}

/// Assembles per-component bipartitions into one global assignment.
///
/// `parts[c]` is indexed by component `c`'s local ids and `back_maps[c]`
/// maps each local id to its global vertex.
pub fn merge_bipartitions(
    labeling: &ComponentLabeling,
    parts: &[Bipartition],
    back_maps: &[Vec<VertexId>],
) -> Result<Bipartition> {
    if parts.len() != labeling.count || back_maps.len() != labeling.count {
        return Err(Error::InvalidInput(format!(
            "expected {} component bipartitions, got {} with {} back maps",
            labeling.count,
            parts.len(),
            back_maps.len()
        )));
    }
    let n = labeling.component_of.len();
    let mut sides: Vec<Option<Side>> = vec![None; n];
    for (c, (part, back)) in parts.iter().zip(back_maps).enumerate() {
        if part.len() != back.len() {
            return Err(Error::InvalidInput(format!(
                "component {c}: {} sides for {} vertices",
                part.len(),
                back.len()
            )));
        }
        for (local, &global) in back.iter().enumerate() {
            if global >= n || labeling.component_of[global] != c {
                return Err(Error::InvalidInput(format!(
                    "component {c}: vertex {global} does not belong to it"
                )));
            }
            sides[global] = Some(part.side(local));
        }
    }
    sides
        .into_iter()
        .enumerate()
        .map(|(v, s)| {
            s.ok_or_else(|| Error::InvalidInput(format!("vertex {v} missing from every component")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Bipartition::new)
}

/// True iff sides strictly alternate along `p`. Then the endpoints share a
/// side exactly when the path has even length.
pub fn check_path_parity(bp: &Bipartition, p: &Path) -> bool {
    p.vertices.iter().all(|&v| v < bp.len())
        && p.vertices
            .windows(2)
            .all(|w| bp.side(w[0]) != bp.side(w[1]))
}
