//! Undirected graphs that may carry loops and parallel edges.
//!
//! Vertices are dense indices `0..n` and edges are dense indices `0..m` in
//! insertion order. A [`Graph`] is immutable once built; every algorithm in
//! this crate borrows it read-only.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite `x`. For a loop this is `x` itself.
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    fn key(&self) -> (VertexId, VertexId) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// One adjacency entry: the neighbor reached and the edge used to reach it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Incidence {
    pub to: VertexId,
    pub edge: EdgeId,
}

/// Compressed adjacency representation.
///
/// Each vertex's incidences are sorted by `(neighbor, edge id)`, so every
/// traversal visits lower neighbor ids first. A loop contributes a single
/// incidence at its vertex; every other edge contributes one incidence at
/// each endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    incidences: Vec<Incidence>,
}

impl Graph {
    /// Builds a graph from endpoint pairs. Edge ids follow input order.
    pub fn new(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for (index, &(u, v)) in pairs.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { index, u, v, n });
            }
            edges.push(Edge { id: index, u, v });
        }
        Ok(Self::from_edges(n, edges))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, Vec::new())
    }

    fn from_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut degree = vec![0usize; n];
        for e in &edges {
            degree[e.u] += 1;
            if !e.is_loop() {
                degree[e.v] += 1;
            }
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut incidences = vec![Incidence { to: 0, edge: 0 }; offsets[n]];
        for e in &edges {
            incidences[cursor[e.u]] = Incidence {
                to: e.v,
                edge: e.id,
            };
            cursor[e.u] += 1;
            if !e.is_loop() {
                incidences[cursor[e.v]] = Incidence {
                    to: e.u,
                    edge: e.id,
                };
                cursor[e.v] += 1;
            }
        }
        for v in 0..n {
            incidences[offsets[v]..offsets[v + 1]].sort_unstable_by_key(|inc| (inc.to, inc.edge));
        }
        Self {
            n,
            edges,
            offsets,
            incidences,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.get(id)
    }

    pub fn neighbors(&self, v: VertexId) -> &[Incidence] {
        &self.incidences[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Endpoint pairs in edge-id order.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.edges.iter().map(|e| (e.u, e.v)).collect()
    }

    /// The first loop in edge-id order, if any.
    pub fn first_loop(&self) -> Option<&Edge> {
        self.edges.iter().find(|e| e.is_loop())
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }
}

/// Keeps the first copy of every group of parallel edges. Loops are
/// deduplicated the same way but never dropped entirely.
///
/// Returns the simplified graph and the number of edges removed.
pub fn simplify(g: &Graph) -> (Graph, usize) {
    let mut seen = HashSet::with_capacity(g.edge_count());
    let mut kept = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        if seen.insert(e.key()) {
            kept.push(Edge {
                id: kept.len(),
                u: e.u,
                v: e.v,
            });
        }
    }
    let removed = g.edge_count() - kept.len();
    (Graph::from_edges(g.vertex_count(), kept), removed)
}

/// Vertex to component map. Component ids are dense and numbered in order
/// of each component's smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub component_of: Vec<usize>,
    pub count: usize,
}

impl ComponentLabeling {
    /// Vertices of each component, in increasing vertex order.
    pub fn members(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &c) in self.component_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

pub fn connected_components(g: &Graph) -> ComponentLabeling {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut component_of = vec![UNSEEN; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for seed in 0..n {
        if component_of[seed] != UNSEEN {
            continue;
        }
        component_of[seed] = count;
        queue.push_back(seed);
        while let Some(x) = queue.pop_front() {
            for inc in g.neighbors(x) {
                if component_of[inc.to] == UNSEEN {
                    component_of[inc.to] = count;
                    queue.push_back(inc.to);
                }
            }
        }
        count += 1;
    }
    ComponentLabeling {
        component_of,
        count,
    }
}

/// The subgraph induced by `vertices`, relabelled to `0..k` in increasing
/// order of the original ids. `back_map[new] = old`.
pub fn induced_subgraph(g: &Graph, vertices: &[VertexId]) -> Result<(Graph, Vec<VertexId>)> {
    const ABSENT: usize = usize::MAX;
    for &v in vertices {
        g.check_vertex(v)?;
    }
    let mut back_map = vertices.to_vec();
    back_map.sort_unstable();
    back_map.dedup();
    let mut new_id = vec![ABSENT; g.vertex_count()];
    for (i, &v) in back_map.iter().enumerate() {
        new_id[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|e| new_id[e.u] != ABSENT && new_id[e.v] != ABSENT)
        .enumerate()
        .map(|(id, e)| Edge {
            id,
            u: new_id[e.u],
            v: new_id[e.v],
        })
        .collect();
    Ok((Graph::from_edges(back_map.len(), edges), back_map))
}

/// A simple path, stored as its vertex sequence plus the edge between each
/// consecutive pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Path {
    pub vertices: Vec<VertexId>,
    pub edge_ids: Vec<EdgeId>,
}

impl Path {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    /// True if the path is simple and every step follows an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if self.vertices.is_empty() || self.vertices.len() != self.edge_ids.len() + 1 {
            return false;
        }
        let mut seen = HashSet::with_capacity(self.vertices.len());
        if !self
            .vertices
            .iter()
            .all(|&v| v < g.vertex_count() && seen.insert(v))
        {
            return false;
        }
        self.edge_ids.iter().enumerate().all(|(i, &id)| {
            g.edge(id).is_some_and(|e| {
                let (a, b) = (self.vertices[i], self.vertices[i + 1]);
                (e.u == a && e.v == b) || (e.u == b && e.v == a)
            })
        })
    }
}

/// Shortest `a`-`b` path using only vertices for which `allowed` holds.
///
/// Breadth-first, visiting neighbors in increasing id order, so ties go to
/// the lowest neighbor id. Returns `None` when no such path exists or when
/// an endpoint is itself not allowed.
pub fn find_path(
    g: &Graph,
    allowed: impl Fn(VertexId) -> bool,
    a: VertexId,
    b: VertexId,
) -> Option<Path> {
    if a >= g.vertex_count() || b >= g.vertex_count() || !allowed(a) || !allowed(b) {
        return None;
    }
    shortest_path(g, a, b, allowed, |_| true)
}

/// Breadth-first path search restricted by a vertex and an edge predicate.
/// Loops are never traversed. Endpoints are assumed valid and allowed.
pub(crate) fn shortest_path(
    g: &Graph,
    a: VertexId,
    b: VertexId,
    vertex_ok: impl Fn(VertexId) -> bool,
    edge_ok: impl Fn(EdgeId) -> bool,
) -> Option<Path> {
    const NONE: usize = usize::MAX;
    if a == b {
        return Some(Path {
            vertices: vec![a],
            edge_ids: Vec::new(),
        });
    }
    // parent[v] = (previous vertex, edge used)
    let mut parent = vec![(NONE, NONE); g.vertex_count()];
    parent[a] = (a, NONE);
    let mut queue = VecDeque::from([a]);
    'search: while let Some(x) = queue.pop_front() {
        for inc in g.neighbors(x) {
            if inc.to == x || parent[inc.to].0 != NONE || !edge_ok(inc.edge) || !vertex_ok(inc.to) {
                continue;
            }
            parent[inc.to] = (x, inc.edge);
            if inc.to == b {
                break 'search;
            }
            queue.push_back(inc.to);
        }
    }
    if parent[b].0 == NONE {
        return None;
    }
    let mut vertices = vec![b];
    let mut edge_ids = Vec::new();
    let mut cur = b;
    while cur != a {
        let (prev, edge) = parent[cur];
        edge_ids.push(edge);
        vertices.push(prev);
        cur = prev;
    }
    vertices.reverse();
    edge_ids.reverse();
    Some(Path { vertices, edge_ids })
}
