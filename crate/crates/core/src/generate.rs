//! Seeded graph generators.
//!
//! All randomness comes from ChaCha8 seeded through `SeedableRng::seed_from_u64`
//! (rand_core 0.6, PCG32 seed expansion). Only raw `u64` draws are taken from
//! the stream; integer ranges use Lemire's widening-multiply rejection method
//! and probabilities compare the top 53 bits against `p`. The same
//! [`GenSpec`] therefore yields the same graph on every platform.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Probability that a new forest vertex starts its own tree.
pub const FOREST_ISOLATION_PROBABILITY: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    Random,
    PlantedBipartite,
    PlantedOddCycle,
    Forest,
}

impl GenKind {
    pub const ALL: [GenKind; 4] = [
        GenKind::Random,
        GenKind::PlantedBipartite,
        GenKind::PlantedOddCycle,
        GenKind::Forest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::Random => "random",
            GenKind::PlantedBipartite => "planted-bipartite",
            GenKind::PlantedOddCycle => "planted-odd-cycle",
            GenKind::Forest => "forest",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GenKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown generator kind `{s}`")))
    }
}

/// Either an exact edge count or an independent per-pair probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Density {
    Edges(usize),
    Probability(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub kind: GenKind,
    /// Vertex count for `Random` and `Forest`.
    pub n: usize,
    /// Side sizes of the bipartite base for the planted kinds.
    pub left: usize,
    pub right: usize,
    pub density: Density,
    /// Odd cycle length for `PlantedOddCycle`.
    pub cycle_len: usize,
    /// `Random` only.
    pub allow_loops: bool,
    /// `Random` only, and only with [`Density::Edges`].
    pub allow_multi: bool,
    pub seed: u64,
}

impl GenSpec {
    fn base(kind: GenKind, seed: u64) -> Self {
        Self {
            kind,
            n: 0,
            left: 0,
            right: 0,
            density: Density::Edges(0),
            cycle_len: 3,
            allow_loops: false,
            allow_multi: false,
            seed,
        }
    }

    pub fn random(n: usize, density: Density, seed: u64) -> Self {
        Self {
            n,
            density,
            ..Self::base(GenKind::Random, seed)
        }
    }

    pub fn planted_bipartite(left: usize, right: usize, density: Density, seed: u64) -> Self {
        Self {
            left,
            right,
            density,
            ..Self::base(GenKind::PlantedBipartite, seed)
        }
    }

    pub fn planted_odd_cycle(
        left: usize,
        right: usize,
        density: Density,
        cycle_len: usize,
        seed: u64,
    ) -> Self {
        Self {
            left,
            right,
            density,
            cycle_len,
            ..Self::base(GenKind::PlantedOddCycle, seed)
        }
    }

    pub fn forest(n: usize, seed: u64) -> Self {
        Self {
            n,
            ..Self::base(GenKind::Forest, seed)
        }
    }

    pub fn with_loops(mut self, allow: bool) -> Self {
        self.allow_loops = allow;
        self
    }

    pub fn with_multi(mut self, allow: bool) -> Self {
        self.allow_multi = allow;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if let Density::Probability(p) = self.density {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidInput(format!(
                    "edge probability {p} is outside [0, 1]"
                )));
            }
        }
        if self.kind == GenKind::PlantedOddCycle
            && (self.cycle_len < 3 || self.cycle_len.is_multiple_of(2))
        {
            return Err(Error::InvalidInput(format!(
                "cycle length {} must be odd and at least 3",
                self.cycle_len
            )));
        }
        Ok(())
    }
}

struct Stream(ChaCha8Rng);

impl Stream {
    fn new(seed: u64) -> Self {
        Stream(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform in `0..bound`; `bound` must be positive.
    fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let mut wide = u128::from(self.0.next_u64()) * u128::from(bound);
        let mut low = wide as u64;
        if low < bound {
            let threshold = bound.wrapping_neg() % bound;
            while low < threshold {
                wide = u128::from(self.0.next_u64()) * u128::from(bound);
                low = wide as u64;
            }
        }
        (wide >> 64) as u64
    }

    fn index(&mut self, bound: usize) -> usize {
        self.below(bound as u64) as usize
    }

    fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    fn chance(&mut self, p: f64) -> bool {
        self.unit() < p
    }
}

fn unordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    (u.min(v), u.max(v))
}

fn expect_kind(spec: &GenSpec, kind: GenKind) -> Result<()> {
    if spec.kind == kind {
        spec.validate()
    } else {
        Err(Error::InvalidInput(format!(
            "expected a {kind} spec, got {}",
            spec.kind
        )))
    }
}

pub fn generate(spec: &GenSpec) -> Result<Graph> {
    match spec.kind {
        GenKind::Random => gen_random(spec),
        GenKind::PlantedBipartite => gen_planted_bipartite(spec),
        GenKind::PlantedOddCycle => gen_planted_odd_cycle(spec),
        GenKind::Forest => gen_forest(spec),
    }
}

/// Erdős–Rényi style graph: `G(n, m)` by rejection sampling of uniform
/// endpoint pairs, or `G(n, p)` over all unordered pairs in lexicographic
/// order. Loops appear only with `allow_loops`; parallel edges only with
/// `allow_multi` in `G(n, m)` mode.
pub fn gen_random(spec: &GenSpec) -> Result<Graph> {
    expect_kind(spec, GenKind::Random)?;
    let n = spec.n;
    let mut rng = Stream::new(spec.seed);
    let mut pairs = Vec::new();
    match spec.density {
        Density::Probability(p) => {
            for u in 0..n {
                let first = if spec.allow_loops { u } else { u + 1 };
                for v in first..n {
                    if rng.chance(p) {
                        pairs.push((u, v));
                    }
                }
            }
        }
        Density::Edges(m) => {
            let distinct = if spec.allow_loops {
                n * (n + 1) / 2
            } else {
                n * n.saturating_sub(1) / 2
            };
            if m > 0 && distinct == 0 {
                return Err(Error::InvalidInput(format!(
                    "no edge can be placed on {n} vertices"
                )));
            }
            if !spec.allow_multi && m > distinct {
                return Err(Error::InvalidInput(format!(
                    "{m} edges requested, only {distinct} distinct pairs exist"
                )));
            }
            let mut seen = HashSet::new();
            pairs.reserve(m);
            while pairs.len() < m {
                let (u, v) = (rng.index(n), rng.index(n));
                if u == v && !spec.allow_loops {
                    continue;
                }
                if !spec.allow_multi && !seen.insert(unordered(u, v)) {
                    continue;
                }
                pairs.push((u, v));
            }
        }
    }
    Graph::new(n, &pairs)
}

fn planted_pairs(spec: &GenSpec, rng: &mut Stream) -> Result<Vec<(VertexId, VertexId)>> {
    let (left, right) = (spec.left, spec.right);
    let mut pairs = Vec::new();
    match spec.density {
        Density::Probability(p) => {
            for u in 0..left {
                for v in left..left + right {
                    if rng.chance(p) {
                        pairs.push((u, v));
                    }
                }
            }
        }
        Density::Edges(m) => {
            if m > left * right {
                return Err(Error::InvalidInput(format!(
                    "{m} edges requested, only {} cross pairs exist",
                    left * right
                )));
            }
            let mut seen = HashSet::new();
            pairs.reserve(m);
            while pairs.len() < m {
                let pair = (rng.index(left), left + rng.index(right));
                if seen.insert(pair) {
                    pairs.push(pair);
                }
            }
        }
    }
    Ok(pairs)
}

/// Vertices `0..left` and `left..left + right` form the two sides; edges are
/// sampled only between them.
pub fn gen_planted_bipartite(spec: &GenSpec) -> Result<Graph> {
    expect_kind(spec, GenKind::PlantedBipartite)?;
    let mut rng = Stream::new(spec.seed);
    let pairs = planted_pairs(spec, &mut rng)?;
    Graph::new(spec.left + spec.right, &pairs)
}

/// A planted bipartite base followed by a `cycle_len` cycle on fresh
/// vertices. When the base is non-empty, one bridge edge joins a uniformly
/// chosen base vertex to the first cycle vertex.
pub fn gen_planted_odd_cycle(spec: &GenSpec) -> Result<Graph> {
    expect_kind(spec, GenKind::PlantedOddCycle)?;
    let mut rng = Stream::new(spec.seed);
    let mut pairs = planted_pairs(spec, &mut rng)?;
    let base = spec.left + spec.right;
    let len = spec.cycle_len;
    pairs.extend((0..len).map(|i| (base + i, base + (i + 1) % len)));
    if base > 0 {
        pairs.push((rng.index(base), base));
    }
    Graph::new(base + len, &pairs)
}

/// Random recursive forest: vertex `i > 0` starts a new tree with
/// probability [`FOREST_ISOLATION_PROBABILITY`], otherwise links to a
/// uniformly chosen earlier vertex.
pub fn gen_forest(spec: &GenSpec) -> Result<Graph> {
    expect_kind(spec, GenKind::Forest)?;
    let mut rng = Stream::new(spec.seed);
    let mut pairs = Vec::with_capacity(spec.n.saturating_sub(1));
    for i in 1..spec.n {
        if !rng.chance(FOREST_ISOLATION_PROBABILITY) {
            pairs.push((rng.index(i), i));
        }
    }
    Graph::new(spec.n, &pairs)
}
