//! C ABI for the `bicert` checkers.
//!
//! Graphs and outcomes are opaque heap handles owned by the caller and
//! released with their `_free` function. Every fallible call returns a
//! [`BicertStatus`]; on failure a description is available from
//! [`bicert_last_error_message`] on the same thread. Panics never cross the
//! boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bicert::algo::{check_with_stats, Algorithm};
use bicert::generate::{generate, Density, GenKind, GenSpec};
use bicert::io::{parse_dimacs, parse_edge_list, write_dot};
use bicert::{CheckOutcome, Error, Graph};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BicertStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    TooLarge = 4,
    /// The requested certificate is not the kind this outcome holds.
    WrongOutcome = 5,
    BufferTooSmall = 6,
    /// A checker produced a certificate its verifier rejected.
    Invariant = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BicertAlgorithm {
    Growth = 0,
    Flip = 1,
    Dsu = 2,
    Forest = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BicertFormat {
    EdgeList = 0,
    Dimacs = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BicertGenKind {
    Random = 0,
    PlantedBipartite = 1,
    PlantedOddCycle = 2,
    Forest = 3,
}

/// Generator parameters. `n` applies to random and forest graphs, `left`
/// and `right` to planted ones. Edge density is `p` when `use_probability`
/// is set, otherwise `m`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct BicertGenSpec {
    pub kind: BicertGenKind,
    pub n: usize,
    pub left: usize,
    pub right: usize,
    pub m: usize,
    pub p: f64,
    pub use_probability: bool,
    pub cycle_len: usize,
    pub allow_loops: bool,
    pub allow_multi: bool,
    pub seed: u64,
}

/// Opaque graph handle.
pub struct BicertGraph(Graph);

/// Opaque checker result handle.
pub struct BicertOutcome {
    outcome: CheckOutcome,
    ops: u64,
}

impl From<BicertAlgorithm> for Algorithm {
    fn from(a: BicertAlgorithm) -> Self {
        match a {
            BicertAlgorithm::Growth => Algorithm::Growth,
            BicertAlgorithm::Flip => Algorithm::Flip,
            BicertAlgorithm::Dsu => Algorithm::Dsu,
            BicertAlgorithm::Forest => Algorithm::Forest,
        }
    }
}

impl From<BicertGenKind> for GenKind {
    fn from(k: BicertGenKind) -> Self {
        match k {
            BicertGenKind::Random => GenKind::Random,
            BicertGenKind::PlantedBipartite => GenKind::PlantedBipartite,
            BicertGenKind::PlantedOddCycle => GenKind::PlantedOddCycle,
            BicertGenKind::Forest => GenKind::Forest,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(BicertStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => BicertStatus::Parse,
            Error::TooLarge { .. } => BicertStatus::TooLarge,
            Error::Invariant(_) => BicertStatus::Invariant,
            _ => BicertStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(BicertStatus::NullPointer, format!("{what} is null"))
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> BicertStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BicertStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("panic inside bicert".to_owned());
            BicertStatus::Panic
        }
    }
}

unsafe fn slice_arg<'a, T>(ptr: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        Ok(&[])
    } else if ptr.is_null() {
        Err(null(what))
    } else {
        Ok(std::slice::from_raw_parts(ptr, len))
    }
}

unsafe fn out_arg<'a, T>(ptr: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    ptr.as_mut().ok_or_else(|| null(what))
}

unsafe fn graph_arg<'a>(g: *const BicertGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn outcome_arg<'a>(o: *const BicertOutcome) -> Result<&'a BicertOutcome, Failure> {
    o.as_ref().ok_or_else(|| null("outcome"))
}

fn into_handle<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Message for the most recent failure on this thread, or null. The
/// pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn bicert_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a graph with `n` vertices and edges `(us[i], vs[i])` for `i < m`.
///
/// # Safety
/// `us` and `vs` must point to `m` readable elements (or be null when
/// `m == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bicert_graph_new(
    n: usize,
    us: *const usize,
    vs: *const usize,
    m: usize,
    out: *mut *mut BicertGraph,
) -> BicertStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let us = slice_arg(us, m, "us")?;
        let vs = slice_arg(vs, m, "vs")?;
        let pairs: Vec<_> = us.iter().copied().zip(vs.iter().copied()).collect();
        *out = into_handle(BicertGraph(Graph::new(n, &pairs)?));
        Ok(())
    })
}

/// Parses a NUL-terminated UTF-8 graph description.
///
/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bicert_graph_parse(
    text: *const c_char,
    format: BicertFormat,
    out: *mut *mut BicertGraph,
) -> BicertStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text).to_str().map_err(|e| {
            Failure(
                BicertStatus::InvalidInput,
                format!("text is not UTF-8: {e}"),
            )
        })?;
        let g = match format {
            BicertFormat::EdgeList => parse_edge_list(text),
            BicertFormat::Dimacs => parse_dimacs(text),
        }?;
        *out = into_handle(BicertGraph(g));
        Ok(())
    })
}

/// Generates a seeded graph.
///
/// # Safety
/// `spec` must be readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bicert_generate(
    spec: *const BicertGenSpec,
    out: *mut *mut BicertGraph,
) -> BicertStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let spec = spec.as_ref().ok_or_else(|| null("spec"))?;
        let density = if spec.use_probability {
            Density::Probability(spec.p)
        } else {
            Density::Edges(spec.m)
        };
        let spec = GenSpec {
            kind: spec.kind.into(),
            n: spec.n,
            left: spec.left,
            right: spec.right,
            density,
            cycle_len: spec.cycle_len,
            allow_loops: spec.allow_loops,
            allow_multi: spec.allow_multi,
            seed: spec.seed,
        };
        *out = into_handle(BicertGraph(generate(&spec)?));
        Ok(())
    })
}

/// # Safety
/// `graph` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bicert_graph_free(graph: *mut BicertGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bicert_graph_vertex_count(graph: *const BicertGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bicert_graph_edge_count(graph: *const BicertGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Runs one checker and verifies its certificate.
///
/// # Safety
/// `graph` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bicert_check(
    graph: *const BicertGraph,
    algorithm: BicertAlgorithm,
    out: *mut *mut BicertOutcome,
) -> BicertStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let run = check_with_stats(graph_arg(graph)?, algorithm.into())?;
        *out = into_handle(BicertOutcome {
            outcome: run.outcome,
            ops: run.ops,
        });
        Ok(())
    })
}

/// # Safety
/// `outcome` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bicert_outcome_free(outcome: *mut BicertOutcome) {
    if !outcome.is_null() {
        drop(Box::from_raw(outcome));
    }
}

/// True when the outcome holds a bipartition; false for an odd cycle or a
/// null handle.
///
/// # Safety
/// `outcome` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bicert_outcome_is_bipartite(outcome: *const BicertOutcome) -> bool {
    outcome.as_ref().is_some_and(|o| o.outcome.is_bipartite())
}

/// Work counter reported by the checker.
///
/// # Safety
/// `outcome` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bicert_outcome_ops(outcome: *const BicertOutcome) -> u64 {
    outcome.as_ref().map_or(0, |o| o.ops)
}

/// Copies one side bit per vertex (0 or 1) into `sides`, which must hold
/// at least the graph's vertex count.
///
/// # Safety
/// `outcome` must be a live handle; `sides` must point to `len` writable
/// bytes.
#[no_mangle]
pub unsafe extern "C" fn bicert_outcome_sides(
    outcome: *const BicertOutcome,
    sides: *mut u8,
    len: usize,
) -> BicertStatus {
    guard(|| {
        let bp = outcome_arg(outcome)?
            .outcome
            .bipartition()
            .ok_or_else(|| Failure(BicertStatus::WrongOutcome, "outcome is an odd cycle".into()))?;
        if len < bp.len() {
            return Err(Failure(
                BicertStatus::BufferTooSmall,
                format!("need {} entries, got {len}", bp.len()),
            ));
        }
        if bp.is_empty() {
            return Ok(());
        }
        if sides.is_null() {
            return Err(null("sides"));
        }
        let dst = std::slice::from_raw_parts_mut(sides, bp.len());
        for (d, s) in dst.iter_mut().zip(bp.sides()) {
            *d = s.bit();
        }
        Ok(())
    })
}

/// Length of the odd cycle, or 0 for a bipartition or null handle.
///
/// # Safety
/// `outcome` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bicert_outcome_cycle_len(outcome: *const BicertOutcome) -> usize {
    outcome
        .as_ref()
        .and_then(|o| o.outcome.odd_cycle())
        .map_or(0, |c| c.len())
}

/// Copies the cycle's vertices and edge ids. Either buffer may be null to
/// skip it; non-null buffers must hold at least the cycle length.
///
/// # Safety
/// `outcome` must be a live handle; non-null buffers must point to `len`
/// writable elements.
#[no_mangle]
pub unsafe extern "C" fn bicert_outcome_cycle(
    outcome: *const BicertOutcome,
    vertices: *mut usize,
    edge_ids: *mut usize,
    len: usize,
) -> BicertStatus {
    guard(|| {
        let cycle = outcome_arg(outcome)?.outcome.odd_cycle().ok_or_else(|| {
            Failure(
                BicertStatus::WrongOutcome,
                "outcome is a bipartition".into(),
            )
        })?;
        if len < cycle.len() {
            return Err(Failure(
                BicertStatus::BufferTooSmall,
                format!("need {} entries, got {len}", cycle.len()),
            ));
        }
        for (dst, src) in [(vertices, &cycle.vertices), (edge_ids, &cycle.edge_ids)] {
            if !dst.is_null() {
                ptr::copy_nonoverlapping(src.as_ptr(), dst, src.len());
            }
        }
        Ok(())
    })
}

/// Renders the graph with the outcome's certificate as Graphviz DOT. The
/// string must be released with [`bicert_string_free`].
///
/// # Safety
/// `graph` and `outcome` must be live handles, the outcome computed for
/// this graph; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bicert_write_dot(
    graph: *const BicertGraph,
    outcome: *const BicertOutcome,
    out: *mut *mut c_char,
) -> BicertStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let dot = write_dot(graph_arg(graph)?, &outcome_arg(outcome)?.outcome)?;
        let dot =
            CString::new(dot).map_err(|e| Failure(BicertStatus::InvalidInput, e.to_string()))?;
        *out = dot.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bicert_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
