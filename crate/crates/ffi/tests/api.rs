//! Exercises the C ABI from Rust, the way a C caller would.

use std::ffi::{CStr, CString};
use std::ptr;

use bicert_ffi::*;

fn graph(n: usize, pairs: &[(usize, usize)]) -> *mut BicertGraph {
    let us: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    let vs: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    let mut g = ptr::null_mut();
    let status = unsafe { bicert_graph_new(n, us.as_ptr(), vs.as_ptr(), pairs.len(), &mut g) };
    assert_eq!(status, BicertStatus::Ok);
    g
}

fn last_error() -> String {
    let msg = bicert_last_error_message();
    assert!(!msg.is_null());
    unsafe { CStr::from_ptr(msg) }
        .to_string_lossy()
        .into_owned()
}

const ALGORITHMS: [BicertAlgorithm; 4] = [
    BicertAlgorithm::Growth,
    BicertAlgorithm::Flip,
    BicertAlgorithm::Dsu,
    BicertAlgorithm::Forest,
];

#[test]
fn triangle_yields_a_cycle() {
    let g = graph(3, &[(0, 1), (1, 2), (2, 0)]);
    for algo in ALGORITHMS {
        let mut out = ptr::null_mut();
        unsafe {
            assert_eq!(bicert_check(g, algo, &mut out), BicertStatus::Ok);
            assert!(!bicert_outcome_is_bipartite(out));
            assert_eq!(bicert_outcome_cycle_len(out), 3);
            let mut vertices = [0usize; 3];
            let mut edges = [0usize; 3];
            let status = bicert_outcome_cycle(out, vertices.as_mut_ptr(), edges.as_mut_ptr(), 3);
            assert_eq!(status, BicertStatus::Ok);
            assert_eq!(vertices, [0, 1, 2]);
            assert_eq!(edges, [0, 1, 2]);

            let mut small = [0usize; 2];
            let status = bicert_outcome_cycle(out, small.as_mut_ptr(), ptr::null_mut(), 2);
            assert_eq!(status, BicertStatus::BufferTooSmall);
            let mut sides = [0u8; 3];
            assert_eq!(
                bicert_outcome_sides(out, sides.as_mut_ptr(), 3),
                BicertStatus::WrongOutcome
            );
            bicert_outcome_free(out);
        }
    }
    unsafe { bicert_graph_free(g) };
}

#[test]
fn square_yields_sides() {
    let g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    unsafe {
        assert_eq!(
            (bicert_graph_vertex_count(g), bicert_graph_edge_count(g)),
            (4, 4)
        );
        for algo in ALGORITHMS {
            let mut out = ptr::null_mut();
            assert_eq!(bicert_check(g, algo, &mut out), BicertStatus::Ok);
            assert!(bicert_outcome_is_bipartite(out));
            assert_eq!(bicert_outcome_cycle_len(out), 0);
            let mut sides = [9u8; 4];
            assert_eq!(
                bicert_outcome_sides(out, sides.as_mut_ptr(), 4),
                BicertStatus::Ok
            );
            assert!(sides.iter().all(|&s| s <= 1));
            assert_ne!(sides[0], sides[1]);
            assert_eq!(sides[0], sides[2]);
            assert_ne!(sides[2], sides[3]);
            bicert_outcome_free(out);
        }
        bicert_graph_free(g);
    }
}

#[test]
fn parse_and_report_errors() {
    let text = CString::new("p edge 3 1\ne 1 3\n").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(
            bicert_graph_parse(text.as_ptr(), BicertFormat::Dimacs, &mut g),
            BicertStatus::Ok
        );
        assert_eq!(
            (bicert_graph_vertex_count(g), bicert_graph_edge_count(g)),
            (3, 1)
        );
        bicert_graph_free(g);

        let bad = CString::new("0 1\n1 zz\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(
            bicert_graph_parse(bad.as_ptr(), BicertFormat::EdgeList, &mut g),
            BicertStatus::Parse
        );
        assert!(g.is_null());
        assert!(last_error().contains("line 2"), "{}", last_error());

        let us = [0usize];
        let vs = [5usize];
        assert_eq!(
            bicert_graph_new(2, us.as_ptr(), vs.as_ptr(), 1, &mut g),
            BicertStatus::InvalidInput
        );
        assert_eq!(
            bicert_graph_new(2, ptr::null(), vs.as_ptr(), 1, &mut g),
            BicertStatus::NullPointer
        );
        assert_eq!(
            bicert_graph_parse(ptr::null(), BicertFormat::EdgeList, &mut g),
            BicertStatus::NullPointer
        );
        assert_eq!(
            bicert_check(ptr::null(), BicertAlgorithm::Dsu, ptr::null_mut()),
            BicertStatus::NullPointer
        );
    }
}

#[test]
fn null_handles_are_harmless() {
    unsafe {
        bicert_graph_free(ptr::null_mut());
        bicert_outcome_free(ptr::null_mut());
        bicert_string_free(ptr::null_mut());
        assert_eq!(bicert_graph_vertex_count(ptr::null()), 0);
        assert!(!bicert_outcome_is_bipartite(ptr::null()));
        assert_eq!(bicert_outcome_ops(ptr::null()), 0);
    }
}

#[test]
fn empty_graph_needs_no_buffers() {
    let mut g = ptr::null_mut();
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(
            bicert_graph_new(0, ptr::null(), ptr::null(), 0, &mut g),
            BicertStatus::Ok
        );
        assert_eq!(
            bicert_check(g, BicertAlgorithm::Flip, &mut out),
            BicertStatus::Ok
        );
        assert_eq!(
            bicert_outcome_sides(out, ptr::null_mut(), 0),
            BicertStatus::Ok
        );
        bicert_outcome_free(out);
        bicert_graph_free(g);
    }
}

#[test]
fn generate_matches_the_library() {
    let spec = BicertGenSpec {
        kind: BicertGenKind::PlantedOddCycle,
        n: 0,
        left: 10,
        right: 10,
        m: 30,
        p: 0.0,
        use_probability: false,
        cycle_len: 7,
        allow_loops: false,
        allow_multi: false,
        seed: 11,
    };
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(bicert_generate(&spec, &mut g), BicertStatus::Ok);
        let native = bicert::generate::generate(&bicert::generate::GenSpec::planted_odd_cycle(
            10,
            10,
            bicert::generate::Density::Edges(30),
            7,
            11,
        ))
        .unwrap();
        assert_eq!(bicert_graph_vertex_count(g), native.vertex_count());
        assert_eq!(bicert_graph_edge_count(g), native.edge_count());

        let mut out = ptr::null_mut();
        assert_eq!(
            bicert_check(g, BicertAlgorithm::Dsu, &mut out),
            BicertStatus::Ok
        );
        assert!(!bicert_outcome_is_bipartite(out));
        let native_run = bicert::check_with_stats(&native, bicert::Algorithm::Dsu).unwrap();
        assert_eq!(bicert_outcome_ops(out), native_run.ops);
        bicert_outcome_free(out);
        bicert_graph_free(g);

        let even = BicertGenSpec {
            cycle_len: 4,
            ..spec
        };
        let mut g = ptr::null_mut();
        assert_eq!(bicert_generate(&even, &mut g), BicertStatus::InvalidInput);
        assert!(last_error().contains("odd"));
    }
}

#[test]
fn dot_round_trip() {
    let g = graph(3, &[(0, 1), (1, 2), (2, 0)]);
    let mut out = ptr::null_mut();
    let mut dot = ptr::null_mut();
    unsafe {
        assert_eq!(
            bicert_check(g, BicertAlgorithm::Growth, &mut out),
            BicertStatus::Ok
        );
        assert_eq!(bicert_write_dot(g, out, &mut dot), BicertStatus::Ok);
        let text = CStr::from_ptr(dot).to_str().unwrap().to_owned();
        assert!(text.starts_with("graph G {"));
        assert_eq!(text.matches("#d62728").count(), 3);
        bicert_string_free(dot);
        bicert_outcome_free(out);
        bicert_graph_free(g);
    }
}
