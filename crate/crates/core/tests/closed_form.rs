mod common;

use common::{complete, cycle, double_star, path, star};
use ricci_net::analysis::{communication_efficiency, communication_efficiency_with, EfficiencyNorm};
use ricci_net::forman::{augmented_forman_edge, forman_edge, forman_vertex};
use ricci_net::metrics::{clustering_coefficient, edge_betweenness, vertex_betweenness};
use ricci_net::ollivier::{ollivier_edge, ollivier_vertex};
use ricci_net::reproduce::zachary_karate_club;
use ricci_net::{Graph, WalkKind};

const TOL: f64 = 1e-9;

fn all_close(xs: &[f64], want: f64) -> bool {
    xs.iter().all(|x| (x - want).abs() < TOL)
}

#[test]
fn zachary_shape() {
    let g = zachary_karate_club();
    assert_eq!(g.vertex_count(), 34);
    assert_eq!(g.edge_count(), 78);
    assert!(g.is_connected());
}

#[test]
fn forman_on_stars_and_cliques() {
    for m in [3, 5, 10] {
        assert!(all_close(&forman_edge(&star(m)).values, 3.0 - m as f64));
    }
    let g = double_star(3, 4);
    let bridge = g.find_edge(0, 1).unwrap();
    assert_eq!(forman_edge(&g).get(bridge), 2.0 - 7.0);
    for n in 3..10 {
        let fr = forman_edge(&complete(n)).values;
        assert!(all_close(&fr, 4.0 - 2.0 * (n - 1) as f64));
        let afr = augmented_forman_edge(&complete(n)).values;
        assert!(all_close(&afr, 4.0 - 2.0 * (n - 1) as f64 + 3.0 * (n - 2) as f64));
    }
    assert!(all_close(&augmented_forman_edge(&complete(3)).values, 3.0));
}

#[test]
fn forman_vertex_on_star() {
    let g = star(4);
    let fv = forman_vertex(&g, &forman_edge(&g)).unwrap();
    assert_eq!(fv.values[0], -4.0);
    assert_eq!(fv.values[1], -1.0);
}

#[test]
fn ollivier_closed_forms() {
    let nl = WalkKind::NON_LAZY;
    for m in [2, 3, 6] {
        assert!(all_close(&ollivier_edge(&star(m), nl).unwrap().values, 0.0));
    }
    assert!(all_close(&ollivier_edge(&cycle(4), nl).unwrap().values, 0.0));
    assert!(all_close(&ollivier_edge(&cycle(6), nl).unwrap().values, 0.0));
    for n in 5..=20 {
        let k = ollivier_edge(&complete(n), nl).unwrap();
        assert!(all_close(&k.values, (n - 2) as f64 / (n - 1) as f64), "K_{n}");
    }
    assert!(all_close(&ollivier_edge(&complete(3), WalkKind::LAZY).unwrap().values, 0.75));
    // on a tree, non-lazy curvature is -2 (1 - 1/dx - 1/dy)_+
    for (a, b) in [(1, 1), (3, 4), (6, 2), (9, 9)] {
        let g = double_star(a, b);
        let e = g.find_edge(0, 1).unwrap();
        let (dx, dy) = ((a + 1) as f64, (b + 1) as f64);
        let want = -2.0 * (1.0 - 1.0 / dx - 1.0 / dy).max(0.0);
        assert!((ollivier_edge(&g, nl).unwrap().get(e) - want).abs() < TOL, "{a},{b}");
    }
}

#[test]
fn ollivier_vertex_sums_edges() {
    let g = zachary_karate_club();
    let k = ollivier_edge(&g, WalkKind::LAZY).unwrap();
    let kv = ollivier_vertex(&g, &k).unwrap();
    for v in 0..g.vertex_count() {
        let s: f64 = g.incident_edges(v).iter().map(|&e| k.get(e)).sum();
        assert!((kv.values[v] - s).abs() < TOL);
    }
}

#[test]
fn betweenness_closed_forms() {
    let g = star(5);
    let vb = vertex_betweenness(&g);
    assert_eq!(vb[0], 10.0);
    assert!(all_close(&vb[1..], 0.0));
    assert!(all_close(&edge_betweenness(&g), 5.0));
    let p = path(4);
    assert_eq!(vertex_betweenness(&p), vec![0.0, 2.0, 2.0, 0.0]);
    assert!(all_close(&edge_betweenness(&complete(6)), 1.0));
}

#[test]
fn clustering_closed_forms() {
    assert!(all_close(&clustering_coefficient(&complete(5)), 1.0));
    assert!(all_close(&clustering_coefficient(&star(5)), 0.0));
}

#[test]
fn efficiency_closed_forms() {
    assert!((communication_efficiency(&complete(3)).unwrap() - 0.5).abs() < TOL);
    assert!((communication_efficiency(&path(3)).unwrap() - 5.0 / 12.0).abs() < TOL);
    let ordered = communication_efficiency_with(&path(3), EfficiencyNorm::Ordered, 3).unwrap();
    assert!((ordered - 5.0 / 6.0).abs() < TOL);
    assert_eq!(communication_efficiency(&Graph::empty(4)).unwrap(), 0.0);
}
