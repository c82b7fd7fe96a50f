mod common;

use proptest::prelude::*;

use common::{all_pairs, brute_force_betweenness, brute_force_transport, brute_force_triangles};
use ricci_net::analysis::{communication_efficiency, pearson, removal_experiment, spearman, RemovalOptions, Strategy as Removal, Target};
use ricci_net::curvature::vertex_curvature;
use ricci_net::forman::{augmented_forman_edge, forman_edge, forman_edge_weighted};
use ricci_net::generators::{generate_ba, generate_er, generate_ws};
use ricci_net::io::{parse_edge_list, write_edge_list_to};
use ricci_net::metrics::{betweenness, clustering_coefficient};
use ricci_net::ollivier::{ollivier_edge, walk_measure, wasserstein1};
use ricci_net::{Graph, SparseMeasure, WalkKind};

/// ER, WS or BA graph with at most `max_n` vertices.
fn model_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0u8..3, 6usize..=max_n, any::<u64>(), 0.0f64..0.3).prop_map(|(family, n, seed, x)| match family {
        0 => generate_er(n, x, seed),
        1 => generate_ws(n, 2 * (1 + (seed % 2) as usize), x, seed),
        _ => generate_ba(n, 1 + (seed % 3) as usize, 4, seed),
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    model_graph(max_n)
        .prop_map(|g| g.largest_connected_component())
        .prop_filter("needs an edge", |g| g.edge_count() > 0)
}

fn random_measure(g: &Graph, picks: &[(usize, f64)]) -> SparseMeasure {
    let mut support: Vec<usize> = Vec::new();
    let mut mass: Vec<f64> = Vec::new();
    for &(v, w) in picks {
        let v = v % g.vertex_count();
        if !support.contains(&v) {
            support.push(v);
            mass.push(w);
        }
    }
    let total: f64 = mass.iter().sum();
    let mut mass: Vec<f64> = mass.iter().map(|m| m / total).collect();
    // absorb rounding so the masses sum to one
    let drift = 1.0 - mass.iter().sum::<f64>();
    mass[0] += drift;
    SparseMeasure::new(support, mass).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn handshake(g in model_graph(120)) {
        let total: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn edge_list_round_trip(g in model_graph(80)) {
        let mut buf = Vec::new();
        write_edge_list_to(&g, &mut buf).unwrap();
        let pairs = parse_edge_list(buf.as_slice(), std::path::Path::new("mem")).unwrap();
        let (h, report) = Graph::from_edge_list(&pairs);
        prop_assert_eq!(report.discarded(), 0);
        // isolated vertices do not appear in an edge list
        let lhs: Vec<(u64, u64)> = g.edges().iter().map(|&(u, v)| (g.label(u), g.label(v))).collect();
        let rhs: Vec<(u64, u64)> = h.edges().iter().map(|&(u, v)| (h.label(u), h.label(v))).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn triangle_count(g in model_graph(60)) {
        let through: usize = g.edge_ids().map(|e| g.triangles_through_edge(e)).sum();
        prop_assert_eq!(through, 3 * brute_force_triangles(&g));
    }

    #[test]
    fn bfs_triangle_inequality(g in connected_graph(50)) {
        let d = all_pairs(&g);
        let n = g.vertex_count();
        for a in 0..n.min(12) {
            let from_lib = g.bfs_distances(a, None);
            for b in 0..n {
                prop_assert_eq!(from_lib.get(&b).copied(), d[a][b]);
                for c in 0..n.min(12) {
                    prop_assert!(d[a][c].unwrap() <= d[a][b].unwrap() + d[b][c].unwrap());
                }
            }
        }
    }

    #[test]
    fn augmented_forman_adds_three_per_triangle(g in model_graph(200)) {
        let fr = forman_edge(&g);
        let afr = augmented_forman_edge(&g);
        for e in g.edge_ids() {
            let (u, v) = g.endpoints(e);
            let expected = 4.0 - g.degree(u) as f64 - g.degree(v) as f64;
            prop_assert_eq!(fr.get(e), expected);
            prop_assert_eq!(afr.get(e), expected + 3.0 * g.triangles_through_edge(e) as f64);
        }
    }

    #[test]
    fn weighted_forman_at_unit_weights(g in model_graph(100)) {
        let a = forman_edge(&g);
        let b = forman_edge_weighted(&g);
        for (x, y) in a.values.iter().zip(&b.values) {
            prop_assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn weighted_forman_scales_linearly(g in model_graph(60), lambda in 0.1f64..10.0, w in prop::collection::vec(0.5f64..2.0, 1..8)) {
        let vw: Vec<f64> = (0..g.vertex_count()).map(|i| w[i % w.len()]).collect();
        let ew: Vec<f64> = (0..g.edge_count()).map(|i| w[(i + 3) % w.len()]).collect();
        let base = forman_edge_weighted(&g.clone().with_weights(vw.clone(), ew.clone()).unwrap());
        let scaled_g = g.clone().with_weights(
            vw.iter().map(|x| x * lambda).collect(),
            ew.iter().map(|x| x * lambda).collect(),
        ).unwrap();
        let scaled = forman_edge_weighted(&scaled_g);
        for (x, y) in base.values.iter().zip(&scaled.values) {
            prop_assert!((lambda * x - y).abs() <= 1e-12 * (1.0 + y.abs()), "{} vs {}", lambda * x, y);
        }
    }

    #[test]
    fn vertex_sum_is_twice_edge_sum(g in model_graph(100)) {
        for ev in [forman_edge(&g), augmented_forman_edge(&g)] {
            let vc = vertex_curvature(&g, &ev).unwrap();
            let vs: f64 = vc.values.iter().sum();
            let es: f64 = ev.values.iter().sum();
            prop_assert_eq!(vs, 2.0 * es);
        }
    }

    #[test]
    fn wasserstein_is_a_metric(
        g in connected_graph(30),
        a in prop::collection::vec((any::<usize>(), 0.05f64..1.0), 1..5),
        b in prop::collection::vec((any::<usize>(), 0.05f64..1.0), 1..5),
        c in prop::collection::vec((any::<usize>(), 0.05f64..1.0), 1..5),
    ) {
        let (ma, mb, mc) = (random_measure(&g, &a), random_measure(&g, &b), random_measure(&g, &c));
        let ab = wasserstein1(&g, &ma, &mb).unwrap();
        let ba = wasserstein1(&g, &mb, &ma).unwrap();
        let bc = wasserstein1(&g, &mb, &mc).unwrap();
        let ac = wasserstein1(&g, &ma, &mc).unwrap();
        prop_assert!((ab.cost - ba.cost).abs() < 1e-12);
        prop_assert!(ac.cost <= ab.cost + bc.cost + 1e-12);
        // plan marginals
        for (i, &m) in ma.mass().iter().enumerate() {
            let row: f64 = (0..ab.cols.len()).map(|j| ab.flow_at(i, j)).sum();
            prop_assert!((row - m).abs() < 1e-12);
        }
        for (j, &m) in mb.mass().iter().enumerate() {
            let col: f64 = (0..ab.rows.len()).map(|i| ab.flow_at(i, j)).sum();
            prop_assert!((col - m).abs() < 1e-12);
        }
        prop_assert!(ab.flow.iter().all(|&f| f >= 0.0));
    }

    #[test]
    fn transport_matches_basis_enumeration(
        g in connected_graph(30),
        a in prop::collection::vec((any::<usize>(), 0.05f64..1.0), 1..5),
        b in prop::collection::vec((any::<usize>(), 0.05f64..1.0), 1..5),
    ) {
        let (ma, mb) = (random_measure(&g, &a), random_measure(&g, &b));
        let plan = wasserstein1(&g, &ma, &mb).unwrap();
        let oracle = brute_force_transport(ma.mass(), mb.mass(), &plan.distance);
        prop_assert!((plan.cost - oracle).abs() < 1e-9, "{} vs {}", plan.cost, oracle);
    }

    #[test]
    fn ollivier_bounds(g in connected_graph(60)) {
        let k = ollivier_edge(&g, WalkKind::NON_LAZY).unwrap();
        prop_assert!(k.values.iter().all(|&x| (-2.0 - 1e-12..=1.0 + 1e-12).contains(&x)));
        let lazy = ollivier_edge(&g, WalkKind::LAZY).unwrap();
        prop_assert!(lazy.values.iter().all(|&x| (-1.0 - 1e-12..=1.0 + 1e-12).contains(&x)));
        // measures at each endpoint are probability vectors
        for &(u, _) in g.edges().iter().take(5) {
            let m = walk_measure(&g, u, WalkKind::LAZY).unwrap();
            prop_assert!((m.mass().iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn brandes_matches_enumeration(g in model_graph(40)) {
        let b = betweenness(&g);
        let (vb, eb) = brute_force_betweenness(&g);
        for (x, y) in b.vertex.iter().zip(&vb) {
            prop_assert!((x - y).abs() < 1e-9);
        }
        for (x, y) in b.edge.iter().zip(&eb) {
            prop_assert!((x - y).abs() < 1e-9);
        }
        let d = all_pairs(&g);
        let n = g.vertex_count();
        let total: usize = (0..n).flat_map(|s| (s + 1..n).filter_map({ let d = &d; move |t| d[s][t] })).sum();
        prop_assert!((b.edge.iter().sum::<f64>() - total as f64).abs() < 1e-9 * (1.0 + total as f64));
    }

    #[test]
    fn clustering_in_unit_interval(g in model_graph(150)) {
        prop_assert!(clustering_coefficient(&g).iter().all(|&c| (0.0..=1.0).contains(&c)));
    }

    #[test]
    fn spearman_rank_invariance(xs in prop::collection::vec(-100.0f64..100.0, 3..60), ys in prop::collection::vec(-100.0f64..100.0, 60), shift in -5.0f64..5.0, scale in 0.1f64..5.0) {
        let ys = &ys[..xs.len()];
        if let (Ok(a), Ok(b)) = (spearman(&xs, ys), spearman(ys, &xs)) {
            prop_assert!((a - b).abs() < 1e-12);
            let mapped: Vec<f64> = xs.iter().map(|x| x.powi(3) + scale * x.atan() + shift).collect();
            let c = spearman(&mapped, ys).unwrap();
            prop_assert!((a - c).abs() < 1e-12, "{a} vs {c}");
            prop_assert!((-1.0..=1.0).contains(&a));
            let (p, q) = (pearson(&xs, ys).unwrap(), pearson(ys, &xs).unwrap());
            prop_assert!((p - q).abs() < 1e-12);
        }
    }

    #[test]
    fn efficiency_drops_when_an_edge_goes(g in model_graph(60), pick in any::<usize>()) {
        prop_assume!(g.edge_count() > 0);
        let drop = pick % g.edge_count();
        let h = g.edge_subgraph(|e| e.index() != drop);
        let before = communication_efficiency(&g).unwrap();
        let after = communication_efficiency(&h).unwrap();
        prop_assert!(after <= before + 1e-12);
    }

    #[test]
    fn removal_curves_start_intact_and_end_empty(g in model_graph(40), seed in any::<u64>(), steps in 2usize..8) {
        let e0 = communication_efficiency(&g).unwrap();
        for target in [Target::Edges, Target::Vertices] {
            for s in Removal::for_target(target) {
                let c = removal_experiment(&g, target, s.name(), steps, seed, &RemovalOptions::default()).unwrap();
                prop_assert_eq!(c.points.len(), steps);
                prop_assert_eq!(c.points[0].efficiency, e0);
                prop_assert_eq!(c.points[steps - 1].efficiency, 0.0);
                let again = removal_experiment(&g, target, s.name(), steps, seed, &RemovalOptions::default()).unwrap();
                prop_assert_eq!(&c, &again);
            }
        }
    }

    #[test]
    fn generators_are_deterministic(n in 5usize..200, seed in any::<u64>()) {
        prop_assert_eq!(generate_er(n, 0.05, seed), generate_er(n, 0.05, seed));
        prop_assert_eq!(generate_ws(n, 4, 0.3, seed), generate_ws(n, 4, 0.3, seed));
        prop_assert_eq!(generate_ba(n, 2, 3, seed), generate_ba(n, 2, 3, seed));
    }
}
