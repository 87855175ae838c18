#![allow(clippy::needless_range_loop)]

use cayley_db::{
    all_pairs, full_profile, mostar_index, w_set_sizes, w_sets, CayleyGraph, DihedralElement,
    FiniteGroup, Graph, Mode, Permutation, WitnessCap,
};
use proptest::prelude::*;

/// Floyd-Warshall over the adjacency relation; `None` is infinity.
fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.vertex_count();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for &v in g.neighbors(u) {
            d[u][v] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = d[i][k] else { continue };
            for j in 0..n {
                if let Some(kj) = d[k][j] {
                    if d[i][j].is_none_or(|ij| ik + kj < ij) {
                        d[i][j] = Some(ik + kj);
                    }
                }
            }
        }
    }
    d
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (2usize..40).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |pairs| {
            let edges: Vec<(usize, usize)> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// A symmetric identity-free subset of `D_n`, possibly non-generating.
fn dihedral_set() -> impl Strategy<Value = (usize, Vec<DihedralElement>)> {
    (3usize..=24).prop_flat_map(|n| {
        let units = n / 2 + n;
        proptest::collection::vec(any::<bool>(), units).prop_filter_map("empty set", move |pick| {
            let mut set = Vec::new();
            for (u, _) in pick.iter().enumerate().filter(|(_, &p)| p) {
                if u < n / 2 {
                    let i = u as i64 + 1;
                    set.push(DihedralElement::rotation(i, n));
                    set.push(DihedralElement::rotation(-i, n));
                } else {
                    set.push(DihedralElement::reflection((u - n / 2) as i64, n));
                }
            }
            set.sort();
            set.dedup();
            (!set.is_empty()).then_some((n, set))
        })
    })
}

fn cayley(n: usize, set: &[DihedralElement]) -> CayleyGraph {
    CayleyGraph::dihedral(n, set, Mode::Permissive).unwrap()
}

fn permutation() -> impl Strategy<Value = Permutation> {
    Just((0..5).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dihedral_group_axioms(n in 1usize..40, x in 0usize..1000, y in 0usize..1000, z in 0usize..1000) {
        let g = FiniteGroup::dihedral(n).unwrap();
        let m = g.order();
        let (x, y, z) = (x % m, y % m, z % m);
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        prop_assert_eq!(g.mul(x, g.inverse(x)), g.identity());
        prop_assert_eq!(g.mul(g.identity(), x), x);
        let mut row: Vec<usize> = (0..m).map(|h| g.mul(x, h)).collect();
        row.sort_unstable();
        prop_assert_eq!(row, (0..m).collect::<Vec<_>>());
    }

    #[test]
    fn permutation_closure_is_a_group(gens in proptest::collection::vec(permutation(), 1..3)) {
        let g = FiniteGroup::permutation_closure(&gens, 200).unwrap();
        let m = g.order();
        prop_assert_eq!(120 % m, 0);
        for x in 0..m {
            prop_assert_eq!(g.mul(x, g.inverse(x)), g.identity());
            for y in 0..m.min(12) {
                let z = (x * 7 + y) % m;
                prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
            }
        }
    }

    #[test]
    fn cayley_graph_is_regular_and_left_invariant((n, set) in dihedral_set()) {
        let g = cayley(n, &set);
        let graph = g.graph();
        prop_assert_eq!(graph.regular_degree(), Some(set.len()));
        for h in [1, n, 2 * n - 1] {
            let tau = g.left_translation(h);
            for (u, v) in graph.edges() {
                prop_assert!(graph.has_edge(tau[u], tau[v]));
            }
        }
    }

    #[test]
    fn bfs_matches_floyd_warshall(graph in random_graph()) {
        let d = all_pairs(&graph);
        let fw = floyd_warshall(&graph);
        for u in 0..graph.vertex_count() {
            for v in 0..graph.vertex_count() {
                prop_assert_eq!(d.get(u, v), fw[u][v]);
            }
        }
        let connected = fw.iter().flatten().all(Option::is_some);
        prop_assert_eq!(d.is_connected(), connected);
    }

    #[test]
    fn cayley_distances_match_floyd_warshall((n, set) in dihedral_set()) {
        let g = cayley(n, &set);
        let d = all_pairs(g.graph());
        let fw = floyd_warshall(g.graph());
        for u in 0..2 * n {
            for v in 0..2 * n {
                prop_assert_eq!(d.get(u, v), fw[u][v]);
            }
        }
    }

    #[test]
    fn vertex_transitive_metric((n, set) in dihedral_set()) {
        let g = cayley(n, &set);
        let d = all_pairs(g.graph());
        let ecc = d.eccentricity(0);
        let m = 2 * n;
        for u in 0..m {
            prop_assert_eq!(d.eccentricity(u), ecc);
            for v in 0..m {
                for w in (0..m).step_by(3) {
                    if let (Some(uv), Some(vw), Some(uw)) = (d.get(u, v), d.get(v, w), d.get(u, w)) {
                        prop_assert!(uw <= uv + vw);
                    }
                }
            }
        }
    }

    #[test]
    fn w_sets_partition_and_swap((n, set) in dihedral_set()) {
        let g = cayley(n, &set);
        prop_assume!(g.is_connected());
        let d = all_pairs(g.graph());
        let m = 2 * n;
        for x in 0..m {
            for y in (0..m).filter(|&y| y != x) {
                let p = w_set_sizes(&d, x, y).unwrap();
                prop_assert_eq!(p.w_xy + p.w_yx + p.equidistant, m);
                let q = w_set_sizes(&d, y, x).unwrap();
                prop_assert_eq!((q.w_xy, q.w_yx, q.equidistant), (p.w_yx, p.w_xy, p.equidistant));
                let (wx, wy) = w_sets(&d, x, y);
                prop_assert_eq!((wx.len(), wy.len()), (p.w_xy, p.w_yx));
            }
        }
    }

    #[test]
    fn w_sets_follow_left_translation((n, set) in dihedral_set(), h in 0usize..48) {
        let g = cayley(n, &set);
        prop_assume!(g.is_connected());
        let d = all_pairs(g.graph());
        let tau = g.left_translation(h % (2 * n));
        for (x, y) in [(0, 1), (0, n), (1, 2 * n - 1)] {
            let p = w_set_sizes(&d, x, y).unwrap();
            let q = w_set_sizes(&d, tau[x], tau[y]).unwrap();
            prop_assert_eq!((p.w_xy, p.w_yx, p.equidistant), (q.w_xy, q.w_yx, q.equidistant));
        }
    }

    #[test]
    fn mostar_zero_iff_one_balanced(graph in random_graph()) {
        let d = all_pairs(&graph);
        prop_assume!(d.is_connected() && d.diameter() >= 1);
        let profile = full_profile(&d, WitnessCap::Limit(0)).unwrap();
        let mostar = mostar_index(&graph, &d).unwrap();
        prop_assert_eq!(mostar == 0, profile.levels[0].balanced);
    }

    #[test]
    fn connected_cayley_graphs_are_one_balanced((n, set) in dihedral_set()) {
        let g = cayley(n, &set);
        prop_assume!(g.is_connected());
        let d = all_pairs(g.graph());
        prop_assert_eq!(mostar_index(g.graph(), &d).unwrap(), 0);
        let profile = full_profile(&d, WitnessCap::Limit(0)).unwrap();
        prop_assert!(profile.levels[0].balanced);
    }
}

#[test]
fn path_is_not_one_balanced() {
    let p4 = Graph::path(4);
    let d = all_pairs(&p4);
    assert_eq!(mostar_index(&p4, &d).unwrap(), 4);
    assert!(!full_profile(&d, WitnessCap::Limit(0)).unwrap().levels[0].balanced);
}
