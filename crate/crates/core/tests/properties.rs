use std::collections::HashMap;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use star_spectra::canon::{canonical_code, canonical_code_with_ceiling, labeled_code, CanonicalCode};
use star_spectra::enumerate::{enumerate_graphs, GraphClass};
use star_spectra::extremal::{join_clique, make_f, make_join_regular, regular_circulant};
use star_spectra::forest::{contains_star_forest, contains_star_forest_oracle, is_f_free, StarForest};
use star_spectra::graph6::{graph6_decode, graph6_encode};
use star_spectra::spectra::{adjacency_spectrum, signless_laplacian_radius, spectral_radius};
use star_spectra::Graph;

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn random_forest(rng: &mut StdRng, max_order: usize) -> StarForest {
    loop {
        let k = rng.gen_range(1..=3);
        let degrees: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=4)).collect();
        let f = StarForest::new(degrees).unwrap();
        if f.order() <= max_order {
            return f;
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut t = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[t] {
                        edges.push((u, v));
                    }
                    t += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_forest() -> impl Strategy<Value = StarForest> {
    proptest::collection::vec(1usize..=3, 1..=3).prop_map(|d| StarForest::new(d).unwrap())
}

#[test]
fn containment_matches_oracle_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for i in 0..1000 {
        let n = 8 + i % 3;
        let p = rng.gen_range(0.15..0.6);
        let g = random_graph(&mut rng, n, p);
        let f = random_forest(&mut rng, n);
        assert_eq!(
            contains_star_forest(&g, &f),
            contains_star_forest_oracle(&g, &f),
            "{g:?} / {f}"
        );
    }
}

/// Minimum labeled code over all orderings.
fn brute_code(g: &Graph) -> CanonicalCode {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = labeled_code(&g.relabel(&perm));
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(labeled_code(&g.relabel(&perm)));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

#[test]
fn canonical_codes_biject_with_permutation_minimum_at_seven() {
    let graphs = enumerate_graphs(7, GraphClass::All).unwrap();
    let mut forward: HashMap<CanonicalCode, CanonicalCode> = HashMap::new();
    let mut backward: HashMap<CanonicalCode, CanonicalCode> = HashMap::new();
    let mut rng = StdRng::seed_from_u64(7);
    for g in &graphs {
        let brute = brute_code(g);
        // A random relabeling must land on the same canonical code.
        let mut perm: Vec<usize> = (0..7).collect();
        for i in (1..7).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let canon = canonical_code(&g.relabel(&perm)).unwrap();
        assert_eq!(canon, canonical_code(g).unwrap());
        assert!(forward.insert(canon.clone(), brute.clone()).is_none());
        assert!(backward.insert(brute, canon).is_none());
    }
    assert_eq!(forward.len(), 1044);
}

#[test]
fn graph6_round_trips_every_small_graph() {
    for n in 0..=7 {
        for g in enumerate_graphs(n, GraphClass::All).unwrap() {
            assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
        }
    }
}

#[test]
fn joins_with_bounded_degree_are_f_free() {
    for k in 2..=4 {
        for d in 1..=3 {
            for f in [vec![d; k], {
                let mut v = vec![d + 1; k - 1];
                v.push(d);
                v
            }] {
                let f = StarForest::new(f).unwrap();
                for n in k..=16 {
                    let m = n - k + 1;
                    let h = regular_circulant(m, d - 1)
                        .or_else(|_| regular_circulant(m - 1, d - 1).and_then(|h| h.union(&Graph::empty(1)?)));
                    let Ok(h) = h else { continue };
                    let g = join_clique(k, &h).unwrap();
                    assert!(is_f_free(&g, &f), "n = {n}, F = {f}");
                }
            }
        }
    }
}

#[test]
fn f_family_matches_regular_join_when_even() {
    for k in 2..=5 {
        for n in k..=30 {
            let f = make_f(n, k).unwrap();
            let bound = star_spectra::extremal::spectral_radius_bound(n, k, 2).unwrap();
            if (n - k + 1) % 2 == 0 {
                let j = make_join_regular(n, k, 2).unwrap();
                assert_eq!(
                    canonical_code_with_ceiling(&f, 64).unwrap(),
                    canonical_code_with_ceiling(&j, 64).unwrap()
                );
            } else {
                assert!(spectral_radius(&f).unwrap() < bound - 1e-9, "n = {n}, k = {k}");
            }
        }
    }
}

#[test]
fn regular_graphs_have_rho_r_and_q_2r() {
    for m in 3..=20 {
        for r in 0..m {
            if let Ok(h) = regular_circulant(m, r) {
                assert!((spectral_radius(&h).unwrap() - r as f64).abs() < 1e-9);
                assert!((signless_laplacian_radius(&h).unwrap() - 2.0 * r as f64).abs() < 1e-9);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn adding_an_edge_keeps_containment(g in arb_graph(9), f in arb_forest(), u in 0usize..9, v in 0usize..9) {
        prop_assume!(u != v && u < g.order() && v < g.order());
        let bigger = g.with_edge(u, v).unwrap();
        if contains_star_forest(&g, &f) {
            prop_assert!(contains_star_forest(&bigger, &f));
        }
        let smaller = g.without_edge(u, v).unwrap();
        if !contains_star_forest(&g, &f) {
            prop_assert!(!contains_star_forest(&smaller, &f));
        }
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_code_is_relabeling_invariant(g in arb_graph(12), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        prop_assert_eq!(canonical_code(&g.relabel(&perm)).unwrap(), canonical_code(&g).unwrap());
    }

    #[test]
    fn join_and_union_arithmetic(g in arb_graph(10), h in arb_graph(10)) {
        let j = g.join(&h).unwrap();
        prop_assert_eq!(j.order(), g.order() + h.order());
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.order() * h.order());
        let u = g.union(&h).unwrap();
        prop_assert_eq!(u.edge_count(), g.edge_count() + h.edge_count());
        prop_assert_eq!(g.complement().complement(), g);
        for x in [j, u] {
            for a in 0..x.order() {
                prop_assert!(!x.has_edge(a, a));
                for b in 0..x.order() {
                    prop_assert_eq!(x.has_edge(a, b), x.has_edge(b, a));
                }
            }
        }
    }

    #[test]
    fn spectrum_invariants(g in arb_graph(16)) {
        prop_assume!(g.order() > 0);
        let s = adjacency_spectrum(&g).unwrap();
        let n = g.order() as f64;
        prop_assert_eq!(s.eigenvalues.len(), g.order());
        prop_assert!(s.eigenvalues.iter().sum::<f64>().abs() <= 1e-8 * n);
        let sq: f64 = s.eigenvalues.iter().map(|x| x * x).sum();
        prop_assert!((sq - 2.0 * g.edge_count() as f64).abs() <= 1e-8 * n);
        prop_assert!((spectral_radius(&g).unwrap() - s.largest()).abs() <= 1e-9);
        if g.is_triangle_free() {
            prop_assert!(s.largest() <= n / 2.0 + 1e-9);
        }
    }
}
