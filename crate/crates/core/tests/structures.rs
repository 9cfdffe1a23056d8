use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sensitivity_core::graph::{
    apply_permutation, edge_slots, enumerate_iso_classes, property_from_class_set, LabeledGraph, Permutation,
};
use sensitivity_core::hypercube::{sensitivity_at, PropertyFunction};
use sensitivity_core::minimal::{
    classify_components, degree_truncation, isolated_vertices, minimal_graphs, positive_min_degree,
    positive_min_tree_size, tree_truncation, ComponentKind, Extended,
};

/// All edge subsets of `g`.
fn subgraphs(g: &LabeledGraph) -> impl Iterator<Item = LabeledGraph> + '_ {
    let full = g.bits();
    let mut sub = full;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & full;
        }
        Some(LabeledGraph::new(g.n(), out).unwrap())
    })
}

/// The unique largest subgraph satisfying `ok`, asserting uniqueness.
fn brute_max(g: &LabeledGraph, ok: impl Fn(&LabeledGraph) -> bool) -> LabeledGraph {
    let passing: Vec<LabeledGraph> = subgraphs(g).filter(|h| ok(h)).collect();
    let best = passing.iter().map(|h| h.edge_count()).max().unwrap();
    let top: Vec<_> = passing.iter().filter(|h| h.edge_count() == best).collect();
    assert_eq!(top.len(), 1, "maximal subgraph of {g} is not unique");
    // every passing subgraph sits inside the maximum
    assert!(passing.iter().all(|h| h.is_subgraph_of(top[0])));
    *top[0]
}

fn check_truncations(g: &LabeledGraph) {
    for k in 1..=4u32 {
        let deg = brute_max(g, |h| positive_min_degree(h) >= Extended::Finite(k));
        assert_eq!(degree_truncation(g, k).unwrap(), deg, "G_[{k}] of {g}");
        let tree = brute_max(g, |h| positive_min_tree_size(h) >= Extended::Finite(k));
        assert_eq!(tree_truncation(g, k).unwrap(), tree, "G_({k}) of {g}");
        if positive_min_degree(g) < Extended::Finite(k) {
            assert_ne!(deg, *g);
        }
        if positive_min_tree_size(g) < Extended::Finite(k) {
            assert_ne!(tree, *g);
        }
    }
}

#[test]
fn truncations_match_brute_force_exhaustively() {
    let mut graphs = 0;
    for n in 1..=5 {
        for bits in 0..1u64 << edge_slots(n) {
            check_truncations(&LabeledGraph::new(n, bits).unwrap());
            graphs += 1;
        }
    }
    assert_eq!(graphs, 1 + 2 + 8 + 64 + 1024);
}

#[test]
fn truncations_match_brute_force_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let bits = rng.gen_range(0..1u64 << 15);
        check_truncations(&LabeledGraph::new(6, bits).unwrap());
    }
}

fn naive_minimal(f: &PropertyFunction, n: usize) -> Vec<LabeledGraph> {
    (0..1u64 << edge_slots(n))
        .map(|x| LabeledGraph::new(n, x).unwrap())
        .filter(|g| f.value(g.bits()) && subgraphs(g).skip(1).all(|h| !f.value(h.bits())))
        .collect()
}

#[test]
fn minimal_graphs_match_subset_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let classes = enumerate_iso_classes(4).unwrap();
    let mut checked = 0;
    while checked < 200 {
        let f = if checked % 2 == 0 {
            let set: Vec<_> = classes.iter().filter(|_| rng.gen()).map(|c| c.signature).collect();
            if set.is_empty() || set.len() == classes.len() {
                continue;
            }
            property_from_class_set(4, &set).unwrap()
        } else {
            // arbitrary functions on the same cube
            let word: u64 = rng.gen();
            PropertyFunction::tabulate(6, |x| (word >> x) & 1 == 1).unwrap().with_vertices(4).unwrap()
        };
        let f = if f.value(0) { f.complement() } else { f };
        if !f.is_nontrivial().unwrap() {
            continue;
        }
        let set = minimal_graphs(&f).unwrap();
        assert_eq!(set.graphs, naive_minimal(&f, 4));
        checked += 1;
    }
}

fn union_find_components(g: &LabeledGraph) -> Vec<(usize, u32)> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (a, b) in g.edges() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra.max(rb)] = ra.min(rb);
    }
    let mut out = Vec::new();
    for root in 0..n {
        if find(&mut parent, root) != root {
            continue;
        }
        let verts = (0..n).filter(|&v| find(&mut parent, v) == root).count();
        let edges = g.edges().iter().filter(|&&(a, _)| find(&mut parent, a) == root).count() as u32;
        out.push((verts, edges));
    }
    out
}

fn random_normalized_property(n: usize, rng: &mut ChaCha8Rng) -> PropertyFunction {
    let classes = enumerate_iso_classes(n).unwrap();
    loop {
        let p: f64 = rng.gen_range(0.05..0.95);
        let set: Vec<_> = classes.iter().filter(|_| rng.gen_bool(p)).map(|c| c.signature).collect();
        if !set.is_empty() && set.len() < classes.len() {
            let f = property_from_class_set(n, &set).unwrap();
            return if f.value(0) { f.complement() } else { f };
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn components_match_union_find(n in 1usize..=6, seed in any::<u64>()) {
        let bits = seed & ((1u64 << edge_slots(n)) - 1);
        let g = LabeledGraph::new(n, bits).unwrap();
        let report = classify_components(&g);
        let mine: Vec<(usize, u32)> = report.components.iter().map(|c| (c.vertices.len(), c.edge_count)).collect();
        prop_assert_eq!(mine, union_find_components(&g));
        for c in &report.components {
            let expected = match (c.edge_count, c.vertices.len()) {
                (0, _) => ComponentKind::IsolatedVertex,
                (e, v) if e as usize + 1 == v => ComponentKind::Tree,
                _ => ComponentKind::Cyclic,
            };
            prop_assert_eq!(c.kind, expected);
        }
        prop_assert_eq!(
            isolated_vertices(&g).len(),
            report.of_kind(ComponentKind::IsolatedVertex).count()
        );
    }

    #[test]
    fn truncation_fixpoints(n in 2usize..=7, seed in any::<u64>(), k in 1u32..=5) {
        let g = LabeledGraph::new(n, seed & ((1u64 << edge_slots(n)) - 1)).unwrap();
        let d = degree_truncation(&g, k).unwrap();
        prop_assert!(d.is_subgraph_of(&g));
        prop_assert!(d.is_empty() || positive_min_degree(&d) >= Extended::Finite(k));
        let t = tree_truncation(&g, k).unwrap();
        prop_assert!(t.is_subgraph_of(&g));
        prop_assert!(positive_min_tree_size(&t) >= Extended::Finite(k));
    }

    #[test]
    fn minimal_graph_invariants(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(4..=6);
        let f = random_normalized_property(n, &mut rng);
        let set = minimal_graphs(&f).unwrap();
        for (i, g) in set.graphs.iter().enumerate() {
            // antichain
            for h in &set.graphs[i + 1..] {
                prop_assert!(!g.is_subgraph_of(h) && !h.is_subgraph_of(g));
            }
            prop_assert!(sensitivity_at(&f, &g.point()).unwrap().value >= g.edge_count());
            // closed under relabeling
            let pi = Permutation::cycle(n);
            prop_assert!(set.contains(&apply_permutation(g, &pi).unwrap()));

            let edges = g.edge_count() as usize;
            let iso = isolated_vertices(g).len();
            let r = classify_components(g).tree_count();
            if positive_min_degree(g) >= Extended::Finite(2) {
                prop_assert!(edges + iso >= n);
            }
            prop_assert!(iso + edges + r >= n);
            if let Extended::Finite(c) = positive_min_tree_size(g) {
                prop_assert!(c as usize * r <= edges);
            }
        }
        prop_assert_eq!(
            set.min_positive_degree,
            set.graphs.iter().map(positive_min_degree).min().unwrap()
        );
    }
}
