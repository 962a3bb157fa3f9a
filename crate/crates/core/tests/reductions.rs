mod common;

use common::{shuffled, small_corpus, Reference};
use matroid_core::description::encode_from_oracle;
use matroid_core::families::{add_loops, bicircular, phi, phi_r, uniform, MultiGraph};
use matroid_core::reductions::{
    decode_bipartite, detect_minor_exhaustive, detect_minor_fixed, encode_bipartite,
    find_independent_set, find_subgraph, graph_isomorphism, intersect3_bases,
    intersect3_bruteforce, is_isomorphism, isomorphic, reduce_3dm, reduce_independent_set,
    reduce_subgraph_iso, verify_witness, TripleSystem,
};
use matroid_core::{DescriptionKind, MatroidView, SubsetMask};
use petgraph::graph::UnGraph;

fn to_petgraph(g: &MultiGraph) -> UnGraph<(), ()> {
    let mut p = UnGraph::new_undirected();
    let nodes: Vec<_> = (0..g.vertex_count()).map(|_| p.add_node(())).collect();
    for &(a, b) in g.edges() {
        p.add_edge(nodes[a], nodes[b], ());
    }
    p
}

fn patterns() -> Vec<(&'static str, MatroidView)> {
    vec![
        ("U(2,4)", uniform(2, 4).unwrap()),
        ("U(3,4)", uniform(3, 4).unwrap()),
        ("U(2,3)", uniform(2, 3).unwrap()),
        ("Phi(P3)", phi(&MultiGraph::path(3)).unwrap()),
    ]
}

#[test]
fn fixed_minor_search_agrees_with_exhaustive() {
    for host in small_corpus(7) {
        for (pname, pattern) in patterns() {
            let exhaustive = detect_minor_exhaustive(&host.view, &pattern).unwrap();
            for kind in [DescriptionKind::Circuits, DescriptionKind::Hyperplanes] {
                let desc = encode_from_oracle(&host.view, kind);
                let fixed = detect_minor_fixed(&desc, &pattern).unwrap();
                assert_eq!(fixed.is_some(), exhaustive.is_some(), "{} {pname} {kind}", host.name);
                if let Some(w) = fixed {
                    assert!(verify_witness(&host.view, &pattern, &w), "{} {pname} {kind}", host.name);
                }
            }
            if let Some(w) = exhaustive {
                assert!(verify_witness(&host.view, &pattern, &w));
            }
        }
    }
}

#[test]
fn known_excluded_minors() {
    // binary matroids have no U(2,4) minor
    let circuits = |name: &str| {
        let e = small_corpus(8).into_iter().find(|e| e.name == name).unwrap();
        encode_from_oracle(&e.view, DescriptionKind::Circuits)
    };
    let u24 = uniform(2, 4).unwrap();
    for name in ["F7", "F7*", "M(K4)"] {
        assert!(detect_minor_fixed(&circuits(name), &u24).unwrap().is_none(), "{name}");
    }
    assert!(detect_minor_fixed(&circuits("F7-"), &u24).unwrap().is_some());
    assert!(detect_minor_fixed(&circuits("U(3,6)"), &u24).unwrap().is_some());
}

#[test]
fn witnesses_are_checked() {
    let u25 = uniform(2, 5).unwrap();
    let u24 = uniform(2, 4).unwrap();
    let mut w = detect_minor_exhaustive(&u25, &u24).unwrap().unwrap();
    assert!(verify_witness(&u25, &u24, &w));
    w.iso.swap(0, 1);
    assert!(verify_witness(&u25, &u24, &w));
    w.iso[0] = w.iso[1];
    assert!(!verify_witness(&u25, &u24, &w));
    let bad = matroid_core::reductions::MinorWitness {
        x: SubsetMask::singleton(0),
        y: SubsetMask::EMPTY,
        iso: vec![0, 1, 2, 3],
    };
    assert!(!verify_witness(&u25, &u24, &bad));
}

#[test]
fn matroid_isomorphism_is_relabeling_invariant() {
    for (i, entry) in small_corpus(7).iter().enumerate() {
        let perm = shuffled(entry.view.n(), i as u64 + 11);
        let moved = entry.view.relabel(&perm).unwrap();
        let map = isomorphic(&entry.view, &moved).expect(&entry.name);
        assert!(is_isomorphism(&entry.view, &moved, &map));
        let dual = entry.view.dual();
        let self_dual = isomorphic(&entry.view, &dual).is_some();
        assert_eq!(self_dual, isomorphic(&moved, &dual).is_some());
    }
}

#[test]
fn matroid_isomorphism_separates_corpus() {
    let corpus = small_corpus(6);
    for a in &corpus {
        for b in &corpus {
            let found = isomorphic(&a.view, &b.view);
            if let Some(map) = &found {
                assert!(is_isomorphism(&a.view, &b.view, map));
            }
            // brute force over all bijections
            let n = a.view.n();
            let brute = n == b.view.n() && permutations(n).any(|p| is_isomorphism(&a.view, &b.view, &p));
            assert_eq!(found.is_some(), brute, "{} vs {}", a.name, b.name);
        }
    }
}

fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut first = true;
    std::iter::from_fn(move || {
        if first {
            first = false;
            return Some(perm.clone());
        }
        let i = (1..n).rev().find(|&i| perm[i - 1] < perm[i])?;
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
        Some(perm.clone())
    })
}

#[test]
fn graph_isomorphism_matches_petgraph() {
    for v in 1..=4 {
        let graphs = MultiGraph::all_simple(v);
        for g in &graphs {
            for h in &graphs {
                let ours = graph_isomorphism(g, h);
                let theirs = petgraph::algo::is_isomorphic(&to_petgraph(g), &to_petgraph(h));
                assert_eq!(ours.is_some(), theirs, "{g} vs {h}");
                if let Some(map) = ours {
                    assert_eq!(g.relabel(&map).edge_count(), h.edge_count());
                    assert!(g.edges().iter().all(|&(a, b)| h.has_edge(map[a], map[b])));
                }
            }
        }
    }
}

#[test]
fn bipartite_encoding_preserves_and_reflects_isomorphism() {
    let corpus = small_corpus(6);
    for kind in [DescriptionKind::Circuits, DescriptionKind::CyclicFlats, DescriptionKind::NonSpanningCircuits] {
        for a in &corpus {
            let ea = encode_bipartite(&encode_from_oracle(&a.view, kind));
            for b in corpus.iter().filter(|b| b.view.n() == a.view.n()) {
                let eb = encode_bipartite(&encode_from_oracle(&b.view, kind));
                let direct = isomorphic(&a.view, &b.view).is_some();
                let via_graph = graph_isomorphism(&ea.graph, &eb.graph).is_some();
                assert_eq!(direct, via_graph, "{kind}: {} vs {}", a.name, b.name);
                let via_petgraph = petgraph::algo::is_isomorphic(&to_petgraph(&ea.graph), &to_petgraph(&eb.graph));
                assert_eq!(direct, via_petgraph, "{kind}: {} vs {}", a.name, b.name);
            }
        }
    }
}

#[test]
fn bipartite_round_trip() {
    for entry in small_corpus(7) {
        for kind in DescriptionKind::ALL {
            let d = encode_from_oracle(&entry.view, kind);
            let enc = encode_bipartite(&d);
            assert_eq!(decode_bipartite(&enc.graph, kind).unwrap(), d, "{} {kind}", entry.name);
            let perm = shuffled(enc.graph.vertex_count(), 5);
            let back = decode_bipartite(&enc.graph.relabel(&perm), kind).unwrap();
            let a = MatroidView::from_description(&back).unwrap();
            assert!(isomorphic(&a, &entry.view).is_some(), "{} {kind}", entry.name);
        }
    }
}

#[test]
fn intersect3_algorithms_agree() {
    let corpus = small_corpus(5);
    for n in 0..=5 {
        let group: Vec<_> = corpus.iter().filter(|e| e.view.n() == n).collect();
        for (i, a) in group.iter().enumerate() {
            for b in &group[i..] {
                let b_moved = b.view.relabel(&shuffled(n, 3)).unwrap();
                for c in &group {
                    let c_moved = c.view.relabel(&shuffled(n, 7)).unwrap();
                    let views = [&a.view, &b_moved, &c_moved];
                    let bases = views.map(|v| encode_from_oracle(v, DescriptionKind::Bases));
                    for k in 0..=n + 1 {
                        let brute = intersect3_bruteforce(views[0], views[1], views[2], k).unwrap();
                        let by_bases = intersect3_bases(&bases[0], &bases[1], &bases[2], k).unwrap();
                        assert_eq!(brute.is_some(), by_bases.is_some(), "{} {} {} k={k}", a.name, b.name, c.name);
                        for found in [brute, by_bases].into_iter().flatten() {
                            assert_eq!(found.len(), k);
                            assert!(views.iter().all(|v| v.indep(found)));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn three_dm_small_sides() {
    for s in 1..=2 {
        for t in 1..=4 {
            for sys in TripleSystem::all(s, t) {
                let red = reduce_3dm(&sys).unwrap();
                let [a, b, c] = red.views().unwrap();
                let matching = sys.find_matching().is_some();
                let common = intersect3_bruteforce(&a, &b, &c, s).unwrap();
                assert_eq!(matching, common.is_some(), "{sys}");
                if !red.empty_classes.is_empty() {
                    assert!(!matching);
                }
            }
        }
    }
}

#[test]
fn subgraph_reduction_small() {
    for g in MultiGraph::all_simple(3) {
        for h in MultiGraph::all_simple(3) {
            let (pg, ph) = reduce_subgraph_iso(&g, &h).unwrap();
            let host = MatroidView::from_description(&pg).unwrap();
            let pattern = MatroidView::from_description(&ph).unwrap();
            let minor = detect_minor_exhaustive(&host, &pattern).unwrap().is_some();
            assert_eq!(find_subgraph(&g, &h).is_some(), minor, "{g} / {h}");
        }
    }
}

#[test]
fn phi_isomorphism_tracks_graph_isomorphism() {
    let graphs = MultiGraph::all_simple(3);
    for g in &graphs {
        for h in &graphs {
            let same_graph = graph_isomorphism(g, h).is_some();
            let same_phi = isomorphic(&phi(g).unwrap(), &phi(h).unwrap()).is_some();
            assert_eq!(same_graph, same_phi, "{g} vs {h}");
        }
        let truncated = bicircular(&add_loops(g, 2).unwrap()).unwrap().truncate(3).unwrap();
        assert!(isomorphic(&phi(g).unwrap(), &truncated).is_some(), "{g}");
    }
}

#[test]
fn independent_set_reduction_on_triangle_and_path() {
    for g in [MultiGraph::path(3), MultiGraph::complete(3), MultiGraph::empty(3)] {
        let host = phi_r(&g, 3).unwrap();
        let reference = Reference::of(&host);
        let r = reference.rank(reference.full());
        assert_eq!(r, 3);
        for c in reference.circuits().iter().filter(|c| c.len() <= r) {
            assert_eq!(c.len(), 3, "{g}");
        }
        for k in 0..=3 {
            let inst = reduce_independent_set(&g, k, 3).unwrap();
            if inst.size < 3 {
                continue;
            }
            let view = MatroidView::from_description(&inst.host).unwrap();
            let minor = detect_minor_exhaustive(&view, &inst.pattern().unwrap()).unwrap();
            assert_eq!(find_independent_set(&g, k).is_some(), minor.is_some(), "{g} k={k}");
        }
    }
}
