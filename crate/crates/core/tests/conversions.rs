mod common;

use common::{all_subsets, small_corpus, Reference};
use matroid_core::conversions::{
    convert, convert_edge, convert_exhaustive, convert_with, count_cyclic_flats_vs_bases,
    cyclic_flats_from_bases, plan, InputTypeOrder, EDGES,
};
use matroid_core::description::encode_from_oracle;
use matroid_core::families::uniform;
use matroid_core::{semantically_equal, DescriptionKind, MatroidView};

fn same_rank_function(a: &MatroidView, b: &MatroidView) -> bool {
    a.n() == b.n() && all_subsets(a.n()).all(|s| a.rk(s) == b.rk(s))
}

#[test]
fn every_edge_preserves_the_matroid() {
    for entry in small_corpus(7) {
        for &(from, to) in &EDGES {
            let input = encode_from_oracle(&entry.view, from);
            let out = convert_edge(&input, to).unwrap();
            assert_eq!(out.kind(), to);
            let view = MatroidView::from_description(&out).unwrap();
            assert!(same_rank_function(&view, &entry.view), "{} {from} -> {to}", entry.name);
        }
    }
}

#[test]
fn edge_output_is_canonical() {
    for entry in small_corpus(7) {
        for &(from, to) in &EDGES {
            let input = encode_from_oracle(&entry.view, from);
            let lattice = convert_edge(&input, to).unwrap();
            let exhaustive = convert_exhaustive(&input, to).unwrap();
            assert_eq!(lattice, exhaustive, "{} {from} -> {to}", entry.name);
        }
    }
}

#[test]
fn planned_conversions_match_exhaustive() {
    for entry in small_corpus(6) {
        for from in DescriptionKind::ALL {
            let input = encode_from_oracle(&entry.view, from);
            for to in DescriptionKind::ALL {
                let c = convert(&input, to).unwrap();
                assert_eq!(c.used_exhaustive(), !InputTypeOrder::reachable(from, to));
                assert_eq!(c.output, convert_exhaustive(&input, to).unwrap(), "{} {from} -> {to}", entry.name);
                assert!(semantically_equal(&c.output, &input).unwrap());
                let forced = convert_with(&input, to, true).unwrap();
                assert!(forced.used_exhaustive() || from == to);
                assert_eq!(forced.output, c.output);
            }
        }
    }
}

#[test]
fn non_edges_are_refused() {
    let u = encode_from_oracle(&uniform(2, 4).unwrap(), DescriptionKind::Bases);
    for to in DescriptionKind::ALL {
        if !InputTypeOrder::is_edge(DescriptionKind::Bases, to) {
            assert!(convert_edge(&u, to).is_err(), "bases -> {to}");
        }
    }
}

#[test]
fn plans_follow_edges() {
    for from in DescriptionKind::ALL {
        for to in DescriptionKind::ALL {
            let p = plan(from, to);
            if p.is_exhaustive() || from == to {
                continue;
            }
            let mut at = from;
            for step in &p.steps {
                assert!(InputTypeOrder::is_edge(at, step.target()));
                at = step.target();
            }
            assert_eq!(at, to);
        }
    }
}

#[test]
fn cyclic_flats_from_bases_matches_definition() {
    for entry in small_corpus(7) {
        let v = &entry.view;
        let reference = Reference::of(v);
        let bases = encode_from_oracle(v, DescriptionKind::Bases);
        let (out, stats) = cyclic_flats_from_bases(&bases).unwrap();
        let mut got: Vec<_> = out.sets().to_vec();
        got.sort_by_key(|m| m.bits());
        let mut want = reference.cyclic_flats();
        want.sort_by_key(|m| m.bits());
        assert_eq!(got, want, "{}", entry.name);
        for (set, rank) in out.entries() {
            assert_eq!(rank, Some(reference.rank(set)));
        }
        assert_eq!(stats.bases, reference.bases().len());
        assert!(stats.max_len <= stats.bases, "{}", entry.name);
        assert!(stats.stabilized && stats.growing_passes <= stats.rank, "{} {stats:?}", entry.name);
    }
}

#[test]
fn cyclic_flats_never_outnumber_bases() {
    for entry in matroid_core::harness::corpus() {
        let (z, b) = count_cyclic_flats_vs_bases(&entry.view);
        assert!(z <= b, "{}: {z} > {b}", entry.name);
    }
}

#[test]
fn fundamental_circuits_are_circuits() {
    for entry in small_corpus(7) {
        let reference = Reference::of(&entry.view);
        let circuits = reference.circuits();
        let bases = encode_from_oracle(&entry.view, DescriptionKind::Bases);
        let out = convert_edge(&bases, DescriptionKind::Circuits).unwrap();
        assert_eq!(out.sets(), &circuits[..], "{}", entry.name);
    }
}
