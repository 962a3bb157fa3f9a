mod common;

use common::{all_subsets, bits, shuffled, small_corpus, Reference};
use matroid_core::description::{encode_from_oracle, parse};
use matroid_core::families::uniform;
use matroid_core::ops::circuit_minor;
use matroid_core::{DescriptionKind, MatroidView, SubsetMask};
use proptest::prelude::*;

#[test]
fn every_kind_decodes_to_the_same_independent_sets() {
    for entry in small_corpus(8) {
        let reference = Reference::of(&entry.view);
        for kind in DescriptionKind::ALL {
            let d = encode_from_oracle(&entry.view, kind);
            let decoded = MatroidView::from_description(&d).unwrap();
            assert_eq!(decoded.rank(), entry.view.rank(), "{} {kind}", entry.name);
            for a in all_subsets(reference.n) {
                assert_eq!(decoded.indep(a), reference.indep(a), "{} {kind} {a:?}", entry.name);
            }
        }
    }
}

#[test]
fn rank_matches_reference_and_is_submodular() {
    for entry in small_corpus(7) {
        let v = &entry.view;
        let reference = Reference::of(v);
        let n = v.n();
        for a in all_subsets(n) {
            assert_eq!(v.rk(a), reference.rank(a), "{} {a:?}", entry.name);
        }
        for a in all_subsets(n) {
            for e in 0..n {
                assert!(v.rk(a) <= v.rk(a.with(e)), "{} monotone", entry.name);
            }
            for b in all_subsets(n) {
                assert!(v.rk(a | b) + v.rk(a & b) <= v.rk(a) + v.rk(b), "{} submodular", entry.name);
            }
        }
    }
}

#[test]
fn closure_is_a_closure_operator() {
    for entry in small_corpus(7) {
        let v = &entry.view;
        let reference = Reference::of(v);
        for a in all_subsets(v.n()) {
            let c = v.cl(a);
            assert_eq!(c, reference.closure(a), "{}", entry.name);
            assert!(a.is_subset_of(c));
            assert_eq!(v.cl(c), c);
            for e in 0..v.n() {
                assert!(c.is_subset_of(v.cl(a.with(e))));
            }
        }
    }
}

#[test]
fn duality() {
    for entry in small_corpus(8) {
        let v = &entry.view;
        let d = v.dual();
        assert_eq!(d.rank(), v.n() - v.rank(), "{}", entry.name);
        assert!(d.dual().same_matroid(v), "{}", entry.name);
        // bases of the dual are the complements of bases
        let reference = Reference::of(v);
        let dual_bases: Vec<SubsetMask> = reference.bases().iter().map(|b| b.complement(v.n())).collect();
        let from_dual = Reference::of(&d).bases();
        let mut expected = dual_bases.clone();
        expected.sort_by_key(|m| (m.len(), m.bits()));
        assert_eq!(from_dual, expected, "{}", entry.name);
        // description-level duals agree with the rank-level dual
        for kind in DescriptionKind::ALL {
            let desc_view = MatroidView::from_description(&encode_from_oracle(v, kind)).unwrap();
            assert!(desc_view.dual().same_matroid(&d), "{} {kind}", entry.name);
        }
    }
}

#[test]
fn dual_examples() {
    assert!(uniform(1, 3).unwrap().dual().same_matroid(&uniform(2, 3).unwrap()));
    let hyp = parse("matroid hyperplanes n=3\n100\n010\n001\n").unwrap();
    let dual = MatroidView::from_description(&hyp).unwrap().dual();
    let circuits = encode_from_oracle(&dual, DescriptionKind::Circuits);
    assert_eq!(circuits.sets(), &[bits("110"), bits("101"), bits("011")]);
    assert!(dual.same_matroid(&uniform(1, 3).unwrap()));
}

fn disjoint_pairs(n: usize) -> impl Iterator<Item = (SubsetMask, SubsetMask)> {
    all_subsets(n).flat_map(move |x| (SubsetMask::full(n) - x).submasks().map(move |y| (x, y)))
}

#[test]
fn minor_rank_rule() {
    for entry in small_corpus(6) {
        let v = &entry.view;
        let n = v.n();
        for (x, y) in disjoint_pairs(n) {
            let m = v.minor(x, y).unwrap();
            let kept: Vec<usize> = (0..n).filter(|&e| !x.contains(e) && !y.contains(e)).collect();
            assert_eq!(m.n(), kept.len());
            for a in all_subsets(m.n()) {
                let lifted: SubsetMask = a.iter().map(|i| kept[i]).collect();
                assert_eq!(m.rk(a), v.rk(lifted | x) - v.rk(x), "{} {x:?} {y:?}", entry.name);
            }
            for (i, &e) in kept.iter().enumerate() {
                assert_eq!(m.original_index(i), e);
            }
        }
    }
}

#[test]
fn circuit_rule_minor_matches_rank_rule() {
    for entry in small_corpus(6) {
        let v = &entry.view;
        let circuits = Reference::of(v).circuits();
        for (x, y) in disjoint_pairs(v.n()) {
            let (minor_circuits, _) = circuit_minor(&circuits, v.n(), x, y);
            let by_rank = Reference::of(&v.minor(x, y).unwrap()).circuits();
            let mut got = minor_circuits;
            got.sort_by_key(|m| (m.len(), m.bits()));
            assert_eq!(got, by_rank, "{} {x:?} {y:?}", entry.name);
        }
    }
}

#[test]
fn operation_examples() {
    let u25 = uniform(2, 5).unwrap();
    assert!(u25.minor(SubsetMask::EMPTY, SubsetMask::singleton(4)).unwrap().same_matroid(&uniform(2, 4).unwrap()));
    let u24 = uniform(2, 4).unwrap();
    assert!(u24.minor(SubsetMask::singleton(0), SubsetMask::EMPTY).unwrap().same_matroid(&uniform(1, 3).unwrap()));
    assert!(u24.minor(SubsetMask::singleton(0), SubsetMask::singleton(0)).is_err());

    assert!(uniform(3, 5).unwrap().truncate(2).unwrap().same_matroid(&u25));
    assert!(u24.truncate(3).is_err());

    let pairs = uniform(1, 2).unwrap().direct_sum(&uniform(1, 2).unwrap()).unwrap();
    let t = pairs.truncate(1).unwrap();
    for a in all_subsets(4) {
        assert_eq!(t.rk(a), pairs.rk(a).min(1));
    }
    assert_eq!(Reference::of(&pairs).bases().len(), 4);

    let coloops = uniform(1, 1).unwrap().direct_sum(&uniform(1, 1).unwrap()).unwrap();
    assert!(coloops.same_matroid(&uniform(2, 2).unwrap()));
    assert!(u24.direct_sum(&uniform(0, 0).unwrap()).unwrap().same_matroid(&u24));

    let blown = uniform(2, 3).unwrap().parallel_blowup(2).unwrap();
    assert_eq!((blown.n(), blown.rank()), (6, 2));
    assert!(u24.parallel_blowup(1).unwrap().same_matroid(&u24));

    let ext = u24.add_parallel(0).unwrap();
    assert_eq!((ext.n(), ext.rank()), (5, 2));
    let cf = encode_from_oracle(&ext, DescriptionKind::CyclicFlats);
    assert_eq!(cf.sets(), &[bits("00000"), bits("10001"), bits("11111")]);
    assert!(uniform(0, 2).unwrap().add_parallel(1).is_err());
}

#[test]
fn query_examples() {
    let u24 = uniform(2, 4).unwrap();
    assert!(u24.is_independent(bits("1100")).unwrap());
    assert!(!u24.is_independent(bits("1110")).unwrap());
    assert_eq!(u24.rank_of(bits("1110")).unwrap(), 2);
    assert!(u24.is_independent(SubsetMask::full(5)).is_err());

    let nsc = parse("matroid nsc n=4 r=3\n1100\n").unwrap();
    let v = MatroidView::from_description(&nsc).unwrap();
    assert!(!v.is_independent(bits("1110")).unwrap());
    assert!(v.is_independent(bits("1011")).unwrap());

    assert_eq!(uniform(1, 3).unwrap().closure(bits("100")).unwrap(), bits("111"));
    let pairs = parse("matroid independent n=4\n0000\n1000\n0100\n0010\n0001\n1010\n1001\n0110\n0101\n").unwrap();
    let v = MatroidView::from_description(&pairs).unwrap();
    assert_eq!(v.closure(bits("1000")).unwrap(), bits("1100"));
    assert_eq!(v.closure(SubsetMask::full(4)).unwrap(), SubsetMask::full(4));
}

/// Random matroids: truncations of direct sums of small uniform matroids,
/// relabeled by a random permutation.
fn arb_matroid() -> impl Strategy<Value = MatroidView> {
    let part = (0usize..4).prop_flat_map(|n| (0..=n, Just(n)));
    (proptest::collection::vec(part, 1..4), any::<u64>(), 0usize..3).prop_map(|(parts, seed, cut)| {
        let mut m = uniform(0, 0).unwrap();
        for (r, n) in parts {
            m = m.direct_sum(&uniform(r, n).unwrap()).unwrap();
        }
        let m = m.truncate(m.rank().saturating_sub(cut)).unwrap();
        m.relabel(&shuffled(m.n(), seed)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bases_satisfy_exchange(m in arb_matroid()) {
        let bases = Reference::of(&m).bases();
        for &b1 in &bases {
            for &b2 in &bases {
                for e in (b1 - b2).iter() {
                    prop_assert!((b2 - b1).iter().any(|f| bases.contains(&b1.without(e).with(f))));
                }
            }
        }
    }

    #[test]
    fn validate_accepts_every_encoding(m in arb_matroid()) {
        for kind in DescriptionKind::ALL {
            let report = matroid_core::validate(&encode_from_oracle(&m, kind));
            prop_assert!(report.is_valid(), "{kind}: {report}");
        }
    }

    #[test]
    fn closure_axioms(m in arb_matroid()) {
        let n = m.n();
        for a in all_subsets(n) {
            let c = m.cl(a);
            prop_assert!(a.is_subset_of(c));
            prop_assert_eq!(m.cl(c), c);
            // exchange: e ∈ cl(A + f) - cl(A) implies f ∈ cl(A + e)
            for e in (SubsetMask::full(n) - c).iter() {
                for f in (SubsetMask::full(n) - c).iter() {
                    if m.cl(a.with(f)).contains(e) {
                        prop_assert!(m.cl(a.with(e)).contains(f));
                    }
                }
            }
        }
    }
}
