//! Matroid isomorphism by backtracking over element bijections.

use std::collections::{BTreeMap, HashSet};

use crate::mask::SubsetMask;
use crate::view::MatroidView;

/// Per-element invariant: number of circuits of each size containing it.
/// Loops and parallel-class sizes show up as size-1 and size-2 counts.
fn signatures(n: usize, circuits: &[SubsetMask]) -> Vec<BTreeMap<usize, usize>> {
    let mut sig = vec![BTreeMap::new(); n];
    for c in circuits {
        for e in c.iter() {
            *sig[e].entry(c.len()).or_insert(0) += 1;
        }
    }
    sig
}

fn size_profile(circuits: &[SubsetMask]) -> Vec<usize> {
    let mut sizes: Vec<usize> = circuits.iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    sizes
}

/// An isomorphism between the matroids on `0..n` with the given circuits,
/// as `map[a_element] = b_element`.
pub fn isomorphic_circuits(
    n: usize,
    circuits_a: &[SubsetMask],
    circuits_b: &[SubsetMask],
) -> Option<Vec<usize>> {
    if circuits_a.len() != circuits_b.len() || size_profile(circuits_a) != size_profile(circuits_b) {
        return None;
    }
    let sig_a = signatures(n, circuits_a);
    let sig_b = signatures(n, circuits_b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }

    // Assign elements from the rarest signature class first.
    let class_size = |s: &BTreeMap<usize, usize>| sig_a.iter().filter(|t| *t == s).count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| (class_size(&sig_a[e]), e));
    let mut depth_of = vec![0; n];
    for (d, &e) in order.iter().enumerate() {
        depth_of[e] = d;
    }
    // Circuits of `a` become fully assigned at the depth of their last element.
    let mut closing: Vec<Vec<SubsetMask>> = vec![Vec::new(); n];
    for &c in circuits_a {
        if let Some(d) = c.iter().map(|e| depth_of[e]).max() {
            closing[d].push(c);
        }
    }
    let mut through_b: Vec<Vec<SubsetMask>> = vec![Vec::new(); n];
    for &c in circuits_b {
        for e in c.iter() {
            through_b[e].push(c);
        }
    }

    let search = Search {
        order,
        sig_a,
        sig_b,
        closing,
        through_b,
        set_a: circuits_a.iter().copied().collect(),
        set_b: circuits_b.iter().copied().collect(),
    };
    let mut map = vec![usize::MAX; n];
    let mut inverse = vec![usize::MAX; n];
    search
        .extend(0, &mut map, &mut inverse, SubsetMask::EMPTY)
        .then_some(map)
}

struct Search {
    order: Vec<usize>,
    sig_a: Vec<BTreeMap<usize, usize>>,
    sig_b: Vec<BTreeMap<usize, usize>>,
    closing: Vec<Vec<SubsetMask>>,
    through_b: Vec<Vec<SubsetMask>>,
    set_a: HashSet<SubsetMask>,
    set_b: HashSet<SubsetMask>,
}

impl Search {
    fn extend(
        &self,
        depth: usize,
        map: &mut [usize],
        inverse: &mut [usize],
        image: SubsetMask,
    ) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let e = self.order[depth];
        for f in 0..map.len() {
            if image.contains(f) || self.sig_a[e] != self.sig_b[f] {
                continue;
            }
            map[e] = f;
            inverse[f] = e;
            let image = image.with(f);
            let forward_ok = self.closing[depth]
                .iter()
                .all(|c| self.set_b.contains(&c.remap(map)));
            let backward_ok = forward_ok
                && self.through_b[f]
                    .iter()
                    .filter(|c| c.is_subset_of(image))
                    .all(|c| self.set_a.contains(&c.remap(inverse)));
            if backward_ok && self.extend(depth + 1, map, inverse, image) {
                return true;
            }
            map[e] = usize::MAX;
            inverse[f] = usize::MAX;
        }
        false
    }
}

/// An isomorphism `a → b`, found exhaustively over bijections that respect
/// the per-element circuit counts.
pub fn isomorphic(a: &MatroidView, b: &MatroidView) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.rank() != b.rank() {
        return None;
    }
    let ca = a.rank_table().circuits();
    let cb = b.rank_table().circuits();
    isomorphic_circuits(a.n(), &ca, &cb)
}

/// Checks that `map` carries the rank function of `a` onto that of `b`.
pub fn is_isomorphism(a: &MatroidView, b: &MatroidView, map: &[usize]) -> bool {
    let n = a.n();
    if b.n() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &f in map {
        if f >= n || std::mem::replace(&mut seen[f], true) {
            return false;
        }
    }
    a.ground().subsets().all(|s| a.rk(s) == b.rk(s.remap(map)))
}
