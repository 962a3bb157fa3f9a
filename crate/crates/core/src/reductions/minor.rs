//! Minor detection: the fixed-pattern search over unions of host circuits,
//! and the exhaustive search over all contraction/deletion pairs.

use std::collections::HashSet;

use crate::description::{Description, DescriptionKind};
use crate::error::{Error, Result};
use crate::mask::{canonical_key, k_subsets, SubsetMask};
use crate::ops::circuit_minor;
use crate::reductions::iso::isomorphic_circuits;
use crate::table::RankTable;
use crate::view::{greedy_basis, MatroidView};

/// `host / x \ y` is isomorphic to the pattern via `iso`, which maps the
/// minor's elements (the elements of `E - x - y` in increasing order) to
/// pattern elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub x: SubsetMask,
    pub y: SubsetMask,
    pub iso: Vec<usize>,
}

impl MinorWitness {
    /// The kept elements `E - x - y` of a host on `n` elements.
    pub fn kept(&self, n: usize) -> SubsetMask {
        SubsetMask::full(n) - self.x - self.y
    }
}

fn sorted_sizes(circuits: &[SubsetMask]) -> Vec<usize> {
    let mut s: Vec<usize> = circuits.iter().map(|c| c.len()).collect();
    s.sort_unstable();
    s
}

/// Distinct unions of at most `t` of the given sets, in canonical order.
fn unions_up_to(sets: &[SubsetMask], t: usize) -> Vec<SubsetMask> {
    let mut all: HashSet<SubsetMask> = HashSet::from([SubsetMask::EMPTY]);
    let mut frontier = vec![SubsetMask::EMPTY];
    for _ in 0..t {
        let mut next = Vec::new();
        for &u in &frontier {
            for &c in sets {
                let w = u | c;
                if all.insert(w) {
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let mut out: Vec<SubsetMask> = all.into_iter().collect();
    out.sort_by_key(|m| canonical_key(*m));
    out
}

/// Fixed-pattern minor detection for a host given by its circuits or its
/// hyperplanes.
///
/// With `t ≥ 1` pattern circuits, every minor isomorphic to the pattern on
/// kept set `A` can be written `M / X \ Y` with `X = (C_1 ∪ ... ∪ C_t) - A`
/// for host circuits `C_i`. The search runs over all `s`-subsets `A` and the
/// distinct unions of at most `t` host circuits, builds each minor with the
/// circuit rules and tests it for isomorphism. A pattern with no circuits is
/// free and is found iff the host rank is at least its size. Hyperplane
/// hosts are handled by dualizing host and pattern.
pub fn detect_minor_fixed(host: &Description, pattern: &MatroidView) -> Result<Option<MinorWitness>> {
    let n = host.n();
    match host.kind() {
        DescriptionKind::Circuits => {
            let pattern_circuits = pattern.rank_table().circuits();
            Ok(fixed_search(n, host.sets(), pattern.n(), &pattern_circuits))
        }
        DescriptionKind::Hyperplanes => {
            let cocircuits: Vec<SubsetMask> = host.sets().iter().map(|h| h.complement(n)).collect();
            let dual_pattern = pattern.dual();
            let pattern_circuits = dual_pattern.rank_table().circuits();
            let found = fixed_search(n, &cocircuits, pattern.n(), &pattern_circuits);
            // M* / X \ Y = (M / Y \ X)*, and the same bijection works for both.
            Ok(found.map(|w| MinorWitness {
                x: w.y,
                y: w.x,
                iso: w.iso,
            }))
        }
        other => Err(Error::input(format!(
            "fixed-minor detection takes a circuits or hyperplanes host, not {other}"
        ))),
    }
}

fn fixed_search(
    n: usize,
    host_circuits: &[SubsetMask],
    s: usize,
    pattern_circuits: &[SubsetMask],
) -> Option<MinorWitness> {
    if s > n {
        return None;
    }
    let full = SubsetMask::full(n);
    if pattern_circuits.is_empty() {
        let basis = greedy_basis(full, |a| !host_circuits.iter().any(|c| c.is_subset_of(a)));
        if basis.len() < s {
            return None;
        }
        let kept: SubsetMask = basis.iter().take(s).collect();
        return Some(MinorWitness {
            x: SubsetMask::EMPTY,
            y: full - kept,
            iso: (0..s).collect(),
        });
    }

    let target_sizes = sorted_sizes(pattern_circuits);
    let unions = unions_up_to(host_circuits, pattern_circuits.len());
    for a in k_subsets(n, s) {
        let mut tried = HashSet::new();
        for &u in &unions {
            let x = u - a;
            if !tried.insert(x) {
                continue;
            }
            let y = full - a - x;
            let (circuits, _) = circuit_minor(host_circuits, n, x, y);
            if circuits.len() != pattern_circuits.len() || sorted_sizes(&circuits) != target_sizes {
                continue;
            }
            if let Some(iso) = isomorphic_circuits(s, &circuits, pattern_circuits) {
                return Some(MinorWitness { x, y, iso });
            }
        }
    }
    None
}

/// Minor rank table `r(A ∪ x) - r(x)` on the kept elements, re-indexed.
fn minor_table(host: &RankTable, x: SubsetMask, kept: SubsetMask) -> RankTable {
    let lift: Vec<usize> = kept.iter().collect();
    let rx = host.rank(x);
    let s = lift.len();
    let ranks = (0u32..1 << s)
        .map(|bits| {
            let a: SubsetMask = SubsetMask::from_bits(bits).iter().map(|i| lift[i]).collect();
            (host.rank(a | x) - rx) as u8
        })
        .collect();
    RankTable::from_vec(s, ranks)
}

/// Tries every kept set `A` of the pattern's size and every `X ⊆ E - A`,
/// with `Y = E - A - X`, comparing rank tables up to isomorphism.
pub fn detect_minor_exhaustive(host: &MatroidView, pattern: &MatroidView) -> Result<Option<MinorWitness>> {
    let n = host.n();
    let s = pattern.n();
    if s > n {
        return Ok(None);
    }
    let host_table = host.rank_table();
    let pattern_table = pattern.rank_table();
    let pattern_circuits = pattern_table.circuits();
    let target_sizes = sorted_sizes(&pattern_circuits);
    let full = SubsetMask::full(n);
    for a in k_subsets(n, s) {
        for x in (full - a).submasks() {
            if host_table.rank(a | x) - host_table.rank(x) != pattern.rank() {
                continue;
            }
            let table = minor_table(host_table, x, a);
            let circuits = table.circuits();
            if sorted_sizes(&circuits) != target_sizes {
                continue;
            }
            if let Some(iso) = isomorphic_circuits(s, &circuits, &pattern_circuits) {
                return Ok(Some(MinorWitness {
                    x,
                    y: full - a - x,
                    iso,
                }));
            }
        }
    }
    Ok(None)
}

/// Checks a witness against the rank functions of host and pattern.
pub fn verify_witness(host: &MatroidView, pattern: &MatroidView, w: &MinorWitness) -> bool {
    let n = host.n();
    let s = pattern.n();
    if !w.x.is_disjoint(w.y) || !w.x.fits(n) || !w.y.fits(n) {
        return false;
    }
    let kept = w.kept(n);
    if kept.len() != s || w.iso.len() != s {
        return false;
    }
    let mut seen = vec![false; s];
    if w.iso.iter().any(|&f| f >= s || std::mem::replace(&mut seen[f], true)) {
        return false;
    }
    let table = minor_table(host.rank_table(), w.x, kept);
    table.subsets().all(|a| table.rank(a) == pattern.rk(a.remap(&w.iso)))
}
