//! Common independent sets of three matroids.

use crate::description::{Description, DescriptionKind};
use crate::error::{Error, Result};
use crate::mask::{k_subsets, SubsetMask};
use crate::view::MatroidView;

/// First `k`-subset (in Gosper order) independent in all three matroids.
pub fn intersect3_bruteforce(
    m1: &MatroidView,
    m2: &MatroidView,
    m3: &MatroidView,
    k: usize,
) -> Result<Option<SubsetMask>> {
    let n = m1.n();
    if m2.n() != n || m3.n() != n {
        return Err(Error::input(format!(
            "ground sets differ: {}, {}, {}",
            n,
            m2.n(),
            m3.n()
        )));
    }
    if k > n {
        return Ok(None);
    }
    Ok(k_subsets(n, k).find(|&a| m1.indep(a) && m2.indep(a) && m3.indep(a)))
}

/// Maximizes `|B_1 ∩ B_2 ∩ B_3|` over all triples of bases. A triple
/// intersection is independent in all three matroids and every common
/// independent set lies in one, so a common independent `k`-set exists iff
/// the maximum is at least `k`. Returns the `k` smallest elements of the
/// first maximizing intersection.
pub fn intersect3_bases(
    d1: &Description,
    d2: &Description,
    d3: &Description,
    k: usize,
) -> Result<Option<SubsetMask>> {
    for d in [d1, d2, d3] {
        if d.kind() != DescriptionKind::Bases {
            return Err(Error::input(format!("expected bases, got {}", d.kind())));
        }
        if d.is_empty() {
            return Err(Error::Decode("no bases listed".into()));
        }
    }
    if d2.n() != d1.n() || d3.n() != d1.n() {
        return Err(Error::input("ground sets differ"));
    }
    let mut best: Option<SubsetMask> = None;
    for &b1 in d1.sets() {
        for &b2 in d2.sets() {
            let pair = b1 & b2;
            if best.is_some_and(|m| pair.len() <= m.len()) {
                continue;
            }
            for &b3 in d3.sets() {
                let triple = pair & b3;
                if best.is_none_or(|m| triple.len() > m.len()) {
                    best = Some(triple);
                }
            }
        }
    }
    let best = best.expect("every list is nonempty");
    Ok((best.len() >= k).then(|| best.iter().take(k).collect()))
}
