//! Duals, minors, truncations, direct sums and parallel extensions.

use crate::description::{encode_from_oracle, Description, DescriptionKind};
use crate::error::{Error, Result};
use crate::mask::{check_capacity, SubsetMask};
use crate::view::{MatroidView, Repr};

/// The description of `M*` obtained by complementation, for every kind that
/// has a direct rule. Flats have none and yield `None`.
pub fn dual_description(desc: &Description) -> Option<Description> {
    use DescriptionKind::*;
    let n = desc.n();
    let complements = || desc.sets().iter().map(move |s| s.complement(n));
    let built = match desc.kind() {
        Rank => {
            let r = desc
                .entries()
                .find(|(s, _)| *s == SubsetMask::full(n))
                .and_then(|(_, r)| r)?;
            if desc.len() != 1usize << n {
                return None;
            }
            let ranks: std::collections::HashMap<SubsetMask, usize> =
                desc.entries().map(|(s, r)| (s, r.unwrap())).collect();
            Description::from_ranked(
                Rank,
                n,
                desc.sets()
                    .iter()
                    .map(|&a| (a, a.len() + ranks[&a.complement(n)] - r)),
            )
        }
        IndependentSets => Description::from_sets(SpanningSets, n, None, complements()),
        SpanningSets => Description::from_sets(IndependentSets, n, None, complements()),
        Bases => Description::from_sets(Bases, n, None, complements()),
        Circuits => Description::from_sets(Hyperplanes, n, None, complements()),
        Hyperplanes => Description::from_sets(Circuits, n, None, complements()),
        NonSpanningCircuits => Description::from_sets(
            DependentHyperplanes,
            n,
            desc.rank().map(|r| n - r),
            complements(),
        ),
        DependentHyperplanes => Description::from_sets(
            NonSpanningCircuits,
            n,
            desc.rank().map(|r| n - r),
            complements(),
        ),
        CyclicFlats => {
            let r = desc
                .entries()
                .map(|(z, rz)| rz.unwrap() + (SubsetMask::full(n) - z).len())
                .min()?;
            Description::from_ranked(
                CyclicFlats,
                n,
                desc.entries().map(|(z, rz)| {
                    let co = z.complement(n);
                    (co, co.len() + rz.unwrap() - r)
                }),
            )
        }
        Flats => return None,
    };
    built.ok()
}

/// Circuits of `M / x \ y` from the circuits of `M`, re-indexed onto
/// `E - x - y` in increasing order. Returns the circuits and the
/// new-to-old index map.
///
/// Deletion keeps the circuits avoiding `y`; contracting one element `e`
/// keeps the minimal nonempty members of `{C - e}`.
pub fn circuit_minor(
    circuits: &[SubsetMask],
    n: usize,
    x: SubsetMask,
    y: SubsetMask,
) -> (Vec<SubsetMask>, Vec<usize>) {
    let mut current: Vec<SubsetMask> = circuits
        .iter()
        .copied()
        .filter(|c| c.is_disjoint(y))
        .collect();
    for e in x.iter() {
        let mut shrunk: Vec<SubsetMask> = current
            .iter()
            .map(|c| c.without(e))
            .filter(|c| !c.is_empty())
            .collect();
        shrunk.sort_by_key(|c| (c.len(), c.bits()));
        shrunk.dedup();
        let mut minimal: Vec<SubsetMask> = Vec::with_capacity(shrunk.len());
        for c in shrunk {
            if !minimal.iter().any(|m| m.is_subset_of(c)) {
                minimal.push(c);
            }
        }
        current = minimal;
    }
    let lift: Vec<usize> = (0..n).filter(|&e| !x.contains(e) && !y.contains(e)).collect();
    let mut to_new = vec![usize::MAX; n];
    for (i, &e) in lift.iter().enumerate() {
        to_new[e] = i;
    }
    let out = current.iter().map(|c| c.remap(&to_new)).collect();
    (out, lift)
}

impl MatroidView {
    /// The dual matroid. Description-backed views are dualized by
    /// complementation rules (flats are re-encoded from the dual rank
    /// function); derived views get a rank-rule wrapper.
    pub fn dual(&self) -> MatroidView {
        if let Repr::Dual(inner) = self.repr() {
            if self.source().is_none() {
                return inner.clone();
            }
        }
        let wrapped = || {
            MatroidView::build(self.n(), Repr::Dual(self.clone()), None, self.origin().map(<[usize]>::to_vec))
        };
        match self.source() {
            Some(desc) => match dual_description(desc) {
                Some(d) => MatroidView::from_description(&d)
                    .expect("dual of a decodable description decodes")
                    .with_origin(self.origin().map(<[usize]>::to_vec)),
                None => {
                    let flats = encode_from_oracle(&wrapped(), DescriptionKind::Flats);
                    MatroidView::from_description(&flats)
                        .expect("oracle flats decode")
                        .with_origin(self.origin().map(<[usize]>::to_vec))
                }
            },
            None => wrapped(),
        }
    }

    /// `M / x \ y`, on `E - x - y` with surviving elements kept in order.
    /// Circuit-backed views are reduced with the circuit rules; everything
    /// else uses `r'(A) = r(A ∪ x) - r(x)`.
    pub fn minor(&self, x: SubsetMask, y: SubsetMask) -> Result<MatroidView> {
        let ground = self.ground();
        ground.check(x)?;
        ground.check(y)?;
        if !x.is_disjoint(y) {
            return Err(Error::input(format!(
                "contracted {x:?} and deleted {y:?} overlap"
            )));
        }
        let n = self.n();
        if let Some(desc) = self.source().filter(|d| d.kind() == DescriptionKind::Circuits) {
            let (circuits, lift) = circuit_minor(desc.sets(), n, x, y);
            let d = Description::from_sets(DescriptionKind::Circuits, lift.len(), None, circuits)?;
            let origin = lift.iter().map(|&e| self.original_index(e)).collect();
            return Ok(MatroidView::from_description(&d)?.with_origin(Some(origin)));
        }
        let lift: Vec<usize> = (0..n).filter(|&e| !x.contains(e) && !y.contains(e)).collect();
        let origin = lift.iter().map(|&e| self.original_index(e)).collect();
        let contract_basis = self.greedy_basis(x);
        Ok(MatroidView::build(
            lift.len(),
            Repr::Minor {
                inner: self.clone(),
                contract: x,
                contract_basis,
                contract_rank: contract_basis.len(),
                lift,
            },
            None,
            Some(origin),
        ))
    }

    /// Truncation to `target_rank`: independent sets of size at most
    /// `target_rank`.
    pub fn truncate(&self, target_rank: usize) -> Result<MatroidView> {
        if target_rank > self.rank() {
            return Err(Error::input(format!(
                "cannot truncate a rank-{} matroid to rank {target_rank}",
                self.rank()
            )));
        }
        if target_rank == self.rank() {
            return Ok(self.clone());
        }
        Ok(MatroidView::build(
            self.n(),
            Repr::Truncation {
                inner: self.clone(),
                rank: target_rank,
            },
            None,
            None,
        ))
    }

    /// `self ⊕ other`, with `other`'s elements shifted up by `self.n()`.
    pub fn direct_sum(&self, other: &MatroidView) -> Result<MatroidView> {
        check_capacity("direct sum", self.n() + other.n())?;
        Ok(MatroidView::build(
            self.n() + other.n(),
            Repr::DirectSum(self.clone(), other.clone()),
            None,
            None,
        ))
    }

    /// Replaces every element `e` by `copies` parallel elements
    /// `e*copies .. (e+1)*copies`.
    pub fn parallel_blowup(&self, copies: usize) -> Result<MatroidView> {
        if copies == 0 {
            return Err(Error::input("parallel classes need at least one element"));
        }
        check_capacity("parallel blow-up", self.n() * copies)?;
        if copies == 1 {
            return Ok(self.clone());
        }
        Ok(MatroidView::build(
            self.n() * copies,
            Repr::Blowup {
                inner: self.clone(),
                copies,
            },
            None,
            None,
        ))
    }

    /// Adds a new element `n` parallel to `e`.
    pub fn add_parallel(&self, e: usize) -> Result<MatroidView> {
        if e >= self.n() {
            return Err(Error::input(format!("element {e} not in ground set")));
        }
        if self.is_loop(e) {
            return Err(Error::input(format!("element {e} is a loop")));
        }
        check_capacity("parallel extension", self.n() + 1)?;
        Ok(MatroidView::build(
            self.n() + 1,
            Repr::AddParallel {
                inner: self.clone(),
                twin: e,
            },
            None,
            None,
        ))
    }

    /// Renames element `e` to `perm[e]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<MatroidView> {
        let n = self.n();
        let mut to_inner = vec![usize::MAX; n];
        if perm.len() != n {
            return Err(Error::input("permutation length differs from ground set"));
        }
        for (old, &new) in perm.iter().enumerate() {
            if new >= n || to_inner[new] != usize::MAX {
                return Err(Error::input("not a permutation"));
            }
            to_inner[new] = old;
        }
        Ok(MatroidView::build(
            n,
            Repr::Relabel {
                inner: self.clone(),
                to_inner,
            },
            None,
            None,
        ))
    }
}
