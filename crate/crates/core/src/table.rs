//! Fully materialized rank functions.

use crate::mask::SubsetMask;

/// The rank of every subset of a ground set of size `n`, indexed by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    n: usize,
    ranks: Vec<u8>,
}

impl RankTable {
    /// `ranks.len()` must be `2^n`.
    pub fn from_vec(n: usize, ranks: Vec<u8>) -> Self {
        assert_eq!(ranks.len(), 1usize << n);
        RankTable { n, ranks }
    }

    /// Builds the table from an independence test, one query per subset.
    ///
    /// For `A` with largest element `e`, the greedy basis of `A` (scanning in
    /// increasing order) is the greedy basis of `A - e`, plus `e` when that
    /// stays independent.
    pub fn from_independence(n: usize, mut indep: impl FnMut(SubsetMask) -> bool) -> Self {
        let size = 1usize << n;
        let mut ranks = vec![0u8; size];
        let mut basis = vec![0u32; size];
        for a in 1..size {
            let top = usize::BITS - 1 - a.leading_zeros();
            let rest = a & !(1 << top);
            let candidate = basis[rest] | (1 << top);
            if indep(SubsetMask::from_bits(candidate)) {
                basis[a] = candidate;
                ranks[a] = ranks[rest] + 1;
            } else {
                basis[a] = basis[rest];
                ranks[a] = ranks[rest];
            }
        }
        RankTable { n, ranks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.ranks
    }

    #[inline]
    pub fn rank(&self, a: SubsetMask) -> usize {
        self.ranks[a.index()] as usize
    }

    pub fn full_rank(&self) -> usize {
        self.rank(SubsetMask::full(self.n))
    }

    pub fn subsets(&self) -> impl Iterator<Item = SubsetMask> {
        (0..self.ranks.len() as u64).map(|b| SubsetMask::from_bits(b as u32))
    }

    #[inline]
    pub fn is_independent(&self, a: SubsetMask) -> bool {
        self.rank(a) == a.len()
    }

    pub fn closure(&self, a: SubsetMask) -> SubsetMask {
        let ra = self.rank(a);
        (0..self.n)
            .filter(|&e| !a.contains(e))
            .filter(|&e| self.rank(a.with(e)) == ra)
            .fold(a, |acc, e| acc.with(e))
    }

    pub fn is_flat(&self, a: SubsetMask) -> bool {
        let ra = self.rank(a);
        (0..self.n).all(|e| a.contains(e) || self.rank(a.with(e)) > ra)
    }

    pub fn is_circuit(&self, a: SubsetMask) -> bool {
        if a.is_empty() {
            return false;
        }
        let k = a.len() - 1;
        self.rank(a) == k && a.iter().all(|e| self.rank(a.without(e)) == k)
    }

    pub fn is_hyperplane(&self, a: SubsetMask) -> bool {
        let r = self.full_rank();
        r > 0 && self.rank(a) == r - 1 && self.is_flat(a)
    }

    /// A flat with no coloops in its restriction, i.e. a union of circuits.
    pub fn is_cyclic_flat(&self, a: SubsetMask) -> bool {
        let ra = self.rank(a);
        self.is_flat(a) && a.iter().all(|e| self.rank(a.without(e)) == ra)
    }

    pub fn circuits(&self) -> Vec<SubsetMask> {
        self.subsets().filter(|&a| self.is_circuit(a)).collect()
    }

    pub fn bases_count(&self) -> usize {
        let r = self.full_rank();
        self.subsets()
            .filter(|&a| a.len() == r && self.rank(a) == r)
            .count()
    }

    pub fn cyclic_flats_count(&self) -> usize {
        self.subsets().filter(|&a| self.is_cyclic_flat(a)).count()
    }

    /// The table of the dual matroid, `r*(A) = |A| + r(E - A) - r(E)`.
    pub fn dual(&self) -> RankTable {
        let r = self.full_rank();
        let ranks = self
            .subsets()
            .map(|a| (a.len() + self.rank(a.complement(self.n)) - r) as u8)
            .collect();
        RankTable { n: self.n, ranks }
    }

    /// Checks the rank axioms: `r(∅) = 0`, unit increase, and
    /// submodularity. Returns the first failing witness pair, if any.
    pub fn axiom_violation(&self) -> Option<RankAxiomViolation> {
        if self.ranks[0] != 0 {
            return Some(RankAxiomViolation::EmptySetRank);
        }
        for a in self.subsets() {
            let ra = self.rank(a);
            if ra > a.len() {
                return Some(RankAxiomViolation::ExceedsSize(a));
            }
            for e in (0..self.n).filter(|&e| !a.contains(e)) {
                let rb = self.rank(a.with(e));
                if rb < ra || rb > ra + 1 {
                    return Some(RankAxiomViolation::UnitIncrease(a, e));
                }
            }
        }
        // With unit increase in place, submodularity is equivalent to the
        // local form r(A+e) + r(A+f) >= r(A+e+f) + r(A).
        for a in self.subsets() {
            for e in (0..self.n).filter(|&e| !a.contains(e)) {
                for f in (e + 1..self.n).filter(|&f| !a.contains(f)) {
                    if self.rank(a.with(e)) + self.rank(a.with(f))
                        < self.rank(a.with(e).with(f)) + self.rank(a)
                    {
                        return Some(RankAxiomViolation::Submodular(a.with(e), a.with(f)));
                    }
                }
            }
        }
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankAxiomViolation {
    EmptySetRank,
    ExceedsSize(SubsetMask),
    /// `r(A + e) - r(A)` is not 0 or 1.
    UnitIncrease(SubsetMask, usize),
    /// `r(A) + r(B) < r(A ∪ B) + r(A ∩ B)`.
    Submodular(SubsetMask, SubsetMask),
}
