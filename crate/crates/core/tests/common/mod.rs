//! Brute-force reference computations shared by the integration tests.
//! Everything here starts from a plain list of independent sets and uses
//! only the textbook definitions.
#![allow(dead_code)]

use std::collections::HashSet;

use matroid_core::harness::{corpus, CorpusEntry};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use matroid_core::{MatroidView, SubsetMask};

pub fn all_subsets(n: usize) -> impl Iterator<Item = SubsetMask> {
    (0u32..1 << n).map(SubsetMask::from_bits)
}

/// A matroid held as its full list of independent sets.
pub struct Reference {
    pub n: usize,
    pub independent: HashSet<SubsetMask>,
}

impl Reference {
    pub fn of(view: &MatroidView) -> Self {
        let n = view.n();
        Reference {
            n,
            independent: all_subsets(n).filter(|&a| view.indep(a)).collect(),
        }
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    pub fn indep(&self, a: SubsetMask) -> bool {
        self.independent.contains(&a)
    }

    pub fn rank(&self, a: SubsetMask) -> usize {
        self.independent
            .iter()
            .filter(|i| i.is_subset_of(a))
            .map(|i| i.len())
            .max()
            .unwrap_or(0)
    }

    pub fn closure(&self, a: SubsetMask) -> SubsetMask {
        let r = self.rank(a);
        (0..self.n)
            .filter(|&e| a.contains(e) || self.rank(a.with(e)) == r)
            .collect()
    }

    pub fn bases(&self) -> Vec<SubsetMask> {
        let r = self.rank(self.full());
        let mut v: Vec<_> = self.independent.iter().copied().filter(|i| i.len() == r).collect();
        v.sort_by_key(|m| (m.len(), m.bits()));
        v
    }

    pub fn circuits(&self) -> Vec<SubsetMask> {
        let mut v: Vec<_> = all_subsets(self.n)
            .filter(|&c| !self.indep(c) && c.iter().all(|e| self.indep(c.without(e))))
            .collect();
        v.sort_by_key(|m| (m.len(), m.bits()));
        v
    }

    pub fn flats(&self) -> Vec<SubsetMask> {
        all_subsets(self.n).filter(|&f| self.closure(f) == f).collect()
    }

    /// Flats that are unions of circuits.
    pub fn cyclic_flats(&self) -> Vec<SubsetMask> {
        let circuits = self.circuits();
        self.flats()
            .into_iter()
            .filter(|&f| {
                let covered = circuits
                    .iter()
                    .filter(|c| c.is_subset_of(f))
                    .fold(SubsetMask::EMPTY, |acc, &c| acc | c);
                covered == f
            })
            .collect()
    }
}

/// Corpus entries with at most `max_n` elements.
pub fn small_corpus(max_n: usize) -> Vec<CorpusEntry> {
    corpus().into_iter().filter(|e| e.view.n() <= max_n).collect()
}

pub fn bits(s: &str) -> SubsetMask {
    SubsetMask::parse_bitstring(s).unwrap()
}

/// A permutation of `0..n` drawn from a seeded generator.
pub fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut StdRng::seed_from_u64(seed));
    perm
}
