//! Ground sets and their subsets as characteristic vectors.
//!
//! Every subset of a ground set `{0, .., n-1}` is a [`SubsetMask`]: bit `j`
//! set means element `j` is present. The width is fixed at 32 bits and ground
//! sets are capped at [`MAX_N`] elements so that `2^n` tables stay addressable.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Hard upper bound on the ground-set size.
pub const MAX_N: usize = 24;

/// The effective capacity: [`MAX_N`], lowered by `MATROID_MAX_N` when that
/// variable holds a smaller number. It can never be raised.
pub fn max_n() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("MATROID_MAX_N")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map_or(MAX_N, |v| v.min(MAX_N))
    })
}

/// Fails with a capacity error when `needed` exceeds [`max_n`].
pub fn check_capacity(what: &str, needed: usize) -> Result<()> {
    let limit = max_n();
    if needed > limit {
        return Err(Error::Capacity {
            what: what.to_string(),
            needed,
            limit,
        });
    }
    Ok(())
}

/// Characteristic vector of a subset of a ground set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The whole ground set of size `n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 32);
        if n >= 32 {
            SubsetMask(u32::MAX)
        } else {
            SubsetMask((1u32 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(e: usize) -> Self {
        SubsetMask(1 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(SubsetMask::EMPTY, |m, e| m.with(e))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < 32 && self.0 & (1 << e) != 0
    }

    #[inline]
    pub fn with(self, e: usize) -> Self {
        SubsetMask(self.0 | (1 << e))
    }

    #[inline]
    pub fn without(self, e: usize) -> Self {
        SubsetMask(self.0 & !(1 << e))
    }

    #[inline]
    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset_of(self, other: SubsetMask) -> bool {
        self != other && self.is_subset_of(other)
    }

    #[inline]
    pub fn is_disjoint(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement relative to a ground set of size `n`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & SubsetMask::full(n).0)
    }

    /// True when no bit at position `>= n` is set.
    #[inline]
    pub fn fits(self, n: usize) -> bool {
        self.is_subset_of(SubsetMask::full(n))
    }

    #[inline]
    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All submasks of `self`, in increasing numeric order, starting with the
    /// empty set.
    pub fn submasks(self) -> Submasks {
        Submasks {
            set: self.0,
            next: Some(0),
        }
    }

    /// Maps each element `e` to `map[e]`.
    pub fn remap(self, map: &[usize]) -> SubsetMask {
        self.iter().fold(SubsetMask::EMPTY, |m, e| m.with(map[e]))
    }

    /// Leftmost character is element 0.
    pub fn to_bitstring(self, n: usize) -> String {
        (0..n)
            .map(|e| if self.contains(e) { '1' } else { '0' })
            .collect()
    }

    pub fn parse_bitstring(s: &str) -> Option<SubsetMask> {
        if s.len() > 32 {
            return None;
        }
        let mut m = SubsetMask::EMPTY;
        for (e, c) in s.chars().enumerate() {
            match c {
                '1' => m = m.with(e),
                '0' => {}
                _ => return None,
            }
        }
        Some(m)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        SubsetMask(self.0 & rhs.0)
    }
}

impl Sub for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        SubsetMask(self.0 & !rhs.0)
    }
}

/// Unbounded complement; prefer [`SubsetMask::complement`].
impl Not for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn not(self) -> Self {
        SubsetMask(!self.0)
    }
}

impl FromIterator<usize> for SubsetMask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        SubsetMask::from_elements(iter)
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

/// Carry-rippler enumeration of the submasks of a fixed set.
pub struct Submasks {
    set: u32,
    next: Option<u32>,
}

impl Iterator for Submasks {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.set) & self.set;
        self.next = (succ != 0).then_some(succ);
        Some(SubsetMask(cur))
    }
}

/// All `k`-element subsets of `{0, .., n-1}` in increasing numeric order
/// (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    let next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some((1u64 << k) - 1)
    };
    KSubsets {
        limit: 1u64 << n,
        next,
    }
}

pub struct KSubsets {
    limit: u64,
    next: Option<u64>,
}

impl Iterator for KSubsets {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        if cur >= self.limit && cur != 0 {
            self.next = None;
            return None;
        }
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let succ = (((r ^ cur) >> 2) / c) | r;
            (succ < self.limit).then_some(succ)
        };
        Some(SubsetMask(cur as u32))
    }
}

/// A ground set `{0, .., n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        check_capacity("ground set", n)?;
        Ok(GroundSet { n })
    }

    pub fn len(self) -> usize {
        self.n
    }

    pub fn is_empty(self) -> bool {
        self.n == 0
    }

    pub fn full(self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    /// Rejects masks with bits at positions `>= n`.
    pub fn check(self, a: SubsetMask) -> Result<()> {
        if a.fits(self.n) {
            Ok(())
        } else {
            Err(Error::input(format!(
                "mask {a:?} is wider than the ground set of size {}",
                self.n
            )))
        }
    }

    /// All `2^n` subsets in increasing numeric order.
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        (0..(1u64 << self.n)).map(|b| SubsetMask(b as u32))
    }

    pub fn k_subsets(self, k: usize) -> KSubsets {
        k_subsets(self.n, k)
    }
}

/// Canonical order on listed sets: by cardinality, then numeric value.
#[inline]
pub fn canonical_key(m: SubsetMask) -> (u32, u32) {
    (m.bits().count_ones(), m.bits())
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
