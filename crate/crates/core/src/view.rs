//! Rank, independence and closure queries over any description.
//!
//! A [`MatroidView`] wraps one of the ten description kinds (or a derived
//! construction such as a dual, minor or truncation) and answers queries
//! according to a fixed decoding rule per kind:
//!
//! | kind | independence / rank rule |
//! |------|--------------------------|
//! | rank | table lookup |
//! | independent sets | membership |
//! | spanning sets | contained in a minimal spanning set |
//! | bases | contained in a basis |
//! | flats | rank is the height of `cl(A)` in the flat lattice |
//! | circuits | contains no circuit |
//! | hyperplanes | complements are the circuits of the dual |
//! | non-spanning circuits | `|A| <= r` and contains no listed circuit |
//! | dependent hyperplanes | complements are the non-spanning circuits of the dual |
//! | cyclic flats | `r(A) = min_Z r(Z) + |A - Z|` |
//!
//! Views are immutable and cheap to clone; the materialized rank table is
//! computed at most once and shared between clones.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::description::{Description, DescriptionKind};
use crate::error::{Error, Result};
use crate::mask::{check_capacity, GroundSet, SubsetMask};
use crate::table::RankTable;

/// A matroid given by an independence test.
pub trait IndependenceOracle: Send + Sync {
    fn ground_size(&self) -> usize;

    fn is_independent(&self, a: SubsetMask) -> bool;

    fn rank(&self, a: SubsetMask) -> usize {
        greedy_basis(a, |b| self.is_independent(b)).len()
    }

    fn name(&self) -> String {
        "oracle".to_string()
    }
}

/// Greedy basis of `a`, scanning elements in increasing order.
pub fn greedy_basis(a: SubsetMask, mut indep: impl FnMut(SubsetMask) -> bool) -> SubsetMask {
    let mut basis = SubsetMask::EMPTY;
    for e in a.iter() {
        let candidate = basis.with(e);
        if indep(candidate) {
            basis = candidate;
        }
    }
    basis
}

#[derive(Clone)]
pub(crate) struct FlatLattice {
    flats: Vec<SubsetMask>,
    height: HashMap<SubsetMask, usize>,
}

impl FlatLattice {
    fn new(n: usize, flats: &[SubsetMask]) -> Result<Self> {
        let full = SubsetMask::full(n);
        if !flats.contains(&full) {
            return Err(Error::Decode("flats list lacks the ground set".into()));
        }
        let listed: HashSet<SubsetMask> = flats.iter().copied().collect();
        for (i, &f) in flats.iter().enumerate() {
            for &g in &flats[i + 1..] {
                if !listed.contains(&(f & g)) {
                    return Err(Error::Decode(format!(
                        "flats {} and {} meet in an unlisted set",
                        f.to_bitstring(n),
                        g.to_bitstring(n)
                    )));
                }
            }
        }
        // Flats arrive in canonical order, so every proper subflat of `f`
        // has already been assigned a height.
        let mut height = HashMap::with_capacity(flats.len());
        for &f in flats {
            let h = flats
                .iter()
                .filter(|g| g.is_proper_subset_of(f))
                .filter_map(|g| height.get(g).map(|h| h + 1))
                .max()
                .unwrap_or(0);
            height.insert(f, h);
        }
        Ok(FlatLattice {
            flats: flats.to_vec(),
            height,
        })
    }

    fn closure(&self, a: SubsetMask) -> SubsetMask {
        self.flats
            .iter()
            .filter(|f| a.is_subset_of(**f))
            .fold(!SubsetMask::EMPTY, |acc, &f| acc & f)
    }

    fn rank(&self, a: SubsetMask) -> usize {
        self.height[&self.closure(a)]
    }
}

#[derive(Clone)]
pub(crate) enum Repr {
    Uniform(usize),
    Table(RankTable),
    Independent(HashSet<SubsetMask>),
    Bases(Vec<SubsetMask>),
    Flats(FlatLattice),
    Circuits(Vec<SubsetMask>),
    NonSpanning {
        circuits: Vec<SubsetMask>,
        rank: usize,
    },
    CyclicFlats(Vec<(SubsetMask, usize)>),
    Dual(MatroidView),
    Minor {
        inner: MatroidView,
        contract: SubsetMask,
        contract_basis: SubsetMask,
        contract_rank: usize,
        lift: Vec<usize>,
    },
    Truncation {
        inner: MatroidView,
        rank: usize,
    },
    DirectSum(MatroidView, MatroidView),
    Blowup {
        inner: MatroidView,
        copies: usize,
    },
    AddParallel {
        inner: MatroidView,
        twin: usize,
    },
    Relabel {
        inner: MatroidView,
        to_inner: Vec<usize>,
    },
    Oracle(Arc<dyn IndependenceOracle>),
}

impl Repr {
    fn label(&self) -> String {
        match self {
            Repr::Uniform(r) => format!("uniform(r={r})"),
            Repr::Table(_) => "rank table".into(),
            Repr::Independent(_) => "independent sets".into(),
            Repr::Bases(_) => "bases".into(),
            Repr::Flats(_) => "flats".into(),
            Repr::Circuits(_) => "circuits".into(),
            Repr::NonSpanning { .. } => "non-spanning circuits".into(),
            Repr::CyclicFlats(_) => "cyclic flats".into(),
            Repr::Dual(_) => "dual".into(),
            Repr::Minor { .. } => "minor".into(),
            Repr::Truncation { rank, .. } => format!("truncation(r={rank})"),
            Repr::DirectSum(..) => "direct sum".into(),
            Repr::Blowup { copies, .. } => format!("parallel blow-up(m={copies})"),
            Repr::AddParallel { .. } => "parallel extension".into(),
            Repr::Relabel { .. } => "relabeling".into(),
            Repr::Oracle(o) => o.name(),
        }
    }
}

struct ViewInner {
    n: usize,
    rank: usize,
    repr: Repr,
    source: Option<Description>,
    origin: Option<Vec<usize>>,
    table: OnceLock<RankTable>,
}

/// A matroid together with its decoding rule.
#[derive(Clone)]
pub struct MatroidView(Arc<ViewInner>);

impl fmt::Debug for MatroidView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatroidView")
            .field("n", &self.0.n)
            .field("rank", &self.0.rank)
            .field("repr", &self.0.repr.label())
            .finish()
    }
}

impl MatroidView {
    pub(crate) fn build(
        n: usize,
        repr: Repr,
        source: Option<Description>,
        origin: Option<Vec<usize>>,
    ) -> Self {
        let mut view = MatroidView(Arc::new(ViewInner {
            n,
            rank: 0,
            repr,
            source,
            origin,
            table: OnceLock::new(),
        }));
        let rank = view.rk(SubsetMask::full(n));
        Arc::get_mut(&mut view.0).expect("freshly built").rank = rank;
        view
    }

    pub(crate) fn repr(&self) -> &Repr {
        &self.0.repr
    }

    /// Decodes a description. Fails when the description cannot be turned
    /// into a rank oracle at all (an incomplete rank table, flats without the
    /// ground set, an empty bases list, ...).
    pub fn from_description(desc: &Description) -> Result<Self> {
        let n = desc.n();
        check_capacity("description", n)?;
        let sets = desc.sets();
        let repr = match desc.kind() {
            DescriptionKind::Rank => {
                if sets.len() != 1usize << n {
                    return Err(Error::Decode(format!(
                        "rank table lists {} of {} subsets",
                        sets.len(),
                        1usize << n
                    )));
                }
                let mut ranks = vec![0u8; 1 << n];
                for (m, r) in desc.entries() {
                    ranks[m.index()] = r.expect("rank kind is annotated") as u8;
                }
                Repr::Table(RankTable::from_vec(n, ranks))
            }
            DescriptionKind::IndependentSets => Repr::Independent(desc.set_lookup()),
            DescriptionKind::SpanningSets => {
                if sets.is_empty() {
                    return Err(Error::Decode("no spanning sets listed".into()));
                }
                let lookup = desc.set_lookup();
                let bases = sets
                    .iter()
                    .copied()
                    .filter(|s| s.iter().all(|e| !lookup.contains(&s.without(e))))
                    .collect();
                Repr::Bases(bases)
            }
            DescriptionKind::Bases => {
                if sets.is_empty() {
                    return Err(Error::Decode("no bases listed".into()));
                }
                Repr::Bases(sets.to_vec())
            }
            DescriptionKind::Flats => Repr::Flats(FlatLattice::new(n, sets)?),
            DescriptionKind::Circuits => Repr::Circuits(sets.to_vec()),
            DescriptionKind::Hyperplanes => {
                let cocircuits = sets.iter().map(|h| h.complement(n));
                let dual = Description::from_sets(DescriptionKind::Circuits, n, None, cocircuits)?;
                Repr::Dual(MatroidView::from_description(&dual)?)
            }
            DescriptionKind::NonSpanningCircuits => Repr::NonSpanning {
                circuits: sets.to_vec(),
                rank: desc.rank().expect("nsc carries r"),
            },
            DescriptionKind::DependentHyperplanes => {
                let r = desc.rank().expect("dephyp carries r");
                let dual = Description::from_sets(
                    DescriptionKind::NonSpanningCircuits,
                    n,
                    Some(n - r),
                    sets.iter().map(|h| h.complement(n)),
                )?;
                Repr::Dual(MatroidView::from_description(&dual)?)
            }
            DescriptionKind::CyclicFlats => {
                if sets.is_empty() {
                    return Err(Error::Decode("no cyclic flats listed".into()));
                }
                Repr::CyclicFlats(
                    desc.entries()
                        .map(|(m, r)| (m, r.expect("cyclic flats are annotated")))
                        .collect(),
                )
            }
        };
        Ok(MatroidView::build(n, repr, Some(desc.clone()), None))
    }

    /// Wraps an arbitrary independence oracle.
    pub fn from_oracle(oracle: Arc<dyn IndependenceOracle>) -> Result<Self> {
        let n = oracle.ground_size();
        check_capacity("oracle", n)?;
        Ok(MatroidView::build(n, Repr::Oracle(oracle), None, None))
    }

    /// A view backed by an explicit rank table.
    pub fn from_rank_table(table: RankTable) -> Result<Self> {
        check_capacity("rank table", table.n())?;
        Ok(MatroidView::build(table.n(), Repr::Table(table), None, None))
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::new(self.0.n).expect("views respect the capacity")
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.0.n)
    }

    /// `r(M)`.
    pub fn rank(&self) -> usize {
        self.0.rank
    }

    /// The description this view was decoded from, if any.
    pub fn source(&self) -> Option<&Description> {
        self.0.source.as_ref()
    }

    pub fn kind(&self) -> Option<DescriptionKind> {
        self.source().map(Description::kind)
    }

    /// A short label for the decoding rule in use.
    pub fn label(&self) -> String {
        self.0.repr.label()
    }

    /// Maps an element of this view back to the ground set it was derived
    /// from by minors (identity when no minor was taken).
    pub fn original_index(&self, e: usize) -> usize {
        self.0.origin.as_ref().map_or(e, |o| o[e])
    }

    /// The new-to-original index map, when this view is a minor.
    pub fn origin(&self) -> Option<&[usize]> {
        self.0.origin.as_deref()
    }

    pub(crate) fn with_origin(self, origin: Option<Vec<usize>>) -> Self {
        let inner = Arc::try_unwrap(self.0).unwrap_or_else(|arc| ViewInner {
            n: arc.n,
            rank: arc.rank,
            repr: arc.repr.clone(),
            source: arc.source.clone(),
            origin: arc.origin.clone(),
            table: OnceLock::new(),
        });
        MatroidView(Arc::new(ViewInner { origin, ..inner }))
    }

    /// Independence test. `a` must lie within the ground set.
    pub fn indep(&self, a: SubsetMask) -> bool {
        debug_assert!(a.fits(self.0.n));
        if let Some(t) = self.0.table.get() {
            return t.is_independent(a);
        }
        match &self.0.repr {
            Repr::Uniform(r) => a.len() <= *r,
            Repr::Table(t) => t.is_independent(a),
            Repr::Independent(sets) => sets.contains(&a),
            Repr::Bases(bases) => bases.iter().any(|b| a.is_subset_of(*b)),
            Repr::Flats(lattice) => lattice.rank(a) == a.len(),
            Repr::Circuits(circuits) => !circuits.iter().any(|c| c.is_subset_of(a)),
            Repr::NonSpanning { circuits, rank } => {
                a.len() <= *rank && !circuits.iter().any(|c| c.is_subset_of(a))
            }
            Repr::CyclicFlats(_) => self.rk(a) == a.len(),
            Repr::Dual(inner) => inner.rk(a.complement(self.0.n)) == inner.rank(),
            Repr::Minor {
                inner,
                contract_basis,
                lift,
                ..
            } => inner.indep(a.remap(lift) | *contract_basis),
            Repr::Truncation { inner, rank } => a.len() <= *rank && inner.indep(a),
            Repr::DirectSum(x, y) => {
                let (lo, hi) = split(a, x.n());
                x.indep(lo) && y.indep(hi)
            }
            Repr::Blowup { inner, copies } => match touched_classes(a, *copies) {
                Some(classes) => inner.indep(classes),
                None => false,
            },
            Repr::AddParallel { inner, twin } => {
                let extra = inner.n();
                if a.contains(extra) && a.contains(*twin) {
                    false
                } else {
                    inner.indep(fold_twin(a, extra, *twin))
                }
            }
            Repr::Relabel { inner, to_inner } => inner.indep(a.remap(to_inner)),
            Repr::Oracle(o) => o.is_independent(a),
        }
    }

    /// Rank of `a`. `a` must lie within the ground set.
    pub fn rk(&self, a: SubsetMask) -> usize {
        debug_assert!(a.fits(self.0.n));
        if let Some(t) = self.0.table.get() {
            return t.rank(a);
        }
        match &self.0.repr {
            Repr::Uniform(r) => a.len().min(*r),
            Repr::Table(t) => t.rank(a),
            Repr::Flats(lattice) => lattice.rank(a),
            Repr::CyclicFlats(zs) => zs
                .iter()
                .map(|(z, rz)| rz + (a - *z).len())
                .min()
                .unwrap_or(0),
            Repr::Dual(inner) => a.len() + inner.rk(a.complement(self.0.n)) - inner.rank(),
            Repr::Minor {
                inner,
                contract,
                contract_rank,
                lift,
                ..
            } => inner.rk(a.remap(lift) | *contract) - contract_rank,
            Repr::Truncation { inner, rank } => inner.rk(a).min(*rank),
            Repr::DirectSum(x, y) => {
                let (lo, hi) = split(a, x.n());
                x.rk(lo) + y.rk(hi)
            }
            Repr::Blowup { inner, copies } => inner.rk(class_cover(a, *copies)),
            Repr::AddParallel { inner, twin } => inner.rk(fold_twin(a, inner.n(), *twin)),
            Repr::Relabel { inner, to_inner } => inner.rk(a.remap(to_inner)),
            Repr::Oracle(o) => o.rank(a),
            _ => self.greedy_basis(a).len(),
        }
    }

    /// Greedy basis of `a` in increasing element order.
    pub fn greedy_basis(&self, a: SubsetMask) -> SubsetMask {
        greedy_basis(a, |b| self.indep(b))
    }

    /// `cl(a)`: `a` plus every `e` for which `I + e` is dependent, `I` a
    /// greedy basis of `a`.
    pub fn cl(&self, a: SubsetMask) -> SubsetMask {
        let basis = self.greedy_basis(a);
        (0..self.0.n)
            .filter(|&e| !a.contains(e) && !self.indep(basis.with(e)))
            .fold(a, |acc, e| acc.with(e))
    }

    pub fn is_independent(&self, a: SubsetMask) -> Result<bool> {
        self.ground().check(a)?;
        Ok(self.indep(a))
    }

    pub fn rank_of(&self, a: SubsetMask) -> Result<usize> {
        self.ground().check(a)?;
        Ok(self.rk(a))
    }

    pub fn closure(&self, a: SubsetMask) -> Result<SubsetMask> {
        self.ground().check(a)?;
        Ok(self.cl(a))
    }

    pub fn is_loop(&self, e: usize) -> bool {
        !self.indep(SubsetMask::singleton(e))
    }

    /// The rank of every subset, computed once and cached.
    pub fn rank_table(&self) -> &RankTable {
        self.0.table.get_or_init(|| match &self.0.repr {
            Repr::Table(t) => t.clone(),
            _ => RankTable::from_independence(self.0.n, |a| self.indep(a)),
        })
    }

    /// An equivalent view answering every query from the rank table.
    pub fn materialized(&self) -> MatroidView {
        let table = self.rank_table().clone();
        MatroidView::build(self.0.n, Repr::Table(table), None, self.0.origin.clone())
    }

    /// Same ground set size and the same rank on every subset.
    pub fn same_matroid(&self, other: &MatroidView) -> bool {
        self.n() == other.n() && self.rank_table() == other.rank_table()
    }
}

#[inline]
fn split(a: SubsetMask, low: usize) -> (SubsetMask, SubsetMask) {
    (
        a & SubsetMask::full(low),
        SubsetMask::from_bits(a.bits().checked_shr(low as u32).unwrap_or(0)),
    )
}

#[inline]
fn fold_twin(a: SubsetMask, extra: usize, twin: usize) -> SubsetMask {
    if a.contains(extra) {
        a.without(extra).with(twin)
    } else {
        a
    }
}

fn class_cover(a: SubsetMask, copies: usize) -> SubsetMask {
    a.iter().map(|e| e / copies).collect()
}

/// The set of touched parallel classes, or `None` when two copies of one
/// class are present.
fn touched_classes(a: SubsetMask, copies: usize) -> Option<SubsetMask> {
    let mut classes = SubsetMask::EMPTY;
    for e in a.iter() {
        let c = e / copies;
        if classes.contains(c) {
            return None;
        }
        classes = classes.with(c);
    }
    Some(classes)
}
