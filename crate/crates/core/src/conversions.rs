//! Conversions between description kinds.
//!
//! The kinds are partially ordered by polynomial convertibility; the order is
//! generated by twelve covering edges, each with a direct algorithm. Pairs
//! with no path in the order fall back to decoding the description and
//! re-encoding it by exhaustive subset classification.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::description::{encode_from_oracle, Description, DescriptionKind};
use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::view::{greedy_basis, MatroidView};

use DescriptionKind::*;

/// The covering edges of the input-type order, in declaration order.
pub const EDGES: [(DescriptionKind, DescriptionKind); 12] = [
    (Rank, SpanningSets),
    (Rank, IndependentSets),
    (SpanningSets, Bases),
    (IndependentSets, Bases),
    (IndependentSets, Flats),
    (Bases, Circuits),
    (Bases, CyclicFlats),
    (Bases, Hyperplanes),
    (Flats, CyclicFlats),
    (Flats, Hyperplanes),
    (Circuits, NonSpanningCircuits),
    (Hyperplanes, DependentHyperplanes),
];

/// The partial order on description kinds given by its Hasse diagram.
pub struct InputTypeOrder;

impl InputTypeOrder {
    pub fn edges() -> &'static [(DescriptionKind, DescriptionKind)] {
        &EDGES
    }

    pub fn is_edge(from: DescriptionKind, to: DescriptionKind) -> bool {
        EDGES.contains(&(from, to))
    }

    /// `from ≤ to`: a chain of covering edges leads from `from` to `to`.
    pub fn reachable(from: DescriptionKind, to: DescriptionKind) -> bool {
        shortest_path(from, to).is_some()
    }
}

fn shortest_path(
    from: DescriptionKind,
    to: DescriptionKind,
) -> Option<Vec<(DescriptionKind, DescriptionKind)>> {
    let mut parent: Vec<Option<DescriptionKind>> = vec![None; DescriptionKind::ALL.len()];
    let mut seen = HashSet::from([from]);
    let mut queue = VecDeque::from([from]);
    while let Some(k) = queue.pop_front() {
        if k == to {
            let mut path = Vec::new();
            let mut cur = to;
            while cur != from {
                let p = parent[cur as usize].expect("visited kinds have parents");
                path.push((p, cur));
                cur = p;
            }
            path.reverse();
            return Some(path);
        }
        for &(a, b) in &EDGES {
            if a == k && seen.insert(b) {
                parent[b as usize] = Some(a);
                queue.push_back(b);
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlanStep {
    Edge(DescriptionKind, DescriptionKind),
    /// Decode to a rank oracle, then classify all `2^n` subsets.
    Exhaustive(DescriptionKind, DescriptionKind),
}

impl PlanStep {
    pub fn target(self) -> DescriptionKind {
        match self {
            PlanStep::Edge(_, b) | PlanStep::Exhaustive(_, b) => b,
        }
    }
}

/// A route from one kind to another. An empty step list is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConversionPlan {
    pub from: DescriptionKind,
    pub to: DescriptionKind,
    pub steps: Vec<PlanStep>,
}

impl ConversionPlan {
    pub fn is_exhaustive(&self) -> bool {
        self.steps.iter().any(|s| matches!(s, PlanStep::Exhaustive(..)))
    }

    pub fn exhaustive(from: DescriptionKind, to: DescriptionKind) -> Self {
        ConversionPlan {
            from,
            to,
            steps: vec![PlanStep::Exhaustive(from, to)],
        }
    }
}

impl fmt::Display for ConversionPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "{} (identity)", self.from);
        }
        write!(f, "{}", self.from)?;
        for step in &self.steps {
            match step {
                PlanStep::Edge(_, b) => write!(f, " -> {b}")?,
                PlanStep::Exhaustive(_, b) => write!(f, " => {b} (exhaustive)")?,
            }
        }
        Ok(())
    }
}

/// Shortest path in the order (ties broken by edge declaration order), or
/// the exhaustive fallback when `to` is not above `from`.
pub fn plan(from: DescriptionKind, to: DescriptionKind) -> ConversionPlan {
    match shortest_path(from, to) {
        Some(path) => ConversionPlan {
            from,
            to,
            steps: path.into_iter().map(|(a, b)| PlanStep::Edge(a, b)).collect(),
        },
        None => ConversionPlan::exhaustive(from, to),
    }
}

/// Result of [`convert`].
#[derive(Clone, Debug)]
pub struct Conversion {
    pub output: Description,
    pub plan: ConversionPlan,
}

impl Conversion {
    pub fn used_exhaustive(&self) -> bool {
        self.plan.is_exhaustive()
    }
}

pub fn convert(desc: &Description, to: DescriptionKind) -> Result<Conversion> {
    convert_with(desc, to, false)
}

/// Runs the plan for `desc.kind() → to`, or the exhaustive route when
/// `force_exhaustive` is set.
pub fn convert_with(
    desc: &Description,
    to: DescriptionKind,
    force_exhaustive: bool,
) -> Result<Conversion> {
    let from = desc.kind();
    let plan = if force_exhaustive {
        ConversionPlan::exhaustive(from, to)
    } else {
        plan(from, to)
    };
    let mut current = desc.clone();
    for step in &plan.steps {
        current = match *step {
            PlanStep::Edge(_, b) => convert_edge(&current, b)?,
            PlanStep::Exhaustive(_, b) => convert_exhaustive(&current, b)?,
        };
    }
    Ok(Conversion {
        output: current,
        plan,
    })
}

pub fn convert_exhaustive(desc: &Description, to: DescriptionKind) -> Result<Description> {
    let view = MatroidView::from_description(desc)?;
    Ok(encode_from_oracle(&view, to))
}

/// One covering edge of the order.
pub fn convert_edge(desc: &Description, target: DescriptionKind) -> Result<Description> {
    let n = desc.n();
    match (desc.kind(), target) {
        (Rank, SpanningSets) => {
            let ranks = complete_rank_table(desc)?;
            let r = ranks[SubsetMask::full(n).index()];
            Description::from_sets(
                SpanningSets,
                n,
                None,
                desc.sets().iter().copied().filter(|a| ranks[a.index()] == r),
            )
        }
        (Rank, IndependentSets) => {
            let ranks = complete_rank_table(desc)?;
            Description::from_sets(
                IndependentSets,
                n,
                None,
                desc.sets().iter().copied().filter(|a| ranks[a.index()] == a.len()),
            )
        }
        (SpanningSets, Bases) => {
            let listed = desc.set_lookup();
            Description::from_sets(
                Bases,
                n,
                None,
                desc.sets()
                    .iter()
                    .copied()
                    .filter(|s| s.iter().all(|e| !listed.contains(&s.without(e)))),
            )
        }
        (IndependentSets, Bases) => {
            let listed = desc.set_lookup();
            Description::from_sets(
                Bases,
                n,
                None,
                desc.sets().iter().copied().filter(|i| {
                    i.complement(n).iter().all(|e| !listed.contains(&i.with(e)))
                }),
            )
        }
        (IndependentSets, Flats) => {
            let listed = desc.set_lookup();
            let flats: HashSet<SubsetMask> = desc
                .sets()
                .iter()
                .map(|&i| {
                    i.complement(n)
                        .iter()
                        .filter(|&e| !listed.contains(&i.with(e)))
                        .fold(i, |acc, e| acc.with(e))
                })
                .collect();
            Description::from_sets(Flats, n, None, flats)
        }
        (Bases, Circuits) => {
            let bases = require_bases(desc)?;
            Description::from_sets(Circuits, n, None, fundamental_circuits(n, &bases))
        }
        (Bases, Hyperplanes) => {
            let bases = require_bases(desc)?;
            let dual_bases: Vec<SubsetMask> = bases.iter().map(|b| b.complement(n)).collect();
            let cocircuits = fundamental_circuits(n, &dual_bases);
            Description::from_sets(
                Hyperplanes,
                n,
                None,
                cocircuits.into_iter().map(|c| c.complement(n)),
            )
        }
        (Bases, CyclicFlats) => cyclic_flats_from_bases(desc).map(|(d, _)| d),
        (Flats, Hyperplanes) => {
            let full = SubsetMask::full(n);
            let flats = desc.sets();
            if !flats.contains(&full) {
                return Err(Error::Decode("flats list lacks the ground set".into()));
            }
            Description::from_sets(
                Hyperplanes,
                n,
                None,
                flats.iter().copied().filter(|&f| {
                    f != full
                        && !flats
                            .iter()
                            .any(|&g| f.is_proper_subset_of(g) && g != full)
                }),
            )
        }
        (Flats, CyclicFlats) => {
            let view = MatroidView::from_description(desc)?;
            let listed = desc.set_lookup();
            let cyclic: Vec<(SubsetMask, usize)> = desc
                .sets()
                .iter()
                .copied()
                .filter(|f| f.iter().all(|e| !listed.contains(&f.without(e))))
                .map(|f| (f, view.rk(f)))
                .collect();
            Description::from_ranked(CyclicFlats, n, cyclic)
        }
        (Circuits, NonSpanningCircuits) => {
            let (r, nsc) = non_spanning_from_circuits(n, desc.sets());
            Description::from_sets(NonSpanningCircuits, n, Some(r), nsc)
        }
        (Hyperplanes, DependentHyperplanes) => {
            let cocircuits: Vec<SubsetMask> = desc.sets().iter().map(|h| h.complement(n)).collect();
            let (dual_rank, dual_nsc) = non_spanning_from_circuits(n, &cocircuits);
            Description::from_sets(
                DependentHyperplanes,
                n,
                Some(n - dual_rank),
                dual_nsc.into_iter().map(|c| c.complement(n)),
            )
        }
        (from, to) => Err(Error::Plan(format!(
            "{from} -> {to} is not a covering edge of the order"
        ))),
    }
}

fn complete_rank_table(desc: &Description) -> Result<Vec<usize>> {
    let n = desc.n();
    if desc.len() != 1 << n {
        return Err(Error::Decode(format!(
            "rank table lists {} of {} subsets",
            desc.len(),
            1usize << n
        )));
    }
    let mut ranks = vec![0; 1 << n];
    for (a, r) in desc.entries() {
        ranks[a.index()] = r.expect("rank kind is annotated");
    }
    Ok(ranks)
}

fn require_bases(desc: &Description) -> Result<Vec<SubsetMask>> {
    if desc.is_empty() {
        return Err(Error::Decode("no bases listed".into()));
    }
    Ok(desc.sets().to_vec())
}

/// All fundamental circuits `C(e, B)` over every basis `B` and `e ∉ B`.
/// Every circuit arises this way, so the result is the full circuit set.
fn fundamental_circuits(n: usize, bases: &[SubsetMask]) -> HashSet<SubsetMask> {
    let is_basis: HashSet<SubsetMask> = bases.iter().copied().collect();
    let mut circuits = HashSet::new();
    for &b in bases {
        for e in b.complement(n).iter() {
            let c = b
                .iter()
                .filter(|&f| is_basis.contains(&b.without(f).with(e)))
                .fold(SubsetMask::singleton(e), |acc, f| acc.with(f));
            circuits.insert(c);
        }
    }
    circuits
}

fn non_spanning_from_circuits(n: usize, circuits: &[SubsetMask]) -> (usize, Vec<SubsetMask>) {
    let r = greedy_basis(SubsetMask::full(n), |a| {
        !circuits.iter().any(|c| c.is_subset_of(a))
    })
    .len();
    (r, circuits.iter().copied().filter(|c| c.len() <= r).collect())
}

/// Bookkeeping from the pairwise-join cyclic-flat algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicFlatStats {
    /// Number of bases `b(M)`, the bound on the working list.
    pub bases: usize,
    pub rank: usize,
    /// Passes that added at least one new cyclic flat.
    pub growing_passes: usize,
    /// Largest working-list length seen.
    pub max_len: usize,
    /// A final pass added nothing.
    pub stabilized: bool,
}

/// Rank and closure computed from a list of bases.
struct BasesRank<'a> {
    n: usize,
    bases: &'a [SubsetMask],
}

impl BasesRank<'_> {
    fn rank(&self, a: SubsetMask) -> usize {
        self.bases.iter().map(|&b| (a & b).len()).max().unwrap_or(0)
    }

    fn closure(&self, a: SubsetMask) -> SubsetMask {
        let r = self.rank(a);
        a.complement(self.n)
            .iter()
            .filter(|&e| self.rank(a.with(e)) == r)
            .fold(a, |acc, e| acc.with(e))
    }
}

/// Cyclic flats from bases: seed with `cl(∅)` and the closure of every
/// circuit, then repeatedly add `cl(Z ∪ Z')` for pairs of known cyclic flats,
/// at most `r(M)` times. The working list never exceeds `b(M)`; exceeding it
/// is reported as an invariant violation.
pub fn cyclic_flats_from_bases(desc: &Description) -> Result<(Description, CyclicFlatStats)> {
    if desc.kind() != Bases {
        return Err(Error::Plan(format!("expected bases, got {}", desc.kind())));
    }
    let n = desc.n();
    let bases = require_bases(desc)?;
    let oracle = BasesRank { n, bases: &bases };
    let r = bases[0].len();

    let mut known: Vec<SubsetMask> = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |z: SubsetMask, known: &mut Vec<SubsetMask>| {
        if seen.insert(z) {
            known.push(z);
            true
        } else {
            false
        }
    };
    push(oracle.closure(SubsetMask::EMPTY), &mut known);
    let mut circuits: Vec<SubsetMask> = fundamental_circuits(n, &bases).into_iter().collect();
    circuits.sort_by_key(|c| crate::mask::canonical_key(*c));
    for c in circuits {
        push(oracle.closure(c), &mut known);
    }

    let mut stats = CyclicFlatStats {
        bases: bases.len(),
        rank: r,
        growing_passes: 0,
        max_len: known.len(),
        stabilized: false,
    };
    let check_bound = |len: usize| {
        if len > bases.len() {
            Err(Error::Invariant(format!(
                "cyclic-flat working list has {len} sets, more than the {} bases",
                bases.len()
            )))
        } else {
            Ok(())
        }
    };
    check_bound(known.len())?;

    let mut pass = 0;
    loop {
        let snapshot = known.clone();
        let mut grew = false;
        for (j, &a) in snapshot.iter().enumerate() {
            for &b in &snapshot[j + 1..] {
                grew |= push(oracle.closure(a | b), &mut known);
            }
        }
        stats.max_len = stats.max_len.max(known.len());
        check_bound(known.len())?;
        if !grew {
            stats.stabilized = true;
            break;
        }
        pass += 1;
        stats.growing_passes = pass;
        if pass > r {
            break;
        }
    }

    let ranked = known.into_iter().map(|z| (z, oracle.rank(z)));
    Ok((Description::from_ranked(CyclicFlats, n, ranked)?, stats))
}

/// Exhaustive counts `(z(M), b(M))` of cyclic flats and bases. Every matroid
/// has at most as many cyclic flats as bases.
pub fn count_cyclic_flats_vs_bases(view: &MatroidView) -> (usize, usize) {
    let table = view.rank_table();
    let z = table.cyclic_flats_count();
    let b = table.bases_count();
    assert!(z <= b, "{z} cyclic flats but only {b} bases");
    (z, b)
}
