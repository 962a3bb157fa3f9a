//! Axiom checks for descriptions.

use std::collections::HashSet;
use std::fmt;

use crate::description::{encode_from_oracle, Description, DescriptionKind};
use crate::mask::SubsetMask;
use crate::table::RankAxiomViolation;
use crate::view::MatroidView;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Failure witness or other detail.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, witness: Option<String>) {
        self.checks.push(Check {
            name,
            passed: witness.is_none(),
            detail: witness,
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "ok  " } else { "FAIL" };
            match &c.detail {
                Some(d) => writeln!(f, "{status} {}: {d}", c.name)?,
                None => writeln!(f, "{status} {}", c.name)?,
            }
        }
        write!(f, "{}", if self.is_valid() { "valid" } else { "invalid" })
    }
}

/// Runs the kind-specific axiom checks, then decodes the description,
/// checks the decoded rank function and re-encodes it as the same kind.
/// Never fails; every problem becomes a failed check.
pub fn validate(desc: &Description) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = desc.n();
    let bits = |m: SubsetMask| m.to_bitstring(n);
    let sets = desc.sets();

    match desc.kind() {
        DescriptionKind::Bases => {
            report.push("nonempty", sets.is_empty().then(|| "no bases listed".to_string()));
            let k = sets.first().map_or(0, |b| b.len());
            report.push(
                "equicardinal",
                sets.iter()
                    .find(|b| b.len() != k)
                    .map(|b| format!("{} has size {}, expected {k}", bits(*b), b.len())),
            );
            report.push("basis exchange", basis_exchange_witness(sets).map(|(b1, b2, x)| {
                format!("{} - {x} + y is no basis for any y in {}", bits(b1), bits(b2 - b1))
            }));
        }
        DescriptionKind::IndependentSets => {
            let lookup = desc.set_lookup();
            report.push(
                "contains empty set",
                (!lookup.contains(&SubsetMask::EMPTY)).then(|| "∅ missing".to_string()),
            );
            report.push(
                "hereditary",
                sets.iter().find_map(|&s| {
                    s.iter()
                        .find(|&e| !lookup.contains(&s.without(e)))
                        .map(|e| format!("{} listed but not {} minus {e}", bits(s), bits(s)))
                }),
            );
        }
        DescriptionKind::SpanningSets => {
            let lookup = desc.set_lookup();
            let full = SubsetMask::full(n);
            report.push(
                "contains ground set",
                (!lookup.contains(&full)).then(|| "E missing".to_string()),
            );
            report.push(
                "upward closed",
                sets.iter().find_map(|&s| {
                    (0..n)
                        .filter(|&e| !s.contains(e))
                        .find(|&e| !lookup.contains(&s.with(e)))
                        .map(|e| format!("{} listed but not {} plus {e}", bits(s), bits(s)))
                }),
            );
        }
        DescriptionKind::Flats => {
            let lookup = desc.set_lookup();
            report.push(
                "contains ground set",
                (!lookup.contains(&SubsetMask::full(n))).then(|| "E missing".to_string()),
            );
            report.push(
                "closed under intersection",
                pairs(sets).find_map(|(a, b)| {
                    (!lookup.contains(&(a & b)))
                        .then(|| format!("{} ∩ {} not listed", bits(a), bits(b)))
                }),
            );
        }
        DescriptionKind::Circuits | DescriptionKind::NonSpanningCircuits => {
            report.push(
                "no empty circuit",
                sets.contains(&SubsetMask::EMPTY).then(|| "∅ listed".to_string()),
            );
            report.push("antichain", antichain_witness(sets).map(|(a, b)| {
                format!("{} ⊂ {}", bits(a), bits(b))
            }));
            if desc.kind() == DescriptionKind::Circuits {
                report.push("circuit elimination", elimination_witness(sets).map(|(a, b, e)| {
                    format!("({} ∪ {}) - {e} contains no circuit", bits(a), bits(b))
                }));
            } else {
                let r = desc.rank().unwrap_or(0);
                report.push(
                    "circuits are non-spanning",
                    sets.iter()
                        .find(|c| c.len() > r)
                        .map(|c| format!("{} has more than r = {r} elements", bits(*c))),
                );
            }
        }
        DescriptionKind::Hyperplanes | DescriptionKind::DependentHyperplanes => {
            report.push("antichain", antichain_witness(sets).map(|(a, b)| {
                format!("{} ⊂ {}", bits(a), bits(b))
            }));
            report.push(
                "proper subsets",
                sets.contains(&SubsetMask::full(n)).then(|| "E listed".to_string()),
            );
            if desc.kind() == DescriptionKind::DependentHyperplanes {
                let r = desc.rank().unwrap_or(0);
                report.push(
                    "hyperplanes are dependent",
                    sets.iter()
                        .find(|h| h.len() < r)
                        .map(|h| format!("{} has fewer than r = {r} elements", bits(*h))),
                );
            }
        }
        DescriptionKind::Rank => {
            let ranks = desc.set_ranks().unwrap_or(&[]);
            report.push(
                "complete",
                (sets.len() != 1usize << n)
                    .then(|| format!("{} of {} subsets listed", sets.len(), 1usize << n)),
            );
            if sets.len() == 1usize << n {
                let mut table = vec![0u8; 1 << n];
                for (s, r) in sets.iter().zip(ranks) {
                    table[s.index()] = *r as u8;
                }
                let t = crate::table::RankTable::from_vec(n, table);
                let v = t.axiom_violation();
                report.push("normalized", matches!(v, Some(RankAxiomViolation::EmptySetRank)).then(|| "r(∅) ≠ 0".into()));
                report.push("bounded by size", match v {
                    Some(RankAxiomViolation::ExceedsSize(a)) => Some(format!("r({}) > |{}|", bits(a), bits(a))),
                    _ => None,
                });
                report.push("unit increase and monotone", match v {
                    Some(RankAxiomViolation::UnitIncrease(a, e)) => {
                        Some(format!("r({} + {e}) - r({}) not in {{0, 1}}", bits(a), bits(a)))
                    }
                    _ => None,
                });
                report.push("submodular", match v {
                    Some(RankAxiomViolation::Submodular(a, b)) => {
                        Some(format!("r({}) + r({}) < r(∪) + r(∩)", bits(a), bits(b)))
                    }
                    _ => None,
                });
            }
        }
        DescriptionKind::CyclicFlats => {
            let entries: Vec<(SubsetMask, usize)> =
                desc.entries().map(|(z, r)| (z, r.unwrap_or(0))).collect();
            report.push(
                "ranks consistent",
                entries.iter().find_map(|&(z, rz)| {
                    if rz > z.len() || (rz == z.len() && !z.is_empty()) {
                        return Some(format!("{} has rank {rz}, too large for a cyclic set", bits(z)));
                    }
                    entries.iter().find_map(|&(w, rw)| {
                        (z.is_proper_subset_of(w) && !(rz < rw && rw - rz < (w - z).len()))
                            .then(|| format!("ranks of {} ⊂ {} violate strict increase", bits(z), bits(w)))
                    })
                }),
            );
            let listed: HashSet<SubsetMask> = entries.iter().map(|e| e.0).collect();
            report.push(
                "closed under join",
                match MatroidView::from_description(desc) {
                    Ok(v) => pairs(sets).find_map(|(a, b)| {
                        let j = v.cl(a | b);
                        (!listed.contains(&j))
                            .then(|| format!("cl({} ∪ {}) = {} not listed", bits(a), bits(b), bits(j)))
                    }),
                    Err(e) => Some(e.to_string()),
                },
            );
        }
    }

    if desc.kind().needs_header_rank() {
        report.push(
            "rank in range",
            desc.rank().filter(|&r| r <= n).is_none().then(|| "r missing or > n".to_string()),
        );
    }

    match MatroidView::from_description(desc) {
        Err(e) => report.push("decodes", Some(e.to_string())),
        Ok(view) => {
            report.push("decodes", None);
            let table = view.rank_table();
            report.push(
                "decoded rank function is a matroid",
                table.axiom_violation().map(|v| format!("{v:?}")),
            );
            if let Some(listed) = desc.set_ranks() {
                report.push(
                    "annotations agree with decoded ranks",
                    desc.sets()
                        .iter()
                        .zip(listed)
                        .find(|(s, r)| table.rank(**s) != **r)
                        .map(|(s, r)| format!("{} annotated {r}, decodes to {}", bits(*s), table.rank(*s))),
                );
            }
            let again = encode_from_oracle(&view, desc.kind());
            report.push(
                "round trip",
                (again != desc.without_optional_ranks()).then(|| {
                    format!(
                        "re-encoding lists {} sets, input lists {}",
                        again.len(),
                        desc.len()
                    )
                }),
            );
        }
    }
    report
}

fn pairs(sets: &[SubsetMask]) -> impl Iterator<Item = (SubsetMask, SubsetMask)> + '_ {
    sets.iter()
        .enumerate()
        .flat_map(move |(i, &a)| sets[i + 1..].iter().map(move |&b| (a, b)))
}

fn antichain_witness(sets: &[SubsetMask]) -> Option<(SubsetMask, SubsetMask)> {
    sets.iter().find_map(|&a| {
        sets.iter()
            .find(|&&b| a.is_proper_subset_of(b))
            .map(|&b| (a, b))
    })
}

fn basis_exchange_witness(bases: &[SubsetMask]) -> Option<(SubsetMask, SubsetMask, usize)> {
    let lookup: HashSet<SubsetMask> = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            for x in (b1 - b2).iter() {
                let ok = (b2 - b1)
                    .iter()
                    .any(|y| lookup.contains(&b1.without(x).with(y)));
                if !ok {
                    return Some((b1, b2, x));
                }
            }
        }
    }
    None
}

fn elimination_witness(circuits: &[SubsetMask]) -> Option<(SubsetMask, SubsetMask, usize)> {
    for (a, b) in pairs(circuits) {
        let union = a | b;
        for e in (a & b).iter() {
            let rest = union.without(e);
            if !circuits.iter().any(|c| c.is_subset_of(rest)) {
                return Some((a, b, e));
            }
        }
    }
    None
}
