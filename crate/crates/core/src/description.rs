//! The ten list-of-subsets description formats.
//!
//! A [`Description`] lists subsets of the ground set (optionally annotated
//! with ranks). The text form is
//!
//! ```text
//! matroid <kind> n=<n>[ r=<r>]
//! <bitstring>[:<rank>]
//! ...
//! ```
//!
//! where the leftmost bitstring character is element 0, `#` starts a comment
//! line and blank lines are ignored. When `n = 0` the empty set is written as
//! `-`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mask::{canonical_key, check_capacity, SubsetMask};
use crate::table::RankTable;
use crate::view::MatroidView;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DescriptionKind {
    Rank,
    IndependentSets,
    SpanningSets,
    Bases,
    Flats,
    Circuits,
    Hyperplanes,
    NonSpanningCircuits,
    DependentHyperplanes,
    CyclicFlats,
}

impl DescriptionKind {
    pub const ALL: [DescriptionKind; 10] = [
        DescriptionKind::Rank,
        DescriptionKind::IndependentSets,
        DescriptionKind::SpanningSets,
        DescriptionKind::Bases,
        DescriptionKind::Flats,
        DescriptionKind::Circuits,
        DescriptionKind::Hyperplanes,
        DescriptionKind::NonSpanningCircuits,
        DescriptionKind::DependentHyperplanes,
        DescriptionKind::CyclicFlats,
    ];

    /// Keyword used in the text header.
    pub fn keyword(self) -> &'static str {
        match self {
            DescriptionKind::Rank => "rank",
            DescriptionKind::IndependentSets => "independent",
            DescriptionKind::SpanningSets => "spanning",
            DescriptionKind::Bases => "bases",
            DescriptionKind::Flats => "flats",
            DescriptionKind::Circuits => "circuits",
            DescriptionKind::Hyperplanes => "hyperplanes",
            DescriptionKind::NonSpanningCircuits => "nsc",
            DescriptionKind::DependentHyperplanes => "dephyp",
            DescriptionKind::CyclicFlats => "cyclicflats",
        }
    }

    /// Kinds whose header carries the matroid rank.
    pub fn needs_header_rank(self) -> bool {
        matches!(
            self,
            DescriptionKind::NonSpanningCircuits | DescriptionKind::DependentHyperplanes
        )
    }

    /// Kinds whose every listed set carries a rank.
    pub fn needs_set_ranks(self) -> bool {
        matches!(self, DescriptionKind::Rank | DescriptionKind::CyclicFlats)
    }
}

impl fmt::Display for DescriptionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for DescriptionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DescriptionKind::ALL
            .into_iter()
            .find(|k| k.keyword() == s)
            .ok_or_else(|| Error::input(format!("unknown description kind `{s}`")))
    }
}

/// A matroid given by a list of subsets of its ground set.
///
/// Sets are kept in canonical order (cardinality, then numeric mask) and are
/// pairwise distinct. `set_ranks`, when present, is aligned with `sets`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Description {
    kind: DescriptionKind,
    n: usize,
    rank: Option<usize>,
    sets: Vec<SubsetMask>,
    set_ranks: Option<Vec<usize>>,
}

/// Listed-set count and the `n * i` cell measure of a description.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeMeasure {
    pub listed_sets: usize,
    pub cells: usize,
    pub header_bits: usize,
}

impl Description {
    /// Builds a description from `(set, rank annotation)` entries, sorting
    /// them canonically and running the structural checks.
    pub fn new(
        kind: DescriptionKind,
        n: usize,
        rank: Option<usize>,
        entries: Vec<(SubsetMask, Option<usize>)>,
    ) -> Result<Self> {
        check_capacity("description", n)?;
        if kind.needs_header_rank() {
            match rank {
                None => return Err(Error::input(format!("{kind} descriptions need r"))),
                Some(r) if r > n => {
                    return Err(Error::input(format!("rank {r} exceeds n = {n}")))
                }
                _ => {}
            }
        } else if rank.is_some() {
            return Err(Error::input(format!("{kind} descriptions take no r")));
        }

        let annotated = entries.iter().filter(|(_, r)| r.is_some()).count();
        if kind.needs_set_ranks() && annotated != entries.len() {
            return Err(Error::input(format!("{kind} descriptions need a rank on every set")));
        }
        if annotated != 0 && annotated != entries.len() {
            return Err(Error::input("rank annotations must be on all sets or none"));
        }

        let mut entries = entries;
        entries.sort_by_key(|(m, _)| canonical_key(*m));
        for w in entries.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::input(format!(
                    "duplicate set {}",
                    w[0].0.to_bitstring(n)
                )));
            }
        }
        for (m, r) in &entries {
            if !m.fits(n) {
                return Err(Error::input(format!("set {m:?} outside ground set of size {n}")));
            }
            if let Some(r) = r {
                if *r > n {
                    return Err(Error::input(format!("set rank {r} exceeds n = {n}")));
                }
            }
        }

        let set_ranks = (annotated != 0).then(|| entries.iter().map(|(_, r)| r.unwrap()).collect());
        let sets = entries.into_iter().map(|(m, _)| m).collect();
        Ok(Description {
            kind,
            n,
            rank,
            sets,
            set_ranks,
        })
    }

    /// An unannotated list of sets. `rank` is only used for the kinds that
    /// need it in the header.
    pub fn from_sets(
        kind: DescriptionKind,
        n: usize,
        rank: Option<usize>,
        sets: impl IntoIterator<Item = SubsetMask>,
    ) -> Result<Self> {
        let rank = if kind.needs_header_rank() { rank } else { None };
        Description::new(kind, n, rank, sets.into_iter().map(|s| (s, None)).collect())
    }

    /// Sets paired with their ranks.
    pub fn from_ranked(
        kind: DescriptionKind,
        n: usize,
        entries: impl IntoIterator<Item = (SubsetMask, usize)>,
    ) -> Result<Self> {
        Description::new(
            kind,
            n,
            None,
            entries.into_iter().map(|(s, r)| (s, Some(r))).collect(),
        )
    }

    pub fn kind(&self) -> DescriptionKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Header rank (NSC and dependent-hyperplane kinds only).
    pub fn rank(&self) -> Option<usize> {
        self.rank
    }

    pub fn sets(&self) -> &[SubsetMask] {
        &self.sets
    }

    pub fn set_ranks(&self) -> Option<&[usize]> {
        self.set_ranks.as_deref()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Iterates `(set, rank annotation)`.
    pub fn entries(&self) -> impl Iterator<Item = (SubsetMask, Option<usize>)> + '_ {
        self.sets
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, self.set_ranks.as_ref().map(|r| r[i])))
    }

    pub fn contains(&self, m: SubsetMask) -> bool {
        self.sets
            .binary_search_by_key(&canonical_key(m), |s| canonical_key(*s))
            .is_ok()
    }

    pub(crate) fn set_lookup(&self) -> HashSet<SubsetMask> {
        self.sets.iter().copied().collect()
    }

    /// Same description without optional rank annotations on kinds that do
    /// not require them.
    pub fn without_optional_ranks(&self) -> Description {
        let mut d = self.clone();
        if !d.kind.needs_set_ranks() {
            d.set_ranks = None;
        }
        d
    }

    pub fn size(&self) -> SizeMeasure {
        size_of(self)
    }

    fn header(&self) -> String {
        match self.rank {
            Some(r) => format!("matroid {} n={} r={}", self.kind, self.n, r),
            None => format!("matroid {} n={}", self.kind, self.n),
        }
    }
}

/// Size of a description under the characteristic-vector encoding.
pub fn size_of(desc: &Description) -> SizeMeasure {
    let listed_sets = desc.sets.len();
    SizeMeasure {
        listed_sets,
        cells: listed_sets * desc.n,
        header_bits: 8 * desc.header().len(),
    }
}

/// Canonical text form.
pub fn serialize(desc: &Description) -> String {
    let mut out = desc.header();
    out.push('\n');
    for (m, r) in desc.entries() {
        if desc.n == 0 {
            out.push('-');
        } else {
            out.push_str(&m.to_bitstring(desc.n));
        }
        if let Some(r) = r {
            out.push(':');
            out.push_str(&r.to_string());
        }
        out.push('\n');
    }
    out
}

impl fmt::Display for Description {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize(self))
    }
}

/// Parses the text format.
///
/// Only structural checks are made here; whether the sets describe a matroid
/// is left to [`crate::validate::validate`].
pub fn parse(text: &str) -> Result<Description> {
    let mut header: Option<(usize, DescriptionKind, usize, Option<usize>)> = None;
    let mut entries: Vec<(SubsetMask, Option<usize>, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((_, kind, n, _)) = header else {
            header = Some(parse_header(line, line_no)?);
            continue;
        };
        let (bits, rank) = match line.split_once(':') {
            Some((b, r)) => {
                let r = r
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line_no, format!("bad rank `{}`", r.trim())))?;
                (b.trim(), Some(r))
            }
            None => (line, None),
        };
        let mask = if n == 0 && bits == "-" {
            SubsetMask::EMPTY
        } else {
            if bits.len() != n {
                return Err(Error::parse(
                    line_no,
                    format!("bitstring has length {}, expected {n}", bits.len()),
                ));
            }
            SubsetMask::parse_bitstring(bits)
                .ok_or_else(|| Error::parse(line_no, format!("bad bitstring `{bits}`")))?
        };
        if kind.needs_set_ranks() && rank.is_none() {
            return Err(Error::parse(line_no, format!("{kind} entries need `:<rank>`")));
        }
        if let Some(r) = rank {
            if r > n {
                return Err(Error::parse(line_no, format!("rank {r} exceeds n = {n}")));
            }
        }
        entries.push((mask, rank, line_no));
    }

    let (header_line, kind, n, rank) =
        header.ok_or_else(|| Error::parse(1, "missing `matroid <kind> n=<n>` header"))?;

    if let Some(first) = entries.iter().find(|e| e.1.is_some()) {
        if let Some(bad) = entries.iter().find(|e| e.1.is_none()) {
            return Err(Error::parse(
                bad.2,
                format!("missing rank annotation (line {} has one)", first.2),
            ));
        }
    }
    let mut seen = HashSet::new();
    for (m, _, line_no) in &entries {
        if !seen.insert(*m) {
            return Err(Error::parse(*line_no, format!("duplicate set {}", m.to_bitstring(n))));
        }
    }

    Description::new(
        kind,
        n,
        rank,
        entries.into_iter().map(|(m, r, _)| (m, r)).collect(),
    )
    .map_err(|e| match e {
        Error::Input(msg) => Error::parse(header_line, msg),
        other => other,
    })
}

fn parse_header(line: &str, line_no: usize) -> Result<(usize, DescriptionKind, usize, Option<usize>)> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("matroid") {
        return Err(Error::parse(line_no, "header must start with `matroid`"));
    }
    let kind: DescriptionKind = tokens
        .next()
        .ok_or_else(|| Error::parse(line_no, "header lacks a kind"))?
        .parse()
        .map_err(|e: Error| Error::parse(line_no, e.to_string()))?;
    let mut n = None;
    let mut r = None;
    for tok in tokens {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| Error::parse(line_no, format!("unexpected header token `{tok}`")))?;
        let value: usize = value
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad number in `{tok}`")))?;
        let slot = match key {
            "n" => &mut n,
            "r" => &mut r,
            _ => return Err(Error::parse(line_no, format!("unknown header field `{key}`"))),
        };
        if slot.replace(value).is_some() {
            return Err(Error::parse(line_no, format!("repeated header field `{key}`")));
        }
    }
    let n = n.ok_or_else(|| Error::parse(line_no, "header lacks n=<n>"))?;
    check_capacity("description", n).map_err(|e| Error::parse(line_no, e.to_string()))?;
    if kind.needs_header_rank() && r.is_none() {
        return Err(Error::parse(line_no, format!("{kind} header needs r=<r>")));
    }
    if !kind.needs_header_rank() && r.is_some() {
        return Err(Error::parse(line_no, format!("{kind} header takes no r")));
    }
    Ok((line_no, kind, n, r))
}

impl FromStr for Description {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

/// Re-encodes a matroid as a description of the given kind by classifying
/// every subset of the ground set.
pub fn encode_from_oracle(view: &MatroidView, kind: DescriptionKind) -> Description {
    let table = view.rank_table();
    encode_from_table(table, kind)
}

pub(crate) fn encode_from_table(table: &RankTable, kind: DescriptionKind) -> Description {
    let n = table.n();
    let r = table.full_rank();
    let mut entries: Vec<(SubsetMask, Option<usize>)> = Vec::new();
    for a in table.subsets() {
        let keep = match kind {
            DescriptionKind::Rank => true,
            DescriptionKind::IndependentSets => table.is_independent(a),
            DescriptionKind::SpanningSets => table.rank(a) == r,
            DescriptionKind::Bases => table.is_independent(a) && table.rank(a) == r,
            DescriptionKind::Flats => table.is_flat(a),
            DescriptionKind::Circuits => table.is_circuit(a),
            DescriptionKind::Hyperplanes => table.is_hyperplane(a),
            DescriptionKind::NonSpanningCircuits => table.is_circuit(a) && table.rank(a) < r,
            DescriptionKind::DependentHyperplanes => {
                table.is_hyperplane(a) && !table.is_independent(a)
            }
            DescriptionKind::CyclicFlats => table.is_cyclic_flat(a),
        };
        if keep {
            let annotation = kind.needs_set_ranks().then(|| table.rank(a));
            entries.push((a, annotation));
        }
    }
    let rank = kind.needs_header_rank().then_some(r);
    Description::new(kind, n, rank, entries).expect("oracle encoding is structurally valid")
}

/// True when both descriptions induce the same rank function.
pub fn semantically_equal(a: &Description, b: &Description) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::input(format!(
            "ground sets differ in size: {} vs {}",
            a.n(),
            b.n()
        )));
    }
    let va = MatroidView::from_description(a)?;
    let vb = MatroidView::from_description(b)?;
    Ok(va.rank_table() == vb.rank_table())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::uniform;

    fn m(s: &str) -> SubsetMask {
        SubsetMask::parse_bitstring(s).unwrap()
    }

    #[test]
    fn parses_bases_of_u23() {
        let d = parse("matroid bases n=3\n110\n101\n011\n").unwrap();
        assert_eq!(d.kind(), DescriptionKind::Bases);
        assert_eq!(d.n(), 3);
        assert_eq!(d.sets(), &[m("110"), m("101"), m("011")]);
        assert!(semantically_equal(&d, &encode_from_oracle(&uniform(2, 3).unwrap(), DescriptionKind::Bases)).unwrap());
    }

    #[test]
    fn nsc_with_no_sets_lists_only_the_rank() {
        let d = parse("matroid nsc n=4 r=2\n").unwrap();
        assert_eq!(d.rank(), Some(2));
        assert!(d.is_empty());
        let u24 = encode_from_oracle(&uniform(2, 4).unwrap(), DescriptionKind::NonSpanningCircuits);
        assert_eq!(d, u24);
    }

    #[test]
    fn cyclic_flats_missing_empty_set_still_parses() {
        let d = parse("matroid cyclicflats n=2\n11:1\n").unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.set_ranks(), Some(&[1usize][..]));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("bases n=3\n", 1),
            ("matroid bases n=3\n11\n", 2),
            ("matroid bases n=3\n110\n# c\n110\n", 4),
            ("matroid rank n=1\n0:0\n1\n", 3),
            ("matroid nsc n=3\n", 1),
            ("matroid bases n=3 r=2\n", 1),
            ("matroid circuits n=2\n1x\n", 2),
            ("matroid cyclicflats n=2\n11:1\n00\n", 3),
            ("", 1),
        ];
        for (text, line) in cases {
            match parse(text) {
                Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn canonical_order_and_round_trip() {
        let d = parse("# comment\n\nmatroid circuits n=4\n1111\n1100\n0011\n").unwrap();
        assert_eq!(d.sets(), &[m("1100"), m("0011"), m("1111")]);
        let text = serialize(&d);
        assert_eq!(text, "matroid circuits n=4\n1100\n0011\n1111\n");
        assert_eq!(parse(&text).unwrap(), d);
    }

    #[test]
    fn rank_table_of_u12() {
        let d = encode_from_oracle(&uniform(1, 2).unwrap(), DescriptionKind::Rank);
        assert_eq!(serialize(&d), "matroid rank n=2\n00:0\n10:1\n01:1\n11:1\n");
    }

    #[test]
    fn empty_ground_set_uses_dash() {
        let d = encode_from_oracle(&uniform(0, 0).unwrap(), DescriptionKind::Bases);
        assert_eq!(serialize(&d), "matroid bases n=0\n-\n");
        assert_eq!(parse(&serialize(&d)).unwrap(), d);
    }

    #[test]
    fn sizes() {
        let span = encode_from_oracle(&uniform(3, 4).unwrap(), DescriptionKind::SpanningSets);
        assert_eq!(size_of(&span).listed_sets, 5);
        assert_eq!(size_of(&span).cells, 20);
        let ind = encode_from_oracle(&uniform(1, 4).unwrap(), DescriptionKind::IndependentSets);
        assert_eq!(size_of(&ind).listed_sets, 5);
        let rank = encode_from_oracle(&uniform(2, 4).unwrap(), DescriptionKind::Rank);
        assert_eq!(size_of(&rank).listed_sets, 16);
        assert_eq!(size_of(&rank).header_bits, 8 * "matroid rank n=4".len());
    }

    #[test]
    fn oracle_encodings_of_small_uniforms() {
        let flats = encode_from_oracle(&uniform(2, 3).unwrap(), DescriptionKind::Flats);
        assert_eq!(flats.sets(), &[m("000"), m("100"), m("010"), m("001"), m("111")]);
        let cf = encode_from_oracle(&uniform(2, 4).unwrap(), DescriptionKind::CyclicFlats);
        assert_eq!(cf.sets(), &[m("0000"), m("1111")]);
        assert_eq!(cf.set_ranks(), Some(&[0usize, 2][..]));
    }

    #[test]
    fn semantic_equality() {
        let u23 = uniform(2, 3).unwrap();
        let b = encode_from_oracle(&u23, DescriptionKind::Bases);
        let c = encode_from_oracle(&u23, DescriptionKind::Circuits);
        assert!(semantically_equal(&b, &c).unwrap());
        let u24 = encode_from_oracle(&uniform(2, 4).unwrap(), DescriptionKind::Bases);
        let u34 = encode_from_oracle(&uniform(3, 4).unwrap(), DescriptionKind::Bases);
        assert!(!semantically_equal(&u24, &u34).unwrap());
        assert!(matches!(semantically_equal(&b, &u24), Err(Error::Input(_))));
    }
}
