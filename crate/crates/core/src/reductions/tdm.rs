//! Three-dimensional matching and its reduction to 3-matroid intersection.

use std::fmt;
use std::str::FromStr;

use crate::description::{encode_from_oracle, Description, DescriptionKind};
use crate::error::{Error, Result};
use crate::mask::{check_capacity, k_subsets, SubsetMask};
use crate::view::MatroidView;

/// Triples `(a, b, c)` over three disjoint sides `0..s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSystem {
    s: usize,
    triples: Vec<[usize; 3]>,
}

impl TripleSystem {
    pub fn new(s: usize, triples: Vec<[usize; 3]>) -> Result<Self> {
        if let Some(t) = triples.iter().find(|t| t.iter().any(|&x| x >= s)) {
            return Err(Error::input(format!("triple {t:?} has a coordinate outside 0..{s}")));
        }
        Ok(TripleSystem { s, triples })
    }

    pub fn side(&self) -> usize {
        self.s
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    /// First set of `s` triples covering every side element exactly once,
    /// as a mask over triple indices.
    pub fn find_matching(&self) -> Option<SubsetMask> {
        if self.triples.len() > crate::mask::MAX_N {
            return None;
        }
        k_subsets(self.triples.len(), self.s).find(|m| {
            (0..3).all(|i| {
                let mut covered = vec![false; self.s];
                m.iter().all(|k| !std::mem::replace(&mut covered[self.triples[k][i]], true))
            })
        })
    }

    /// All systems with side `s` and exactly `t` distinct triples, triples
    /// drawn in lexicographic order.
    pub fn all(s: usize, t: usize) -> Vec<TripleSystem> {
        let cube: Vec<[usize; 3]> = (0..s)
            .flat_map(|a| (0..s).flat_map(move |b| (0..s).map(move |c| [a, b, c])))
            .collect();
        if t > cube.len() {
            return Vec::new();
        }
        k_subsets(cube.len(), t)
            .map(|m| TripleSystem {
                s,
                triples: m.iter().map(|i| cube[i]).collect(),
            })
            .collect()
    }
}

/// `3dm s=<s>` then one `a b c` triple per line.
impl fmt::Display for TripleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "3dm s={}", self.s)?;
        for [a, b, c] in &self.triples {
            writeln!(f, "{a} {b} {c}")?;
        }
        Ok(())
    }
}

impl FromStr for TripleSystem {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut s = None;
        let mut triples = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some(side) = s else {
                let value = line
                    .strip_prefix("3dm")
                    .map(str::trim)
                    .and_then(|r| r.strip_prefix("s="))
                    .and_then(|v| v.trim().parse::<usize>().ok())
                    .ok_or_else(|| Error::parse(line_no, "expected `3dm s=<s>`"))?;
                s = Some(value);
                continue;
            };
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse(line_no, format!("bad triple `{line}`")))?;
            let [a, b, c] = nums[..] else {
                return Err(Error::parse(line_no, "a triple has three coordinates"));
            };
            if [a, b, c].iter().any(|&x| x >= side) {
                return Err(Error::parse(line_no, format!("coordinate outside 0..{side}")));
            }
            triples.push([a, b, c]);
        }
        let s = s.ok_or_else(|| Error::parse(1, "missing `3dm s=<s>` header"))?;
        TripleSystem::new(s, triples)
    }
}

/// The three partition matroids on the triples: in `M_i`, triples sharing
/// their `i`-th coordinate form a parallel class of a rank-one component.
#[derive(Clone, Debug)]
pub struct ThreeDmReduction {
    pub circuits: [Description; 3],
    pub hyperplanes: [Description; 3],
    /// `(coordinate, side element)` pairs contained in no triple. Any such
    /// pair rules out both a matching and a common independent `s`-set.
    pub empty_classes: Vec<(usize, usize)>,
    pub target: usize,
}

impl ThreeDmReduction {
    pub fn views(&self) -> Result<[MatroidView; 3]> {
        Ok([
            MatroidView::from_description(&self.circuits[0])?,
            MatroidView::from_description(&self.circuits[1])?,
            MatroidView::from_description(&self.circuits[2])?,
        ])
    }

    pub fn bases(&self) -> Result<[Description; 3]> {
        let [a, b, c] = self.views()?;
        Ok([
            encode_from_oracle(&a, DescriptionKind::Bases),
            encode_from_oracle(&b, DescriptionKind::Bases),
            encode_from_oracle(&c, DescriptionKind::Bases),
        ])
    }
}

pub fn reduce_3dm(instance: &TripleSystem) -> Result<ThreeDmReduction> {
    let t = instance.triples.len();
    if t == 0 {
        return Err(Error::input("a 3DM instance needs at least one triple"));
    }
    check_capacity("3DM ground set", t)?;
    let mut empty_classes = Vec::new();
    let mut circuits: Vec<Description> = Vec::with_capacity(3);
    let mut hyperplanes: Vec<Description> = Vec::with_capacity(3);
    for i in 0..3 {
        let classes: Vec<SubsetMask> = (0..instance.s)
            .map(|j| {
                (0..t)
                    .filter(|&k| instance.triples[k][i] == j)
                    .collect::<SubsetMask>()
            })
            .collect();
        for (j, class) in classes.iter().enumerate() {
            if class.is_empty() {
                empty_classes.push((i, j));
            }
        }
        let mut pairs = Vec::new();
        for class in &classes {
            let members: Vec<usize> = class.iter().collect();
            for (p, &a) in members.iter().enumerate() {
                for &b in &members[p + 1..] {
                    pairs.push(SubsetMask::from_elements([a, b]));
                }
            }
        }
        circuits.push(Description::from_sets(DescriptionKind::Circuits, t, None, pairs)?);
        let full = SubsetMask::full(t);
        hyperplanes.push(Description::from_sets(
            DescriptionKind::Hyperplanes,
            t,
            None,
            classes.iter().filter(|c| !c.is_empty()).map(|&c| full - c),
        )?);
    }
    let into3 = |v: Vec<Description>| -> [Description; 3] {
        v.try_into().expect("three coordinates")
    };
    Ok(ThreeDmReduction {
        circuits: into3(circuits),
        hyperplanes: into3(hyperplanes),
        empty_classes,
        target: instance.s,
    })
}
