//! Generators for the matroid families used throughout: uniform matroids,
//! the separation families, bicircular matroids and the graph encodings
//! `Φ(G)` and `Φ_r(G)`.

mod graph;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

pub use graph::MultiGraph;

use crate::description::{Description, DescriptionKind};
use crate::error::{Error, Result};
use crate::mask::{check_capacity, SubsetMask};
use crate::view::{IndependenceOracle, MatroidView, Repr};

/// `U_{r,n}`: every set of at most `r` elements is independent.
pub fn uniform(r: usize, n: usize) -> Result<MatroidView> {
    check_capacity("uniform matroid", n)?;
    if r > n {
        return Err(Error::input(format!("U_{{{r},{n}}} needs r <= n")));
    }
    Ok(MatroidView::build(n, Repr::Uniform(r), None, None))
}

/// The matroid families that separate description kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    /// `U_{n-1,n}`: few spanning sets, many flats.
    L10,
    /// `U_{1,n}`: few independent sets, many spanning sets.
    L11,
    /// `T(nU_{n-1,n} ⊕ U_{2,2})`: few flats, many non-spanning circuits.
    L15,
    /// `U_{n,2n}` plus one element parallel to element 0: few cyclic flats,
    /// many dependent hyperplanes.
    L17,
    /// `2U_{n-1,n}`: few hyperplanes, many cyclic flats.
    L18,
    /// `U_{n,2n}`: no non-spanning circuits, many circuits.
    L20,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 6] = [
        FamilyTag::L10,
        FamilyTag::L11,
        FamilyTag::L15,
        FamilyTag::L17,
        FamilyTag::L18,
        FamilyTag::L20,
    ];

    pub fn min_n(self) -> usize {
        match self {
            FamilyTag::L10 | FamilyTag::L11 | FamilyTag::L20 => 1,
            FamilyTag::L17 => 2,
            FamilyTag::L15 | FamilyTag::L18 => 3,
        }
    }

    /// Ground-set size of the family member with parameter `n`.
    pub fn ground_size(self, n: usize) -> usize {
        match self {
            FamilyTag::L10 | FamilyTag::L11 => n,
            FamilyTag::L15 => n * n + 2,
            FamilyTag::L17 => 2 * n + 1,
            FamilyTag::L18 | FamilyTag::L20 => 2 * n,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::input(format!("unknown family `{s}` (expected L10, L11, L15, L17, L18 or L20)")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyId {
    pub tag: FamilyTag,
    pub n: usize,
}

impl FamilyId {
    pub fn new(tag: FamilyTag, n: usize) -> Self {
        FamilyId { tag, n }
    }
}

/// The member with parameter `id.n` of a separation family.
pub fn separation_family(id: FamilyId) -> Result<MatroidView> {
    let FamilyId { tag, n } = id;
    if n < tag.min_n() {
        return Err(Error::input(format!("{tag} needs n >= {}", tag.min_n())));
    }
    check_capacity(&format!("{tag} with n={n}"), tag.ground_size(n))?;
    match tag {
        FamilyTag::L10 => uniform(n - 1, n),
        FamilyTag::L11 => uniform(1, n),
        FamilyTag::L15 => {
            let blown = uniform(n - 1, n)?.parallel_blowup(n)?;
            let sum = blown.direct_sum(&uniform(2, 2)?)?;
            sum.truncate(sum.rank() - 1)
        }
        FamilyTag::L17 => uniform(n, 2 * n)?.add_parallel(0),
        FamilyTag::L18 => uniform(n - 1, n)?.parallel_blowup(2),
        FamilyTag::L20 => uniform(n, 2 * n),
    }
}

/// Bicircular matroid on the edges of a multigraph: an edge set is
/// independent iff each of its connected components has at most one cycle.
#[derive(Clone, Debug)]
pub struct Bicircular {
    graph: MultiGraph,
}

impl Bicircular {
    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }
}

impl IndependenceOracle for Bicircular {
    fn ground_size(&self) -> usize {
        self.graph.edge_count()
    }

    fn is_independent(&self, a: SubsetMask) -> bool {
        let mut parent: Vec<usize> = (0..self.graph.vertex_count()).collect();
        let mut cyclic = vec![false; parent.len()];
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for k in a.iter() {
            let (u, w) = self.graph.edges()[k];
            let (ru, rw) = (find(&mut parent, u), find(&mut parent, w));
            if ru == rw {
                if cyclic[ru] {
                    return false;
                }
                cyclic[ru] = true;
            } else {
                if cyclic[ru] && cyclic[rw] {
                    return false;
                }
                parent[ru] = rw;
                cyclic[rw] |= cyclic[ru];
            }
        }
        true
    }

    fn name(&self) -> String {
        "bicircular".to_string()
    }
}

/// `B(G)`, elements indexed by edge position.
pub fn bicircular(g: &MultiGraph) -> Result<MatroidView> {
    check_capacity("bicircular matroid", g.edge_count())?;
    MatroidView::from_oracle(Arc::new(Bicircular { graph: g.clone() }))
}

/// Adds `per_vertex` loops at every vertex. Original edges keep their
/// positions; the loops follow, grouped by vertex.
pub fn add_loops(g: &MultiGraph, per_vertex: usize) -> Result<MultiGraph> {
    check_capacity(
        "loop-augmented graph",
        g.edge_count() + per_vertex * g.vertex_count(),
    )?;
    let mut out = g.clone();
    for v in 0..g.vertex_count() {
        for _ in 0..per_vertex {
            out.add_edge(v, v)?;
        }
    }
    Ok(out)
}

/// Replaces every non-loop edge by a path of `t` edges. The path takes the
/// edge's position in the edge order; new internal vertices are appended
/// after the existing ones.
pub fn subdivide(g: &MultiGraph, t: usize) -> Result<MultiGraph> {
    if t == 0 {
        return Err(Error::input("subdivision length must be at least 1"));
    }
    let non_loops = (0..g.edge_count()).filter(|&k| !g.is_loop(k)).count();
    check_capacity(
        "subdivided graph",
        g.edge_count() + non_loops * (t - 1),
    )?;
    let mut out = MultiGraph::empty(g.vertex_count());
    for &(a, b) in g.edges() {
        if a == b || t == 1 {
            out.add_edge(a, b)?;
            continue;
        }
        let mut prev = a;
        for _ in 0..t - 1 {
            let mid = out.add_vertex();
            out.add_edge(prev, mid)?;
            prev = mid;
        }
        out.add_edge(prev, b)?;
    }
    Ok(out)
}

fn require_simple(g: &MultiGraph, min_vertices: usize) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::input("graph must be simple"));
    }
    if g.vertex_count() < min_vertices {
        return Err(Error::input(format!(
            "graph needs at least {min_vertices} vertices"
        )));
    }
    Ok(())
}

/// Element layout of `Φ(G)`: `x_i = i`, `x'_i = v + i`, `y_k = 2v + k`.
pub fn phi_elements(g: &MultiGraph) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let v = g.vertex_count();
    (
        (0..v).collect(),
        (v..2 * v).collect(),
        (2 * v..2 * v + g.edge_count()).collect(),
    )
}

/// The non-spanning-circuit description of `Φ(G)`: rank 3, the pairs
/// `{x_i, x'_i}`, and `{z_i, z_j, y_k}` for every edge `e_k = v_i v_j` with
/// `z_i ∈ {x_i, x'_i}`, `z_j ∈ {x_j, x'_j}`.
pub fn phi_description(g: &MultiGraph) -> Result<Description> {
    require_simple(g, 3)?;
    let v = g.vertex_count();
    let n = 2 * v + g.edge_count();
    check_capacity("Φ(G)", n)?;
    let mut circuits: Vec<SubsetMask> = (0..v)
        .map(|i| SubsetMask::from_elements([i, v + i]))
        .collect();
    for (k, &(i, j)) in g.edges().iter().enumerate() {
        for zi in [i, v + i] {
            for zj in [j, v + j] {
                circuits.push(SubsetMask::from_elements([zi, zj, 2 * v + k]));
            }
        }
    }
    Description::from_sets(DescriptionKind::NonSpanningCircuits, n, Some(3), circuits)
}

pub fn phi(g: &MultiGraph) -> Result<MatroidView> {
    MatroidView::from_description(&phi_description(g)?)
}

/// Path length used by `Φ_r`: `⌈(r-1)/2⌉`.
pub fn phi_r_path_length(r: usize) -> usize {
    (r.saturating_sub(1)).div_ceil(2)
}

/// The graph `tG°`: one loop per vertex, every edge subdivided into a path
/// of `t` edges.
pub fn phi_r_graph(g: &MultiGraph, r: usize) -> Result<MultiGraph> {
    subdivide(&add_loops(g, 1)?, phi_r_path_length(r))
}

/// `Φ_r(G)`: the bicircular matroid of `tG°` truncated to rank `r`.
pub fn phi_r(g: &MultiGraph, r: usize) -> Result<MatroidView> {
    require_simple(g, 1)?;
    if r <= 2 {
        return Err(Error::input("Φ_r needs r > 2"));
    }
    let b = bicircular(&phi_r_graph(g, r)?)?;
    if b.rank() < r {
        return Err(Error::input(format!(
            "B(tG°) has rank {} < {r}; the graph is too small",
            b.rank()
        )));
    }
    b.truncate(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::description::encode_from_oracle;
    use crate::table::RankTable;
    use DescriptionKind::*;

    fn count(v: &MatroidView, kind: DescriptionKind) -> usize {
        encode_from_oracle(v, kind).len()
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(count(&uniform(2, 4).unwrap(), Circuits), 4);
        let loops = uniform(0, 3).unwrap();
        assert!((0..3).all(|e| loops.is_loop(e)));
        assert_eq!(count(&uniform(3, 3).unwrap(), Bases), 1);
        assert!(uniform(4, 3).is_err());
    }

    #[test]
    fn family_examples() {
        let l15 = separation_family(FamilyId::new(FamilyTag::L15, 3)).unwrap();
        assert_eq!((l15.n(), l15.rank()), (11, 3));
        assert_eq!(count(&l15, NonSpanningCircuits), 36);

        let l18 = separation_family(FamilyId::new(FamilyTag::L18, 3)).unwrap();
        assert_eq!(count(&l18, Hyperplanes), 3);
        // ∅ plus the three parallel classes plus E; the four non-empty ones
        // are the sets of classes not of size n - 1.
        assert_eq!(count(&l18, CyclicFlats), 5);

        let l11 = separation_family(FamilyId::new(FamilyTag::L11, 3)).unwrap();
        assert_eq!(count(&l11, IndependentSets), 4);
        assert_eq!(count(&l11, SpanningSets), 7);

        assert!(separation_family(FamilyId::new(FamilyTag::L15, 2)).is_err());
        assert!(matches!(
            separation_family(FamilyId::new(FamilyTag::L15, 5)),
            Err(Error::Capacity { .. })
        ));
    }

    /// Independent iff no subset is a bicycle: a connected edge set of cycle
    /// rank two, minimal with that property.
    fn bicycle_oracle(g: &MultiGraph) -> RankTable {
        let m = g.edge_count();
        let cycle_rank = |s: SubsetMask| -> Option<usize> {
            // connected edge sets only
            let verts: Vec<usize> = s
                .iter()
                .flat_map(|k| [g.edges()[k].0, g.edges()[k].1])
                .collect();
            let mut seen = vec![verts[0]];
            let mut changed = true;
            while changed {
                changed = false;
                for k in s.iter() {
                    let (a, b) = g.edges()[k];
                    if seen.contains(&a) != seen.contains(&b) {
                        seen.push(if seen.contains(&a) { b } else { a });
                        changed = true;
                    }
                }
            }
            let mut distinct = verts.clone();
            distinct.sort();
            distinct.dedup();
            (seen.len() == distinct.len()).then(|| s.len() + 1 - distinct.len())
        };
        let candidates: Vec<SubsetMask> = (1u32..1 << m)
            .map(SubsetMask::from_bits)
            .filter(|&s| cycle_rank(s) == Some(2))
            .collect();
        let bicycles: Vec<SubsetMask> = candidates
            .iter()
            .copied()
            .filter(|&s| !candidates.iter().any(|t| t.is_proper_subset_of(s)))
            .collect();
        RankTable::from_independence(m, |a| !bicycles.iter().any(|b| b.is_subset_of(a)))
    }

    #[test]
    fn bicircular_examples() {
        let triangle = MultiGraph::complete(3);
        assert!(bicircular(&triangle).unwrap().same_matroid(&uniform(3, 3).unwrap()));

        let two_loops = MultiGraph::new(1, [(0, 0), (0, 0)]).unwrap();
        let b = bicircular(&two_loops).unwrap();
        assert_eq!(encode_from_oracle(&b, Circuits).sets(), &[SubsetMask::full(2)]);

        let handcuff = MultiGraph::new(3, [(0, 1), (1, 2), (0, 0), (2, 2)]).unwrap();
        let b = bicircular(&handcuff).unwrap();
        assert_eq!(encode_from_oracle(&b, Circuits).sets(), &[SubsetMask::full(4)]);
    }

    #[test]
    fn bicircular_matches_bicycle_definition() {
        let graphs = [
            MultiGraph::complete(4),
            add_loops(&MultiGraph::complete(3), 2).unwrap(),
            add_loops(&MultiGraph::path(3), 1).unwrap(),
            MultiGraph::new(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (2, 2)]).unwrap(),
            MultiGraph::new(5, [(0, 1), (1, 2), (2, 0), (3, 4), (3, 4), (4, 4), (0, 3), (1, 1)]).unwrap(),
        ];
        for g in &graphs {
            assert!(g.edge_count() <= 10);
            let b = bicircular(g).unwrap();
            assert_eq!(b.rank_table(), &bicycle_oracle(g), "{g}");
        }
    }

    #[test]
    fn graph_surgery() {
        let k3 = add_loops(&MultiGraph::complete(3), 2).unwrap();
        assert_eq!((k3.vertex_count(), k3.edge_count()), (3, 9));
        let p = subdivide(&MultiGraph::path(2), 2).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (3, 2));
        let t = phi_r_graph(&MultiGraph::path(3), 3).unwrap();
        assert_eq!(t.edge_count(), 5);
        assert_eq!((0..5).filter(|&k| t.is_loop(k)).count(), 3);
    }

    #[test]
    fn phi_examples() {
        let k3 = phi_description(&MultiGraph::complete(3)).unwrap();
        assert_eq!((k3.n(), k3.rank(), k3.len()), (9, Some(3), 15));
        let e3 = phi_description(&MultiGraph::empty(3)).unwrap();
        assert_eq!((e3.n(), e3.len()), (6, 3));
        assert!(phi(&MultiGraph::path(2)).is_err());
        assert!(phi(&MultiGraph::new(3, [(0, 1), (0, 1)]).unwrap()).is_err());
    }

    #[test]
    fn phi_is_truncated_bicircular_of_doubly_looped_graph() {
        for g in MultiGraph::all_simple(3) {
            let direct = phi(&g).unwrap();
            let looped = add_loops(&g, 2).unwrap();
            let b = bicircular(&looped).unwrap().truncate(3).unwrap();
            // B(G°°) lists edges first, then the two loops of each vertex.
            let m = g.edge_count();
            let v = g.vertex_count();
            let mut perm = vec![0; m + 2 * v];
            for (k, slot) in perm.iter_mut().take(m).enumerate() {
                *slot = 2 * v + k;
            }
            for i in 0..v {
                perm[m + 2 * i] = i;
                perm[m + 2 * i + 1] = v + i;
            }
            assert!(b.relabel(&perm).unwrap().same_matroid(&direct), "{g}");
        }
    }

    #[test]
    fn phi_r_parameters() {
        assert_eq!(phi_r_path_length(3), 1);
        assert_eq!(phi_r_path_length(4), 2);
        assert_eq!(phi_r_path_length(5), 2);
        for r in 3..=6 {
            let t = phi_r_path_length(r);
            assert!(t + 2 <= r && 2 * t + 2 > r, "r={r}");
        }
        let p = phi_r(&MultiGraph::path(3), 3).unwrap();
        assert_eq!((p.n(), p.rank()), (5, 3));
        assert!(phi_r(&MultiGraph::path(3), 2).is_err());
    }

    #[test]
    fn phi_r_nsc_are_paths_with_end_loops() {
        for g in [MultiGraph::path(3), MultiGraph::complete(3)] {
            let r = 3;
            let t = phi_r_path_length(r);
            let graph = phi_r_graph(&g, r).unwrap();
            let v = phi_r(&g, r).unwrap();
            let nsc = encode_from_oracle(&v, NonSpanningCircuits);
            assert_eq!(nsc.len(), g.edge_count());
            for c in nsc.sets() {
                assert_eq!(c.len(), t + 2);
                let loops: Vec<usize> = c.iter().filter(|&k| graph.is_loop(k)).collect();
                assert_eq!(loops.len(), 2);
                let (a, b) = (graph.edges()[loops[0]].0, graph.edges()[loops[1]].0);
                assert!(g.has_edge(a, b));
            }
        }
    }
}
