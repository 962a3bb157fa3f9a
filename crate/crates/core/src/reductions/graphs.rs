//! Graph problems reduced to minor questions on `Φ(G)` and `Φ_r(G)`, with
//! brute-force solvers for the graph side.

use crate::description::{encode_from_oracle, Description, DescriptionKind};
use crate::error::Result;
use crate::families::{phi, phi_r, phi_r_path_length, uniform, MultiGraph};
use crate::mask::{k_subsets, SubsetMask};
use crate::view::MatroidView;

/// First `k`-set of pairwise non-adjacent vertices, as a vertex mask.
pub fn find_independent_set(g: &MultiGraph, k: usize) -> Option<SubsetMask> {
    let v = g.vertex_count();
    if k > v {
        return None;
    }
    k_subsets(v, k).find(|s| {
        g.edges()
            .iter()
            .all(|&(a, b)| !(s.contains(a) && s.contains(b)))
    })
}

/// An injective vertex map `h → g` sending every edge of `h` to an edge of
/// `g` (a not necessarily induced subgraph of `g` isomorphic to `h`).
pub fn find_subgraph(g: &MultiGraph, h: &MultiGraph) -> Option<Vec<usize>> {
    if h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count() {
        return None;
    }
    fn extend(g: &MultiGraph, h: &MultiGraph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let u = map.len();
        if u == h.vertex_count() {
            return true;
        }
        for w in 0..g.vertex_count() {
            if used[w] {
                continue;
            }
            let image = |x: usize| if x == u { w } else { map[x] };
            let fits = h
                .edges()
                .iter()
                .filter(|&&(_, b)| b == u)
                .all(|&(a, b)| g.has_edge(image(a), image(b)));
            if fits {
                map.push(w);
                used[w] = true;
                if extend(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    let mut map = Vec::new();
    let mut used = vec![false; g.vertex_count()];
    extend(g, h, &mut map, &mut used).then_some(map)
}

/// `(Φ(G), Φ(H))` as independent-set descriptions. `G` has a subgraph
/// isomorphic to `H` iff `Φ(G)` has a minor isomorphic to `Φ(H)`.
pub fn reduce_subgraph_iso(g: &MultiGraph, h: &MultiGraph) -> Result<(Description, Description)> {
    let pg = phi(g)?;
    let ph = phi(h)?;
    Ok((
        encode_from_oracle(&pg, DescriptionKind::IndependentSets),
        encode_from_oracle(&ph, DescriptionKind::IndependentSets),
    ))
}

/// Instance of the uniform-minor question built from an independent-set
/// question.
#[derive(Clone, Debug)]
pub struct UniformMinorInstance {
    pub host: Description,
    pub rank: usize,
    pub size: usize,
    /// Path length `t` used in the subdivision.
    pub path_length: usize,
}

impl UniformMinorInstance {
    pub fn pattern(&self) -> Result<MatroidView> {
        uniform(self.rank, self.size)
    }
}

/// `Φ_r(G)` and the target `U_{r, k + m t}`: `G` has `k` independent
/// vertices iff `Φ_r(G)` has such a uniform minor (when `k + m t ≥ r`).
pub fn reduce_independent_set(g: &MultiGraph, k: usize, r: usize) -> Result<UniformMinorInstance> {
    let host = phi_r(g, r)?;
    let t = phi_r_path_length(r);
    Ok(UniformMinorInstance {
        host: encode_from_oracle(&host, DescriptionKind::IndependentSets),
        rank: r,
        size: k + g.edge_count() * t,
        path_length: t,
    })
}
