//! Descriptions as bipartite graphs, so that description isomorphism becomes
//! graph isomorphism.
//!
//! Vertices `0..n` are the ground-set elements, followed by one vertex per
//! listed set, adjacent to its members. Every set vertex carries two pendant
//! paths of length 2 (markers); a rank-`k` annotation adds, for each 1-bit
//! `b` of `k`, a pendant path of length `b + 3`. A header rank (nsc and
//! dephyp kinds) sits on an extra vertex with three markers and the same bit
//! arms. Elements never end a pendant path longer than 1, so roles can be
//! read back off the unlabeled graph.

use std::collections::HashMap;

use crate::description::{Description, DescriptionKind};
use crate::error::{Error, Result};
use crate::families::MultiGraph;
use crate::mask::SubsetMask;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    Element(usize),
    Set(usize),
    Header,
    Gadget,
}

#[derive(Clone, Debug)]
pub struct EncodedBipartiteGraph {
    pub graph: MultiGraph,
    /// Role of every vertex; used for self-checks only.
    pub roles: Vec<VertexRole>,
    pub kind: DescriptionKind,
}

const SET_MARKERS: usize = 2;
const HEADER_MARKERS: usize = 3;

fn pendant_path(g: &mut MultiGraph, roles: &mut Vec<VertexRole>, anchor: usize, len: usize) {
    let mut prev = anchor;
    for _ in 0..len {
        let v = g.add_vertex();
        roles.push(VertexRole::Gadget);
        g.add_edge(prev, v).expect("vertex exists");
        prev = v;
    }
}

fn decorate(
    g: &mut MultiGraph,
    roles: &mut Vec<VertexRole>,
    anchor: usize,
    markers: usize,
    rank: Option<usize>,
) {
    for _ in 0..markers {
        pendant_path(g, roles, anchor, 2);
    }
    if let Some(mut k) = rank {
        let mut bit = 0;
        while k > 0 {
            if k & 1 == 1 {
                pendant_path(g, roles, anchor, bit + 3);
            }
            k >>= 1;
            bit += 1;
        }
    }
}

pub fn encode_bipartite(desc: &Description) -> EncodedBipartiteGraph {
    let n = desc.n();
    let kind = desc.kind();
    let mut g = MultiGraph::empty(n);
    let mut roles: Vec<VertexRole> = (0..n).map(VertexRole::Element).collect();
    let set_vertices: Vec<usize> = (0..desc.len())
        .map(|i| {
            roles.push(VertexRole::Set(i));
            g.add_vertex()
        })
        .collect();
    for (i, (set, _)) in desc.entries().enumerate() {
        for e in set.iter() {
            g.add_edge(e, set_vertices[i]).expect("vertices exist");
        }
    }
    for (i, (_, rank)) in desc.entries().enumerate() {
        let rank = if kind.needs_set_ranks() { rank } else { None };
        decorate(&mut g, &mut roles, set_vertices[i], SET_MARKERS, rank);
    }
    if let Some(r) = desc.rank() {
        let h = g.add_vertex();
        roles.push(VertexRole::Header);
        decorate(&mut g, &mut roles, h, HEADER_MARKERS, Some(r));
    }
    EncodedBipartiteGraph {
        graph: g,
        roles,
        kind,
    }
}

/// Reads a description of the given kind back from an encoded graph.
/// Elements are numbered by increasing vertex index, so the result agrees
/// with the original up to a relabeling of the ground set (and exactly when
/// the vertex numbering is the one produced by [`encode_bipartite`]).
pub fn decode_bipartite(g: &MultiGraph, kind: DescriptionKind) -> Result<Description> {
    let v = g.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); v];
    for &(a, b) in g.edges() {
        if a == b {
            return Err(Error::Decode("encoded graphs have no loops".into()));
        }
        adj[a].push(b);
        adj[b].push(a);
    }

    let mut gadget = vec![false; v];
    let mut markers: HashMap<usize, usize> = HashMap::new();
    let mut bits: HashMap<usize, usize> = HashMap::new();
    let mut empty_sets = 0;
    for leaf in (0..v).filter(|&u| adj[u].len() == 1) {
        let mut path = vec![leaf];
        let mut prev = leaf;
        let mut cur = adj[leaf][0];
        while adj[cur].len() == 2 {
            path.push(cur);
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
        }
        if adj[cur].len() == 1 {
            // A bare path: the only such component is an empty, rank-0 set
            // with its two markers.
            path.push(cur);
            if path.len() != 5 {
                return Err(Error::Decode(format!("unexpected path component of {} vertices", path.len())));
            }
            if leaf < cur {
                empty_sets += 1;
                for &u in &path {
                    gadget[u] = true;
                }
            }
            continue;
        }
        match path.len() {
            1 => {}
            2 => {
                *markers.entry(cur).or_insert(0) += 1;
                path.iter().for_each(|&u| gadget[u] = true);
            }
            len => {
                let bit = len - 3;
                let entry = bits.entry(cur).or_insert(0);
                if *entry & (1 << bit) != 0 {
                    return Err(Error::Decode("repeated rank bit".into()));
                }
                *entry |= 1 << bit;
                path.iter().for_each(|&u| gadget[u] = true);
            }
        }
    }

    let mut header = None;
    let mut set_vertices = Vec::new();
    for (&anchor, &count) in &markers {
        match count {
            SET_MARKERS => set_vertices.push(anchor),
            HEADER_MARKERS if header.is_none() => header = Some(anchor),
            _ => return Err(Error::Decode(format!("vertex {anchor} has {count} markers"))),
        }
    }
    set_vertices.sort_unstable();
    let is_anchor = |u: usize| markers.contains_key(&u);
    let elements: Vec<usize> = (0..v).filter(|&u| !gadget[u] && !is_anchor(u)).collect();
    let mut element_index = vec![usize::MAX; v];
    for (i, &u) in elements.iter().enumerate() {
        element_index[u] = i;
        if adj[u].iter().any(|&w| !set_vertices.contains(&w)) {
            return Err(Error::Decode(format!("element vertex {u} touches a non-set vertex")));
        }
    }
    for &anchor in bits.keys() {
        if !is_anchor(anchor) {
            return Err(Error::Decode(format!("rank bits on unmarked vertex {anchor}")));
        }
    }

    let n = elements.len();
    let mut entries: Vec<(SubsetMask, Option<usize>)> = set_vertices
        .iter()
        .map(|&s| {
            let set = adj[s]
                .iter()
                .filter(|&&w| element_index[w] != usize::MAX)
                .map(|&w| element_index[w])
                .collect();
            let rank = kind.needs_set_ranks().then(|| bits.get(&s).copied().unwrap_or(0));
            (set, rank)
        })
        .collect();
    for _ in 0..empty_sets {
        entries.push((SubsetMask::EMPTY, kind.needs_set_ranks().then_some(0)));
    }
    let rank = header.map(|h| bits.get(&h).copied().unwrap_or(0));
    if kind.needs_header_rank() != rank.is_some() {
        return Err(Error::Decode("header vertex does not match the kind".into()));
    }
    Description::new(kind, n, rank, entries)
}
