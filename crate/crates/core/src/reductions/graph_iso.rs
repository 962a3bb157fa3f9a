//! Graph isomorphism by colour refinement and individualization.

use std::collections::BTreeMap;

use crate::families::MultiGraph;

/// Adjacency with edge multiplicities; a loop counts once at its vertex.
fn adjacency(g: &MultiGraph) -> Vec<BTreeMap<usize, usize>> {
    let mut adj = vec![BTreeMap::new(); g.vertex_count()];
    for &(a, b) in g.edges() {
        *adj[a].entry(b).or_insert(0) += 1;
        if a != b {
            *adj[b].entry(a).or_insert(0) += 1;
        }
    }
    adj
}

type Colouring = Vec<usize>;

/// Refines both colourings jointly until stable, so that equal colour ids
/// mean the same thing in both graphs. Returns `false` as soon as the colour
/// histograms differ.
fn refine(
    adj: [&[BTreeMap<usize, usize>]; 2],
    colours: &mut [Colouring; 2],
) -> bool {
    loop {
        let classes_before = distinct(&colours[0]);
        let sig = |side: usize, v: usize, colours: &[Colouring; 2]| {
            let mut around: Vec<(usize, usize)> = adj[side][v]
                .iter()
                .map(|(&w, &mult)| (colours[side][w], mult))
                .collect();
            around.sort_unstable();
            (colours[side][v], around)
        };
        let sigs: [Vec<_>; 2] = [0, 1].map(|side| {
            (0..colours[side].len())
                .map(|v| sig(side, v, colours))
                .collect()
        });
        let mut names: Vec<_> = sigs[0].iter().chain(sigs[1].iter()).cloned().collect();
        names.sort();
        names.dedup();
        for side in 0..2 {
            for (v, s) in sigs[side].iter().enumerate() {
                colours[side][v] = names.binary_search(s).expect("signature was collected");
            }
        }
        if histogram(&colours[0]) != histogram(&colours[1]) {
            return false;
        }
        if distinct(&colours[0]) == classes_before {
            return true;
        }
    }
}

fn distinct(c: &[usize]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn histogram(c: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &x in c {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

/// A vertex bijection `map[g_vertex] = h_vertex` preserving edge
/// multiplicities, if one exists.
pub fn graph_isomorphism(g: &MultiGraph, h: &MultiGraph) -> Option<Vec<usize>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let adj_g = adjacency(g);
    let adj_h = adjacency(h);
    let n = g.vertex_count();
    let mut colours = [vec![0; n], vec![0; n]];
    if !refine([&adj_g, &adj_h], &mut colours) {
        return None;
    }
    search(&adj_g, &adj_h, colours)
}

fn search(
    adj_g: &[BTreeMap<usize, usize>],
    adj_h: &[BTreeMap<usize, usize>],
    colours: [Colouring; 2],
) -> Option<Vec<usize>> {
    let n = colours[0].len();
    let hist = histogram(&colours[0]);
    // Smallest non-singleton colour class, lowest colour id on ties.
    let target = hist
        .iter()
        .filter(|(_, &count)| count > 1)
        .min_by_key(|(&c, &count)| (count, c))
        .map(|(&c, _)| c);
    let Some(target) = target else {
        let mut map = vec![0; n];
        for v in 0..n {
            map[v] = colours[1]
                .iter()
                .position(|&c| c == colours[0][v])
                .expect("histograms agree");
        }
        return preserves_edges(adj_g, adj_h, &map).then_some(map);
    };
    let v = colours[0].iter().position(|&c| c == target).expect("class is nonempty");
    let fresh = n + 1 + colours[0].iter().max().copied().unwrap_or(0);
    for w in (0..n).filter(|&w| colours[1][w] == target) {
        let mut next = colours.clone();
        next[0][v] = fresh;
        next[1][w] = fresh;
        if refine([adj_g, adj_h], &mut next) {
            if let Some(map) = search(adj_g, adj_h, next) {
                return Some(map);
            }
        }
    }
    None
}

fn preserves_edges(
    adj_g: &[BTreeMap<usize, usize>],
    adj_h: &[BTreeMap<usize, usize>],
    map: &[usize],
) -> bool {
    adj_g.iter().enumerate().all(|(v, nbrs)| {
        nbrs.len() == adj_h[map[v]].len()
            && nbrs
                .iter()
                .all(|(&w, &mult)| adj_h[map[v]].get(&map[w]) == Some(&mult))
    })
}
