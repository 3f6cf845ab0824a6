//! Test corpora: isomorphism-free connected simple graphs, small
//! multigraphs with loops or parallel edges, and matroids.

use crate::graph::Graph;
use crate::matroid::Matroid;

/// Largest vertex count accepted by [`connected_graphs`].
pub const MAX_CORPUS_VERTICES: usize = 7;

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..m).collect();
    fn rec(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == perm.len() {
            out.push(perm.clone());
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(k + 1, perm, out);
            perm.swap(k, i);
        }
    }
    rec(0, &mut perm, &mut out);
    out
}

fn mask_connected(m: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    let mut reach = 1u32;
    loop {
        let mut next = reach;
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 && (reach >> u & 1 == 1 || reach >> v & 1 == 1) {
                next |= 1 << u | 1 << v;
            }
        }
        if next == reach {
            return reach.count_ones() as usize == m;
        }
        reach = next;
    }
}

/// One representative per isomorphism class of connected simple graphs
/// on `m` vertices. Each is the edge subset of `K_m` with the smallest
/// mask in its orbit; edges keep the lexicographic order of `K_m`.
pub fn connected_graphs(m: usize) -> Vec<Graph> {
    assert!((1..=MAX_CORPUS_VERTICES).contains(&m), "vertex count out of corpus range");
    if m == 1 {
        return vec![Graph::new(1, &[]).expect("valid")];
    }
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).expect("pair exists")
    };
    let maps: Vec<Vec<usize>> = permutations(m)
        .iter()
        .map(|perm| pairs.iter().map(|&(u, v)| index(perm[u], perm[v])).collect())
        .collect();
    let total = 1u32 << pairs.len();
    let mut seen = vec![false; total as usize];
    let mut out = Vec::new();
    for mask in 0..total {
        if seen[mask as usize] || (mask.count_ones() as usize) < m - 1 || !mask_connected(m, &pairs, mask) {
            continue;
        }
        for map in &maps {
            let mut image = 0u32;
            for (k, &t) in map.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    image |= 1 << t;
                }
            }
            seen[image as usize] = true;
        }
        let edges: Vec<(usize, usize)> =
            (0..pairs.len()).filter(|k| mask >> k & 1 == 1).map(|k| (pairs[k].0 + 1, pairs[k].1 + 1)).collect();
        out.push(Graph::new(m, &edges).expect("valid edges"));
    }
    out
}

/// Connected simple graphs on `1..=max_vertices` vertices, by vertex count.
pub fn simple_corpus(max_vertices: usize) -> Vec<Graph> {
    (1..=max_vertices).flat_map(connected_graphs).collect()
}

/// Connected simple graphs whose Kirchhoff polynomial has degree at least
/// `min_rank`.
pub fn simple_corpus_with_rank(max_vertices: usize, min_rank: usize) -> Vec<Graph> {
    simple_corpus(max_vertices).into_iter().filter(|g| g.num_vertices() > min_rank).collect()
}

/// Connected multigraphs with at least one loop or parallel pair.
pub fn multigraph_corpus() -> Vec<Graph> {
    let specs: [(usize, &[(usize, usize)]); 9] = [
        (3, &[(1, 2), (1, 2), (2, 3)]),
        (3, &[(1, 2), (2, 3), (1, 3), (1, 2)]),
        (3, &[(1, 1), (1, 2), (2, 3), (1, 3)]),
        (4, &[(1, 2), (2, 3), (3, 4), (3, 4)]),
        (4, &[(1, 2), (2, 3), (3, 4), (1, 4), (2, 2)]),
        (4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (1, 2)]),
        (4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 4)]),
        (5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 5), (3, 5), (3, 5)]),
        (4, &[(1, 2), (1, 2), (2, 3), (3, 4), (1, 4), (1, 3), (3, 3)]),
    ];
    specs.iter().map(|(m, e)| Graph::new(*m, e).expect("valid multigraph")).collect()
}

#[derive(Clone, Debug)]
pub struct NamedMatroid {
    pub name: String,
    pub matroid: Matroid,
}

/// Graphic matroids of the simple and multigraph corpora plus a few
/// uniform matroids.
pub fn matroid_corpus(max_vertices: usize) -> Vec<NamedMatroid> {
    let mut out = Vec::new();
    for g in simple_corpus(max_vertices).iter().chain(multigraph_corpus().iter()) {
        if g.num_edges() == 0 {
            continue;
        }
        let matroid = Matroid::graphic(g).expect("corpus graphs are connected");
        out.push(NamedMatroid { name: format!("graphic[{}]", graph_name(g)), matroid });
    }
    for (k, n) in [(2, 4), (3, 5), (3, 6), (4, 6)] {
        out.push(NamedMatroid { name: format!("U({k},{n})"), matroid: Matroid::uniform(k, n).expect("k <= n") });
    }
    out
}

/// Compact one-line description, e.g. `4:12,13,23,34`.
pub fn graph_name(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|e| format!("{}{}", e.u, e.v)).collect();
    format!("{}:{}", g.num_vertices(), edges.join(","))
}
