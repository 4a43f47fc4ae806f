//! Generators for the two tight families.
//!
//! * `apex_counterexample(k, l, p)`: `p` disjoint cliques of order `l` plus
//!   one apex vertex adjacent to exactly `k - 1` vertices in each clique.
//!   No k-connected subgraph contains the apex, so no k-proper partition of
//!   the whole graph exists.
//! * `join_tightness(k, r, s)`: `s` disjoint cliques of order `r` joined
//!   completely to a spine clique of order `k - 1`. The spine can serve only
//!   one part, which forces at least `s` parts in any k-proper partition.
//!
//! Parameters are free integers; the algebraic couplings that make these
//! families extremal rarely have integer solutions, and the structural
//! claims tested here hold regardless.

use crate::error::Error;
use crate::graph::Graph;

/// Number of vertices of `apex_counterexample(k, l, p)`: `p*l + 1`.
/// The apex is the last vertex, id `p*l`.
pub fn apex_vertex(l: usize, p: usize) -> usize {
    p * l
}

/// Disjoint cliques `p x K_l` plus an apex adjacent to the first `k - 1`
/// vertices of each clique. Minimum degree is `min(l - 1, p*(k - 1))`.
pub fn apex_counterexample(k: usize, l: usize, p: usize) -> Result<Graph, Error> {
    if k < 2 {
        return Err(Error::domain("apex construction needs k >= 2"));
    }
    if l < k {
        return Err(Error::domain(format!(
            "apex construction needs clique order l >= k (got l = {l}, k = {k})"
        )));
    }
    if p < 1 {
        return Err(Error::domain("apex construction needs at least one clique"));
    }
    let apex = apex_vertex(l, p);
    let mut edges = Vec::new();
    for c in 0..p {
        let base = c * l;
        for i in 0..l {
            for j in (i + 1)..l {
                edges.push((base + i, base + j));
            }
        }
        for a in 0..(k - 1) {
            edges.push((apex, base + a));
        }
    }
    Graph::from_edge_list_with_order(apex + 1, &edges)
}

/// `s` disjoint cliques `K_r` joined to a spine `K_{k-1}`: every clique
/// vertex is adjacent to its clique and the whole spine, every spine vertex
/// to everything. `n = s*r + k - 1`, minimum degree `r + k - 2`.
pub fn join_tightness(k: usize, r: usize, s: usize) -> Result<Graph, Error> {
    if k < 2 {
        return Err(Error::domain("join construction needs k >= 2"));
    }
    if r < 2 {
        return Err(Error::domain("join construction needs clique order r >= 2"));
    }
    if s < 1 {
        return Err(Error::domain("join construction needs at least one clique"));
    }
    let cliques = Graph::disjoint_union(&vec![Graph::complete(r); s]);
    Ok(Graph::join(&cliques, &Graph::complete(k - 1)))
}

/// Vertex ids of the spine of `join_tightness(k, r, s)` (the last `k - 1`).
pub fn join_spine(k: usize, r: usize, s: usize) -> Vec<usize> {
    (s * r..s * r + k - 1).collect()
}
