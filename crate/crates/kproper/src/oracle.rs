//! Exhaustive brute-force references for small graphs.
//!
//! Everything here is implemented straight from the definitions on bitmask
//! subsets, sharing no code with the flow-based implementations it is used
//! to check. Hard size guards fail loudly instead of running forever.

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

const MAX_BRUTE_N: usize = 16;
const MAX_SUBGRAPH_N: usize = 14;
const MAX_PARTITION_N: usize = 10;
const MAX_EKN_N: usize = 7;

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect()
}

fn mask_to_set(mut mask: u64) -> VertexSet {
    let mut v = Vec::new();
    while mask != 0 {
        v.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    VertexSet::from_sorted(v)
}

/// Number of connected components of the subgraph induced by `sub`.
fn component_count(adj: &[u64], sub: u64) -> usize {
    let mut rem = sub;
    let mut count = 0;
    while rem != 0 {
        count += 1;
        let start = rem.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v] & sub & !seen;
            }
            seen |= next;
            frontier = next;
        }
        rem &= !seen;
    }
    count
}

/// Calls `f` with every subset of the set bits of `universe` that has
/// exactly `size` elements, in increasing mask order. Returns early when
/// `f` returns `true`.
fn any_subset_of_size(universe: u64, size: usize, f: &mut impl FnMut(u64) -> bool) -> bool {
    fn rec(
        positions: &[usize],
        start: usize,
        left: usize,
        acc: u64,
        f: &mut impl FnMut(u64) -> bool,
    ) -> bool {
        if left == 0 {
            return f(acc);
        }
        for i in start..=positions.len().saturating_sub(left) {
            if rec(positions, i + 1, left - 1, acc | (1 << positions[i]), f) {
                return true;
            }
        }
        false
    }
    let positions = mask_to_set(universe);
    if size > positions.len() {
        return false;
    }
    rec(positions.as_slice(), 0, size, 0, f)
}

/// Definitional k-connectivity of the subgraph induced by `sub`: removing
/// any fewer than `k` of its vertices leaves a connected graph on at least
/// two vertices.
fn is_k_connected_mask(adj: &[u64], sub: u64, k: usize) -> bool {
    let n_sub = sub.count_ones() as usize;
    if n_sub < k + 1 {
        return false;
    }
    for r in 0..k {
        let breaks = any_subset_of_size(sub, r, &mut |removal| {
            let rest = sub & !removal;
            rest.count_ones() < 2 || component_count(adj, rest) != 1
        });
        if breaks {
            return false;
        }
    }
    true
}

/// Definitional k-connectivity of the whole graph.
pub fn brute_is_k_connected(g: &Graph, k: usize) -> Result<bool, Error> {
    if g.n() > MAX_BRUTE_N {
        return Err(Error::SizeGuard {
            op: "brute_is_k_connected",
            n: g.n(),
            max: MAX_BRUTE_N,
        });
    }
    if k < 1 {
        return Err(Error::domain("connectivity level k must be at least 1"));
    }
    let adj = adjacency_masks(g);
    let all = if g.n() == 0 { 0 } else { (1u64 << g.n()) - 1 };
    Ok(is_k_connected_mask(&adj, all, k))
}

/// Exact vertex connectivity: the smallest number of vertices whose removal
/// disconnects the graph or leaves fewer than two vertices.
pub fn brute_vertex_connectivity(g: &Graph) -> Result<usize, Error> {
    let n = g.n();
    if n > MAX_BRUTE_N {
        return Err(Error::SizeGuard {
            op: "brute_vertex_connectivity",
            n,
            max: MAX_BRUTE_N,
        });
    }
    if n < 2 {
        return Err(Error::domain(
            "vertex connectivity needs at least two vertices",
        ));
    }
    let adj = adjacency_masks(g);
    let all = (1u64 << n) - 1;
    for s in 0..=(n - 2) {
        let disconnects = any_subset_of_size(all, s, &mut |removal| {
            component_count(&adj, all & !removal) != 1
        });
        if disconnects {
            return Ok(s);
        }
    }
    Ok(n - 1)
}

/// Searches every vertex subset for an induced k-connected subgraph and
/// returns one of maximum order (the first such subset in increasing mask
/// order), or `None` when no subset qualifies.
pub fn brute_has_k_connected_subgraph(
    g: &Graph,
    k: usize,
) -> Result<Option<VertexSet>, Error> {
    let n = g.n();
    if n > MAX_SUBGRAPH_N {
        return Err(Error::SizeGuard {
            op: "brute_has_k_connected_subgraph",
            n,
            max: MAX_SUBGRAPH_N,
        });
    }
    if k < 1 {
        return Err(Error::domain("connectivity level k must be at least 1"));
    }
    let adj = adjacency_masks(g);
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    for size in (k + 1..=n).rev() {
        let mut found = None;
        any_subset_of_size(all, size, &mut |sub| {
            // Cheap rejection: every member needs >= k neighbors inside.
            let mut m = sub;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if ((adj[v] & sub).count_ones() as usize) < k {
                    return false;
                }
            }
            if is_k_connected_mask(&adj, sub, k) {
                found = Some(mask_to_set(sub));
                true
            } else {
                false
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Result of the exhaustive minimum k-proper partition search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteMinPartition {
    Found { parts: Vec<VertexSet> },
    Infeasible,
}

impl BruteMinPartition {
    pub fn part_count(&self) -> Option<usize> {
        match self {
            BruteMinPartition::Found { parts } => Some(parts.len()),
            BruteMinPartition::Infeasible => None,
        }
    }
}

/// Enumerates set partitions (restricted-growth strings) and returns a
/// partition into the fewest parts such that every part induces a
/// k-connected subgraph, or `Infeasible` when no partition qualifies.
pub fn brute_min_k_proper_partition(g: &Graph, k: usize) -> Result<BruteMinPartition, Error> {
    let n = g.n();
    if n > MAX_PARTITION_N {
        return Err(Error::SizeGuard {
            op: "brute_min_k_proper_partition",
            n,
            max: MAX_PARTITION_N,
        });
    }
    if k < 1 {
        return Err(Error::domain("connectivity level k must be at least 1"));
    }
    if n == 0 {
        return Ok(BruteMinPartition::Found { parts: Vec::new() });
    }
    let adj = adjacency_masks(g);
    let mut feasible = vec![None::<bool>; 1 << n];
    let mut part_ok = |mask: u64, feasible: &mut Vec<Option<bool>>| -> bool {
        let idx = mask as usize;
        if let Some(v) = feasible[idx] {
            return v;
        }
        let v = is_k_connected_mask(&adj, mask, k);
        feasible[idx] = Some(v);
        v
    };

    // A part needs at least k + 1 vertices, so more than n / (k + 1) parts
    // can never win.
    let hard_cap = n / (k + 1);
    let mut best: Option<Vec<u64>> = None;
    let mut best_len = hard_cap + 1;
    let mut parts: Vec<u64> = Vec::new();

    fn rec(
        v: usize,
        n: usize,
        parts: &mut Vec<u64>,
        best: &mut Option<Vec<u64>>,
        best_len: &mut usize,
        part_ok: &mut impl FnMut(u64) -> bool,
    ) {
        if parts.len() >= *best_len {
            return;
        }
        if v == n {
            if parts.iter().all(|&p| part_ok(p)) {
                *best_len = parts.len();
                *best = Some(parts.clone());
            }
            return;
        }
        for i in 0..parts.len() {
            parts[i] |= 1 << v;
            rec(v + 1, n, parts, best, best_len, part_ok);
            parts[i] &= !(1 << v);
        }
        parts.push(1 << v);
        rec(v + 1, n, parts, best, best_len, part_ok);
        parts.pop();
    }

    rec(0, n, &mut parts, &mut best, &mut best_len, &mut |mask| {
        part_ok(mask, &mut feasible)
    });

    Ok(match best {
        Some(masks) => BruteMinPartition::Found {
            parts: masks.into_iter().map(mask_to_set).collect(),
        },
        None => BruteMinPartition::Infeasible,
    })
}

/// Maximum number of edges of an n-vertex graph with no k-connected
/// subgraph, by raw enumeration of all graphs on `n` labeled vertices.
pub fn brute_e_k_n(k: usize, n: usize) -> Result<usize, Error> {
    if n > MAX_EKN_N {
        return Err(Error::SizeGuard {
            op: "brute_e_k_n",
            n,
            max: MAX_EKN_N,
        });
    }
    if k < 1 {
        return Err(Error::domain("connectivity level k must be at least 1"));
    }
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let all_vertices = if n == 0 { 0u64 } else { (1u64 << n) - 1 };
    let mut best = 0usize;
    for mask in 0u64..(1 << slots.len()) {
        let edges = mask.count_ones() as usize;
        if edges <= best {
            continue;
        }
        let mut adj = vec![0u64; n];
        for (i, &(u, v)) in slots.iter().enumerate() {
            if mask & (1 << i) != 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let has_k_connected = (k + 1..=n).any(|size| {
            any_subset_of_size(all_vertices, size, &mut |sub| {
                is_k_connected_mask(&adj, sub, k)
            })
        });
        if !has_k_connected {
            best = edges;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edge_list_with_order(10, &edges).unwrap()
    }

    #[test]
    fn connectivity_of_small_standards() {
        assert_eq!(brute_vertex_connectivity(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(brute_vertex_connectivity(&Graph::complete(4)).unwrap(), 3);
        assert_eq!(brute_vertex_connectivity(&petersen()).unwrap(), 3);
        assert_eq!(brute_vertex_connectivity(&Graph::path(4)).unwrap(), 1);
    }

    #[test]
    fn size_guards_fire() {
        let g = Graph::edgeless(17);
        assert!(matches!(
            brute_vertex_connectivity(&g),
            Err(Error::SizeGuard { .. })
        ));
        assert!(matches!(
            brute_e_k_n(2, 8),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn trees_have_no_two_connected_subgraph() {
        let tree = Graph::from_edge_list(&[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(brute_has_k_connected_subgraph(&tree, 2).unwrap(), None);
    }

    #[test]
    fn complete_graph_subgraph_is_everything() {
        let k5 = Graph::complete(5);
        let w = brute_has_k_connected_subgraph(&k5, 4).unwrap().unwrap();
        assert_eq!(w, VertexSet::full(5));
    }

    #[test]
    fn apex_never_in_a_two_connected_subgraph() {
        let g = extremal::apex_counterexample(2, 3, 2).unwrap();
        let apex = extremal::apex_vertex(3, 2);
        let w = brute_has_k_connected_subgraph(&g, 2).unwrap().unwrap();
        assert!(!w.contains(apex));
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn min_partition_small_cases() {
        let two_k4 = Graph::disjoint_union(&[Graph::complete(4), Graph::complete(4)]);
        let got = brute_min_k_proper_partition(&two_k4, 2).unwrap();
        assert_eq!(got.part_count(), Some(2));

        let c6 = Graph::cycle(6);
        let got = brute_min_k_proper_partition(&c6, 2).unwrap();
        assert_eq!(got.part_count(), Some(1));

        let join = extremal::join_tightness(2, 3, 2).unwrap();
        let got = brute_min_k_proper_partition(&join, 2).unwrap();
        assert_eq!(got.part_count(), Some(2));
    }

    #[test]
    fn min_partition_reports_infeasible() {
        // A path has no 2-connected part anywhere.
        let got = brute_min_k_proper_partition(&Graph::path(5), 2).unwrap();
        assert_eq!(got, BruteMinPartition::Infeasible);
    }

    #[test]
    fn extremal_edge_counts() {
        assert_eq!(brute_e_k_n(2, 3).unwrap(), 2);
        assert_eq!(brute_e_k_n(2, 5).unwrap(), 4);
        // On 4 vertices only K4 itself is 3-connected, so dropping any one
        // edge is extremal.
        assert_eq!(brute_e_k_n(3, 4).unwrap(), 5);
    }

    #[test]
    fn definitional_k_connectivity() {
        assert!(brute_is_k_connected(&Graph::complete(4), 3).unwrap());
        assert!(!brute_is_k_connected(&Graph::complete(4), 4).unwrap());
        assert!(!brute_is_k_connected(&Graph::path(4), 2).unwrap());
        assert!(brute_is_k_connected(&Graph::cycle(6), 2).unwrap());
    }
}
