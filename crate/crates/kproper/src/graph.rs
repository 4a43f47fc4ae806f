//! Canonical undirected simple graphs with dense vertex ids.
//!
//! Vertices are `0..n`. Neighbor lists are kept sorted and deduplicated, so
//! two graphs with equal adjacency are structurally equal. An optional label
//! table preserves the caller's original vertex names across subgraph
//! operations; algorithms that nest subgraphs report parts in terms of the
//! original vertices.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::Rational;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds from a slice already known to be sorted and deduplicated.
    pub fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        VertexSet::new(v)
    }

    pub fn minus(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_sorted(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_sorted(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

/// An immutable undirected simple graph.
///
/// Invariants: no self-loops, no parallel edges, symmetric adjacency,
/// neighbor lists sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            labels: None,
        }
    }

    /// Builds a graph on `0..n` from an edge list. Duplicate edges are
    /// collapsed; a self-loop or an endpoint `>= n` is an error.
    pub fn from_edge_list_with_order(n: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::domain(format!(
                    "edge ({u}, {v}) outside vertex range 0..{n}"
                )));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::finish(adj, None))
    }

    /// Builds a graph from an edge list, taking `n` as one more than the
    /// largest id mentioned.
    pub fn from_edge_list(edges: &[(usize, usize)]) -> Result<Graph, Error> {
        let n = edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0);
        Self::from_edge_list_with_order(n, edges)
    }

    /// Builds a graph from named endpoints plus explicitly isolated names.
    /// Names are compacted to dense ids in order of first appearance and
    /// preserved as labels.
    pub fn from_named_edges(
        edges: &[(String, String)],
        isolated: &[String],
    ) -> Result<Graph, Error> {
        let mut ids: BTreeMap<String, usize> = BTreeMap::new();
        let mut labels: Vec<String> = Vec::new();
        let mut intern = |name: &str, labels: &mut Vec<String>| -> usize {
            *ids.entry(name.to_string()).or_insert_with(|| {
                labels.push(name.to_string());
                labels.len() - 1
            })
        };
        for name in isolated {
            intern(name, &mut labels);
        }
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let u = intern(a, &mut labels);
            let v = intern(b, &mut labels);
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {a}")));
            }
            pairs.push((u, v));
        }
        let mut adj = vec![Vec::new(); labels.len()];
        for (u, v) in pairs {
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::finish(adj, Some(labels)))
    }

    fn finish(mut adj: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Graph {
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Graph {
            adj,
            edge_count: edge_count / 2,
            labels,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// The label of vertex `v` (its own id rendered as text when no label
    /// table is attached).
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(table) => table[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn has_custom_labels(&self) -> bool {
        self.labels.is_some()
    }

    pub fn labels(&self) -> Vec<String> {
        self.vertices().map(|v| self.label(v)).collect()
    }

    /// Minimum degree. The empty graph has no degrees to take a minimum of.
    pub fn min_degree(&self) -> Result<usize, Error> {
        self.adj
            .iter()
            .map(|l| l.len())
            .min()
            .ok_or_else(|| Error::domain("minimum degree of the empty graph is undefined"))
    }

    /// Lowest-id vertex of minimum degree.
    pub fn min_degree_vertex(&self) -> Result<usize, Error> {
        if self.n() == 0 {
            return Err(Error::domain("minimum degree of the empty graph is undefined"));
        }
        Ok(self
            .vertices()
            .min_by_key(|&v| (self.degree(v), v))
            .unwrap())
    }

    /// Average degree `2e/n` as an exact rational.
    pub fn average_degree(&self) -> Result<Rational, Error> {
        if self.n() == 0 {
            return Err(Error::domain("average degree of the empty graph is undefined"));
        }
        Ok(Rational::new(
            2 * self.edge_count as i64,
            self.n() as i64,
        ))
    }

    /// The subgraph induced by `s`, with labels inherited from `self`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, Error> {
        Ok(self.induced_with_map(s)?.0)
    }

    /// The subgraph induced by `s` along with the map from new ids back to
    /// the ids of `self`.
    pub fn induced_with_map(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), Error> {
        if let Some(v) = s.iter().find(|&v| v >= self.n()) {
            return Err(Error::domain(format!(
                "vertex {v} is outside the graph (n = {})",
                self.n()
            )));
        }
        let to_old: Vec<usize> = s.iter().collect();
        let mut to_new = vec![usize::MAX; self.n()];
        for (new, &old) in to_old.iter().enumerate() {
            to_new[old] = new;
        }
        let mut adj = vec![Vec::new(); to_old.len()];
        for (new, &old) in to_old.iter().enumerate() {
            for &w in self.neighbors(old) {
                if to_new[w] != usize::MAX {
                    adj[new].push(to_new[w]);
                }
            }
        }
        let labels = Some(to_old.iter().map(|&old| self.label(old)).collect());
        Ok((Self::finish(adj, labels), to_old))
    }

    /// `self` minus the vertices of `s` (an induced subgraph on the rest).
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<Graph, Error> {
        let keep = VertexSet::full(self.n()).minus(s);
        self.induced_subgraph(&keep)
    }

    /// Side-by-side disjoint union. Vertices are relabeled to fresh dense
    /// ids; input labels are dropped.
    pub fn disjoint_union(graphs: &[Graph]) -> Graph {
        let mut adj = Vec::new();
        for g in graphs {
            let offset = adj.len();
            for v in g.vertices() {
                adj.push(g.neighbors(v).iter().map(|&w| w + offset).collect());
            }
        }
        Self::finish(adj, None)
    }

    /// Join: disjoint union of `a` and `b` plus every edge across.
    pub fn join(a: &Graph, b: &Graph) -> Graph {
        let mut adj: Vec<Vec<usize>> = Vec::with_capacity(a.n() + b.n());
        let offset = a.n();
        for v in a.vertices() {
            let mut list: Vec<usize> = a.neighbors(v).to_vec();
            list.extend(offset..offset + b.n());
            adj.push(list);
        }
        for v in b.vertices() {
            let mut list: Vec<usize> = (0..offset).collect();
            list.extend(b.neighbors(v).iter().map(|&w| w + offset));
            adj.push(list);
        }
        Self::finish(adj, None)
    }

    /// A copy of `self` with the given edges added (duplicates ignored).
    pub fn with_added_edges(&self, extra: &[(usize, usize)]) -> Result<Graph, Error> {
        let mut adj = self.adj.clone();
        for &(u, v) in extra {
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            if u >= self.n() || v >= self.n() {
                return Err(Error::domain(format!(
                    "edge ({u}, {v}) outside vertex range 0..{}",
                    self.n()
                )));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::finish(adj, self.labels.clone()))
    }

    /// A copy of `self` with one edge removed (if present).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        let removed = self.has_edge(u, v);
        Graph {
            adj,
            edge_count: self.edge_count - usize::from(removed),
            labels: self.labels.clone(),
        }
    }

    /// Connected components, each a sorted vertex set, ordered by their
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comps.push(VertexSet::new(comp));
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Label-preserving equality: same labeled vertex set and same labeled
    /// edge set, ignoring the internal id assignment.
    pub fn canonical_eq(&self, other: &Graph) -> bool {
        if self.n() != other.n() || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut mine = self.labels();
        let mut theirs = other.labels();
        mine.sort();
        theirs.sort();
        if mine != theirs {
            return false;
        }
        let canon = |g: &Graph| {
            let mut edges: Vec<(String, String)> = g
                .edges()
                .map(|(u, v)| {
                    let (a, b) = (g.label(u), g.label(v));
                    if a <= b {
                        (a, b)
                    } else {
                        (b, a)
                    }
                })
                .collect();
            edges.sort();
            edges
        };
        canon(self) == canon(other)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&w| w != v).collect())
            .collect();
        Self::finish(adj, None)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list_with_order(n, &edges).unwrap()
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list_with_order(n, &edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn triangle_from_edge_list() {
        let g = Graph::from_edge_list(&[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn edgeless_with_declared_order() {
        let g = Graph::from_edge_list_with_order(5, &[]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.min_degree().unwrap(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(&[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn self_loop_rejected() {
        assert!(matches!(
            Graph::from_edge_list(&[(1, 1)]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn induced_clique_restriction() {
        let k4 = Graph::complete(4);
        let k3 = k4.induced_subgraph(&VertexSet::new(vec![0, 1, 2])).unwrap();
        assert_eq!(k3.n(), 3);
        assert_eq!(k3.edge_count(), 3);
    }

    #[test]
    fn induced_two_adjacent_cycle_vertices() {
        let c5 = Graph::cycle(5);
        let sub = c5.induced_subgraph(&VertexSet::new(vec![0, 1])).unwrap();
        assert_eq!(sub.n(), 2);
        assert_eq!(sub.edge_count(), 1);
    }

    #[test]
    fn induced_out_of_range_is_domain_error() {
        let g = Graph::complete(3);
        assert!(g.induced_subgraph(&VertexSet::new(vec![0, 7])).is_err());
    }

    #[test]
    fn induced_preserves_original_labels() {
        let k4 = Graph::complete(4);
        let sub = k4.induced_subgraph(&VertexSet::new(vec![1, 3])).unwrap();
        assert_eq!(sub.labels(), vec!["1".to_string(), "3".to_string()]);
        let deeper = sub.induced_subgraph(&VertexSet::new(vec![1])).unwrap();
        assert_eq!(deeper.labels(), vec!["3".to_string()]);
    }

    #[test]
    fn remove_vertices_cases() {
        let k5 = Graph::complete(5);
        let k4 = k5.remove_vertices(&VertexSet::new(vec![4])).unwrap();
        assert_eq!((k4.n(), k4.edge_count()), (4, 6));

        let p3 = Graph::path(3);
        let rest = p3.remove_vertices(&VertexSet::new(vec![1])).unwrap();
        assert_eq!((rest.n(), rest.edge_count()), (2, 0));

        let star = Graph::from_edge_list(&[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let leaves = star.remove_vertices(&VertexSet::new(vec![0])).unwrap();
        assert_eq!(leaves.n(), 5);
        assert_eq!(leaves.min_degree().unwrap(), 0);
        assert_eq!(leaves.edge_count(), 0);
    }

    #[test]
    fn degree_summaries() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.min_degree().unwrap(), 3);
        assert_eq!(k4.average_degree().unwrap(), Rational::from_integer(3));

        let claw = Graph::from_edge_list(&[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(claw.min_degree().unwrap(), 1);
        assert_eq!(claw.average_degree().unwrap(), Rational::new(3, 2));

        assert!(Graph::edgeless(0).min_degree().is_err());
        assert!(Graph::edgeless(0).average_degree().is_err());
    }

    #[test]
    fn union_and_join_shapes() {
        let two_triangles = Graph::disjoint_union(&[Graph::complete(3), Graph::complete(3)]);
        assert_eq!(two_triangles.n(), 6);
        assert_eq!(two_triangles.edge_count(), 6);
        assert_eq!(two_triangles.connected_components().len(), 2);

        // Apex over two triangles: apex degree equals the other side's order.
        let apex = Graph::join(&two_triangles, &Graph::edgeless(1));
        assert_eq!(apex.degree(6), 6);

        // join(3K2, K2): n = 8, min degree 1 + 2 = 3.
        let three_k2 = Graph::disjoint_union(&[Graph::complete(2); 3].to_vec());
        let j = Graph::join(&three_k2, &Graph::complete(2));
        assert_eq!(j.n(), 8);
        assert_eq!(j.min_degree().unwrap(), 3);
    }

    #[test]
    fn named_edges_compact_in_first_appearance_order() {
        let g = Graph::from_named_edges(
            &[
                ("beta".into(), "alpha".into()),
                ("alpha".into(), "gamma".into()),
            ],
            &["lone".into()],
        )
        .unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.labels(), vec!["lone", "beta", "alpha", "gamma"]);
        assert_eq!(g.degree(0), 0);
        assert_eq!(g.degree(2), 2);
    }

    fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let m = pairs.len();
            proptest::collection::vec(any::<bool>(), m).prop_map(move |mask| {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .zip(&mask)
                    .filter(|(_, &keep)| keep)
                    .map(|(&e, _)| e)
                    .collect();
                Graph::from_edge_list_with_order(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn remove_vertices_keeps_exactly_outside_edges(g in arbitrary_graph(12), raw in proptest::collection::vec(0usize..12, 0..6)) {
            let s = VertexSet::new(raw.into_iter().filter(|&v| v < g.n()).collect());
            let h = g.remove_vertices(&s).unwrap();
            prop_assert_eq!(h.n(), g.n() - s.len());
            let expected = g
                .edges()
                .filter(|&(u, v)| !s.contains(u) && !s.contains(v))
                .count();
            prop_assert_eq!(h.edge_count(), expected);
        }

        #[test]
        fn join_edge_count_formula(a in arbitrary_graph(8), b in arbitrary_graph(8)) {
            let j = Graph::join(&a, &b);
            prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.n() * b.n());
        }
    }
}
