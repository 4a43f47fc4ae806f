//! Text formats: edge lists, DIMACS, and partition files.
//!
//! Edge list: one `u v` pair per line, `#` starts a comment, an optional
//! leading header `n <count>` declares the vertex count (enabling isolated
//! vertices and fixing numeric dense ids). Without the header, tokens are
//! treated as arbitrary vertex names, compacted in first-appearance order;
//! a line with a single token declares an isolated vertex.
//!
//! DIMACS: `c` comments, one `p edge <n> <m>` header, `e <u> <v>` lines with
//! 1-based endpoints.
//!
//! Serialization is canonical (sorted output), so serialize-parse-serialize
//! is a fixed point byte for byte.

use std::fmt::Write as _;

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// Parses the edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph, Error> {
    let mut declared_n: Option<usize> = None;
    let mut named_edges: Vec<(String, String)> = Vec::new();
    let mut isolated: Vec<String> = Vec::new();
    let mut numeric_edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    let mut saw_data = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens[0] == "n" && !saw_data {
            if declared_n.is_some() {
                return Err(Error::format(line_no, "duplicate n header"));
            }
            if tokens.len() != 2 {
                return Err(Error::format(line_no, "expected: n <count>"));
            }
            declared_n = Some(tokens[1].parse().map_err(|_| {
                Error::format(line_no, format!("bad vertex count {:?}", tokens[1]))
            })?);
            continue;
        }
        saw_data = true;
        match tokens.len() {
            1 => isolated.push(tokens[0].to_string()),
            2 => {
                if tokens[0] == tokens[1] {
                    return Err(Error::format(
                        line_no,
                        format!("self-loop at vertex {}", tokens[0]),
                    ));
                }
                named_edges.push((tokens[0].to_string(), tokens[1].to_string()));
                if let (Ok(u), Ok(v)) = (tokens[0].parse(), tokens[1].parse()) {
                    numeric_edges.push((u, v, line_no));
                }
            }
            _ => {
                return Err(Error::format(
                    line_no,
                    format!("expected one or two tokens, got {}", tokens.len()),
                ))
            }
        }
    }

    match declared_n {
        Some(n) => {
            if !isolated.is_empty() {
                return Err(Error::domain(
                    "single-token vertex lines are not allowed together with an n header",
                ));
            }
            if numeric_edges.len() != named_edges.len() {
                let bad = named_edges.len() - numeric_edges.len();
                return Err(Error::domain(format!(
                    "{bad} edge line(s) with non-numeric ids under an n header"
                )));
            }
            for &(u, v, line) in &numeric_edges {
                if u >= n || v >= n {
                    return Err(Error::format(
                        line,
                        format!("edge ({u}, {v}) outside declared range 0..{n}"),
                    ));
                }
            }
            let edges: Vec<(usize, usize)> =
                numeric_edges.iter().map(|&(u, v, _)| (u, v)).collect();
            Graph::from_edge_list_with_order(n, &edges)
        }
        None => Graph::from_named_edges(&named_edges, &isolated),
    }
}

/// Serializes to the edge-list format. Graphs without a custom label table
/// get an `n <count>` header and sorted numeric edges; labeled graphs get
/// name pairs sorted lexicographically, with isolated vertices as
/// single-name lines.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    if !g.has_custom_labels() {
        let _ = writeln!(out, "n {}", g.n());
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        edges.sort_unstable();
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
    } else {
        let mut lone: Vec<String> = g
            .vertices()
            .filter(|&v| g.degree(v) == 0)
            .map(|v| g.label(v))
            .collect();
        lone.sort();
        for name in lone {
            let _ = writeln!(out, "{name}");
        }
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
        for (a, b) in edges {
            let _ = writeln!(out, "{a} {b}");
        }
    }
    out
}

/// Parses the DIMACS edge format (1-based).
pub fn parse_dimacs(text: &str) -> Result<Graph, Error> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first() {
            None => continue,
            Some(&"c") => continue,
            Some(&"p") => {
                if n.is_some() {
                    return Err(Error::format(line_no, "duplicate p line"));
                }
                if tokens.len() != 4 || tokens[1] != "edge" {
                    return Err(Error::format(line_no, "expected: p edge <n> <m>"));
                }
                n = Some(tokens[2].parse().map_err(|_| {
                    Error::format(line_no, format!("bad vertex count {:?}", tokens[2]))
                })?);
            }
            Some(&"e") => {
                let n = n.ok_or_else(|| Error::format(line_no, "e line before p line"))?;
                if tokens.len() != 3 {
                    return Err(Error::format(line_no, "expected: e <u> <v>"));
                }
                let u: usize = tokens[1]
                    .parse()
                    .map_err(|_| Error::format(line_no, format!("bad endpoint {:?}", tokens[1])))?;
                let v: usize = tokens[2]
                    .parse()
                    .map_err(|_| Error::format(line_no, format!("bad endpoint {:?}", tokens[2])))?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(Error::format(
                        line_no,
                        format!("endpoint out of range 1..={n}"),
                    ));
                }
                if u == v {
                    return Err(Error::format(line_no, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(Error::format(
                    line_no,
                    format!("unrecognized line kind {other:?}"),
                ))
            }
        }
    }
    let n = n.ok_or_else(|| Error::format(1, "missing p edge header"))?;
    Graph::from_edge_list_with_order(n, &edges)
}

/// Serializes to DIMACS. Labels are dropped; vertices are written 1-based
/// by internal id.
pub fn serialize_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.n(), g.edge_count());
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.sort_unstable();
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Input/output format selector for the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, Error> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => serialize_edge_list(g),
        GraphFormat::Dimacs => serialize_dimacs(g),
    }
}

/// Writes a partition as one part per line, vertices by label.
pub fn serialize_partition(g: &Graph, parts: &[VertexSet]) -> String {
    let mut out = String::new();
    for part in parts {
        let labels: Vec<String> = part.iter().map(|v| g.label(v)).collect();
        let _ = writeln!(out, "{}", labels.join(" "));
    }
    out
}

/// Reads a partition file against a graph, resolving labels back to ids.
/// Unknown labels and repeats within one line are format errors; coverage
/// problems across parts are left for certification to report.
pub fn parse_partition(g: &Graph, text: &str) -> Result<Vec<VertexSet>, Error> {
    let mut by_label = std::collections::BTreeMap::new();
    for v in g.vertices() {
        by_label.insert(g.label(v), v);
    }
    let mut parts = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let mut members = Vec::with_capacity(tokens.len());
        for tok in tokens {
            match by_label.get(tok) {
                Some(&v) => members.push(v),
                None => {
                    return Err(Error::format(
                        line_no,
                        format!("unknown vertex {tok:?} in partition file"),
                    ))
                }
            }
        }
        let set = VertexSet::new(members.clone());
        if set.len() != members.len() {
            return Err(Error::format(line_no, "repeated vertex within one part"));
        }
        parts.push(set);
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dimacs_triangle() {
        let g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn dimacs_errors_carry_line_numbers() {
        let err = parse_dimacs("p edge 3 1\ne 1 9\n").unwrap_err();
        assert_eq!(err, Error::format(2, "endpoint out of range 1..=3"));
        let err = parse_dimacs("p edge 3 1\ne 2 2\n").unwrap_err();
        assert_eq!(err, Error::format(2, "self-loop at vertex 2"));
    }

    #[test]
    fn edge_list_comments_ignored() {
        let g = parse_edge_list("# a triangle\nn 3\n0 1 # first\n1 2\n0 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn edge_list_named_mode() {
        let g = parse_edge_list("a b\nb c\nd\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.labels(), vec!["a", "b", "c", "d"]);
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn edge_list_self_loop_line_number() {
        let err = parse_edge_list("n 3\n0 1\n2 2\n").unwrap_err();
        assert_eq!(err, Error::format(3, "self-loop at vertex 2"));
    }

    #[test]
    fn partition_round_trip() {
        let g = Graph::complete(5);
        let parts = vec![VertexSet::new(vec![0, 2, 4]), VertexSet::new(vec![1, 3])];
        let text = serialize_partition(&g, &parts);
        let back = parse_partition(&g, &text).unwrap();
        assert_eq!(back, parts);
        let err = parse_partition(&g, "0 9\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 1, .. }));
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
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn edge_list_round_trip_is_canonical(g in arbitrary_graph(50)) {
            let text = serialize_edge_list(&g);
            let back = parse_edge_list(&text).unwrap();
            prop_assert!(back.canonical_eq(&g));
            // serialize-parse-serialize is a byte-for-byte fixed point
            prop_assert_eq!(serialize_edge_list(&back), text);
        }

        #[test]
        fn dimacs_round_trip_is_canonical(g in arbitrary_graph(50)) {
            let text = serialize_dimacs(&g);
            let back = parse_dimacs(&text).unwrap();
            prop_assert!(back.canonical_eq(&g));
            prop_assert_eq!(serialize_dimacs(&back), text);
        }
    }
}
