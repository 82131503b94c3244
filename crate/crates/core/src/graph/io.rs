//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! n 4
//! e 0 1
//! e 1 2
//! ```
//!
//! The header must come before any edge. Endpoints must be distinct and below
//! `n`; the writer always puts the smaller one first, the reader accepts both.
//! Lines starting with any other keyword are handed back to the caller by
//! [`parse_graph_with_extra`] so that other line types (caps, aliases) can
//! share one file.

use std::collections::BTreeMap;

use super::Graph;
use crate::error::GraphError;

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a graph, rejecting any line that is not a comment, header or edge.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let (g, extra) = parse_graph_with_extra(text)?;
    match extra.first() {
        Some((line, content)) => Err(parse_err(*line, format!("unrecognized line `{content}`"))),
        None => Ok(g),
    }
}

/// Parses a graph and returns the unrecognized lines with their line numbers.
///
/// `v <name> <index>` lines declare aliases; afterwards `e` lines may use the
/// name in place of the index.
pub fn parse_graph_with_extra(text: &str) -> Result<(Graph, Vec<(usize, String)>), GraphError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut aliases: BTreeMap<String, usize> = BTreeMap::new();
    let mut extra = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "n" => {
                if n.is_some() {
                    return Err(parse_err(line_no, "second `n` header"));
                }
                if fields.len() != 2 {
                    return Err(parse_err(line_no, "expected `n <count>`"));
                }
                let count: usize = fields[1]
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad vertex count `{}`", fields[1])))?;
                if count == 0 {
                    return Err(parse_err(line_no, "a graph needs at least one vertex"));
                }
                n = Some(count);
            }
            "v" => {
                let count = n.ok_or_else(|| parse_err(line_no, "`v` line before the `n` header"))?;
                if fields.len() != 3 {
                    return Err(parse_err(line_no, "expected `v <name> <index>`"));
                }
                let index = parse_index(fields[2], line_no, count, &aliases)?;
                aliases.insert(fields[1].to_string(), index);
            }
            "e" => {
                let count = n.ok_or_else(|| parse_err(line_no, "edge before the `n` header"))?;
                if fields.len() != 3 {
                    return Err(parse_err(line_no, "expected `e <u> <v>`"));
                }
                let u = parse_index(fields[1], line_no, count, &aliases)?;
                let v = parse_index(fields[2], line_no, count, &aliases)?;
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
                }
                edges.push((line_no, u, v));
            }
            _ => extra.push((line_no, line.to_string())),
        }
    }

    let n = n.ok_or_else(|| parse_err(text.lines().count().max(1), "missing `n` header"))?;
    let mut seen = BTreeMap::new();
    for &(line_no, u, v) in &edges {
        let key = (u.min(v), u.max(v));
        if let Some(first) = seen.insert(key, line_no) {
            return Err(parse_err(
                line_no,
                format!("duplicate edge ({}, {}), first given on line {first}", key.0, key.1),
            ));
        }
    }
    let g = Graph::new(n, edges.iter().map(|&(_, u, v)| (u, v)))?;
    Ok((g, extra))
}

fn parse_index(token: &str, line: usize, n: usize, aliases: &BTreeMap<String, usize>) -> Result<usize, GraphError> {
    let v = match token.parse::<usize>() {
        Ok(v) => v,
        Err(_) => *aliases
            .get(token)
            .ok_or_else(|| parse_err(line, format!("unknown vertex `{token}`")))?,
    };
    if v >= n {
        return Err(parse_err(line, format!("vertex {v} out of range for n = {n}")));
    }
    Ok(v)
}

/// Serializes `g`; edges come out in lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for e in g.edges() {
        out.push_str(&format!("e {} {}\n", e.u(), e.v()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn parses_path() {
        let g = parse_graph("# a path\nn 3\ne 0 1\ne 1 2\n").unwrap();
        assert_eq!(g, path(3));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graph("n 2\ne 0 0\n").unwrap_err();
        assert_eq!(
            err,
            GraphError::Parse {
                line: 2,
                message: "self-loop at vertex 0".into()
            }
        );
        assert!(matches!(
            parse_graph("n 2\ne 0 2"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("n 3\ne 0 1\n\ne 1 0"),
            Err(GraphError::Parse { line: 4, .. })
        ));
        assert!(matches!(parse_graph("e 0 1"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(
            parse_graph("n 3\nx 1"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("n 3\ne 0"),
            Err(GraphError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn writes_sorted_edges() {
        let text = write_graph(&complete(4));
        assert_eq!(text, "n 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n");
        assert_eq!(parse_graph(&text).unwrap(), complete(4));
    }

    #[test]
    fn aliases_resolve_to_indices() {
        let g = parse_graph("n 3\nv hub 1\ne hub 0\ne 2 hub\n").unwrap();
        assert_eq!(g, path(3));
        assert!(parse_graph("n 3\ne hub 0").is_err());
    }

    #[test]
    fn extra_lines_are_returned() {
        let (g, extra) = parse_graph_with_extra("n 2\ne 0 1\nA 0 2\nA 1 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(extra, vec![(3, "A 0 2".to_string()), (4, "A 1 1".to_string())]);
    }
}
