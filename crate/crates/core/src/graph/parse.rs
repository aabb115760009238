use std::collections::HashMap;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// How the integer labels of an edge list are numbered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Indexing {
    Zero,
    One,
    #[default]
    Auto,
}

#[derive(Debug, Clone)]
pub struct EdgeListOptions {
    pub indexing: Indexing,
    pub comment_prefixes: Vec<String>,
    /// Keep only the largest connected component instead of rejecting
    /// disconnected input.
    pub largest_component: bool,
}

impl Default for EdgeListOptions {
    fn default() -> Self {
        EdgeListOptions {
            indexing: Indexing::Auto,
            comment_prefixes: vec!["#".into(), "%".into()],
            largest_component: false,
        }
    }
}

/// Parsed graph plus normalization counts.
#[derive(Debug, Clone)]
pub struct ParseReport {
    pub graph: Graph,
    pub self_loops: usize,
    pub duplicate_edges: usize,
    /// Vertices dropped by the largest-component reduction.
    pub discarded_vertices: usize,
    /// Indexing actually used (resolved when `Auto`).
    pub indexing: Indexing,
}

/// Parses a whitespace-separated edge list, one edge per line.
///
/// Vertices are re-indexed contiguously in ascending label order, so id 0 is
/// always the smallest label. A trailing numeric weight column is ignored, and
/// the size line after a `%%MatrixMarket` banner is skipped.
pub fn parse_edge_list(text: &str, options: &EdgeListOptions) -> Result<ParseReport> {
    let mut raw: Vec<(i64, i64)> = Vec::new();
    let mut skip_size_line = false;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.starts_with("%%MatrixMarket") {
            skip_size_line = true;
            continue;
        }
        if line.is_empty()
            || options
                .comment_prefixes
                .iter()
                .any(|p| !p.is_empty() && line.starts_with(p.as_str()))
        {
            continue;
        }
        if skip_size_line {
            skip_size_line = false;
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: lineno,
                msg: "expected two vertex ids".into(),
            });
        };
        let u = parse_label(a, lineno)?;
        let v = parse_label(b, lineno)?;
        for extra in tokens {
            if extra.parse::<f64>().is_err() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unexpected token {extra:?}"),
                });
            }
        }
        raw.push((u, v));
    }
    if raw.is_empty() {
        return Err(Error::Empty("edge list contains no edges".into()));
    }

    let min_label = raw.iter().map(|&(u, v)| u.min(v)).min().unwrap();
    let indexing = match options.indexing {
        Indexing::Auto => {
            if min_label < 0 {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("negative vertex label {min_label}"),
                });
            }
            if min_label == 0 {
                Indexing::Zero
            } else {
                Indexing::One
            }
        }
        Indexing::Zero if min_label < 0 => {
            return Err(Error::Parse {
                line: 0,
                msg: format!("negative vertex label {min_label} with 0-based indexing"),
            })
        }
        Indexing::One if min_label < 1 => {
            return Err(Error::Parse {
                line: 0,
                msg: format!("vertex label {min_label} with 1-based indexing"),
            })
        }
        other => other,
    };

    let mut labels: Vec<i64> = raw.iter().flat_map(|&(u, v)| [u, v]).collect();
    labels.sort_unstable();
    labels.dedup();
    let index: HashMap<i64, Vertex> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let edges: Vec<(Vertex, Vertex)> = raw.iter().map(|(u, v)| (index[u], index[v])).collect();

    let (graph, self_loops, duplicate_edges) = Graph::build(labels.len(), &edges)?;
    let graph = graph.with_labels(labels);
    if self_loops > 0 || duplicate_edges > 0 {
        log::warn!("edge list normalized: {self_loops} self-loops, {duplicate_edges} duplicate edges dropped");
    }
    let (graph, discarded_vertices) = if options.largest_component {
        let reduced = graph.largest_component();
        let discarded = graph.n() - reduced.n();
        if discarded > 0 {
            log::warn!("kept largest component: {discarded} vertices discarded");
        }
        (reduced, discarded)
    } else {
        graph.require_connected()?;
        (graph, 0)
    };
    Ok(ParseReport {
        graph,
        self_loops,
        duplicate_edges,
        discarded_vertices,
        indexing,
    })
}

fn parse_label(token: &str, line: usize) -> Result<i64> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("vertex id {token:?} is not an integer"),
    })
}

/// Reads the fixture format written by [`Graph::to_fixture`].
pub fn parse_fixture(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Empty("fixture has no header".into()))?;
    let (n, m) = parse_pair(header, 1)?;
    if n == 0 {
        return Err(Error::Empty("fixture has no vertices".into()));
    }
    // a connected graph needs at least n - 1 edges; checked before allocating
    if m < n - 1 {
        return Err(Error::Disconnected {
            components: n - m,
        });
    }
    let mut edges = Vec::with_capacity(m.min(1 << 20));
    for (lineno, line) in lines {
        let (u, v) = parse_pair(line, lineno)?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("vertex id out of range (n = {n})"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    let (graph, loops, dups) = Graph::build(n, &edges)?;
    if loops + dups > 0 {
        return Err(Error::Parse {
            line: 1,
            msg: "fixture contains self-loops or duplicate edges".into(),
        });
    }
    graph.require_connected()?;
    Ok(graph)
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let bad = |msg: &str| Error::Parse {
        line: lineno,
        msg: msg.to_string(),
    };
    let a = it.next().ok_or_else(|| bad("expected two integers"))?;
    let b = it.next().ok_or_else(|| bad("expected two integers"))?;
    if it.next().is_some() {
        return Err(bad("expected exactly two integers"));
    }
    let a = a.parse().map_err(|_| bad("not a nonnegative integer"))?;
    let b = b.parse().map_err(|_| bad("not a nonnegative integer"))?;
    Ok((a, b))
}
