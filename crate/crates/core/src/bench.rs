//! Benchmark plumbing: graph sources, the instance manifest and the table
//! row written as CSV.
//!
//! CSV columns: `name,n,m,l,s0,t_bff,t_bfs,gr_size,gr_time,grp_size,grp_time`.
//! `l` and `s0` are the farthest-first lower bound and length, times are
//! wall-clock seconds with three decimals, and a cell is `-` when the
//! procedure was not run or did not finish.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{generate, parse_edge_list, parse_fixture, DistanceOracle, EdgeListOptions, Graph, GraphKind};
use crate::heuristics::{bff, bff_bounds, binary_search_until, Strategy};
use crate::ties::TieBreak;

pub const CSV_HEADER: &str = "name,n,m,l,s0,t_bff,t_bfs,gr_size,gr_time,grp_size,grp_time";

/// Where a graph comes from: a file or a generator spec `gen:kind:param`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    File(PathBuf),
    Generated { kind: GraphKind, param: usize },
}

impl FromStr for GraphSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let Some(spec) = s.strip_prefix("gen:") else {
            if s.is_empty() {
                return Err(Error::InvalidArgument("empty graph path".into()));
            }
            return Ok(GraphSource::File(PathBuf::from(s)));
        };
        let (kind, param) = spec
            .split_once(':')
            .ok_or_else(|| Error::InvalidArgument(format!("generator spec {s:?} is not gen:kind:param")))?;
        let param = param
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("generator parameter {param:?} is not an integer")))?;
        Ok(GraphSource::Generated {
            kind: kind.parse()?,
            param,
        })
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::File(p) => write!(f, "{}", p.display()),
            GraphSource::Generated { kind, param } => write!(f, "gen:{kind}:{param}"),
        }
    }
}

/// How a graph file is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FileFormat {
    /// Fixture format if the text parses as one, otherwise an edge list.
    #[default]
    Auto,
    EdgeList,
    Fixture,
}

impl FromStr for FileFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(FileFormat::Auto),
            "edges" => Ok(FileFormat::EdgeList),
            "fixture" => Ok(FileFormat::Fixture),
            _ => Err(Error::InvalidArgument(format!("unknown format {s:?} (auto, edges, fixture)"))),
        }
    }
}

/// Parses graph text in the given format.
pub fn read_graph(text: &str, format: FileFormat, options: &EdgeListOptions) -> Result<Graph> {
    match format {
        FileFormat::Fixture => parse_fixture(text),
        FileFormat::EdgeList => parse_edge_list(text, options).map(|r| r.graph),
        FileFormat::Auto => match parse_fixture(text) {
            Ok(g) => Ok(g),
            Err(_) => parse_edge_list(text, options).map(|r| r.graph),
        },
    }
}

impl GraphSource {
    pub fn load(&self, format: FileFormat, options: &EdgeListOptions) -> Result<Graph> {
        match self {
            GraphSource::Generated { kind, param } => generate(*kind, *param),
            GraphSource::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
                read_graph(&text, format, options)
            }
        }
    }

    /// Resolves a relative file path against `base`.
    pub fn relative_to(self, base: &Path) -> Self {
        match self {
            GraphSource::File(p) if p.is_relative() => GraphSource::File(base.join(p)),
            other => other,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub name: String,
    pub source: GraphSource,
}

/// Reads `name path_or_genspec` lines; blank lines and `#` comments are
/// skipped.
pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: String| Error::Parse { line: idx + 1, msg };
        let mut it = line.split_whitespace();
        let (Some(name), Some(source), None) = (it.next(), it.next(), it.next()) else {
            return Err(bad("expected `name path_or_genspec`".into()));
        };
        let source = source.parse().map_err(|e: Error| bad(e.to_string()))?;
        out.push(ManifestEntry {
            name: name.to_string(),
            source,
        });
    }
    Ok(out)
}

/// One table row. `None` cells print as `-`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TableRow {
    pub name: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub l: Option<usize>,
    pub s0: Option<usize>,
    pub t_bff: Option<Duration>,
    pub t_bfs: Option<Duration>,
    pub gr: Option<(usize, Duration)>,
    pub grp: Option<(usize, Duration)>,
}

fn cell<T: fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn secs(d: Option<Duration>) -> String {
    d.map_or_else(|| "-".to_string(), |d| format!("{:.3}", d.as_secs_f64()))
}

impl TableRow {
    /// Row with only the name filled in.
    pub fn failed(name: &str) -> Self {
        TableRow {
            name: name.to_string(),
            ..TableRow::default()
        }
    }

    pub fn to_csv(&self) -> String {
        [
            self.name.clone(),
            cell(self.n),
            cell(self.m),
            cell(self.l),
            cell(self.s0),
            secs(self.t_bff),
            secs(self.t_bfs),
            cell(self.gr.map(|g| g.0)),
            secs(self.gr.map(|g| g.1)),
            cell(self.grp.map(|g| g.0)),
            secs(self.grp.map(|g| g.1)),
        ]
        .join(",")
    }
}

/// Settings for [`run_row`].
#[derive(Debug, Clone)]
pub struct RowOptions {
    pub gr: bool,
    pub grp: bool,
    pub tie: TieBreak,
    pub memory_cap: u64,
    /// Wall-clock limit for each binary search.
    pub time_limit: Duration,
}

/// Runs the table protocol on one graph: distances, farthest-first bounds,
/// then the requested binary searches. A search that runs out of time leaves
/// its cells empty.
pub fn run_row(name: &str, graph: &Graph, options: &RowOptions) -> Result<TableRow> {
    let t = Instant::now();
    let oracle = DistanceOracle::new(graph, options.memory_cap);
    let t_bfs = t.elapsed();
    let t = Instant::now();
    let s0 = bff(graph, &oracle, 0)?.len();
    let t_bff = t.elapsed();
    let mut row = TableRow {
        name: name.to_string(),
        n: Some(graph.n()),
        m: Some(graph.m()),
        l: Some(bff_bounds(s0).0),
        s0: Some(s0),
        t_bff: Some(t_bff),
        t_bfs: Some(t_bfs),
        gr: None,
        grp: None,
    };
    for (enabled, strategy) in [(options.gr, Strategy::Gr), (options.grp, Strategy::Grp)] {
        if !enabled {
            continue;
        }
        let t = Instant::now();
        let deadline = t.checked_add(options.time_limit);
        let cell = match binary_search_until(graph, &oracle, strategy, &options.tie, deadline) {
            Ok(report) => Some((report.sequence.len(), t.elapsed())),
            Err(Error::TimeLimit) => {
                log::warn!("{name}: {strategy} hit the time limit");
                None
            }
            Err(e) => return Err(e),
        };
        match strategy {
            Strategy::Gr => row.gr = cell,
            _ => row.grp = cell,
        }
    }
    Ok(row)
}
