//! Text formats: edge lists, matrices, vertex sets and DOT export.
//!
//! Edge list: the first non-comment line holds the order `n`, every further
//! line holds one edge `u v` with 1-based labels. Blank lines and lines
//! starting with `#` are ignored; CRLF endings are accepted.
//!
//! Matrix: the first non-comment line holds `rows cols`, followed by the
//! row-major entries as integers or `p/q` fractions, whitespace-separated
//! and free to span lines.

use std::fmt::Write as _;
use std::str::FromStr;

use netctrl_core::{BigInt, BigRational, Graph, RationalMatrix, VertexSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: netctrl_core::Error,
    },
    #[error("missing header line")]
    MissingHeader,
    #[error("invalid vertex set {spec:?}: {message}")]
    Set { spec: String, message: String },
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_label(line: usize, token: &str) -> Result<usize, FormatError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected a vertex label, found {token:?}")))
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let order: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
        [n] => n.parse().map_err(|_| {
            syntax(
                header_line,
                format!("expected the vertex count, found {n:?}"),
            )
        })?,
        _ => return Err(syntax(header_line, "expected a single vertex count")),
    };
    let mut graph = Graph::empty(order).map_err(|source| FormatError::Invalid {
        line: header_line,
        source,
    })?;
    for (line, content) in lines {
        let (u, v) = match content.split_whitespace().collect::<Vec<_>>()[..] {
            [u, v] => (parse_label(line, u)?, parse_label(line, v)?),
            _ => return Err(syntax(line, format!("expected \"u v\", found {content:?}"))),
        };
        graph
            .add_edge(u, v)
            .map_err(|source| FormatError::Invalid { line, source })?;
    }
    Ok(graph)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 1..=g.order() {
        if g.degree(v - 1) == 0 {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

pub fn parse_matrix(text: &str) -> Result<RationalMatrix, FormatError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| {
            syntax(
                header_line,
                format!("expected \"rows cols\", found {header:?}"),
            )
        })?;
    let [rows, cols] = dims[..] else {
        return Err(syntax(
            header_line,
            format!("expected \"rows cols\", found {header:?}"),
        ));
    };
    let mut entries = Vec::with_capacity(rows * cols);
    let mut last_line = header_line;
    for (line, content) in lines {
        last_line = line;
        for token in content.split_whitespace() {
            entries.push(parse_rational(line, token)?);
        }
    }
    RationalMatrix::from_entries(rows, cols, entries).map_err(|source| FormatError::Invalid {
        line: last_line,
        source,
    })
}

fn parse_rational(line: usize, token: &str) -> Result<BigRational, FormatError> {
    let zero_den = token
        .split_once('/')
        .is_some_and(|(_, den)| den.parse::<BigInt>().is_ok_and(|d| d == BigInt::default()));
    if zero_den {
        return Err(FormatError::Invalid {
            line,
            source: netctrl_core::Error::ZeroDenominator,
        });
    }
    BigRational::from_str(token)
        .map_err(|_| syntax(line, format!("expected an integer or p/q, found {token:?}")))
}

pub fn write_matrix(m: &RationalMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let cells: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a comma-separated list of 1-based labels such as `1,3,5`.
pub fn parse_set(spec: &str, order: usize) -> Result<VertexSet, FormatError> {
    let err = |message: String| FormatError::Set {
        spec: spec.to_string(),
        message,
    };
    let labels = spec
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<usize>()
                .map_err(|_| err(format!("{t:?} is not a vertex label")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    VertexSet::from_labels(order, labels).map_err(|e| err(e.to_string()))
}
