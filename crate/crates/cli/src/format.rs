//! Text formats: rotation files and graph6.
//!
//! A rotation file is a header line `n m` followed by one line
//! `v: u1 u2 ... ud` per vertex listing its neighbors clockwise. Lines whose
//! first non-blank character is `#` are comments; blank lines are ignored.

use std::fmt::Write as _;

use embedkit::{EmbeddedGraph, EmbeddingError, Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: EmbeddingError },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. } | ParseError::Invalid { line, .. } => *line,
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn decode_utf8(bytes: &[u8]) -> Result<&str, ParseError> {
    std::str::from_utf8(bytes).map_err(|e| {
        let line = 1 + bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count();
        syntax(line, "invalid UTF-8")
    })
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn number(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected {what}, found {token:?}")))
}

/// Whether the first content line looks like a rotation-file header.
pub fn looks_like_rotation_file(text: &str) -> bool {
    content_lines(text).next().is_some_and(|(_, header)| {
        let tokens: Vec<&str> = header.split_whitespace().collect();
        tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok())
    })
}

pub fn parse_rotation_file(bytes: &[u8]) -> Result<EmbeddedGraph, ParseError> {
    let text = decode_utf8(bytes)?;
    let mut lines = content_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return Err(syntax(1, "missing header line \"n m\""));
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let [n_token, m_token] = tokens[..] else {
        return Err(syntax(header_line, "header must be \"n m\""));
    };
    let n = number(header_line, n_token, "vertex count")?;
    let m = number(header_line, m_token, "edge count")?;

    let mut rotations: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut line_of = vec![header_line; n];
    let mut last_line = header_line;
    for _ in 0..n {
        let Some((line, content)) = lines.next() else {
            let found = rotations.iter().filter(|r| r.is_some()).count();
            return Err(syntax(last_line, format!("expected {n} vertex lines, found {found}")));
        };
        last_line = line;
        let (label, rest) = content
            .split_once(':')
            .ok_or_else(|| syntax(line, "expected \"v: neighbors\""))?;
        let v = number(line, label.trim(), "vertex label")?;
        if v >= n {
            return Err(syntax(line, format!("vertex label {v} is not below {n}")));
        }
        if rotations[v].is_some() {
            return Err(syntax(line, format!("vertex {v} listed twice")));
        }
        let neighbors = rest
            .split_whitespace()
            .map(|t| number(line, t, "neighbor id"))
            .collect::<Result<Vec<usize>, _>>()?;
        rotations[v] = Some(neighbors);
        line_of[v] = line;
    }
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, "unexpected line after the last vertex"));
    }

    let rotations: Vec<Vec<usize>> = rotations.into_iter().map(Option::unwrap_or_default).collect();
    let degree_sum: usize = rotations.iter().map(Vec::len).sum();
    if degree_sum != 2 * m {
        return Err(syntax(
            header_line,
            format!("degree sum {degree_sum} does not match {m} edges"),
        ));
    }
    EmbeddedGraph::new(n, rotations).map_err(|source| ParseError::Invalid {
        line: source.vertex().map_or(header_line, |v| line_of[v]),
        source,
    })
}

pub fn to_rotation_file(g: &EmbeddedGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (v, rotation) in g.rotations().iter().enumerate() {
        write!(out, "{v}:").unwrap();
        for u in rotation {
            write!(out, " {u}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("byte {0:#04x} at position {1} is outside the graph6 range")]
    BadCharacter(u8, usize),
    #[error("graph6 data has {found} bytes, expected {expected}")]
    BadLength { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const HEADER: &[u8] = b">>graph6<<";

/// Decodes the first graph of a graph6 input.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let bytes = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    let line = bytes.split(|&b| b == b'\n').next().unwrap_or_default();
    let line = line.strip_suffix(b"\r").unwrap_or(line);
    if line.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let mut values = Vec::with_capacity(line.len());
    for (i, &b) in line.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadCharacter(b, i));
        }
        values.push(b - 63);
    }

    let (n, data) = match values[..] {
        [63, 63, ..] if values.len() >= 8 => (big_endian(&values[2..8]), &values[8..]),
        [63, ..] if values.len() >= 4 => (big_endian(&values[1..4]), &values[4..]),
        [63, ..] => {
            return Err(Graph6Error::BadLength {
                expected: 4,
                found: values.len(),
            })
        }
        [first, ..] => (first as usize, &values[1..]),
        [] => return Err(Graph6Error::Empty),
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::BadLength {
            expected,
            found: data.len(),
        });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if data[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

fn big_endian(values: &[u8]) -> usize {
    values.iter().fold(0, |acc, &v| (acc << 6) | v as usize)
}

pub fn to_graph6(graph: &Graph) -> String {
    let n = graph.vertex_count();
    let mut values: Vec<u8> = Vec::new();
    if n <= 62 {
        values.push(n as u8);
    } else if n <= 258_047 {
        values.push(63);
        values.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8));
    } else {
        values.extend([63, 63]);
        values.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8));
    }
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(graph.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (k, &bit) in chunk.iter().enumerate() {
            if bit {
                value |= 1 << (5 - k);
            }
        }
        values.push(value);
    }
    values.into_iter().map(|v| (v + 63) as char).collect()
}
