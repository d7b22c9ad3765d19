use std::fmt;

use crate::cycle::{CycleEdge, InsertionHistory, Node, Tour};

/// Malformed tour or history text, located by 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens of one line with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - line.as_ptr() as usize;
        (line[..offset].chars().count() + 1, tok)
    })
}

fn parse_label(tok: &str, line: usize, col: usize) -> Result<u32, ParseError> {
    let v: u32 = tok
        .parse()
        .map_err(|_| err(line, col, format!("expected a node label, found {tok:?}")))?;
    if v == 0 {
        return Err(err(line, col, "node labels start at 1"));
    }
    Ok(v)
}

fn is_blank(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

/// Parses one tour, e.g. `"1 4 7 5 2 6 8 3 10 9"`. Blank lines and `#`
/// comments are skipped; exactly one tour line is expected.
pub fn parse_tour_text(text: &str) -> Result<Tour, ParseError> {
    let mut found: Option<(usize, Vec<u32>)> = None;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if is_blank(line) {
            continue;
        }
        if found.is_some() {
            return Err(err(lineno, 1, "expected a single tour"));
        }
        let labels = tokens(line)
            .map(|(col, tok)| parse_label(tok, lineno, col))
            .collect::<Result<Vec<_>, _>>()?;
        found = Some((lineno, labels));
    }
    let (lineno, labels) = found.ok_or_else(|| err(1, 1, "no tour given"))?;
    Tour::from_labels(&labels).map_err(|e| err(lineno, 1, e.to_string()))
}

/// Parses history lines `"n: i j"`, which must cover `n = 4..=N` in order.
pub fn parse_history_text(text: &str) -> Result<InsertionHistory, ParseError> {
    let mut edges = Vec::new();
    let mut last_line = 1;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if is_blank(line) {
            continue;
        }
        last_line = lineno;
        let colon = line
            .find(':')
            .ok_or_else(|| err(lineno, 1, "expected \"n: i j\""))?;
        let key = line[..colon].trim();
        let key_col = line[..colon].find(key).unwrap_or(0) + 1;
        let k = parse_label(key, lineno, key_col)?;
        let expected = edges.len() as u32 + 4;
        if k != expected {
            return Err(err(
                lineno,
                key_col,
                format!("expected entry for node {expected}, found {k}"),
            ));
        }
        let rest = &line[colon + 1..];
        let toks: Vec<_> = tokens(rest).map(|(c, t)| (c + colon + 1, t)).collect();
        if toks.len() != 2 {
            return Err(err(lineno, colon + 2, "expected exactly two endpoints"));
        }
        let a = parse_label(toks[0].1, lineno, toks[0].0)?;
        let b = parse_label(toks[1].1, lineno, toks[1].0)?;
        let edge = CycleEdge::new(Node::raw(a), Node::raw(b)).map_err(|e| err(lineno, toks[1].0, e.to_string()))?;
        edges.push((lineno, edge));
    }
    let plain: Vec<_> = edges.iter().map(|&(_, e)| e).collect();
    InsertionHistory::new(plain).map_err(|e| {
        let line = match &e {
            crate::PedigreeError::InvalidInsertion { node, .. } => edges[*node as usize - 4].0,
            _ => last_line,
        };
        err(line, 1, e.to_string())
    })
}
