//! The `bsr` text format: a line-oriented codec for bipartite graphs and
//! total edge colorings.
//!
//! ```text
//! bsr 1
//! n <p> <q>
//! k <K>
//! e <x> <y>        # K = 0: graph, present edges only
//! e <x> <y> <c>    # K >= 1: coloring, all p*q edges required
//! ```
//!
//! Lines starting with `#` are comments; blank lines are ignored. Edge
//! records may arrive in any order; emission is canonical, edges sorted
//! lexicographically by `(x, y)`.

use thiserror::Error;

use crate::graph::{BipartiteGraph, EdgeColoring};

/// Either kind of object the format can carry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BsrObject {
    Graph(BipartiteGraph),
    Coloring(EdgeColoring),
}

impl From<BipartiteGraph> for BsrObject {
    fn from(g: BipartiteGraph) -> Self {
        BsrObject::Graph(g)
    }
}

impl From<EdgeColoring> for BsrObject {
    fn from(c: EdgeColoring) -> Self {
        BsrObject::Coloring(c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },

    #[error("line {line}: duplicate edge ({x}, {y})")]
    DuplicateEdge { line: usize, x: usize, y: usize },

    #[error("line {line}: edge ({x}, {y}) out of range for sides {p} x {q}")]
    EdgeOutOfRange {
        line: usize,
        x: u64,
        y: u64,
        p: usize,
        q: usize,
    },

    #[error("line {line}: color {color} out of range 1..={k}")]
    ColorOutOfRange { line: usize, color: u64, k: u32 },

    #[error("coloring not total: {missing} edge(s) unassigned, first ({x}, {y})")]
    NotTotal { missing: usize, x: usize, y: usize },
}

fn malformed(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        reason: reason.into(),
    }
}

fn parse_u64(line: usize, token: &str, what: &str) -> Result<u64, ParseError> {
    token
        .parse::<u64>()
        .map_err(|_| malformed(line, format!("invalid {what} `{token}`")))
}

/// Parses a `bsr` text into a graph or a coloring.
///
/// Colorings must be total; graphs may carry any edge subset. Errors name
/// the offending line.
pub fn parse_bsr(text: &str) -> Result<BsrObject, ParseError> {
    // (1-based line number, significant tokens)
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((i + 1, t))
        }
    });

    let (ln, header) = lines.next().ok_or_else(|| malformed(0, "empty input"))?;
    match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["bsr", "1"] => {}
        ["bsr", v] => return Err(malformed(ln, format!("unsupported version `{v}`"))),
        _ => return Err(malformed(ln, "expected header `bsr 1`")),
    }

    let (ln, sides) = lines
        .next()
        .ok_or_else(|| malformed(ln, "missing `n <p> <q>` line"))?;
    let (p, q) = match sides.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", p, q] => (
            parse_u64(ln, p, "side size")? as usize,
            parse_u64(ln, q, "side size")? as usize,
        ),
        _ => return Err(malformed(ln, "expected `n <p> <q>`")),
    };
    if p == 0 || q == 0 {
        return Err(malformed(ln, "side sizes must be positive"));
    }
    let cells = p
        .checked_mul(q)
        .ok_or_else(|| malformed(ln, "side sizes too large"))?;

    let (ln, kline) = lines
        .next()
        .ok_or_else(|| malformed(ln, "missing `k <K>` line"))?;
    let k = match kline.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["k", k] => parse_u64(ln, k, "color count")?,
        _ => return Err(malformed(ln, "expected `k <K>`")),
    };
    if k > u64::from(u32::MAX) {
        return Err(malformed(ln, "color count too large"));
    }
    let k = k as u32;

    if k == 0 {
        let mut g = BipartiteGraph::empty(p, q);
        for (ln, rec) in lines {
            let (x, y) = match rec.split_whitespace().collect::<Vec<_>>().as_slice() {
                ["e", x, y] => (parse_u64(ln, x, "vertex")?, parse_u64(ln, y, "vertex")?),
                _ => return Err(malformed(ln, "expected `e <x> <y>`")),
            };
            if x >= p as u64 || y >= q as u64 {
                return Err(ParseError::EdgeOutOfRange {
                    line: ln,
                    x,
                    y,
                    p,
                    q,
                });
            }
            let (x, y) = (x as usize, y as usize);
            if g.has_edge(x, y) {
                return Err(ParseError::DuplicateEdge { line: ln, x, y });
            }
            g.set_edge(x, y);
        }
        Ok(BsrObject::Graph(g))
    } else {
        let mut colors: Vec<u32> = vec![0; cells];
        let mut assigned = 0usize;
        for (ln, rec) in lines {
            let (x, y, c) = match rec.split_whitespace().collect::<Vec<_>>().as_slice() {
                ["e", x, y, c] => (
                    parse_u64(ln, x, "vertex")?,
                    parse_u64(ln, y, "vertex")?,
                    parse_u64(ln, c, "color")?,
                ),
                _ => return Err(malformed(ln, "expected `e <x> <y> <c>`")),
            };
            if x >= p as u64 || y >= q as u64 {
                return Err(ParseError::EdgeOutOfRange {
                    line: ln,
                    x,
                    y,
                    p,
                    q,
                });
            }
            if c == 0 || c > u64::from(k) {
                return Err(ParseError::ColorOutOfRange {
                    line: ln,
                    color: c,
                    k,
                });
            }
            let (x, y) = (x as usize, y as usize);
            let slot = &mut colors[x * q + y];
            if *slot != 0 {
                return Err(ParseError::DuplicateEdge { line: ln, x, y });
            }
            *slot = c as u32;
            assigned += 1;
        }
        if assigned != cells {
            let first = colors.iter().position(|&c| c == 0).expect("missing edge");
            return Err(ParseError::NotTotal {
                missing: cells - assigned,
                x: first / q,
                y: first % q,
            });
        }
        Ok(BsrObject::Coloring(EdgeColoring::from_raw(p, q, k, colors)))
    }
}

/// Canonical serialization; `parse_bsr(emit_bsr(o))` returns `o` again.
pub fn emit_bsr(object: &BsrObject) -> String {
    match object {
        BsrObject::Graph(g) => emit_graph(g),
        BsrObject::Coloring(c) => emit_coloring(c),
    }
}

pub fn emit_graph(g: &BipartiteGraph) -> String {
    let mut out = String::new();
    out.push_str("bsr 1\n");
    out.push_str(&format!("n {} {}\n", g.p(), g.q()));
    out.push_str("k 0\n");
    for (x, y) in g.edges() {
        out.push_str(&format!("e {x} {y}\n"));
    }
    out
}

pub fn emit_coloring(c: &EdgeColoring) -> String {
    let mut out = String::new();
    out.push_str("bsr 1\n");
    out.push_str(&format!("n {} {}\n", c.n1(), c.n2()));
    out.push_str(&format!("k {}\n", c.k()));
    for x in 0..c.n1() {
        for y in 0..c.n2() {
            out.push_str(&format!("e {x} {y} {}\n", c.color(x, y)));
        }
    }
    out
}
