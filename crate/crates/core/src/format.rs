//! Text formats.
//!
//! * `DGF/1` (digraph): line 1 `n m`, then `m` lines `u v` meaning `u -> v`,
//!   0-indexed, strictly increasing in lexicographic order.
//! * `TRN/1` (tournament): line 1 `n`, line 2 a string of `n(n-1)/2`
//!   characters over `{0,1}`, one per pair `(i, j)`, `i < j`, in
//!   lexicographic order; `1` means `i -> j`.
//! * `BCV/1` (biclique cover): line 1 `n k`, then `k` lines
//!   `|A| a1 a2 ... | |B| b1 b2 ...`.
//!
//! Writers emit exactly these bodies. Readers also skip blank lines and
//! lines starting with `#`, which is where provenance headers live.

use thiserror::Error;

use crate::bits::VertexSet;
use crate::covers::BicliqueCover;
use crate::digraph::{Digraph, Tournament};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    /// 1-based line number in the input (0 when the input ended early).
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(line: usize, tok: Option<&str>, what: &str) -> Result<usize, FormatError> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| err(line, format!("bad {what} `{tok}`")))
}

pub fn write_dgf(d: &Digraph) -> String {
    let mut s = format!("{} {}\n", d.n(), d.edge_count());
    for (u, v) in d.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn parse_dgf(text: &str) -> Result<Digraph, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| err(0, "empty input"))?;
    let mut toks = header.split_whitespace();
    let n = parse_usize(hl, toks.next(), "vertex count")?;
    let m = parse_usize(hl, toks.next(), "edge count")?;
    if toks.next().is_some() {
        return Err(err(hl, "trailing tokens in header"));
    }
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hl;
    for _ in 0..m {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| err(last_line + 1, format!("expected {m} edges, found {}", edges.len())))?;
        last_line = ln;
        let mut toks = l.split_whitespace();
        let u = parse_usize(ln, toks.next(), "tail")?;
        let v = parse_usize(ln, toks.next(), "head")?;
        if toks.next().is_some() {
            return Err(err(ln, "trailing tokens"));
        }
        if let Some(&prev) = edges.last() {
            if (u, v) <= prev {
                return Err(err(ln, "edges must be strictly increasing"));
            }
        }
        edges.push((u, v));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(err(ln, "unexpected content after last edge"));
    }
    let mut d = Digraph::empty(n);
    for (i, &(u, v)) in edges.iter().enumerate() {
        d.insert_edge(u, v)
            .map_err(|e| err(line_of_edge(text, i), e.to_string()))?;
    }
    Ok(d)
}

fn line_of_edge(text: &str, i: usize) -> usize {
    content_lines(text).nth(i + 1).map_or(0, |(ln, _)| ln)
}

pub fn write_trn(t: &Tournament) -> String {
    format!("{}\n{}\n", t.n(), t.to_bit_string())
}

pub fn parse_trn(text: &str) -> Result<Tournament, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| err(0, "empty input"))?;
    let n = parse_usize(hl, Some(header), "vertex count")?;
    let pairs = n * n.saturating_sub(1) / 2;
    let (bl, body) = match lines.next() {
        Some(x) => x,
        None if pairs == 0 => (hl + 1, ""),
        None => return Err(err(hl + 1, "missing pair string")),
    };
    if body.len() != pairs {
        return Err(err(
            bl,
            format!("pair string has {} characters, expected {pairs}", body.len()),
        ));
    }
    if let Some(pos) = body.bytes().position(|b| b != b'0' && b != b'1') {
        return Err(err(bl, format!("character {} is not 0/1", pos + 1)));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(err(ln, "unexpected content after pair string"));
    }
    let bytes = body.as_bytes();
    Ok(Tournament::from_pair_bits(n, |k| bytes[k] == b'1'))
}

pub fn write_bcv(c: &BicliqueCover) -> String {
    let mut s = format!("{} {}\n", c.host_n(), c.parts().len());
    for (a, b) in c.parts() {
        let side = |set: &VertexSet| {
            std::iter::once(set.len().to_string())
                .chain(set.iter().map(|v| v.to_string()))
                .collect::<Vec<_>>()
                .join(" ")
        };
        s.push_str(&format!("{} | {}\n", side(a), side(b)));
    }
    s
}

pub fn parse_bcv(text: &str) -> Result<BicliqueCover, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| err(0, "empty input"))?;
    let mut toks = header.split_whitespace();
    let n = parse_usize(hl, toks.next(), "vertex count")?;
    let k = parse_usize(hl, toks.next(), "biclique count")?;
    let mut parts = Vec::with_capacity(k);
    let mut last = hl;
    for _ in 0..k {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| err(last + 1, format!("expected {k} bicliques")))?;
        last = ln;
        let (left, right) = l
            .split_once('|')
            .ok_or_else(|| err(ln, "missing `|` separator"))?;
        let side = |s: &str| -> Result<VertexSet, FormatError> {
            let mut toks = s.split_whitespace();
            let len = parse_usize(ln, toks.next(), "side size")?;
            let members = toks
                .map(|t| parse_usize(ln, Some(t), "member"))
                .collect::<Result<Vec<_>, _>>()?;
            if members.len() != len {
                return Err(err(ln, format!("side declares {len} members, lists {}", members.len())));
            }
            if let Some(&v) = members.iter().find(|&&v| v >= n) {
                return Err(err(ln, format!("member {v} out of range")));
            }
            Ok(VertexSet::from_members(n, members))
        };
        parts.push((side(left)?, side(right)?));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(err(ln, "unexpected content after last biclique"));
    }
    BicliqueCover::new(n, parts).map_err(|e| err(hl, e.to_string()))
}
