//! graph6 and plain edge-list text formats.
//!
//! The graph6 form is the header-less variant: a size prefix followed by the
//! upper triangle read column by column, packed into 6-bit groups offset by
//! 63 so every byte is printable ASCII. Encoding is canonical (minimal size
//! prefix, zero padding) and decoding insists on the same, so a round trip
//! is the identity on both sides.
//!
//! The edge-list form is one line with the vertex count, then one `u v` pair
//! per line, 0-based. Parse errors carry 1-based line numbers.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG_MARK: u8 = 126;

/// Encodes a graph as a header-less graph6 string.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    encode_size(n, &mut out)?;
    let mut acc: u8 = 0;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes a header-less graph6 string. Rejects stray bytes, wrong lengths,
/// and nonzero padding.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(OFFSET..=LONG_MARK).contains(&b)) {
        return Err(Error::Graph6 {
            msg: format!("byte 0x{b:02x} outside the printable graph6 range"),
        });
    }
    let (n, rest) = decode_size(bytes)?;
    let pair_bits = n * n.saturating_sub(1) / 2;
    let need = pair_bits.div_ceil(6);
    if rest.len() != need {
        return Err(Error::Graph6 {
            msg: format!(
                "expected {need} data bytes for n = {n}, found {}",
                rest.len()
            ),
        });
    }
    let mut edges = Vec::new();
    let mut it = PairOrder::new(n);
    for (i, &b) in rest.iter().enumerate() {
        let group = b - OFFSET;
        for k in (0..6).rev() {
            let bit = group >> k & 1;
            match it.next() {
                Some((u, v)) => {
                    if bit == 1 {
                        edges.push((u, v));
                    }
                }
                None => {
                    if bit == 1 {
                        return Err(Error::Graph6 {
                            msg: format!("nonzero padding in final byte {i}"),
                        });
                    }
                }
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Column-major upper-triangle pair order used by graph6:
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
struct PairOrder {
    n: usize,
    u: usize,
    v: usize,
}

impl PairOrder {
    fn new(n: usize) -> PairOrder {
        PairOrder { n, u: 0, v: 1 }
    }
}

impl Iterator for PairOrder {
    type Item = (usize, usize);
    fn next(&mut self) -> Option<(usize, usize)> {
        if self.v >= self.n {
            return None;
        }
        let pair = (self.u, self.v);
        self.u += 1;
        if self.u == self.v {
            self.u = 0;
            self.v += 1;
        }
        Some(pair)
    }
}

fn encode_size(n: usize, out: &mut Vec<u8>) -> Result<()> {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(LONG_MARK);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else if n <= 68_719_476_735 {
        out.push(LONG_MARK);
        out.push(LONG_MARK);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        return Err(Error::Graph6TooLarge { n });
    }
    Ok(())
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    match bytes {
        [] => Err(Error::Graph6 {
            msg: "empty string".into(),
        }),
        [LONG_MARK, LONG_MARK, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6 {
                    msg: "truncated 8-byte size prefix".into(),
                });
            }
            let mut n = 0usize;
            for &b in &rest[..6] {
                n = n << 6 | (b - OFFSET) as usize;
            }
            Ok((n, &rest[6..]))
        }
        [LONG_MARK, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6 {
                    msg: "truncated 4-byte size prefix".into(),
                });
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = n << 6 | (b - OFFSET) as usize;
            }
            if n <= 62 {
                return Err(Error::Graph6 {
                    msg: format!("non-canonical long size prefix for n = {n}"),
                });
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - OFFSET) as usize, rest)),
    }
}

/// Writes the edge-list text form: the order on the first line, then one
/// `u v` pair per line in sorted order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list text form. Blank lines are skipped; anything else
/// that fails to parse reports its 1-based line number.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() {
            continue;
        }
        match n {
            None => {
                let order: usize = s.parse().map_err(|_| Error::EdgeList {
                    line,
                    msg: format!("expected the vertex count, found {s:?}"),
                })?;
                n = Some(order);
            }
            Some(order) => {
                let mut parts = s.split_whitespace();
                let (a, b) = match (parts.next(), parts.next(), parts.next()) {
                    (Some(a), Some(b), None) => (a, b),
                    _ => {
                        return Err(Error::EdgeList {
                            line,
                            msg: format!("expected `u v`, found {s:?}"),
                        })
                    }
                };
                let parse = |tok: &str| -> Result<usize> {
                    tok.parse().map_err(|_| Error::EdgeList {
                        line,
                        msg: format!("bad vertex index {tok:?}"),
                    })
                };
                let (u, v) = (parse(a)?, parse(b)?);
                if u >= order || v >= order {
                    return Err(Error::EdgeList {
                        line,
                        msg: format!("vertex out of range 0..{order}"),
                    });
                }
                if u == v {
                    return Err(Error::EdgeList {
                        line,
                        msg: format!("loop at vertex {u}"),
                    });
                }
                edges.push((u, v));
            }
        }
    }
    match n {
        Some(order) => Graph::from_edges(order, &edges),
        None => Err(Error::EdgeList {
            line: 1,
            msg: "missing vertex count".into(),
        }),
    }
}
