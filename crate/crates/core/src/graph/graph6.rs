//! graph6 codec.
//!
//! Layout: the order `n` as one byte `n + 63` (n <= 62) or `~` followed by
//! three 6-bit groups (63 <= n <= 258047), then the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), ..`),
//! packed big-endian into 6-bit groups, each stored as `value + 63`, with
//! the final group zero-padded.

use std::io::BufRead;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn decode_byte(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(malformed(format!("byte {b:#04x} outside the printable graph6 range")))
    }
}

fn parse_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    match bytes {
        [] => Err(malformed("empty input")),
        [126, 126, ..] => {
            if bytes.len() < 8 {
                return Err(malformed("truncated order field"));
            }
            let mut n = 0usize;
            for &b in &bytes[2..8] {
                n = n << 6 | decode_byte(b)? as usize;
            }
            Ok((n, &bytes[8..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated order field"));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = n << 6 | decode_byte(b)? as usize;
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] => Ok((decode_byte(*b)? as usize, rest)),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let (n, body) = parse_order(text.as_bytes())?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = decode_byte(body[k / 6])?;
            if group >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = decode_byte(body[expected - 1])?;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n).div_ceil(12));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Reads a newline-delimited graph6 stream, skipping blank lines.
pub fn read_graph6_stream<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader.lines().filter_map(|line| match line {
        Ok(l) => {
            let l = l.trim();
            if l.is_empty() {
                None
            } else {
                Some(parse_graph6(l))
            }
        }
        Err(e) => Some(Err(e.into())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, path};

    /// Independent encoder: writes the bit string explicitly, then chops it.
    fn oracle_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bits = String::new();
        for j in 1..n {
            for i in 0..j {
                let present = edges.iter().any(|&(a, b)| (a, b) == (i, j) || (b, a) == (i, j));
                bits.push(if present { '1' } else { '0' });
            }
        }
        while bits.len() % 6 != 0 {
            bits.push('0');
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn small_complete_graphs() {
        assert_eq!(oracle_encode(2, &[(0, 1)]), "A_");
        assert_eq!(oracle_encode(3, &[(0, 1), (0, 2), (1, 2)]), "Bw");
        assert_eq!(to_graph6(&complete(2).unwrap()), "A_");
        assert_eq!(to_graph6(&complete(3).unwrap()), "Bw");
        assert_eq!(parse_graph6("A_").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3).unwrap());
    }

    #[test]
    fn matches_oracle_on_paths() {
        for n in 1..=12 {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            assert_eq!(to_graph6(&path(n).unwrap()), oracle_encode(n, &edges));
        }
    }

    #[test]
    fn known_string_from_petgraph() {
        // edges a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        // K_2 with a trailing padding bit set
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("Bww"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("B"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("A\x10"), Err(Error::Graph6(_))));
        // n = 65 in the long form
        let big = format!("~{}{}{}", 63u8 as char, (1 + 63) as u8 as char, (1 + 63) as u8 as char);
        assert!(matches!(parse_graph6(&big), Err(Error::TooManyVertices(65))));
    }

    #[test]
    fn header_and_long_order_field() {
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap(), complete(3).unwrap());
        let k64 = complete(64).unwrap();
        let s = to_graph6(&k64);
        assert!(s.starts_with("~?@"));
        assert_eq!(parse_graph6(&s).unwrap(), k64);
        let p63 = path(63).unwrap();
        assert_eq!(parse_graph6(&to_graph6(&p63)).unwrap(), p63);
    }

    #[test]
    fn stream_skips_blank_lines() {
        let input = "A_\n\nBw\r\n  \n";
        let gs: Vec<_> = read_graph6_stream(input.as_bytes()).collect::<Result<_>>().unwrap();
        assert_eq!(gs.len(), 2);
        let bad: Vec<_> = read_graph6_stream("A_\nzz\n".as_bytes()).collect();
        assert!(bad[1].is_err());
    }
}
