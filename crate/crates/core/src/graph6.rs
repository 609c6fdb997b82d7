//! graph6 encoding and decoding, bit-exact per the interchange format.
//!
//! The size field `N(n)` is the single byte `n + 63` for `n <= 62`, and
//! `'~'` followed by three bytes holding the 18-bit big-endian value of `n`
//! (each 6-bit group offset by 63) for `63 <= n <= 258047`. The adjacency
//! bits are the upper triangle in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed into 6-bit groups most
//! significant bit first, zero padded, each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn bad(reason: impl Into<String>) -> Error {
    Error::Graph6 {
        reason: reason.into(),
    }
}

/// Encodes a graph as a graph6 string.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string; strict about length, byte range and padding.
pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(bad(format!("byte {b} outside graph6 range 63..=126")));
        }
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(bad("8-byte size field (n > 258047) not supported"));
        }
        if bytes.len() < 4 {
            return Err(bad("truncated extended size field"));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        if n < 63 {
            return Err(bad("extended size field used for n < 63"));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_ORDER {
        return Err(Error::CapacityExceeded {
            requested: n,
            limit: MAX_ORDER,
        });
    }
    let nbits = n * (n.saturating_sub(1)) / 2;
    let expect = nbits.div_ceil(6);
    if body.len() != expect {
        return Err(bad(format!(
            "expected {expect} adjacency bytes for n={n}, got {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut bit_index = 0usize;
    let mut it = pair_iter(n);
    for &b in body {
        let group = b - 63;
        for k in (0..6).rev() {
            let bit = (group >> k) & 1;
            if bit_index < nbits {
                let (i, j) = it.next().expect("pair count matches bit count");
                if bit == 1 {
                    g.set_edge(i, j);
                }
            } else if bit == 1 {
                return Err(bad("nonzero padding bits"));
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

fn pair_iter(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}
