//! Header-less graph6 encoding for graphs on at most 62 vertices.
//!
//! The format is the usual one: a size byte `n + 63`, then the upper
//! triangle of the adjacency matrix in column-major order — pair `(i, j)`
//! with `i < j` at bit index `j(j-1)/2 + i` — packed six bits per byte,
//! each byte offset by 63.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 only supports orders up to 62, got {0}")]
    UnsupportedOrder(usize),
    #[error("invalid graph6 byte {byte:#04x} at position {pos} (must be in 63..=126)")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("truncated graph6 string: expected {expected} bytes, got {actual}")]
    Truncated { expected: usize, actual: usize },
    #[error("trailing data after position {pos}")]
    TrailingData { pos: usize },
    #[error("nonzero padding bits in final byte at position {pos}")]
    NonzeroPadding { pos: usize },
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > 62 {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end().as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::InvalidByte {
            pos: 0,
            byte: first,
        });
    }
    let n = (first - 63) as usize;
    if n > 62 {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            actual: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingData { pos: expected });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for (pos, &byte) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { pos, byte });
        }
        let payload = byte - 63;
        for k in 0..6 {
            let value = payload >> (5 - k) & 1;
            if bit >= nbits {
                if value != 0 {
                    return Err(Graph6Error::NonzeroPadding { pos });
                }
                continue;
            }
            if value == 1 {
                let (i, j) = pair_at(bit);
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Inverse of `bit = j(j-1)/2 + i` for `i < j`.
fn pair_at(bit: usize) -> (usize, usize) {
    let mut j = 1;
    while (j + 1) * j / 2 <= bit {
        j += 1;
    }
    (bit - j * (j - 1) / 2, j)
}

impl Graph {
    pub fn to_graph6(&self) -> Result<String, Graph6Error> {
        encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
        decode(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_vectors() {
        // 5 vertices, edges 02 04 13 34.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(encode(&g).unwrap(), "DQc");
        assert_eq!(encode(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(encode(&Graph::empty(5)).unwrap(), "D??");
        assert_eq!(encode(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(
            decode("D"),
            Err(Graph6Error::Truncated {
                expected: 3,
                actual: 1
            })
        );
        assert_eq!(decode("DQcX"), Err(Graph6Error::TrailingData { pos: 3 }));
        assert!(matches!(
            decode("D\u{1}c"),
            Err(Graph6Error::InvalidByte { pos: 1, .. })
        ));
        // C(3,2) = 3 bits; set a padding bit in the low 3 bits of the byte.
        assert_eq!(decode("B?"), Ok(Graph::empty(3)));
        assert_eq!(decode("B@"), Err(Graph6Error::NonzeroPadding { pos: 1 }));
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=12, seed in any::<u64>()) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = Graph::random(n, 0.4, &mut rng);
            let text = encode(&g).unwrap();
            prop_assert_eq!(decode(&text).unwrap(), g);
        }
    }
}
