//! graph6 text encoding (one graph per line, printable bytes 63..=126).

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(63 + acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(63 + (acc << (6 - k)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {b:#04x} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Parse("unsupported or truncated order header".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n <= 62 {
            return Err(Error::Parse(format!("order {n} must use the short header")));
        }
        (n, &bytes[4..])
    };
    if n > MAX_ORDER {
        return Err(Error::OrderOverflow(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let pad = expected * 6 - nbits;
    if pad > 0 {
        let last = body[expected - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Parse("nonzero padding bits".into()));
        }
    }
    let mut g = Graph::empty(n)?;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// Graphs serialise as their graph6 string.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&encode(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        decode(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Encoder written straight from the format description, kept apart from `encode`.
    fn reference_encode(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> String {
        let mut bitstring = String::new();
        for j in 0..n {
            for i in 0..j {
                bitstring.push(if adjacent(i, j) { '1' } else { '0' });
            }
        }
        while bitstring.len() % 6 != 0 {
            bitstring.push('0');
        }
        let mut s = String::new();
        if n <= 62 {
            s.push(char::from(63 + n as u8));
        } else {
            s.push('~');
            for shift in [12, 6, 0] {
                s.push(char::from(63 + ((n >> shift) & 63) as u8));
            }
        }
        for chunk in bitstring.as_bytes().chunks(6) {
            let v = chunk.iter().fold(0u8, |a, &c| a * 2 + (c - b'0'));
            s.push(char::from(63 + v));
        }
        s
    }

    #[test]
    fn reference_values() {
        assert_eq!(reference_encode(4, |_, _| true), "C~");
        assert_eq!(reference_encode(5, |_, _| true), "D~{");
        assert_eq!(reference_encode(1, |_, _| true), "@");
    }

    #[test]
    fn small_complete_graphs() {
        let k1 = decode("@").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        assert_eq!(decode("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(decode("D~{").unwrap(), Graph::complete(5).unwrap());
        assert_eq!(encode(&Graph::complete(1).unwrap()), "@");
        assert_eq!(encode(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(encode(&Graph::complete(5).unwrap()), "D~{");
    }

    #[test]
    fn agrees_with_reference_encoder_on_all_small_graphs() {
        for n in 0..=6usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let s = encode(&g);
                assert_eq!(s, reference_encode(n, |i, j| g.has_edge(i, j)));
                assert_eq!(decode(&s).unwrap(), g);
            }
        }
    }

    #[test]
    fn long_header_orders() {
        for n in [63, 64] {
            let g = Graph::cycle(n).unwrap();
            let s = encode(&g);
            assert!(s.starts_with('~'));
            assert_eq!(s, reference_encode(n, |i, j| g.has_edge(i, j)));
            assert_eq!(decode(&s).unwrap(), g);
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode("").is_err());
        assert!(decode("C").is_err());
        assert!(decode("C~~").is_err());
        assert!(decode("C\x7f").is_err());
        assert!(decode("C ").is_err());
        // order 5 needs two data bytes; the second carries two padding bits
        assert!(decode("D~|").is_err());
        assert!(decode("~??").is_err());
        // order 65 exceeds the cap
        let mut big = String::from("~?@@");
        big.push_str(&"?".repeat((65 * 64 / 2usize).div_ceil(6)));
        assert_eq!(decode(&big), Err(Error::OrderOverflow(65)));
    }
}
