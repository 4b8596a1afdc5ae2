//! graph6 encoding: order header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte
//! (value + 63).
//!
//! Orders up to 62 use a one-byte header and orders up to 258047 use the
//! four-byte `~XYZ` form. The eight-byte form is rejected.

use super::Graph;

/// Largest order representable with the short and medium headers.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {value} at offset {offset} is outside the printable range 63..=126")]
    BadByte { offset: usize, value: u8 },
    #[error("order {0} exceeds the supported graph6 width ({GRAPH6_MAX_ORDER})")]
    TooLarge(usize),
    #[error("adjacency data truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} trailing bytes after adjacency data")]
    Trailing(usize),
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(Graph6Error::BadByte { offset, value: b }),
        None => Err(Graph6Error::Truncated {
            expected: offset + 1,
            found: bytes.len(),
        }),
    }
}

pub fn read_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            let mut n = 0usize;
            for i in 0..6 {
                n = (n << 6) | sextet(bytes, 2 + i)? as usize;
            }
            return Err(Graph6Error::TooLarge(n));
        }
        let mut n = 0usize;
        for i in 0..3 {
            n = (n << 6) | sextet(bytes, 1 + i)? as usize;
        }
        (n, 4)
    } else {
        (sextet(bytes, 0)? as usize, 1)
    };

    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pos + pairs.div_ceil(6);
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::Trailing(bytes.len() - expected));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    let mut current = 0u8;
    for v in 1..n {
        for u in 0..v {
            if k % 6 == 0 {
                current = sextet(bytes, pos)?;
                pos += 1;
            }
            if current >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    // padding bits must be zero for the encoding to be canonical
    if k % 6 != 0 && current & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(Graph6Error::BadByte {
            offset: pos - 1,
            value: current + 63,
        });
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= GRAPH6_MAX_ORDER {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    } else {
        return Err(Graph6Error::TooLarge(n));
    }

    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Decodes bit by bit straight from the format definition, without the
    /// sextet buffering of `read_graph6`.
    fn reference_decode(s: &str) -> Vec<(usize, usize)> {
        let b = s.as_bytes();
        let n = (b[0] - 63) as usize;
        let bits: Vec<bool> = b[1..]
            .iter()
            .flat_map(|&c| (0..6).rev().map(move |i| ((c - 63) >> i) & 1 == 1))
            .collect();
        let mut edges = Vec::new();
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[k] {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        edges
    }

    #[test]
    fn single_edge() {
        let g = read_graph6("A_").unwrap();
        assert_eq!(g, Graph::complete(2));
        assert_eq!(reference_decode("A_"), vec![(0, 1)]);
        assert_eq!(write_graph6(&g).unwrap(), "A_");
    }

    #[test]
    fn known_strings() {
        // edges a-c, a-e, b-d, d-e
        let g = read_graph6("DQc").unwrap();
        let mut edges: Vec<_> = g.edges().collect();
        edges.sort();
        assert_eq!(edges, vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(reference_decode("DQc"), vec![(0, 2), (1, 3), (0, 4), (3, 4)]);
        assert_eq!(write_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(write_graph6(&Graph::complete(5)).unwrap(), "D~{");
    }

    #[test]
    fn empty_graphs_round_trip() {
        for n in 0..=10 {
            let s = write_graph6(&Graph::empty(n)).unwrap();
            let g = read_graph6(&s).unwrap();
            assert_eq!(g, Graph::empty(n), "n = {n}");
            assert_eq!(write_graph6(&g).unwrap(), s);
        }
    }

    #[test]
    fn corpus_round_trip() {
        for s in [
            "@",
            "A?",
            "A_",
            "Bw",
            "CF",
            "C~",
            "DQc",
            "EEh_",
            "G?zTb_",
            "I?h]@eOWG",
            "J~~~~~~~~~_",
        ] {
            let g = read_graph6(s).unwrap();
            assert_eq!(write_graph6(&g).unwrap(), s);
        }
    }

    #[test]
    fn medium_header() {
        let mut g = Graph::empty(100);
        g.add_edge(0, 99);
        g.add_edge(17, 63);
        let s = write_graph6(&g).unwrap();
        assert!(s.starts_with("~?@c"));
        assert_eq!(read_graph6(&s).unwrap(), g);
    }

    #[test]
    fn accepts_header_and_newline() {
        assert_eq!(read_graph6(">>graph6<<A_\n").unwrap(), Graph::complete(2));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(read_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(read_graph6("A "), Err(Graph6Error::BadByte { offset: 1, .. })));
        assert!(matches!(
            read_graph6("D"),
            Err(Graph6Error::Truncated { expected: 3, found: 1 })
        ));
        assert!(matches!(read_graph6("A__"), Err(Graph6Error::Trailing(1))));
        assert!(matches!(read_graph6("A`"), Err(Graph6Error::BadByte { .. })));
        assert!(matches!(read_graph6("~~??????"), Err(Graph6Error::TooLarge(0))));
    }
}
