//! Bit-exact graph6 encoding and decoding.
//!
//! A graph6 record is a size field followed by the upper-triangle adjacency
//! bits `x(0,1), x(0,2), x(1,2), x(0,3), …` packed big-endian into 6-bit
//! groups, each offset by 63 into the printable ASCII range `63..=126`.
//! The size field is a single byte `n + 63` for `n ≤ 62`, `'~'` plus three
//! bytes for `63 ≤ n ≤ 258047`, and `"~~"` plus six bytes up to `2³⁶ − 1`.
//! Unused bits of the final body byte must be zero, and the shortest
//! applicable size form is the only accepted one.

use thiserror::Error;

use crate::graph::Graph;

/// Errors raised while decoding a graph6 record.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    /// The size field is missing, a non-minimal extended form encodes a
    /// small order, or bytes remain after the complete body.
    #[error("malformed graph6 record structure")]
    MalformedHeader,
    /// The body holds fewer bytes than the order requires.
    #[error("graph6 body truncated: expected {expected} bytes, found {found}")]
    TruncatedBody { expected: usize, found: usize },
    /// An unused bit in the final body byte is set.
    #[error("nonzero padding bits in final graph6 byte")]
    NonZeroPadding,
    /// A byte outside the printable range `63..=126` appeared.
    #[error("byte {byte:#04x} at offset {position} outside graph6 range 63..=126")]
    ByteOutOfRange { byte: u8, position: usize },
}

/// Decodes one graph6 record.
///
/// An optional `>>graph6<<` header and a single trailing line break are
/// stripped before decoding; everything else must belong to the record.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let mut bytes = text.as_bytes();
    bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    bytes = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    bytes = bytes.strip_suffix(b"\r").unwrap_or(bytes);

    if let Some(position) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::ByteOutOfRange {
            byte: bytes[position],
            position,
        });
    }

    let (n, body) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    match body.len() {
        found if found < expected => return Err(Graph6Error::TruncatedBody { expected, found }),
        found if found > expected => return Err(Graph6Error::MalformedHeader),
        _ => {}
    }

    let bit = |k: usize| (body[k / 6] - 63) & (1 << (5 - k % 6)) != 0;
    if (bits..expected * 6).any(bit) {
        return Err(Graph6Error::NonZeroPadding);
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("upper-triangle bits index valid vertices"))
}

/// Splits off the size field, returning the order and the body bytes.
fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let group = |chunk: &[u8]| {
        chunk
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
    };
    match bytes {
        [] => Err(Graph6Error::MalformedHeader),
        [126, 126, rest @ ..] => {
            let Some(size) = rest.get(..6) else {
                return Err(Graph6Error::MalformedHeader);
            };
            let n = group(size);
            if n < 258_048 {
                return Err(Graph6Error::MalformedHeader);
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] => {
            let Some(size) = rest.get(..3) else {
                return Err(Graph6Error::MalformedHeader);
            };
            let n = group(size);
            if n < 63 {
                return Err(Graph6Error::MalformedHeader);
            }
            Ok((n, &rest[3..]))
        }
        [first, rest @ ..] => Ok(((first - 63) as usize, rest)),
    }
}

/// Encodes a graph as a graph6 record.
///
/// Panics if `n > 2³⁶ − 1` (far beyond anything this crate constructs).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| 63 + (n >> (6 * i) & 63) as u8));
    } else {
        assert!(
            n < 1usize << 36,
            "graph6 supports at most 2^36 - 1 vertices"
        );
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| 63 + (n >> (6 * i) & 63) as u8));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                body[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    out.extend(body.iter().map(|b| b + 63));
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn decodes_k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g, k4());
    }

    #[test]
    fn decodes_single_edge() {
        // Body '_' is 100000₂: the lone upper-triangle bit x(0,1) is set.
        let g = parse_graph6("A_").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn decodes_empty_two_vertex_graph() {
        let g = parse_graph6("A?").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 0));
    }

    #[test]
    fn decodes_order_zero() {
        let g = parse_graph6("?").unwrap();
        assert_eq!(g.n(), 0);
    }

    #[test]
    fn decodes_p4_and_c5() {
        // Hand-packed: P₄ bits 101001 → 'h'; C₅ bits 101001 100100 → "hc".
        let p4 = parse_graph6("Ch").unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let c5 = parse_graph6("Dhc").unwrap();
        assert_eq!(c5.edges(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn strips_format_header_and_newline() {
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), k4());
        assert_eq!(parse_graph6("Ch\r\n").unwrap(), parse_graph6("Ch").unwrap());
    }

    #[test]
    fn missing_body_is_truncated() {
        assert_eq!(
            parse_graph6("C"),
            Err(Graph6Error::TruncatedBody {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(
            parse_graph6("E??"),
            Err(Graph6Error::TruncatedBody {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn trailing_bytes_are_malformed() {
        assert_eq!(parse_graph6("C~~"), Err(Graph6Error::MalformedHeader));
        assert_eq!(parse_graph6(""), Err(Graph6Error::MalformedHeader));
    }

    #[test]
    fn non_minimal_size_field_is_malformed() {
        // n = 4 written in the three-byte extended form.
        assert_eq!(parse_graph6("~??C~"), Err(Graph6Error::MalformedHeader));
        // n = 0 written in the six-byte extended form.
        assert_eq!(parse_graph6("~~??????"), Err(Graph6Error::MalformedHeader));
    }

    #[test]
    fn padding_bits_must_be_zero() {
        // n = 2 has one data bit; '@' = 000001₂ sets only a padding bit.
        assert_eq!(parse_graph6("A@"), Err(Graph6Error::NonZeroPadding));
    }

    #[test]
    fn rejects_bytes_outside_range() {
        assert_eq!(
            parse_graph6("A "),
            Err(Graph6Error::ByteOutOfRange {
                byte: b' ',
                position: 1
            })
        );
    }

    #[test]
    fn encodes_k4_and_empty() {
        assert_eq!(to_graph6(&k4()), "C~");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn encodes_p4() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&p4), "Ch");
    }

    #[test]
    fn round_trips_small_graphs() {
        let graphs = [
            Graph::empty(5),
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
            k4(),
            Graph::from_edges(7, &[(0, 3), (1, 5), (2, 6), (3, 5), (4, 6)]).unwrap(),
        ];
        for g in graphs {
            assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn round_trips_extended_size_form() {
        let g = Graph::from_edges(63, &[(0, 62), (10, 20)]).unwrap();
        let enc = to_graph6(&g);
        assert!(enc.starts_with('~'));
        assert_eq!(enc.len(), 1 + 3 + (63 * 62 / 2usize).div_ceil(6));
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn encoding_is_parse_inverse_on_records() {
        for record in ["?", "A_", "Ch", "Dhc", "C~"] {
            assert_eq!(to_graph6(&parse_graph6(record).unwrap()), record);
        }
    }
}
