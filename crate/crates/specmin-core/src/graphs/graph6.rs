//! graph6 text codec (printable-ASCII encoding of undirected graphs).
//!
//! Bit-exact with the standard format: N(n) followed by the upper triangle
//! of the adjacency matrix in column order, packed into 6-bit groups.

use super::{Graph, GraphError};

/// A graph in graph6 wire format.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph6Text(pub String);

impl std::fmt::Display for Graph6Text {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn encode_graph6(g: &Graph) -> Graph6Text {
    let n = g.vertex_count();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        assert!(n <= 258_047, "graph6 medium form caps at 258047 vertices");
        bytes.push(b'~');
        bytes.push(63 + ((n >> 12) & 0x3f) as u8);
        bytes.push(63 + ((n >> 6) & 0x3f) as u8);
        bytes.push(63 + (n & 0x3f) as u8);
    }
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (pos, &bit) in chunk.iter().enumerate() {
            if bit {
                value |= 1 << (5 - pos);
            }
        }
        bytes.push(63 + value);
    }
    Graph6Text(String::from_utf8(bytes).unwrap())
}

pub fn decode_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::BadGraph6("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(GraphError::BadGraph6(format!("byte {b} out of printable range")));
        }
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(GraphError::BadGraph6("long form (>258047 vertices) unsupported".into()));
        }
        if bytes.len() < 4 {
            return Err(GraphError::BadGraph6("truncated vertex count".into()));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(GraphError::BadGraph6(format!(
            "expected {} payload bytes for n={}, got {}",
            needed,
            n,
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit_index / 6] - 63;
            let bit = (byte >> (5 - (bit_index % 6))) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
            if bit_index == bit_count {
                break 'outer;
            }
        }
    }
    pos += bit_count.div_ceil(6);
    debug_assert_eq!(pos, bytes.len());
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::super::canonical_form;
    use super::super::templates::*;
    use super::*;

    #[test]
    fn k1_is_at_sign() {
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(encode_graph6(&k1).0, "@");
        assert_eq!(decode_graph6("@").unwrap().vertex_count(), 1);
    }

    #[test]
    fn known_encodings() {
        // 5-vertex graph with edges {0-2, 0-4, 1-3, 3-4} encodes as "DQc"
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g).0, "DQc");
        // complete graph on 5 vertices
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in (i + 1)..5 {
                edges.push((i, j));
            }
        }
        let k5 = Graph::from_edge_list(5, &edges).unwrap();
        assert_eq!(encode_graph6(&k5).0, "D~{");
    }

    #[test]
    fn round_trip_path() {
        let p5 = path_graph(5);
        let decoded = decode_graph6(&encode_graph6(&p5).0).unwrap();
        assert_eq!(canonical_form(&decoded).unwrap(), canonical_form(&p5).unwrap());
    }

    #[test]
    fn large_order_uses_extended_count() {
        let p67 = path_graph(67);
        let text = encode_graph6(&p67);
        assert!(text.0.starts_with('~'));
        let decoded = decode_graph6(&text.0).unwrap();
        assert_eq!(decoded.vertex_count(), 67);
        assert_eq!(canonical_form(&decoded).unwrap(), canonical_form(&p67).unwrap());
    }

    #[test]
    fn rejects_malformed_text() {
        assert!(decode_graph6("").is_err());
        assert!(decode_graph6("D").is_err()); // truncated payload
        assert!(decode_graph6("@\u{7}").is_err()); // control byte
    }
}
