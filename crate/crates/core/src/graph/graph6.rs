//! graph6 reader and writer (undirected graphs, n <= 64).

use super::{bit, Graph, GraphError, MAX_VERTICES};

fn parse_err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Parse { offset, reason: reason.into() }
}

/// Parses a single graph6 record. An optional `>>graph6<<` header and one
/// trailing newline are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    if let Some(rest) = bytes.strip_suffix(b"\n") {
        bytes = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    for (i, &c) in bytes.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(parse_err(base + i, format!("byte {c:#04x} outside graph6 range 63..=126")));
        }
    }
    let first = *bytes.first().ok_or_else(|| parse_err(base, "empty input"))?;
    let (n, header_len) = if first < 126 {
        ((first - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(parse_err(base + bytes.len(), "truncated long-form header"));
        }
        if bytes[1] == 126 {
            return Err(parse_err(base + 1, "vertex count exceeds 64"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize);
        if n < 63 {
            return Err(parse_err(base, "long-form header used for n < 63"));
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(parse_err(base, format!("vertex count {n} exceeds 64")));
    }
    let pair_bits = n * n.saturating_sub(1) / 2;
    let body_len = pair_bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < body_len {
        return Err(parse_err(base + bytes.len(), format!("expected {body_len} adjacency bytes, found {}", body.len())));
    }
    if body.len() > body_len {
        return Err(parse_err(base + header_len + body_len, "trailing garbage after adjacency data"));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    // Padding bits of the last byte must be zero for the encoding to be canonical.
    if pair_bits % 6 != 0 {
        let last = body[body_len - 1] - 63;
        if last & ((1 << (6 - pair_bits % 6)) - 1) != 0 {
            return Err(parse_err(base + header_len + body_len - 1, "non-zero padding bits"));
        }
    }
    Ok(Graph::from_masks_unchecked(adj))
}

/// Encodes a graph as graph6 (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    String::from_utf8(graph6_bytes(g)).expect("graph6 is ASCII")
}

pub(crate) fn graph6_bytes(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle() {
        // C4 0-1-2-3-0: pairs (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) -> 1,0,1,1,0,1
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let s = emit_graph6(&g);
        assert_eq!(s, "Cl");
        let back = parse_graph6(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.edge_count(), 4);
    }

    #[test]
    fn known_strings() {
        // Petersen graph from the nauty documentation.
        let p = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn errors_name_offsets() {
        assert!(matches!(parse_graph6("garbage"), Err(GraphError::Parse { .. })));
        assert_eq!(parse_graph6(""), Err(parse_err(0, "empty input")));
        match parse_graph6("Cl?") {
            Err(GraphError::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("C") {
            Err(GraphError::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match parse_graph6("Cl ") {
            Err(GraphError::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn long_form_header() {
        let g = Graph::empty(64).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let too_big = format!("~?A@{}", "?".repeat(400));
        assert!(parse_graph6(&too_big).is_err());
    }
}
