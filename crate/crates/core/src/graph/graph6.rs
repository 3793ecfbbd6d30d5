use super::{GraphError, SimpleGraph};

const HEADER: &str = ">>graph6<<";
const SMALL_LIMIT: usize = 62;
const MEDIUM_LIMIT: usize = 258_047;
const LARGE_LIMIT: usize = (1 << 36) - 1;

/// Parses one graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are tolerated; padding bits must be zero.
pub fn parse_graph6(text: &str) -> Result<SimpleGraph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("invalid byte {b:#04x}")));
    }

    let (n, body) = decode_order(bytes)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if read_bit(body, bit) {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    for pad in bit..6 * body.len() {
        if read_bit(body, pad) {
            return Err(malformed("nonzero padding bits"));
        }
    }
    SimpleGraph::new(n, edges)
}

/// Encodes a graph as graph6 without header or trailing newline.
pub fn write_graph6(g: &SimpleGraph) -> String {
    let n = g.order();
    assert!(n <= LARGE_LIMIT, "graph6 cannot encode {n} vertices");
    let mut out = encode_order(n);

    let bit_count = n * n.saturating_sub(1) / 2;
    let mut bits = vec![false; bit_count];
    for &(u, v) in g.edges() {
        // column-major upper triangle: (i, j) with i < j
        bits[v * (v - 1) / 2 + u] = true;
    }
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                value |= 1 << (5 - k);
            }
        }
        out.push(value + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn malformed(msg: impl Into<String>) -> GraphError {
    GraphError::MalformedGraph6(msg.into())
}

fn read_bit(body: &[u8], index: usize) -> bool {
    let byte = body[index / 6] - 63;
    byte & (1 << (5 - index % 6)) != 0
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let six = |slice: &[u8]| {
        slice
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63))
    };
    if bytes[0] != 126 {
        return Ok((usize::from(bytes[0] - 63), &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(malformed("truncated 8-byte vertex count"));
        }
        return Ok((six(&bytes[2..8]), &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(malformed("truncated 4-byte vertex count"));
    }
    Ok((six(&bytes[1..4]), &bytes[4..]))
}

fn encode_order(n: usize) -> Vec<u8> {
    let digits = |count: usize| {
        (0..count)
            .rev()
            .map(move |k| ((n >> (6 * k)) & 63) as u8 + 63)
    };
    if n <= SMALL_LIMIT {
        vec![n as u8 + 63]
    } else if n <= MEDIUM_LIMIT {
        std::iter::once(126).chain(digits(3)).collect()
    } else {
        [126, 126].into_iter().chain(digits(6)).collect()
    }
}
