//! graph6 encoding and decoding.
//!
//! The format packs the upper triangle of the adjacency matrix column by
//! column — bit order (0,1), (0,2), (1,2), (0,3), … — into 6-bit groups,
//! most significant bit first, each group offset by 63 into printable ASCII.
//! Orders up to 62 use a single size byte; 63..=258047 use `~` plus three
//! bytes of 18 bits.

use crate::{Error, Graph};

const MAX_N: usize = 258_047;

fn size_bytes(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else {
        vec![
            126,
            ((n >> 12) & 63) as u8 + 63,
            ((n >> 6) & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]
    }
}

/// Encode a graph as a graph6 string.
pub fn encode(g: &Graph) -> Result<String, Error> {
    let n = g.n();
    if n > MAX_N {
        return Err(Error::TooLarge { n, max: MAX_N });
    }
    let mut bytes = size_bytes(n);
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                bytes.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(bytes).unwrap())
}

/// Decode a graph6 string.
pub fn decode(s: &str) -> Result<Graph, Error> {
    let bytes = s.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6("byte outside printable range 63..=126".into()));
    }
    let (n, offset) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        if bytes[1] == 126 {
            return Err(Error::Graph6("orders above 258047 not supported".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = offset + nbits.div_ceil(6);
    if bytes.len() != expect {
        return Err(Error::Graph6(format!(
            "expected {} bytes for order {}, found {}",
            expect,
            n,
            bytes.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut idx = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[offset + idx / 6] - 63;
            let bit = (byte >> (5 - idx % 6)) & 1;
            if bit == 1 {
                g.add_edge(u, v).unwrap();
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    // Padding bits must be zero.
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}
