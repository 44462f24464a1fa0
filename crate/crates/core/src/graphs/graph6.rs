//! graph6 encoding.
//!
//! Layout: a size header (`n + 63` for `n < 63`, otherwise `126` followed by
//! three or six 6-bit groups), then the upper triangle of the adjacency
//! matrix in column order `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed six bits
//! per byte, big-endian, zero padded, each byte offset by 63.
//! Reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const MAX_LONG: usize = (1 << 36) - 1;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n_vertices();
    let mut out = Vec::new();
    encode_size(n, &mut out);

    let n_bits = n * n.saturating_sub(1) / 2;
    let mut bits = vec![false; n_bits];
    for &(i, j) in g.edges() {
        bits[j * (j - 1) / 2 + i] = true;
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - k);
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    let groups = match n {
        0..=MAX_SHORT => {
            out.push(n as u8 + 63);
            return;
        }
        _ if n <= MAX_MEDIUM => {
            out.push(126);
            3
        }
        _ => {
            assert!(n <= MAX_LONG, "graph too large for graph6");
            out.extend([126, 126]);
            6
        }
    };
    for k in (0..groups).rev() {
        out.push(((n >> (6 * k)) & 0x3f) as u8 + 63);
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!(
            "byte {b} out of range 63..=126"
        )));
    }
    let six: Vec<usize> = bytes.iter().map(|&b| (b - 63) as usize).collect();

    let (n, body) = match six.as_slice() {
        [] => return Err(Error::MalformedGraph6("empty string".into())),
        [63, 63, rest @ ..] => (decode_groups(rest, 6)?, &rest[6..]),
        [63, rest @ ..] => (decode_groups(rest, 3)?, &rest[3..]),
        [n, rest @ ..] => (*n, rest),
    };

    let n_bits = n * n.saturating_sub(1) / 2;
    let expected = n_bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        let pad = expected * 6 - n_bits;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_sorted_unchecked(n, edges))
}

fn decode_groups(six: &[usize], groups: usize) -> Result<usize> {
    if six.len() < groups {
        return Err(Error::MalformedGraph6("truncated size header".into()));
    }
    Ok(six[..groups].iter().fold(0, |acc, &g| (acc << 6) | g))
}
