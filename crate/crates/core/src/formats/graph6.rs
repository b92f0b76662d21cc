//! graph6: the number of vertices followed by the upper triangle of the
//! adjacency matrix in column order, six bits per printable byte.

use super::FormatError;
use crate::hypercore::Hypergraph;

const BIAS: u8 = 63;
const LONG: u8 = 126;
const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 record. All ASCII whitespace is removed first, so a
/// record wrapped across lines decodes as a single string.
pub fn parse_graph6(text: &str) -> Result<Hypergraph, FormatError> {
    let compact: Vec<u8> = text.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
    let body = compact.strip_prefix(HEADER.as_bytes()).unwrap_or(&compact);
    if let Some((offset, &byte)) = body.iter().enumerate().find(|(_, &b)| !(BIAS..=LONG).contains(&b)) {
        return Err(FormatError::ByteOutOfRange { offset, byte });
    }
    let (n, rest) = decode_order(body)?;
    if n == 0 {
        return Err(FormatError::EmptyGraph);
    }
    let bits = n * (n - 1) / 2;
    let needed = bits.div_ceil(6);
    if rest.len() < needed {
        return Err(FormatError::Truncated { expected: needed, found: rest.len() });
    }
    if rest.len() > needed {
        return Err(FormatError::TrailingGarbage { extra: rest.len() - needed });
    }

    let bit = |k: usize| (rest[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if (bits..needed * 6).any(bit) {
        return Err(FormatError::NonZeroPadding);
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Hypergraph::from_pairs(n, &pairs)?)
}

fn decode_order(body: &[u8]) -> Result<(usize, &[u8]), FormatError> {
    let value = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS))
    };
    match body {
        [] => Err(FormatError::Truncated { expected: 1, found: 0 }),
        [LONG, LONG, rest @ ..] => {
            if rest.len() < 6 {
                return Err(FormatError::Truncated { expected: 6, found: rest.len() });
            }
            Ok((value(&rest[..6]), &rest[6..]))
        }
        [LONG, rest @ ..] => {
            if rest.len() < 3 {
                return Err(FormatError::Truncated { expected: 3, found: rest.len() });
            }
            Ok((value(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok((usize::from(b - BIAS), rest)),
    }
}

fn encode_order(n: usize, out: &mut String) {
    let push = |out: &mut String, count: usize| {
        for shift in (0..count).rev() {
            out.push(char::from(((n >> (6 * shift)) & 0x3f) as u8 + BIAS));
        }
    };
    if n < 63 {
        push(out, 1);
    } else if n < 1 << 18 {
        out.push('~');
        push(out, 3);
    } else {
        out.push_str("~~");
        push(out, 6);
    }
}

/// Encodes a 2-uniform hypergraph as a canonical graph6 string.
pub fn write_graph6(g: &Hypergraph) -> Result<String, FormatError> {
    if !g.is_two_uniform() {
        return Err(FormatError::NotAGraph);
    }
    let n = g.order();
    let mut out = String::new();
    encode_order(n, &mut out);
    let bits = n * (n - 1) / 2;
    let mut packed = vec![0u8; bits.div_ceil(6)];
    for e in g.edges() {
        let (i, j) = (e[0], e[1]);
        let k = j * (j - 1) / 2 + i;
        packed[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(packed.into_iter().map(|b| char::from(b + BIAS)));
    Ok(out)
}
