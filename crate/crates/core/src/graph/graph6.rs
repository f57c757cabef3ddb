// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! graph6 codec, single-byte size form only.
//!
//! A record is the size byte `63 + n` followed by the upper triangle of the
//! adjacency matrix read column by column (`(0,1), (0,2), (1,2), (0,3), ..`),
//! packed six bits per byte, high bit first, each byte offset by 63. The
//! final byte is zero-padded.

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Orders above this need the multi-byte size prefix, which is not supported.
pub const MAX_GRAPH6_ORDER: usize = 62;

const HEADER: &[u8] = b">>graph6<<";

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let (&size, body) = text.split_first().ok_or_else(|| Error::Malformed("empty record".into()))?;
    if size == b'~' {
        return Err(Error::UnsupportedOrder { n: 63, max: MAX_GRAPH6_ORDER });
    }
    if !(63..=125).contains(&size) {
        return Err(Error::Malformed(format!("invalid size byte {size:#04x}")));
    }
    let n = (size - 63) as usize;
    if body.len() != body_len(n) {
        return Err(Error::Malformed(format!("expected {} data bytes for n={n}, found {}", body_len(n), body.len())));
    }
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Malformed(format!("invalid character at offset {}", pos + 1)));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let last = body[bit / 6] - 63;
        if last & ((1u8 << (6 - bit % 6)) - 1) != 0 {
            return Err(Error::Malformed("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_adjacency(adj))
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::UnsupportedOrder { n, max: MAX_GRAPH6_ORDER });
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_all, generate, Family};
    use proptest::prelude::*;

    #[test]
    fn triangle_is_bw() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(encode_graph6(&k3).unwrap(), "Bw");
        assert_eq!(parse_graph6(b"Bw").unwrap(), k3);
    }

    #[test]
    fn single_vertex_is_at_sign() {
        assert_eq!(encode_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(encode_graph6(&Graph::empty(0)).unwrap(), "?");
    }

    #[test]
    fn truncated_record_is_malformed() {
        assert!(matches!(parse_graph6(b"B"), Err(Error::Malformed(_))));
        assert!(matches!(parse_graph6(b""), Err(Error::Malformed(_))));
        assert!(matches!(parse_graph6(b"Bww"), Err(Error::Malformed(_))));
        assert!(matches!(parse_graph6(b"B "), Err(Error::Malformed(_))));
        // K3 record with a padding bit set
        assert!(matches!(parse_graph6(b"Bx"), Err(Error::Malformed(_))));
    }

    #[test]
    fn large_orders_unsupported() {
        assert!(matches!(parse_graph6(b"~?@c"), Err(Error::UnsupportedOrder { .. })));
        assert!(matches!(encode_graph6(&Graph::empty(63)), Err(Error::UnsupportedOrder { n: 63, .. })));
    }

    #[test]
    fn petersen_matches_reference_string() {
        // the Petersen graph as labeled by generate() (outer 5-cycle, spokes, inner pentagram)
        let g = generate(&Family::Petersen).unwrap();
        let s = encode_graph6(&g).unwrap();
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
        assert_eq!(parse_graph6(format!(">>graph6<<{s}").as_bytes()).unwrap(), g);
    }

    #[test]
    fn round_trip_all_six_vertex_graphs() {
        for g in enumerate_all(6).unwrap() {
            let s = encode_graph6(&g).unwrap();
            assert_eq!(parse_graph6(s.as_bytes()).unwrap().edges(), g.edges());
        }
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=62, pairs in proptest::collection::vec((0usize..62, 0usize..62), 0..120)) {
            let pairs = pairs.into_iter().filter(|&(u, v)| u < n && v < n && u != v);
            let g = Graph::new(n, pairs).unwrap();
            let s = encode_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
        }
    }
}
