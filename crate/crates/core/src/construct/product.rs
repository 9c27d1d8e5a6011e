use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{coord, Interval, IntervalLayer};
use crate::representation::LocalBoxRepresentation;

pub const TAG: &str = "product";

/// Integer vectors of a common length `k`, one per vertex, such that two
/// vertices are adjacent iff their codes differ in every coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductEncoding {
    codes: Vec<Vec<u32>>,
}

impl ProductEncoding {
    pub fn new(codes: Vec<Vec<u32>>) -> Result<Self> {
        let k = codes.first().map_or(1, Vec::len);
        if k == 0 {
            return Err(Error::InvalidParameter(
                "product encoding needs k >= 1".into(),
            ));
        }
        if let Some(v) = codes.iter().position(|c| c.len() != k) {
            return Err(Error::InvalidParameter(format!(
                "code of vertex {v} has length {}, expected {k}",
                codes[v].len()
            )));
        }
        Ok(ProductEncoding { codes })
    }

    pub fn k(&self) -> usize {
        self.codes.first().map_or(1, Vec::len)
    }

    pub fn codes(&self) -> &[Vec<u32>] {
        &self.codes
    }

    pub fn differ_everywhere(&self, u: usize, v: usize) -> bool {
        self.codes[u]
            .iter()
            .zip(&self.codes[v])
            .all(|(a, b)| a != b)
    }

    /// First pair `(u, v)` where adjacency and the code pattern disagree.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.codes.len() != g.n() {
            return Err(Error::DimensionMismatch {
                graph: g.n(),
                representation: self.codes.len(),
            });
        }
        for u in 0..g.n() {
            for v in (u + 1)..g.n() {
                if g.has_edge(u, v) != self.differ_everywhere(u, v) {
                    return Err(Error::EncodingMismatch(u, v));
                }
            }
        }
        Ok(())
    }
}

/// One layer per coordinate `i` and value `j`: vertex `v_a` (1-based `a`)
/// with `f_i(v_a) = j` gets the point `[a, a]`, all others the span `[1, n]`.
pub fn product_representation(g: &Graph, enc: &ProductEncoding) -> Result<LocalBoxRepresentation> {
    enc.check(g)?;
    let n = g.n();
    let span = Interval::int(1, n.max(1) as i64);
    let mut layers = Vec::new();
    for i in 0..enc.k() {
        let mut by_value: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (v, code) in enc.codes().iter().enumerate() {
            by_value.entry(code[i]).or_default().push(v);
        }
        for members in by_value.values() {
            let layer = IntervalLayer::with_intervals(
                span,
                members.iter().map(|&v| {
                    let a = coord(v as i64 + 1);
                    (v, Interval::new(a, a).expect("point interval"))
                }),
            )?;
            layers.push(layer);
        }
    }
    if layers.is_empty() {
        return Ok(LocalBoxRepresentation::all_implicit(n, span, TAG));
    }
    LocalBoxRepresentation::new(n, layers, TAG)
}
