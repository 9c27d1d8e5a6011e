//! Local box representations and their verification.

use crate::error::{Error, Result};
use crate::graph::{BitMatrix, Graph};
use crate::interval::{Interval, IntervalLayer};

/// An ordered list of interval layers whose intersection should equal a
/// target graph on `target_n` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalBoxRepresentation {
    target_n: usize,
    layers: Vec<IntervalLayer>,
    strategy: String,
}

impl LocalBoxRepresentation {
    /// Checks that there is at least one layer and every explicit vertex is
    /// below `target_n`.
    pub fn new(
        target_n: usize,
        layers: Vec<IntervalLayer>,
        strategy: impl Into<String>,
    ) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::InvalidParameter(
                "a representation needs at least one layer".into(),
            ));
        }
        for layer in &layers {
            if let Some((&v, _)) = layer.explicit().iter().next_back() {
                if v >= target_n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        n: target_n,
                    });
                }
            }
        }
        Ok(LocalBoxRepresentation {
            target_n,
            layers,
            strategy: strategy.into(),
        })
    }

    /// The one-layer representation of `K_n` with every vertex implicit.
    pub fn all_implicit(target_n: usize, span: Interval, strategy: impl Into<String>) -> Self {
        LocalBoxRepresentation {
            target_n,
            layers: vec![IntervalLayer::new(span)],
            strategy: strategy.into(),
        }
    }

    pub fn target_n(&self) -> usize {
        self.target_n
    }

    pub fn layers(&self) -> &[IntervalLayer] {
        &self.layers
    }

    pub fn into_layers(self) -> Vec<IntervalLayer> {
        self.layers
    }

    pub fn strategy(&self) -> &str {
        &self.strategy
    }

    pub fn with_strategy(mut self, strategy: impl Into<String>) -> Self {
        self.strategy = strategy.into();
        self
    }

    /// Per-vertex count of layers where the vertex is explicit and
    /// non-universal.
    pub fn frequencies(&self) -> Vec<usize> {
        let mut freq = vec![0; self.target_n];
        for layer in &self.layers {
            for v in layer.non_universal() {
                freq[v] += 1;
            }
        }
        freq
    }

    pub fn max_frequency(&self) -> usize {
        self.frequencies().into_iter().max().unwrap_or(0)
    }

    /// Whether `u` and `v` intersect in every layer.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.layers.iter().all(|l| l.adjacent(u, v))
    }

    /// Removes the layer at `index`; at least one layer must remain.
    pub fn remove_layer(&mut self, index: usize) -> Result<IntervalLayer> {
        if self.layers.len() <= 1 {
            return Err(Error::InvalidParameter(
                "cannot remove the last layer".into(),
            ));
        }
        Ok(self.layers.remove(index))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub exact: bool,
    /// Edges of the graph separated in at least one layer.
    pub missing_edges: Vec<(usize, usize)>,
    /// Non-edges of the graph that intersect in every layer.
    pub surviving_nonedges: Vec<(usize, usize)>,
    pub max_frequency: usize,
    pub per_vertex_frequency: Vec<usize>,
}

/// Compares the intersection of all layers with `g`, pair by pair.
pub fn verify_representation(
    g: &Graph,
    rep: &LocalBoxRepresentation,
) -> Result<VerificationReport> {
    let n = g.n();
    if rep.target_n() != n {
        return Err(Error::DimensionMismatch {
            graph: n,
            representation: rep.target_n(),
        });
    }
    let mut broken = BitMatrix::new(n);
    for layer in rep.layers() {
        for (u, v) in layer.broken_pairs() {
            broken.set(u, v);
        }
    }
    let mut missing_edges = Vec::new();
    let mut surviving_nonedges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            match (g.has_edge(u, v), broken.get(u, v)) {
                (true, true) => missing_edges.push((u, v)),
                (false, false) => surviving_nonedges.push((u, v)),
                _ => {}
            }
        }
    }
    let per_vertex_frequency = rep.frequencies();
    Ok(VerificationReport {
        exact: missing_edges.is_empty() && surviving_nonedges.is_empty(),
        missing_edges,
        surviving_nonedges,
        max_frequency: per_vertex_frequency.iter().copied().max().unwrap_or(0),
        per_vertex_frequency,
    })
}

/// The graph the representation actually encodes.
pub fn represented_graph(rep: &LocalBoxRepresentation) -> Graph {
    let n = rep.target_n();
    let mut broken = BitMatrix::new(n);
    for layer in rep.layers() {
        for (u, v) in layer.broken_pairs() {
            broken.set(u, v);
        }
    }
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    let edges: Vec<_> = edges.filter(|&(u, v)| !broken.get(u, v)).collect();
    Graph::from_edges(n, edges).expect("pairs are distinct and in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn naive_intersection(rep: &LocalBoxRepresentation) -> Vec<(usize, usize)> {
        let n = rep.target_n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rep
                    .layers()
                    .iter()
                    .all(|l| l.interval_of(u).intersects(&l.interval_of(v)))
                {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[test]
    fn complete_graph_all_implicit() {
        let k4 = generators::complete(4);
        let rep = LocalBoxRepresentation::all_implicit(4, Interval::int(0, 1), "test");
        let report = verify_representation(&k4, &rep).unwrap();
        assert!(report.exact);
        assert_eq!(report.max_frequency, 0);
    }

    #[test]
    fn c4_as_one_path_layer_fails() {
        let c4 = generators::cycle(4);
        let layer = IntervalLayer::with_intervals(
            Interval::int(1, 5),
            [
                (0, Interval::int(1, 2)),
                (1, Interval::int(2, 3)),
                (2, Interval::int(3, 4)),
                (3, Interval::int(4, 5)),
            ],
        )
        .unwrap();
        let rep = LocalBoxRepresentation::new(4, vec![layer], "test").unwrap();
        let report = verify_representation(&c4, &rep).unwrap();
        assert!(!report.exact);
        // brute-force pairwise intersection: the path 0-1-2-3 survives
        assert_eq!(naive_intersection(&rep), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(report.missing_edges, vec![(0, 3)]);
        assert!(report.surviving_nonedges.is_empty());
    }

    #[test]
    fn size_mismatch() {
        let rep = LocalBoxRepresentation::all_implicit(3, Interval::int(0, 1), "test");
        assert_eq!(
            verify_representation(&Graph::empty(4), &rep),
            Err(Error::DimensionMismatch {
                graph: 4,
                representation: 3
            })
        );
    }

    #[test]
    fn all_implicit_only_verifies_complete() {
        let rep = LocalBoxRepresentation::all_implicit(4, Interval::int(0, 1), "test");
        let p4 = generators::path(4);
        let report = verify_representation(&p4, &rep).unwrap();
        assert!(!report.exact);
        assert_eq!(report.surviving_nonedges, vec![(0, 2), (0, 3), (1, 3)]);
    }
}
