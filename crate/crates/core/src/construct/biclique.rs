use crate::error::{Error, Result};
use crate::graph::{BitMatrix, Graph};
use crate::interval::{Interval, IntervalLayer};
use crate::representation::LocalBoxRepresentation;

pub const TAG: &str = "biclique";

/// A partition of a graph's edge set into complete bipartite blocks
/// `A_i × B_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicliquePartition {
    host_n: usize,
    blocks: Vec<(Vec<usize>, Vec<usize>)>,
}

impl BicliquePartition {
    /// Accepts `blocks` only if they partition `E(host)` exactly.
    pub fn new(host: &Graph, blocks: Vec<(Vec<usize>, Vec<usize>)>) -> Result<Self> {
        let p = BicliquePartition {
            host_n: host.n(),
            blocks,
        };
        p.validate(host)?;
        Ok(p)
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn blocks(&self) -> &[(Vec<usize>, Vec<usize>)] {
        &self.blocks
    }

    /// Checks disjoint nonempty sides, that every block edge is a host edge
    /// covered once, and that every host edge is covered.
    pub fn validate(&self, host: &Graph) -> Result<()> {
        let n = host.n();
        if self.host_n != n {
            return Err(Error::DimensionMismatch {
                graph: n,
                representation: self.host_n,
            });
        }
        let mut covered = BitMatrix::new(n);
        let mut count = 0usize;
        for (i, (a, b)) in self.blocks.iter().enumerate() {
            if a.is_empty() || b.is_empty() {
                return Err(Error::InvalidPartition(format!(
                    "block {i} has an empty side"
                )));
            }
            for &u in a {
                for &v in b {
                    if u >= n || v >= n {
                        return Err(Error::VertexOutOfRange {
                            vertex: u.max(v),
                            n,
                        });
                    }
                    if u == v {
                        return Err(Error::InvalidPartition(format!(
                            "block {i} sides share vertex {u}"
                        )));
                    }
                    if !host.has_edge(u, v) {
                        return Err(Error::InvalidPartition(format!(
                            "block {i} uses non-edge {u}-{v}"
                        )));
                    }
                    if covered.get(u, v) {
                        return Err(Error::InvalidPartition(format!(
                            "edge {u}-{v} covered twice"
                        )));
                    }
                    covered.set_sym(u, v);
                    count += 1;
                }
            }
        }
        if count != host.m() {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {count} of {} edges",
                host.m()
            )));
        }
        Ok(())
    }

    /// Number of blocks each vertex belongs to.
    pub fn membership_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.host_n];
        for (a, b) in &self.blocks {
            for &v in a.iter().chain(b) {
                counts[v] += 1;
            }
        }
        counts
    }
}

/// Greedy biclique partition: seed at the vertex of largest remaining degree
/// (lowest index on ties), take `B` as its remaining neighbourhood, then add
/// to `A` every vertex (ascending) still adjacent to all of `B`. Remove
/// `A × B` and repeat.
pub fn greedy_biclique_partition(h: &Graph) -> BicliquePartition {
    let n = h.n();
    let mut remaining = h.adjacency_matrix().clone();
    let mut degree: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut blocks = Vec::new();
    let mut in_b = vec![false; n];
    let busiest = |degree: &[usize]| {
        (0..n)
            .filter(|&v| degree[v] > 0)
            .max_by(|&x, &y| degree[x].cmp(&degree[y]).then(y.cmp(&x)))
    };
    while let Some(seed) = busiest(&degree) {
        let b: Vec<usize> = remaining.row_ones(seed).collect();
        for &v in &b {
            in_b[v] = true;
        }
        let mut a = vec![seed];
        for w in 0..n {
            if w != seed
                && !in_b[w]
                && degree[w] >= b.len()
                && b.iter().all(|&x| remaining.get(w, x))
            {
                a.push(w);
            }
        }
        a.sort_unstable();
        for &u in &a {
            for &v in &b {
                remaining.clear(u, v);
                remaining.clear(v, u);
                degree[u] -= 1;
                degree[v] -= 1;
            }
        }
        for &v in &b {
            in_b[v] = false;
        }
        blocks.push((a, b));
    }
    BicliquePartition { host_n: n, blocks }
}

/// One layer per block of a biclique partition of the complement: `A_i`
/// gets `[1,2]`, `B_i` gets `[3,4]`, everyone else the span `[1,4]`.
pub fn biclique_representation(g: &Graph) -> Result<LocalBoxRepresentation> {
    let partition = greedy_biclique_partition(&g.complement());
    representation_from_partition(g.n(), &partition)
}

pub fn representation_from_partition(
    n: usize,
    partition: &BicliquePartition,
) -> Result<LocalBoxRepresentation> {
    let span = Interval::int(1, 4);
    if partition.blocks().is_empty() {
        return Ok(LocalBoxRepresentation::all_implicit(n, span, TAG));
    }
    let layers = partition
        .blocks()
        .iter()
        .map(|(a, b)| {
            IntervalLayer::with_intervals(
                span,
                a.iter()
                    .map(|&v| (v, Interval::int(1, 2)))
                    .chain(b.iter().map(|&v| (v, Interval::int(3, 4)))),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    LocalBoxRepresentation::new(n, layers, TAG)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::representation::verify_representation;

    #[test]
    fn partitions() {
        let k23 = generators::complete_bipartite(2, 3);
        let p = greedy_biclique_partition(&k23);
        p.validate(&k23).unwrap();
        assert_eq!(p.blocks().len(), 1);

        let edge = Graph::from_edges(2, [(0, 1)]).unwrap();
        let p = greedy_biclique_partition(&edge);
        assert_eq!(p.blocks(), &[(vec![0], vec![1])]);

        let random = generators::gnp(12, 0.5, 1).unwrap();
        let p = greedy_biclique_partition(&random);
        // reassemble the edge multiset
        let mut edges: Vec<(usize, usize)> = p
            .blocks()
            .iter()
            .flat_map(|(a, b)| {
                a.iter()
                    .flat_map(move |&u| b.iter().map(move |&v| (u.min(v), u.max(v))))
            })
            .collect();
        edges.sort_unstable();
        assert_eq!(edges, random.edges().collect::<Vec<_>>());
        assert!(greedy_biclique_partition(&Graph::empty(4))
            .blocks()
            .is_empty());
    }

    #[test]
    fn rejects_bad_partitions() {
        let p3 = generators::path(3);
        assert!(BicliquePartition::new(&p3, vec![(vec![1], vec![0, 2])]).is_ok());
        assert!(BicliquePartition::new(&p3, vec![(vec![0], vec![1])]).is_err());
        assert!(
            BicliquePartition::new(&p3, vec![(vec![0], vec![2]), (vec![1], vec![0, 2])]).is_err()
        );
        assert!(
            BicliquePartition::new(&p3, vec![(vec![1], vec![0, 2]), (vec![0], vec![1])]).is_err()
        );
    }

    #[test]
    fn representations() {
        let k5 = generators::complete(5);
        let rep = biclique_representation(&k5).unwrap();
        assert_eq!(rep.layers().len(), 1);
        assert_eq!(rep.max_frequency(), 0);

        let c4 = generators::cycle(4);
        let rep = biclique_representation(&c4).unwrap();
        let report = verify_representation(&c4, &rep).unwrap();
        assert!(report.exact);
        assert_eq!(rep.layers().len(), 2);
        assert!(report.max_frequency <= 2);

        let r5 = generators::roberts(5).unwrap();
        let rep = biclique_representation(&r5).unwrap();
        let report = verify_representation(&r5, &rep).unwrap();
        assert!(report.exact);
        assert_eq!(rep.layers().len(), 5);
        assert_eq!(report.max_frequency, 1);
    }
}
