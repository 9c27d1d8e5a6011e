use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::representation::LocalBoxRepresentation;

pub const TAG: &str = "pairwise";

/// Vertex partition `V_1 … V_r` in which every vertex has at most `bound`
/// neighbours inside each part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedDegreePartition {
    parts: Vec<Vec<usize>>,
    bound: usize,
}

impl BoundedDegreePartition {
    pub fn new(g: &Graph, parts: Vec<Vec<usize>>, bound: usize) -> Result<Self> {
        let p = BoundedDegreePartition { parts, bound };
        p.check_cover(g.n())?;
        if let Some((v, i, c)) = p.violation(g) {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} has {c} neighbours in part {i}, bound is {bound}"
            )));
        }
        Ok(p)
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Part index of each vertex.
    pub fn assignment(&self, n: usize) -> Vec<usize> {
        let mut part = vec![usize::MAX; n];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                part[v] = i;
            }
        }
        part
    }

    fn check_cover(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for p in &self.parts {
            for &v in p {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} lies in two parts"
                    )));
                }
                seen[v] = true;
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(v) => Err(Error::InvalidPartition(format!(
                "vertex {v} lies in no part"
            ))),
            None => Ok(()),
        }
    }

    /// First `(vertex, part, count)` exceeding the bound.
    fn violation(&self, g: &Graph) -> Option<(usize, usize, usize)> {
        let part = self.assignment(g.n());
        first_violation(g, &part, self.parts.len(), self.bound)
    }
}

fn first_violation(
    g: &Graph,
    part: &[usize],
    r: usize,
    bound: usize,
) -> Option<(usize, usize, usize)> {
    let mut counts = vec![0usize; r];
    for v in 0..g.n() {
        for &w in g.neighbors(v) {
            counts[part[w]] += 1;
        }
        let bad = g
            .neighbors(v)
            .iter()
            .map(|&w| part[w])
            .find(|&i| counts[i] > bound);
        let hit = bad.map(|i| (v, i, counts[i]));
        for &w in g.neighbors(v) {
            counts[part[w]] = 0;
        }
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Random search for a bounded-degree partition into `r` parts: each try
/// assigns every vertex a uniform part. `None` after `max_tries` failures.
pub fn find_bounded_degree_partition(
    g: &Graph,
    r: usize,
    bound: usize,
    max_tries: usize,
    seed: u64,
) -> Option<BoundedDegreePartition> {
    if r == 0 {
        return None;
    }
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut part = vec![0usize; n];
    for _ in 0..max_tries {
        for p in part.iter_mut() {
            *p = rng.random_range(0..r);
        }
        if first_violation(g, &part, r, bound).is_none() {
            let mut parts = vec![Vec::new(); r];
            for (v, &p) in part.iter().enumerate() {
                parts[p].push(v);
            }
            return Some(BoundedDegreePartition { parts, bound });
        }
    }
    None
}

/// Builds `inner(G[V_i ∪ V_j])` for every pair of parts `i < j` and lifts the
/// layers to `G`, leaving vertices outside `V_i ∪ V_j` implicit. Layers are
/// concatenated in `(i, j)` order.
pub fn pairwise_composition<F>(
    g: &Graph,
    parts: &BoundedDegreePartition,
    inner: F,
) -> Result<LocalBoxRepresentation>
where
    F: Fn(&Graph) -> Result<LocalBoxRepresentation>,
{
    parts.check_cover(g.n())?;
    let r = parts.parts().len();
    if r < 2 {
        return Err(Error::InvalidPartition(format!(
            "pairwise composition needs r >= 2, got {r}"
        )));
    }
    let mut layers = Vec::new();
    for i in 0..r {
        for j in (i + 1)..r {
            let mut union: Vec<usize> = parts.parts()[i]
                .iter()
                .chain(&parts.parts()[j])
                .copied()
                .collect();
            union.sort_unstable();
            let sub = inner(&g.induced(&union))?;
            layers.extend(sub.layers().iter().map(|l| l.lift(&union)));
        }
    }
    LocalBoxRepresentation::new(g.n(), layers, TAG)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::biclique::biclique_representation;
    use crate::generators;
    use crate::representation::verify_representation;

    #[test]
    fn single_part_succeeds() {
        let g = generators::petersen();
        let p = find_bounded_degree_partition(&g, 1, g.max_degree(), 1, 0).unwrap();
        assert_eq!(p.parts(), &[(0..10).collect::<Vec<_>>()]);
    }

    #[test]
    fn k5_cannot_split_in_two() {
        assert_eq!(
            find_bounded_degree_partition(&generators::complete(5), 2, 1, 500, 0),
            None
        );
    }

    #[test]
    fn c8_into_four() {
        let c8 = generators::cycle(8);
        let p = find_bounded_degree_partition(&c8, 4, 1, 10_000, 5).unwrap();
        BoundedDegreePartition::new(&c8, p.parts().to_vec(), 1).unwrap();
    }

    #[test]
    fn two_parts_equal_inner() {
        let g = generators::gnp(10, 0.5, 2).unwrap();
        let parts =
            BoundedDegreePartition::new(&g, vec![vec![0, 2, 4, 6, 8], vec![1, 3, 5, 7, 9]], 10)
                .unwrap();
        let rep = pairwise_composition(&g, &parts, biclique_representation).unwrap();
        let direct = biclique_representation(&g).unwrap();
        assert_eq!(rep.layers(), direct.layers());
    }

    #[test]
    fn cycle_in_opposite_pairs() {
        let c6 = generators::cycle(6);
        let parts =
            BoundedDegreePartition::new(&c6, vec![vec![0, 3], vec![1, 4], vec![2, 5]], 2).unwrap();
        let rep = pairwise_composition(&c6, &parts, biclique_representation).unwrap();
        assert!(verify_representation(&c6, &rep).unwrap().exact);
    }

    #[test]
    fn invalid_partitions() {
        let p3 = generators::path(3);
        assert!(BoundedDegreePartition::new(&p3, vec![vec![0, 1]], 2).is_err());
        assert!(BoundedDegreePartition::new(&p3, vec![vec![0, 1], vec![1, 2]], 2).is_err());
        assert!(BoundedDegreePartition::new(&p3, vec![vec![0, 2], vec![1]], 1).is_err());
        let one = BoundedDegreePartition::new(&p3, vec![vec![0, 1, 2]], 2).unwrap();
        assert!(pairwise_composition(&p3, &one, biclique_representation).is_err());
    }
}
