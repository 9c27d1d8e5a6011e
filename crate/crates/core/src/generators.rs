//! Graph families. Random families are deterministic given their seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::empty(n).complement()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
}

/// `C_n` for `n ≥ 3`; smaller `n` falls back to the path.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(0, n - 1).expect("closing edge is new");
    }
    g
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i))).expect("star edges are simple")
}

/// `K_{a,b}`: vertices `0..a` on one side, `a..a+b` on the other.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::from_edges(a + b, edges).expect("bipartite edges are simple")
}

/// `k` disjoint edges `(2i, 2i+1)`.
pub fn matching(k: usize) -> Graph {
    Graph::from_edges(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1))).expect("matching edges are simple")
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("petersen edges are simple")
}

/// Roberts graph `R_n`: `K_{2n}` minus the perfect matching `{2i, 2i+1}`.
/// Vertex `2i` plays `v_i` and `2i + 1` plays `v'_i`.
pub fn roberts(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("Roberts graph needs n >= 1".into()));
    }
    let edges = (0..2 * n).flat_map(|u| ((u + 1)..2 * n).map(move |v| (u, v)));
    Graph::from_edges(2 * n, edges.filter(|&(u, v)| !(u % 2 == 0 && v == u + 1)))
}

/// Line graph: vertex `i` is the `i`-th edge of `g` in `g.edges()` order.
pub fn line_graph(g: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut incident = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut lg = Graph::empty(edges.len());
    for list in &incident {
        for (a, &x) in list.iter().enumerate() {
            for &y in &list[a + 1..] {
                // parallel edges cannot occur in a simple graph, so each pair
                // of edges shares at most one endpoint
                lg.add_edge(x, y).expect("edges share at most one endpoint");
            }
        }
    }
    lg
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// A random graph on `n` vertices with exactly `m` edges and maximum degree
/// at most `max_degree`, built by rejection of random pairs.
pub fn random_bounded_degree(n: usize, m: usize, max_degree: usize, seed: u64) -> Result<Graph> {
    if 2 * m > n * max_degree || (n < 2 && m > 0) {
        return Err(Error::InvalidParameter(format!(
            "{m} edges cannot fit on {n} vertices with degree <= {max_degree}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    let mut attempts = 0usize;
    let cap = 1000 * (m + 1) * n.max(1);
    while g.m() < m {
        attempts += 1;
        if attempts > cap {
            return Err(Error::InvalidParameter(format!(
                "could not place {m} edges with degree <= {max_degree} on {n} vertices"
            )));
        }
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v || g.has_edge(u, v) || g.degree(u) >= max_degree || g.degree(v) >= max_degree {
            continue;
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Line graph with exactly `n` vertices and maximum degree at most 4: the
/// line graph of a random graph with `n` edges and degree at most 3.
pub fn bounded_line_graph(n: usize, seed: u64) -> Result<Graph> {
    let host = random_bounded_degree(n.max(2), n, 3, seed)?;
    Ok(line_graph(&host))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(complete(5).m(), 10);
        assert_eq!(cycle(6).m(), 6);
        assert_eq!(petersen().m(), 15);
        assert!((0..10).all(|v| petersen().degree(v) == 3));
        let r3 = roberts(3).unwrap();
        assert_eq!((r3.n(), r3.m()), (6, 12));
        assert!(!r3.has_edge(0, 1) && r3.has_edge(0, 2));
        assert!(roberts(0).is_err());
    }

    #[test]
    fn line_graph_of_star_is_complete() {
        assert_eq!(line_graph(&star(4)), complete(4));
        assert_eq!(line_graph(&cycle(5)).m(), 5);
    }

    #[test]
    fn gnp_is_seeded() {
        assert_eq!(gnp(12, 0.5, 7).unwrap(), gnp(12, 0.5, 7).unwrap());
        assert_ne!(gnp(12, 0.5, 7).unwrap(), gnp(12, 0.5, 8).unwrap());
        assert!(gnp(3, 1.5, 0).is_err());
    }

    #[test]
    fn bounded_line_graphs() {
        let lg = bounded_line_graph(100, 3).unwrap();
        assert_eq!(lg.n(), 100);
        assert!(lg.max_degree() <= 4);
    }
}
