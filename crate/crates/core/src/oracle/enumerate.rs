//! Small-instance enumeration: isomorphism class representatives, random
//! samples, and an exact chromatic number.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::poset::Poset;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    heap(n, &mut perm, &mut out);
    out
}

fn heap(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(perm.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, perm, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        perm.swap(j, k - 1);
    }
}

fn graph_mask(n: usize, edges: &[(usize, usize)], perm: &[usize]) -> u64 {
    let mut m = 0u64;
    for &(u, v) in edges {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        m |= 1 << (a * n + b);
    }
    m
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges.filter(|&(u, v)| mask >> (u * n + v) & 1 == 1))
        .expect("mask pairs are simple")
}

/// One graph per isomorphism class on `n` vertices. Exhaustive, so keep
/// `n <= 6`.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "enumeration is exhaustive; n = {n} is too large");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for sub in 0u64..(1 << pairs.len()) {
        let edges: Vec<_> = (0..pairs.len())
            .filter(|&i| sub >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let canon = perms
            .iter()
            .map(|p| graph_mask(n, &edges, p))
            .min()
            .unwrap_or(0);
        classes.insert(canon);
    }
    classes.into_iter().map(|m| graph_from_mask(n, m)).collect()
}

/// One poset per isomorphism class on `n` elements, `n <= 5`.
pub fn nonisomorphic_posets(n: usize) -> Vec<Poset> {
    assert!(n <= 5, "enumeration is exhaustive; n = {n} is too large");
    let perms = permutations(n);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut classes = BTreeSet::new();
    // every poset has a linear extension, so relabeling along it makes all
    // relations point from smaller to larger labels
    for sub in 0u64..(1 << pairs.len()) {
        let rel: Vec<_> = (0..pairs.len())
            .filter(|&i| sub >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let p = Poset::from_relations(n, rel).expect("upward relations are acyclic");
        let rels = p.relations();
        if rels.len() != sub.count_ones() as usize {
            // not transitively closed; its closure is visited separately
            continue;
        }
        let canon = perms
            .iter()
            .map(|perm| {
                rels.iter()
                    .fold(0u64, |m, &(x, y)| m | 1 << (perm[x] * n + perm[y]))
            })
            .min()
            .unwrap_or(0);
        classes.insert(canon);
    }
    classes
        .into_iter()
        .map(|m| {
            let rel = (0..n * n)
                .filter(|&b| m >> b & 1 == 1)
                .map(|b| (b / n, b % n));
            Poset::from_relations(n, rel).expect("canonical relabelings stay acyclic")
        })
        .collect()
}

/// Random graphs with edge probability 1/2.
pub fn random_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let edges: Vec<_> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect::<Vec<_>>()
                .into_iter()
                .filter(|_| rng.random_bool(0.5))
                .collect();
            Graph::from_edges(n, edges).expect("pairs are distinct")
        })
        .collect()
}

/// Random posets: a random upward DAG on `0..n`, closed.
pub fn random_posets(n: usize, count: usize, seed: u64) -> Vec<Poset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut rel = Vec::new();
            for x in 0..n {
                for y in (x + 1)..n {
                    if rng.random_bool(0.35) {
                        rel.push((x, y));
                    }
                }
            }
            Poset::from_relations(n, rel).expect("upward relations are acyclic")
        })
        .collect()
}

/// Exact chromatic number by backtracking over colour counts.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    (1..=n)
        .find(|&k| {
            let mut colour = vec![usize::MAX; n];
            colourable(g, &order, 0, k, 0, &mut colour)
        })
        .expect("n colours always suffice")
}

fn colourable(
    g: &Graph,
    order: &[usize],
    i: usize,
    k: usize,
    used: usize,
    colour: &mut [usize],
) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    // a fresh colour is only tried once, which removes colour symmetry
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().any(|&w| colour[w] == c) {
            continue;
        }
        colour[v] = c;
        if colourable(g, order, i + 1, k, used.max(c + 1), colour) {
            return true;
        }
        colour[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn known_counts() {
        let graphs: Vec<usize> = (0..=5).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(graphs, vec![1, 1, 2, 4, 11, 34]);
        let posets: Vec<usize> = (0..=4).map(|n| nonisomorphic_posets(n).len()).collect();
        assert_eq!(posets, vec![1, 1, 2, 5, 16]);
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&Graph::empty(0)), 0);
        assert_eq!(chromatic_number(&Graph::empty(3)), 1);
        assert_eq!(chromatic_number(&generators::cycle(5)), 3);
        assert_eq!(chromatic_number(&generators::petersen()), 3);
        assert_eq!(chromatic_number(&generators::complete(5)), 5);
    }

    #[test]
    fn samples_are_seeded() {
        assert_eq!(random_graphs(6, 3, 9), random_graphs(6, 3, 9));
        assert_eq!(random_posets(5, 3, 9), random_posets(5, 3, 9));
    }
}
