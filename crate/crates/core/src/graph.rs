//! Simple undirected graphs on vertices `0..n`.

use std::fmt;

use crate::error::{Error, Result};

/// Dense square bit matrix, one row of `u64` words per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        (self.bits[row * self.words + col / 64] >> (col % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize) {
        self.bits[row * self.words + col / 64] |= 1 << (col % 64);
    }

    #[inline]
    pub fn clear(&mut self, row: usize, col: usize) {
        self.bits[row * self.words + col / 64] &= !(1 << (col % 64));
    }

    /// Sets both `(a, b)` and `(b, a)`.
    #[inline]
    pub fn set_sym(&mut self, a: usize, b: usize) {
        self.set(a, b);
        self.set(b, a);
    }

    pub fn row(&self, row: usize) -> &[u64] {
        &self.bits[row * self.words..(row + 1) * self.words]
    }

    /// `row |= other_row` inside the same matrix.
    pub fn or_row_into(&mut self, dst: usize, src: usize) {
        if dst == src {
            return;
        }
        for w in 0..self.words {
            let v = self.bits[src * self.words + w];
            self.bits[dst * self.words + w] |= v;
        }
    }

    pub fn row_ones(&self, row: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(row).iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + bit)
            })
        })
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.n).map(|r| self.row_ones(r).collect::<Vec<_>>()))
            .finish()
    }
}

/// A simple undirected graph. Adjacency lists are kept sorted, and a bit
/// matrix answers `has_edge` in constant time.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    matrix: BitMatrix,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            matrix: BitMatrix::new(n),
            m: 0,
        }
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range
    /// endpoints. `(u, v)` and `(v, u)` count as duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`; errors on loops, duplicates or bad endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.matrix.get(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.matrix.set_sym(u, v);
        insert_sorted(&mut self.adj[u], v);
        insert_sorted(&mut self.adj[v], u);
        self.m += 1;
        Ok(())
    }

    /// Adds `uv` unless it is already present. Loops are still rejected.
    pub fn ensure_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u < self.n() && v < self.n() && u != v && self.matrix.get(u, v) {
            return Ok(());
        }
        self.add_edge(u, v)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix.get(u, v)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn adjacency_matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| {
            ((u + 1)..n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        for (u, v) in self.non_edges() {
            g.matrix.set_sym(u, v);
            g.adj[u].push(v);
            g.adj[v].push(u);
            g.m += 1;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        g
    }

    /// `G[S]`: the subgraph induced on `vertices`. Vertex `i` of the result
    /// corresponds to `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && j > i {
                    g.matrix.set_sym(i, j);
                    g.adj[i].push(j);
                    g.adj[j].push(i);
                    g.m += 1;
                }
            }
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)))
            .collect::<Vec<_>>();
        Graph::from_edges(off + other.n(), edges).expect("union of simple graphs is simple")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

fn insert_sorted(list: &mut Vec<usize>, v: usize) {
    match list.binary_search(&v) {
        Ok(_) => {}
        Err(pos) => list.insert(pos, v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn complement_and_induced() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let c = p3.complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        let sub = p3.induced(&[2, 1]);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(p3.max_degree(), 2);
        assert!(!p3.is_complete());
    }

    #[test]
    fn bit_matrix_rows() {
        let mut m = BitMatrix::new(130);
        m.set(3, 0);
        m.set(3, 64);
        m.set(3, 129);
        assert_eq!(m.row_ones(3).collect::<Vec<_>>(), vec![0, 64, 129]);
        m.clear(3, 64);
        assert!(!m.get(3, 64));
    }
}
