//! Finite posets, partial linear extensions and local realizers.

mod crown;
mod realizer;

pub use crown::{crown_local_realizer, crown_poset};
pub use realizer::{
    realizer_from_linear_extensions, verify_local_realizer, LocalRealizer, Ple, RealizerReport,
    Violation,
};

use crate::error::{Error, Result};
use crate::graph::{BitMatrix, Graph};

/// A strict partial order on `0..n`, stored transitively closed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    less: BitMatrix,
}

impl Poset {
    /// Closes `relations` (pairs `x ≺ y`) transitively. Fails with a cycle
    /// witness if the closure is not antisymmetric.
    pub fn from_relations<I>(n: usize, relations: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut less = BitMatrix::new(n);
        let mut given = vec![Vec::new(); n];
        for (x, y) in relations {
            for v in [x, y] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if x == y {
                return Err(Error::Cycle(vec![x]));
            }
            less.set(x, y);
            given[x].push(y);
        }
        for k in 0..n {
            for i in 0..n {
                if less.get(i, k) {
                    less.or_row_into(i, k);
                }
            }
        }
        if (0..n).any(|x| less.get(x, x)) {
            return Err(Error::Cycle(
                find_cycle(&given).expect("closure found a loop"),
            ));
        }
        Ok(Poset { less })
    }

    pub fn antichain(n: usize) -> Self {
        Poset {
            less: BitMatrix::new(n),
        }
    }

    /// `0 ≺ 1 ≺ … ≺ n-1`.
    pub fn chain(n: usize) -> Self {
        Poset::from_relations(n, (1..n).map(|i| (i - 1, i))).expect("a chain is acyclic")
    }

    pub fn n(&self) -> usize {
        self.less.len()
    }

    /// `x ≺ y`.
    #[inline]
    pub fn less(&self, x: usize, y: usize) -> bool {
        self.less.get(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.less(x, y) || self.less(y, x)
    }

    /// Elements above `x`, as a bit row.
    pub(crate) fn above(&self, x: usize) -> &[u64] {
        self.less.row(x)
    }

    /// All pairs `x ≺ y`, lexicographic.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|x| self.less.row_ones(x).map(move |y| (x, y)))
            .collect()
    }

    /// Whether `order` (distinct elements) never places a larger element
    /// before a smaller one.
    pub fn respects(&self, order: &[usize]) -> bool {
        order
            .iter()
            .enumerate()
            .all(|(i, &x)| order[..i].iter().all(|&w| !self.less(x, w)))
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(n={}, {:?})", self.n(), self.relations())
    }
}

/// Edge `xy` iff `x` and `y` are comparable.
pub fn comparability_graph(p: &Poset) -> Graph {
    Graph::from_edges(p.n(), p.relations()).expect("strict order pairs are distinct non-loops")
}

fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    // 0 = unvisited, 1 = on stack, 2 = done
    let n = adj.len();
    let mut state = vec![0u8; n];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        stack.push((root, 0));
        state[root] = 1;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if let Some(&w) = adj[v].get(*next) {
                *next += 1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => {
                        let start = stack
                            .iter()
                            .position(|&(u, _)| u == w)
                            .expect("w is on the stack");
                        return Some(stack[start..].iter().map(|&(u, _)| u).collect());
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}
