//! Exhaustive exact computations for tiny instances. These are the ground
//! truth the constructions are tested against, so they share no code with
//! them beyond the basic graph and poset types.

mod boxicity;
pub mod enumerate;
mod interval;
mod local_dimension;
mod product_dimension;

pub use boxicity::{exact_boxicity, exact_local_boxicity};
pub use interval::{interval_model, is_interval_graph, INTERVAL_MAX_N};
pub use local_dimension::exact_local_dimension;
pub use product_dimension::exact_product_dimension;

use crate::error::{Error, Result};

/// Search caps. Inputs above a size cap are refused; a search that runs out
/// of `node_budget` reports [`Outcome::Unknown`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Vertex cap for graph oracles.
    pub max_n: usize,
    /// Element cap for the local dimension oracle.
    pub max_poset_n: usize,
    /// Deepest number of layers tried by the boxicity search.
    pub max_layers: usize,
    /// Deepest frequency tried by the local boxicity / dimension searches.
    pub max_mu: usize,
    /// Search nodes allowed per query.
    pub node_budget: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_n: 7,
            max_poset_n: 5,
            max_layers: 8,
            max_mu: 8,
            node_budget: 20_000_000,
        }
    }
}

/// Result of an exact search. `Unknown` is never a guess: it means the
/// budget ran out before the search could decide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Exact(T),
    Unknown,
}

impl<T> Outcome<T> {
    pub fn exact(self) -> Option<T> {
        match self {
            Outcome::Exact(v) => Some(v),
            Outcome::Unknown => None,
        }
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Outcome::Unknown)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Exact(v) => Outcome::Exact(f(v)),
            Outcome::Unknown => Outcome::Unknown,
        }
    }
}

/// Local boxicity reported under the zero-allowed convention; complete
/// graphs score 0 here. The "smallest positive integer" reading is
/// `value.max(1)`.
pub fn positive_convention(lbox: usize) -> usize {
    lbox.max(1)
}

pub(crate) fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::OracleCap { n, cap });
    }
    Ok(())
}

/// Shared node counter for budgeted searches.
pub(crate) struct Budget {
    left: u64,
}

impl Budget {
    pub(crate) fn new(nodes: u64) -> Self {
        Budget { left: nodes }
    }

    /// Consumes one node; `false` once the budget is gone.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.left == 0 {
            return false;
        }
        self.left -= 1;
        true
    }
}

/// Unordered pairs of `0..n` in lexicographic order, with a reverse index.
pub(crate) struct Pairs {
    pub list: Vec<(usize, usize)>,
    index: Vec<usize>,
    n: usize,
}

impl Pairs {
    pub(crate) fn new(n: usize) -> Self {
        let mut list = Vec::new();
        let mut index = vec![usize::MAX; n * n];
        for u in 0..n {
            for v in (u + 1)..n {
                index[u * n + v] = list.len();
                index[v * n + u] = list.len();
                list.push((u, v));
            }
        }
        Pairs { list, index, n }
    }

    #[inline]
    pub(crate) fn index(&self, u: usize, v: usize) -> usize {
        self.index[u * self.n + v]
    }
}
