use crate::error::Result;
use crate::graph::Graph;

use super::check_cap;

/// Largest graph accepted by the interval recognizer.
pub const INTERVAL_MAX_N: usize = 10;

/// Endpoint-sequence search. An interval model on `n` vertices is a word of
/// `2n` events, each opening or closing one vertex. Opening `v` makes it
/// meet exactly the currently open vertices; so an open is legal when every
/// open vertex is a neighbour of `v` and no closed vertex is. Closing `v` is
/// legal once all of its neighbours have been opened. Failed states
/// `(opened, closed)` are memoised with a generation stamp.
pub(crate) struct IntervalSearch {
    stamps: Vec<u32>,
    generation: u32,
}

impl IntervalSearch {
    pub(crate) fn new() -> Self {
        IntervalSearch {
            stamps: Vec::new(),
            generation: 0,
        }
    }

    /// `adj[v]` is the neighbour bitmask of `v`. On success, `events` holds
    /// the word as `(vertex, is_open)`.
    pub(crate) fn run(&mut self, adj: &[u32], events: &mut Vec<(usize, bool)>) -> bool {
        let n = adj.len();
        let size = 1usize << (2 * n);
        if self.stamps.len() < size {
            self.stamps = vec![0; size];
            self.generation = 0;
        }
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamps.iter_mut().for_each(|s| *s = 0);
            self.generation = 1;
        }
        events.clear();
        self.dfs(adj, 0, 0, events)
    }

    fn dfs(
        &mut self,
        adj: &[u32],
        opened: u32,
        closed: u32,
        events: &mut Vec<(usize, bool)>,
    ) -> bool {
        let n = adj.len();
        let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        if closed == all {
            return true;
        }
        let key = (opened as usize) | ((closed as usize) << n);
        if self.stamps[key] == self.generation {
            return false;
        }
        let open_now = opened & !closed;
        for v in 0..n {
            let bit = 1u32 << v;
            if opened & bit == 0 {
                if open_now & !adj[v] == 0 && closed & adj[v] == 0 {
                    events.push((v, true));
                    if self.dfs(adj, opened | bit, closed, events) {
                        return true;
                    }
                    events.pop();
                }
            } else if closed & bit == 0 && adj[v] & !opened == 0 {
                events.push((v, false));
                if self.dfs(adj, opened, closed | bit, events) {
                    return true;
                }
                events.pop();
            }
        }
        self.stamps[key] = self.generation;
        false
    }
}

pub(crate) fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

/// Whether `g` has an interval representation.
pub fn is_interval_graph(g: &Graph) -> Result<bool> {
    Ok(interval_model(g)?.is_some())
}

/// An interval model with endpoints in `1..=2n`, one `(lo, hi)` per vertex,
/// or `None` when `g` is not an interval graph.
pub fn interval_model(g: &Graph) -> Result<Option<Vec<(usize, usize)>>> {
    check_cap(g.n(), INTERVAL_MAX_N)?;
    let mut events = Vec::new();
    if !IntervalSearch::new().run(&masks(g), &mut events) {
        return Ok(None);
    }
    let mut model = vec![(0, 0); g.n()];
    for (pos, &(v, open)) in events.iter().enumerate() {
        if open {
            model[v].0 = pos + 1;
        } else {
            model[v].1 = pos + 1;
        }
    }
    Ok(Some(model))
}
