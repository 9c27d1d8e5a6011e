use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::Result;
use crate::graph::Graph;

use super::interval::IntervalSearch;
use super::{check_cap, Budget, OracleLimits, Outcome, Pairs};

/// Largest `n` whose full table of labelled interval graphs is cached.
const TABLE_MAX_N: usize = 6;

/// For `n ≤ TABLE_MAX_N`: `table[mask]` says whether the graph whose edge
/// set is `mask` (bit `i` = `i`-th pair) is an interval graph.
fn interval_table(n: usize) -> Arc<Vec<bool>> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<Vec<bool>>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = tables.lock().expect("table lock").get(&n) {
        return t.clone();
    }
    let pairs = Pairs::new(n);
    let mut search = IntervalSearch::new();
    let mut events = Vec::new();
    let mut adj = vec![0u32; n];
    let table: Vec<bool> = (0..1u64 << pairs.list.len())
        .map(|mask| {
            edge_mask_to_adj(&pairs, mask, &mut adj);
            search.run(&adj, &mut events)
        })
        .collect();
    let table = Arc::new(table);
    tables.lock().expect("table lock").insert(n, table.clone());
    table
}

fn edge_mask_to_adj(pairs: &Pairs, mask: u64, adj: &mut [u32]) {
    adj.iter_mut().for_each(|a| *a = 0);
    for (i, &(u, v)) in pairs.list.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
}

/// Non-edge sets `S` of `g` for which `K_n - S` is an interval graph; each is
/// the set of pairs one interval supergraph of `g` separates.
struct Candidates {
    pairs: Pairs,
    nonedges: u64,
    breaks: Vec<u64>,
}

fn candidates(g: &Graph, budget: &mut Budget) -> Option<Candidates> {
    let n = g.n();
    let pairs = Pairs::new(n);
    let all = if pairs.list.is_empty() {
        0
    } else {
        u64::MAX >> (64 - pairs.list.len())
    };
    let nonedges = g
        .non_edges()
        .fold(0u64, |m, (u, v)| m | 1 << pairs.index(u, v));
    let mut breaks = Vec::new();
    let table = (n <= TABLE_MAX_N).then(|| interval_table(n));
    let mut search = IntervalSearch::new();
    let mut events = Vec::new();
    let mut adj = vec![0u32; n];
    // every nonempty submask of the non-edges
    let mut s = nonedges;
    while s != 0 {
        if !budget.tick() {
            return None;
        }
        let supergraph = all & !s;
        let interval = match &table {
            Some(t) => t[supergraph as usize],
            None => {
                edge_mask_to_adj(&pairs, supergraph, &mut adj);
                search.run(&adj, &mut events)
            }
        };
        if interval {
            breaks.push(s);
        }
        s = (s - 1) & nonedges;
    }
    Some(Candidates {
        pairs,
        nonedges,
        breaks,
    })
}

fn touched(pairs: &Pairs, s: u64) -> u32 {
    let mut vs = 0u32;
    let mut bits = s;
    while bits != 0 {
        let (u, v) = pairs.list[bits.trailing_zeros() as usize];
        vs |= 1 << u | 1 << v;
        bits &= bits - 1;
    }
    vs
}

/// Keeps only sets not strictly contained in another set of the same key.
fn maximal_by_key(sets: &[u64], key: impl Fn(u64) -> u64) -> Vec<u64> {
    let mut groups: HashMap<u64, Vec<u64>> = HashMap::new();
    for &s in sets {
        groups.entry(key(s)).or_default().push(s);
    }
    let mut out = Vec::new();
    for (_, mut group) in groups {
        group.sort_unstable_by_key(|s| std::cmp::Reverse(s.count_ones()));
        let mut kept: Vec<u64> = Vec::new();
        for s in group {
            if !kept.iter().any(|&k| k & s == s) {
                kept.push(s);
            }
        }
        out.extend(kept);
    }
    out.sort_unstable();
    out
}

/// Minimum number of interval graphs whose intersection is `g`. Complete
/// graphs score 1.
pub fn exact_boxicity(g: &Graph, lim: &OracleLimits) -> Result<Outcome<usize>> {
    check_cap(g.n(), lim.max_n)?;
    let mut budget = Budget::new(lim.node_budget);
    let Some(c) = candidates(g, &mut budget) else {
        return Ok(Outcome::Unknown);
    };
    if c.nonedges == 0 {
        return Ok(Outcome::Exact(1));
    }
    let maximal = maximal_by_key(&c.breaks, |_| 0);
    let by_pair = covering_lists(&c.pairs, &maximal);
    for k in 1..=lim.max_layers {
        match cover_with_k(c.nonedges, 0, k, &maximal, &by_pair, &mut budget) {
            Some(true) => return Ok(Outcome::Exact(k)),
            Some(false) => {}
            None => return Ok(Outcome::Unknown),
        }
    }
    Ok(Outcome::Unknown)
}

fn covering_lists(pairs: &Pairs, sets: &[u64]) -> Vec<Vec<usize>> {
    let mut by_pair = vec![Vec::new(); pairs.list.len()];
    for (i, &s) in sets.iter().enumerate() {
        let mut bits = s;
        while bits != 0 {
            by_pair[bits.trailing_zeros() as usize].push(i);
            bits &= bits - 1;
        }
    }
    for list in &mut by_pair {
        list.sort_by_key(|&i| (std::cmp::Reverse(sets[i].count_ones()), sets[i]));
    }
    by_pair
}

fn cover_with_k(
    target: u64,
    covered: u64,
    k: usize,
    sets: &[u64],
    by_pair: &[Vec<usize>],
    budget: &mut Budget,
) -> Option<bool> {
    if covered & target == target {
        return Some(true);
    }
    if k == 0 {
        return Some(false);
    }
    if !budget.tick() {
        return None;
    }
    let p = (target & !covered).trailing_zeros() as usize;
    for &i in &by_pair[p] {
        if cover_with_k(target, covered | sets[i], k - 1, sets, by_pair, budget)? {
            return Some(true);
        }
    }
    Some(false)
}

/// Minimum over intersection representations of `g` of the largest number
/// of layers any vertex is non-universal in. Complete graphs score 0.
pub fn exact_local_boxicity(g: &Graph, lim: &OracleLimits) -> Result<Outcome<usize>> {
    check_cap(g.n(), lim.max_n)?;
    let mut budget = Budget::new(lim.node_budget);
    let Some(c) = candidates(g, &mut budget) else {
        return Ok(Outcome::Unknown);
    };
    if c.nonedges == 0 {
        return Ok(Outcome::Exact(0));
    }
    // a vertex is non-universal in a layer iff it lies on a separated pair,
    // so among sets touching the same vertices only maximal ones matter
    let sets = maximal_by_key(&c.breaks, |s| touched(&c.pairs, s) as u64);
    let charges: Vec<u32> = sets.iter().map(|&s| touched(&c.pairs, s)).collect();
    let by_pair = covering_lists(&c.pairs, &sets);
    for t in 1..=lim.max_mu {
        let mut load = vec![0usize; g.n()];
        let mut search = LocalSearch {
            target: c.nonedges,
            sets: &sets,
            charges: &charges,
            by_pair: &by_pair,
            cap: t,
            budget: &mut budget,
        };
        match search.run(0, &mut load) {
            Some(true) => return Ok(Outcome::Exact(t)),
            Some(false) => {}
            None => return Ok(Outcome::Unknown),
        }
    }
    Ok(Outcome::Unknown)
}

struct LocalSearch<'a> {
    target: u64,
    sets: &'a [u64],
    charges: &'a [u32],
    by_pair: &'a [Vec<usize>],
    cap: usize,
    budget: &'a mut Budget,
}

impl LocalSearch<'_> {
    fn run(&mut self, covered: u64, load: &mut [usize]) -> Option<bool> {
        if covered & self.target == self.target {
            return Some(true);
        }
        if !self.budget.tick() {
            return None;
        }
        let p = (self.target & !covered).trailing_zeros() as usize;
        for &i in &self.by_pair[p] {
            let vs = self.charges[i];
            if ones(vs).any(|v| load[v] >= self.cap) {
                continue;
            }
            ones(vs).for_each(|v| load[v] += 1);
            let found = self.run(covered | self.sets[i], load);
            ones(vs).for_each(|v| load[v] -= 1);
            if found? {
                return Some(true);
            }
        }
        Some(false)
    }
}

fn ones(mask: u32) -> impl Iterator<Item = usize> {
    let mut bits = mask;
    std::iter::from_fn(move || {
        if bits == 0 {
            return None;
        }
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        Some(v)
    })
}
