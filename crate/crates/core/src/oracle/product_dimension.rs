use std::collections::HashMap;

use crate::construct::ProductEncoding;
use crate::error::Result;
use crate::graph::Graph;

use super::{check_cap, Budget, OracleLimits, Outcome, Pairs};

/// Every partition of `0..n` into independent sets, as block labels, keyed
/// by the set of pairs sharing a block. One partition per key is kept.
fn independent_partitions(
    g: &Graph,
    pairs: &Pairs,
    budget: &mut Budget,
) -> Option<HashMap<u64, Vec<u32>>> {
    let n = g.n();
    let mut out = HashMap::new();
    let mut labels = vec![0u32; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    if grow(g, pairs, 0, &mut labels, &mut blocks, &mut out, budget) {
        Some(out)
    } else {
        None
    }
}

fn grow(
    g: &Graph,
    pairs: &Pairs,
    v: usize,
    labels: &mut [u32],
    blocks: &mut Vec<Vec<usize>>,
    out: &mut HashMap<u64, Vec<u32>>,
    budget: &mut Budget,
) -> bool {
    if !budget.tick() {
        return false;
    }
    if v == g.n() {
        let mut same = 0u64;
        for block in blocks.iter() {
            for (i, &a) in block.iter().enumerate() {
                for &b in &block[i + 1..] {
                    same |= 1 << pairs.index(a, b);
                }
            }
        }
        out.entry(same).or_insert_with(|| labels.to_vec());
        return true;
    }
    for b in 0..=blocks.len() {
        if b < blocks.len() && blocks[b].iter().any(|&w| g.has_edge(v, w)) {
            continue;
        }
        if b == blocks.len() {
            blocks.push(Vec::new());
        }
        blocks[b].push(v);
        labels[v] = b as u32 + 1;
        let ok = grow(g, pairs, v + 1, labels, blocks, out, budget);
        blocks[b].pop();
        if blocks[b].is_empty() {
            blocks.pop();
        }
        if !ok {
            return false;
        }
    }
    true
}

/// Minimum `k` and a witness encoding. A coordinate is a partition of the
/// vertices into independent sets (equal codes force non-adjacency), and
/// every non-edge must share a block in some coordinate.
pub fn exact_product_dimension(
    g: &Graph,
    lim: &OracleLimits,
) -> Result<Outcome<(usize, ProductEncoding)>> {
    let n = g.n();
    check_cap(n, lim.max_n)?;
    let pairs = Pairs::new(n);
    let nonedges = g
        .non_edges()
        .fold(0u64, |m, (u, v)| m | 1 << pairs.index(u, v));
    let mut budget = Budget::new(lim.node_budget);
    let Some(parts) = independent_partitions(g, &pairs, &mut budget) else {
        return Ok(Outcome::Unknown);
    };
    if nonedges == 0 {
        let codes = (1..=n as u32).map(|a| vec![a]).collect();
        return Ok(Outcome::Exact((1, ProductEncoding::new(codes)?)));
    }
    // only inclusion-maximal pair sets can be needed
    let mut keys: Vec<u64> = parts.keys().copied().filter(|&k| k != 0).collect();
    keys.sort_unstable_by_key(|&k| (std::cmp::Reverse(k.count_ones()), k));
    let mut maximal: Vec<u64> = Vec::new();
    for k in keys {
        if !maximal.iter().any(|&m| m & k == k) {
            maximal.push(k);
        }
    }
    let mut by_pair = vec![Vec::new(); pairs.list.len()];
    for (i, &s) in maximal.iter().enumerate() {
        let mut bits = s;
        while bits != 0 {
            by_pair[bits.trailing_zeros() as usize].push(i);
            bits &= bits - 1;
        }
    }
    for k in 1..=nonedges.count_ones() as usize {
        let mut chosen = Vec::new();
        match cover(nonedges, 0, k, &maximal, &by_pair, &mut chosen, &mut budget) {
            Some(true) => {
                let codes = (0..n)
                    .map(|v| chosen.iter().map(|&i| parts[&maximal[i]][v]).collect())
                    .collect();
                return Ok(Outcome::Exact((k, ProductEncoding::new(codes)?)));
            }
            Some(false) => {}
            None => return Ok(Outcome::Unknown),
        }
    }
    unreachable!("one coordinate per non-edge always suffices")
}

fn cover(
    target: u64,
    covered: u64,
    k: usize,
    sets: &[u64],
    by_pair: &[Vec<usize>],
    chosen: &mut Vec<usize>,
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
        chosen.push(i);
        if cover(
            target,
            covered | sets[i],
            k - 1,
            sets,
            by_pair,
            chosen,
            budget,
        )? {
            return Some(true);
        }
        chosen.pop();
    }
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn small_values() {
        let lim = OracleLimits::default();
        let (k, enc) = exact_product_dimension(&generators::complete(3), &lim)
            .unwrap()
            .exact()
            .unwrap();
        assert_eq!(k, 1);
        assert_eq!(enc.codes(), &[vec![1], vec![2], vec![3]]);

        let (k, enc) = exact_product_dimension(&Graph::empty(2), &lim)
            .unwrap()
            .exact()
            .unwrap();
        assert_eq!(k, 1);
        assert_eq!(enc.codes(), &[vec![1], vec![1]]);

        // complete multipartite graphs need one coordinate
        let c4 = generators::cycle(4);
        let (k, enc) = exact_product_dimension(&c4, &lim).unwrap().exact().unwrap();
        enc.check(&c4).unwrap();
        assert_eq!(k, 1);

        let p4 = generators::path(4);
        let (k, enc) = exact_product_dimension(&p4, &lim).unwrap().exact().unwrap();
        enc.check(&p4).unwrap();
        assert_eq!(k, 2);
    }
}
