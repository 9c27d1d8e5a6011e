use crate::error::Result;
use crate::poset::Poset;

use super::{check_cap, Budget, OracleLimits, Outcome};

/// All ples with at least two elements: every subset listed in every order
/// that respects `p`.
fn all_ples(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.n();
    let mut out = Vec::new();
    let mut current = Vec::new();
    for subset in 1u32..(1 << n) {
        if subset.count_ones() >= 2 {
            extend(p, subset, &mut current, &mut out);
        }
    }
    out
}

fn extend(p: &Poset, left: u32, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if left == 0 {
        out.push(current.clone());
        return;
    }
    let mut bits = left;
    while bits != 0 {
        let x = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        // x may come next only if nothing still to place lies below it
        let rest = left & !(1 << x);
        if (0..p.n()).any(|w| rest >> w & 1 == 1 && p.less(w, x)) {
            continue;
        }
        current.push(x);
        extend(p, rest, current, out);
        current.pop();
    }
}

/// Minimum `μ` over all local realizers of `p`. Each comparable pair must
/// share a ple and each incomparable pair needs both orders.
pub fn exact_local_dimension(p: &Poset, lim: &OracleLimits) -> Result<Outcome<usize>> {
    let n = p.n();
    check_cap(n, lim.max_poset_n)?;
    // ordered pair (x, y) ↦ bit x * n + y; comparable pairs use x ≺ y only
    let mut target = 0u64;
    for x in 0..n {
        for y in 0..n {
            if x != y && !p.less(y, x) {
                target |= 1 << (x * n + y);
            }
        }
    }
    if target == 0 {
        return Ok(Outcome::Exact(0));
    }
    let ples = all_ples(p);
    let covers: Vec<u64> = ples
        .iter()
        .map(|ple| {
            let mut m = 0u64;
            for (i, &x) in ple.iter().enumerate() {
                for &y in &ple[i + 1..] {
                    m |= 1 << (x * n + y);
                }
            }
            m
        })
        .collect();
    let members: Vec<u32> = ples
        .iter()
        .map(|ple| ple.iter().fold(0, |m, &x| m | 1 << x))
        .collect();
    let mut by_target = vec![Vec::new(); n * n];
    for (i, &c) in covers.iter().enumerate() {
        let mut bits = c & target;
        while bits != 0 {
            by_target[bits.trailing_zeros() as usize].push(i);
            bits &= bits - 1;
        }
    }
    for list in &mut by_target {
        list.sort_by_key(|&i| (std::cmp::Reverse(covers[i].count_ones()), i));
    }
    let mut budget = Budget::new(lim.node_budget);
    for mu in 1..=lim.max_mu {
        let mut load = vec![0usize; n];
        match search(
            target,
            0,
            &covers,
            &members,
            &by_target,
            mu,
            &mut load,
            &mut budget,
        ) {
            Some(true) => return Ok(Outcome::Exact(mu)),
            Some(false) => {}
            None => return Ok(Outcome::Unknown),
        }
    }
    Ok(Outcome::Unknown)
}

#[allow(clippy::too_many_arguments)]
fn search(
    target: u64,
    covered: u64,
    covers: &[u64],
    members: &[u32],
    by_target: &[Vec<usize>],
    cap: usize,
    load: &mut [usize],
    budget: &mut Budget,
) -> Option<bool> {
    if covered & target == target {
        return Some(true);
    }
    if !budget.tick() {
        return None;
    }
    let t = (target & !covered).trailing_zeros() as usize;
    for &i in &by_target[t] {
        let m = members[i];
        if (0..load.len()).any(|x| m >> x & 1 == 1 && load[x] >= cap) {
            continue;
        }
        (0..load.len())
            .filter(|&x| m >> x & 1 == 1)
            .for_each(|x| load[x] += 1);
        let found = search(
            target,
            covered | covers[i],
            covers,
            members,
            by_target,
            cap,
            load,
            budget,
        );
        (0..load.len())
            .filter(|&x| m >> x & 1 == 1)
            .for_each(|x| load[x] -= 1);
        if found? {
            return Some(true);
        }
    }
    Some(false)
}
