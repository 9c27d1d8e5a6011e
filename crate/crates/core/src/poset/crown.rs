use crate::error::{Error, Result};

use super::{LocalRealizer, Ple, Poset};

/// Crown `S_n`: minimal elements `a_i = i`, maximal elements `b_i = n + i`,
/// and `a_i ≺ b_j` exactly when `i ≠ j`.
pub fn crown_poset(n: usize) -> Result<Poset> {
    if n < 2 {
        return Err(Error::InvalidParameter("crown poset needs n >= 2".into()));
    }
    let rel = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j)));
    Poset::from_relations(2 * n, rel)
}

/// Frequency-3 local realizer of `S_n`: `a_1…a_n b_1…b_n`, its reversal
/// within each level, and the pairs `(b_i, a_i)`.
pub fn crown_local_realizer(n: usize) -> Result<LocalRealizer> {
    if n < 2 {
        return Err(Error::InvalidParameter("crown poset needs n >= 2".into()));
    }
    let forward: Vec<usize> = (0..2 * n).collect();
    let backward: Vec<usize> = (0..n).rev().chain((n..2 * n).rev()).collect();
    let mut ples = vec![Ple(forward), Ple(backward)];
    ples.extend((0..n).map(|i| Ple(vec![n + i, i])));
    Ok(LocalRealizer::new(ples))
}
