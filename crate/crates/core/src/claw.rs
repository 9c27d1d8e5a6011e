//! Induced `K_{1,3}` detection.

use crate::graph::Graph;

/// An induced claw: `center` adjacent to three pairwise non-adjacent leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

/// Returns the lexicographically first claw (by center, then leaves), or
/// `None` when `g` is claw-free.
pub fn find_claw(g: &Graph) -> Option<Claw> {
    for center in 0..g.n() {
        let nbrs = g.neighbors(center);
        if nbrs.len() < 3 {
            continue;
        }
        for (i, &a) in nbrs.iter().enumerate() {
            for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in &nbrs[j + 1..] {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return Some(Claw {
                            center,
                            leaves: [a, b, c],
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}
