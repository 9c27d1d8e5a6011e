//! Upper-bound formulas for local boxicity, evaluated on concrete graphs.

use crate::claw::find_claw;
use crate::coloring::greedy_coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Iterated base-2 logarithm: the number of `log2` applications needed to
/// bring `x` down to at most 1.
pub fn log_star(x: f64) -> Result<u32> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "log* needs a finite positive input, got {x}"
        )));
    }
    let mut k = 0;
    let mut v = x;
    while v > 1.0 {
        v = v.log2();
        k += 1;
    }
    Ok(k)
}

/// `2^(9 log* Δ) · Δ`, for `Δ ≥ 1`.
pub fn degree_bound(delta: usize) -> Option<u128> {
    if delta == 0 {
        return None;
    }
    let k = log_star(delta as f64).ok()?;
    1u128.checked_shl(9 * k)?.checked_mul(delta as u128)
}

/// `24 n / log2 n`, for `n ≥ 2`.
pub fn order_bound(n: usize) -> Option<f64> {
    (n >= 2).then(|| 24.0 * n as f64 / (n as f64).log2())
}

/// `(2^(9 log* √m) + 2) · √m`, for `m ≥ 1`.
pub fn size_bound(m: usize) -> Option<f64> {
    if m == 0 {
        return None;
    }
    let root = (m as f64).sqrt();
    let k = log_star(root).ok()?;
    Some((2f64.powi(9 * k as i32) + 2.0) * root)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub greedy_chi: usize,
    pub claw_free: bool,
    pub bound_degree: Option<u128>,
    /// `3Δ`; present only for claw-free graphs.
    pub bound_clawfree: Option<usize>,
    pub bound_order: Option<f64>,
    pub bound_size: Option<f64>,
}

pub fn bounds_report(g: &Graph) -> BoundsReport {
    let delta = g.max_degree();
    let claw_free = find_claw(g).is_none();
    BoundsReport {
        n: g.n(),
        m: g.m(),
        max_degree: delta,
        greedy_chi: greedy_coloring(g).len(),
        claw_free,
        bound_degree: degree_bound(delta),
        bound_clawfree: claw_free.then_some(3 * delta),
        bound_order: order_bound(g.n()),
        bound_size: size_bound(g.m()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn log_star_values() {
        assert_eq!(log_star(1.0), Ok(0));
        assert_eq!(log_star(16.0), Ok(3));
        assert_eq!(log_star(2f64.powi(64)), Ok(5));
        assert_eq!(log_star(0.5), Ok(0));
        assert!(log_star(0.0).is_err());
        assert!(log_star(-3.0).is_err());
    }

    #[test]
    fn trivial_graph() {
        let r = bounds_report(&Graph::empty(1));
        assert_eq!(r.max_degree, 0);
        assert_eq!(r.bound_order, None);
        assert_eq!(r.bound_size, None);
        assert_eq!(r.bound_degree, None);
    }

    #[test]
    fn cycle_of_eight() {
        let r = bounds_report(&generators::cycle(8));
        assert_eq!(r.max_degree, 2);
        assert_eq!(r.bound_clawfree, Some(6));
        // log*(2) = 1
        assert_eq!(r.bound_degree, Some(1024));
        assert_eq!(r.bound_order, Some(64.0));
    }

    #[test]
    fn roberts_ten() {
        let r = bounds_report(&generators::roberts(10).unwrap());
        assert_eq!((r.n, r.max_degree), (20, 18));
        // independent sets in R_n have at most two vertices, so no claws
        assert!(r.claw_free);
        assert_eq!(r.bound_clawfree, Some(54));
        assert_eq!(r.bound_order, Some(480.0 / 20f64.log2()));
    }
}
