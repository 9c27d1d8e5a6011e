use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{Interval, IntervalLayer};
use crate::representation::LocalBoxRepresentation;

use super::biclique::biclique_representation;

pub const TAG: &str = "peel";

/// Smallest integer `t` with `t * t >= m`.
pub fn ceil_sqrt(m: usize) -> usize {
    let mut t = (m as f64).sqrt() as usize;
    while t * t < m {
        t += 1;
    }
    while t > 0 && (t - 1) * (t - 1) >= m {
        t -= 1;
    }
    t
}

fn resolve_threshold(g: &Graph, threshold: Option<usize>) -> Result<usize> {
    match threshold {
        Some(0) => Err(Error::InvalidParameter(
            "peel threshold must be positive".into(),
        )),
        Some(t) => Ok(t),
        None if g.m() == 0 => Err(Error::InvalidParameter(
            "default peel threshold needs at least one edge".into(),
        )),
        None => Ok(ceil_sqrt(g.m())),
    }
}

/// `V'`: vertices whose degree is at least the threshold (default `⌈√m⌉`).
pub fn peeled_vertices(g: &Graph, threshold: Option<usize>) -> Result<Vec<usize>> {
    let t = resolve_threshold(g, threshold)?;
    Ok((0..g.n()).filter(|&v| g.degree(v) >= t).collect())
}

/// Peels the high-degree vertices and represents the rest with
/// [`biclique_representation`].
pub fn peel_representation(g: &Graph, threshold: Option<usize>) -> Result<LocalBoxRepresentation> {
    peel_representation_with(g, threshold, biclique_representation)
}

/// One layer per peeled vertex `v` on span `[0,5]`: `v` gets `[1,2]`, its
/// non-neighbours `[3,4]`, its neighbours stay implicit. The graph induced
/// on the remaining vertices is handed to `delegate`, whose layers are lifted
/// with the peeled vertices implicit.
pub fn peel_representation_with<F>(
    g: &Graph,
    threshold: Option<usize>,
    delegate: F,
) -> Result<LocalBoxRepresentation>
where
    F: Fn(&Graph) -> Result<LocalBoxRepresentation>,
{
    let peeled = peeled_vertices(g, threshold)?;
    let n = g.n();
    let span = Interval::int(0, 5);
    let mut is_peeled = vec![false; n];
    let mut layers = Vec::with_capacity(peeled.len() + 1);
    for &v in &peeled {
        is_peeled[v] = true;
        let mut layer = IntervalLayer::new(span);
        layer.assign(v, Interval::int(1, 2))?;
        for w in (0..n).filter(|&w| w != v && !g.has_edge(v, w)) {
            layer.assign(w, Interval::int(3, 4))?;
        }
        layers.push(layer);
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !is_peeled[v]).collect();
    if !rest.is_empty() || layers.is_empty() {
        let inner = delegate(&g.induced(&rest))?;
        layers.extend(inner.layers().iter().map(|l| l.lift(&rest)));
    }
    LocalBoxRepresentation::new(n, layers, TAG)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::representation::verify_representation;

    #[test]
    fn ceil_sqrt_values() {
        let got: Vec<usize> = [0, 1, 2, 4, 5, 9, 10, 16, 17]
            .iter()
            .map(|&m| ceil_sqrt(m))
            .collect();
        assert_eq!(got, vec![0, 1, 2, 2, 3, 3, 4, 4, 5]);
    }

    #[test]
    fn star_peels_center() {
        let star = generators::star(8);
        assert_eq!(peeled_vertices(&star, Some(3)).unwrap(), vec![0]);
        let rep = peel_representation(&star, Some(3)).unwrap();
        assert!(verify_representation(&star, &rep).unwrap().exact);
    }

    #[test]
    fn degenerate_threshold_matches_delegate() {
        let g = generators::gnp(12, 0.4, 3).unwrap();
        let rep = peel_representation(&g, Some(g.max_degree() + 1)).unwrap();
        let direct = biclique_representation(&g).unwrap();
        assert_eq!(rep.layers(), direct.layers());
    }

    #[test]
    fn default_threshold() {
        let g = generators::gnp(20, 0.4, 11).unwrap();
        let m = g.m() as f64;
        let peeled = peeled_vertices(&g, None).unwrap();
        assert!(peeled.len() as f64 <= 2.0 * m.sqrt());
        let rep = peel_representation(&g, None).unwrap();
        let report = verify_representation(&g, &rep).unwrap();
        assert!(report.exact);
    }

    #[test]
    fn bad_thresholds() {
        assert!(peel_representation(&generators::path(3), Some(0)).is_err());
        assert!(peel_representation(&Graph::empty(3), None).is_err());
        assert!(peel_representation(&generators::complete(4), Some(1)).is_ok());
    }
}
