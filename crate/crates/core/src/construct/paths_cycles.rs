use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{Interval, IntervalLayer};

enum Component {
    /// Vertices in path order; a single vertex is a trivial path.
    Path(Vec<usize>),
    Triangle([usize; 3]),
    /// Vertices in cyclic order, length at least 4.
    Cycle(Vec<usize>),
}

fn components(adj: &[Vec<usize>]) -> Vec<Component> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    // paths first, starting from their lowest-index endpoint
    for start in 0..n {
        if seen[start] || adj[start].len() == 2 {
            continue;
        }
        out.push(Component::Path(walk(adj, start, &mut seen)));
    }
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let order = walk(adj, start, &mut seen);
        out.push(match order.as_slice() {
            &[a, b, c] => Component::Triangle([a, b, c]),
            _ => Component::Cycle(order),
        });
    }
    out
}

/// Walks a component of a max-degree-2 graph from `start`, always stepping
/// to the smallest unvisited neighbour.
fn walk(adj: &[Vec<usize>], start: usize, seen: &mut [bool]) -> Vec<usize> {
    let mut order = vec![start];
    seen[start] = true;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&w| !seen[w]) {
        seen[next] = true;
        order.push(next);
        cur = next;
    }
    order
}

/// Interval layers whose intersection is `h`, for `Δ(h) ≤ 2`.
///
/// Components occupy disjoint coordinate ranges of the first layer, so
/// vertices of different components never meet. Paths are consecutive unit
/// intervals. A cycle `c_0 … c_{k-1}` lays out `c_0 … c_{k-2}` as a path
/// with `c_{k-1}` spanning the component in the first layer, and
/// `c_1 … c_{k-1}` with `c_0` spanning it in the second. The second layer
/// exists only when `h` has a cycle of length at least 4.
pub fn paths_cycles_layers(h: &Graph) -> Result<Vec<IntervalLayer>> {
    let adj: Vec<Vec<usize>> = (0..h.n()).map(|v| h.neighbors(v).to_vec()).collect();
    layers_from_lists(&adj)
}

/// Same as [`paths_cycles_layers`] on sorted adjacency lists.
pub(crate) fn layers_from_lists(adj: &[Vec<usize>]) -> Result<Vec<IntervalLayer>> {
    let delta = adj.iter().map(Vec::len).max().unwrap_or(0);
    if delta > 2 {
        return Err(Error::DegreeTooLarge {
            max_degree: delta,
            allowed: 2,
        });
    }
    let mut first = Vec::new();
    let mut second = Vec::new();
    let mut s: i64 = 1;
    for comp in components(adj) {
        match comp {
            Component::Path(vs) => {
                for (i, &v) in vs.iter().enumerate() {
                    first.push((v, Interval::int(s + i as i64, s + i as i64 + 1)));
                }
                s += vs.len() as i64 + 1;
            }
            Component::Triangle(vs) => {
                for v in vs {
                    first.push((v, Interval::int(s, s + 1)));
                }
                s += 2;
            }
            Component::Cycle(vs) => {
                let k = vs.len() as i64;
                let whole = Interval::int(s, s + k - 1);
                for (i, &v) in vs[..vs.len() - 1].iter().enumerate() {
                    first.push((v, Interval::int(s + i as i64, s + i as i64 + 1)));
                }
                first.push((vs[vs.len() - 1], whole));
                second.push((vs[0], whole));
                for (i, &v) in vs.iter().enumerate().skip(1) {
                    second.push((v, Interval::int(s + i as i64 - 1, s + i as i64)));
                }
                s += k;
            }
        }
    }
    let span = Interval::int(1, (s - 1).max(1));
    let mut layers = vec![IntervalLayer::with_intervals(span, first)?];
    if !second.is_empty() {
        layers.push(IntervalLayer::with_intervals(span, second)?);
    }
    Ok(layers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::representation::{verify_representation, LocalBoxRepresentation};

    fn check(h: &Graph) -> LocalBoxRepresentation {
        let layers = paths_cycles_layers(h).unwrap();
        assert!(layers.len() <= 3);
        let rep = LocalBoxRepresentation::new(h.n(), layers, "paths-cycles").unwrap();
        let report = verify_representation(h, &rep).unwrap();
        assert!(report.exact, "{report:?}");
        assert!(report.max_frequency <= 2);
        rep
    }

    #[test]
    fn path_is_one_layer() {
        let rep = check(&generators::path(4));
        assert_eq!(rep.layers().len(), 1);
        let ivs: Vec<_> = (0..4).map(|v| rep.layers()[0].interval_of(v)).collect();
        assert_eq!(
            ivs,
            vec![
                Interval::int(1, 2),
                Interval::int(2, 3),
                Interval::int(3, 4),
                Interval::int(4, 5)
            ]
        );
    }

    #[test]
    fn cycles_and_unions() {
        assert_eq!(check(&generators::cycle(4)).layers().len(), 2);
        check(&generators::cycle(3));
        check(&generators::path(3).disjoint_union(&generators::cycle(6)));
        check(
            &generators::cycle(5)
                .disjoint_union(&Graph::empty(3))
                .disjoint_union(&generators::cycle(3)),
        );
        check(&Graph::empty(0));
    }

    #[test]
    fn rejects_degree_three() {
        assert_eq!(
            paths_cycles_layers(&generators::star(3)),
            Err(Error::DegreeTooLarge {
                max_degree: 3,
                allowed: 2
            })
        );
    }
}
