use crate::claw::find_claw;
use crate::coloring::{color_of, greedy_coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::Interval;
use crate::representation::LocalBoxRepresentation;

use super::paths_cycles::{layers_from_lists, paths_cycles_layers};

pub const TAG: &str = "clawfree";

/// Local box representation of a claw-free graph from a greedy coloring.
///
/// For every pair of color classes the induced subgraph is bipartite and
/// claw-free, so its maximum degree is at most 2; it is realised by
/// [`paths_cycles_layers`] with all other vertices implicit. A vertex takes
/// part in `classes - 1` pairs and is non-universal in at most two layers
/// per pair.
pub fn clawfree_representation(g: &Graph) -> Result<LocalBoxRepresentation> {
    if let Some(claw) = find_claw(g) {
        return Err(Error::ClawFound(claw));
    }
    let n = g.n();
    let classes = greedy_coloring(g);
    if classes.len() <= 1 {
        // edgeless: no class pairs, so separate the vertices directly
        if n <= 1 {
            return Ok(LocalBoxRepresentation::all_implicit(
                n,
                Interval::int(1, 2),
                TAG,
            ));
        }
        return LocalBoxRepresentation::new(n, paths_cycles_layers(g)?, TAG);
    }
    let colour = color_of(n, &classes);
    // position of each vertex inside the current pair; entries from earlier
    // pairs go stale but are only read for vertices of the current pair
    let mut pos = vec![0usize; n];
    let mut layers = Vec::new();
    for i in 0..classes.len() {
        for j in (i + 1)..classes.len() {
            let mut union: Vec<usize> = classes[i].iter().chain(&classes[j]).copied().collect();
            union.sort_unstable();
            for (k, &v) in union.iter().enumerate() {
                pos[v] = k;
            }
            // neighbour lists stay sorted because `union` is sorted
            let adj: Vec<Vec<usize>> = union
                .iter()
                .map(|&v| {
                    let nbrs = g
                        .neighbors(v)
                        .iter()
                        .filter(|&&w| colour[w] == i || colour[w] == j);
                    nbrs.map(|&w| pos[w]).collect()
                })
                .collect();
            let delta = adj.iter().map(Vec::len).max().unwrap_or(0);
            if delta > 2 {
                return Err(Error::Internal(format!(
                    "color classes {i} and {j} induce maximum degree {delta} in a claw-free graph"
                )));
            }
            layers.extend(layers_from_lists(&adj)?.iter().map(|l| l.lift(&union)));
        }
    }
    LocalBoxRepresentation::new(n, layers, TAG)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claw::Claw;
    use crate::generators;
    use crate::representation::verify_representation;

    fn run(g: &Graph) -> usize {
        let rep = clawfree_representation(g).unwrap();
        let report = verify_representation(g, &rep).unwrap();
        assert!(report.exact, "{report:?}");
        let classes = greedy_coloring(g).len();
        assert!(report.max_frequency <= 3 * classes.saturating_sub(1).max(1));
        report.max_frequency
    }

    #[test]
    fn examples() {
        assert!(run(&generators::cycle(6)) <= 3);
        assert!(run(&generators::complete(3)) <= 6);
        let lp = generators::line_graph(&generators::petersen());
        assert_eq!(lp.max_degree(), 4);
        assert!(run(&lp) <= 12);
        assert_eq!(run(&Graph::empty(1)), 0);
        assert_eq!(run(&Graph::empty(4)), 1);
    }

    #[test]
    fn claw_is_reported() {
        assert_eq!(
            clawfree_representation(&generators::star(3)),
            Err(Error::ClawFound(Claw {
                center: 0,
                leaves: [1, 2, 3]
            }))
        );
    }
}
