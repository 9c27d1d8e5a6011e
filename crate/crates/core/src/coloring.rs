//! First-fit vertex coloring.

use crate::graph::Graph;

/// Colors vertices in ascending order with the smallest color unused by
/// earlier neighbours. Returns the color classes, each sorted. Uses at most
/// `Δ + 1` colors.
pub fn greedy_coloring(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut taken = Vec::new();
    for v in 0..n {
        taken.clear();
        taken.resize(g.degree(v) + 1, false);
        for &w in g.neighbors(v) {
            let c = color[w];
            if c < taken.len() {
                taken[c] = true;
            }
        }
        let c = taken
            .iter()
            .position(|&t| !t)
            .expect("deg+1 slots, at most deg taken");
        color[v] = c;
        if c == classes.len() {
            classes.push(Vec::new());
        }
        classes[c].push(v);
    }
    classes
}

/// Per-vertex color index from a list of classes.
pub fn color_of(n: usize, classes: &[Vec<usize>]) -> Vec<usize> {
    let mut color = vec![usize::MAX; n];
    for (c, class) in classes.iter().enumerate() {
        for &v in class {
            color[v] = c;
        }
    }
    color
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn is_proper(g: &Graph, classes: &[Vec<usize>]) -> bool {
        let color = color_of(g.n(), classes);
        color.iter().all(|&c| c != usize::MAX) && g.edges().all(|(u, v)| color[u] != color[v])
    }

    #[test]
    fn small_cases() {
        assert_eq!(greedy_coloring(&Graph::empty(5)).len(), 1);
        assert_eq!(greedy_coloring(&generators::complete(5)).len(), 5);
        let petersen = generators::petersen();
        let classes = greedy_coloring(&petersen);
        assert!(classes.len() <= 4);
        assert!(is_proper(&petersen, &classes));
        assert!(greedy_coloring(&Graph::empty(0)).is_empty());
    }
}
