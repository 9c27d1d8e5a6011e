use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poset::Poset;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based numbers, each split into
/// exactly two unsigned integers. Comments start with `#`.
fn pairs(text: &str) -> Result<Vec<(usize, usize, usize)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(
                i + 1,
                format!("expected two integers, found {line:?}"),
            ));
        }
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(i + 1, format!("{s:?} is not a non-negative integer")))
        };
        out.push((i + 1, num(fields[0])?, num(fields[1])?));
    }
    Ok(out)
}

fn header(rows: &[(usize, usize, usize)]) -> Result<(usize, usize)> {
    match rows.first() {
        Some(&(_, n, k)) => Ok((n, k)),
        None => Err(parse_err(1, "missing header line")),
    }
}

fn check_count(rows: &[(usize, usize, usize)], expected: usize) -> Result<()> {
    let found = rows.len() - 1;
    if found != expected {
        let line = rows.last().map_or(1, |r| r.0);
        return Err(parse_err(
            line,
            format!("header announces {expected} lines, found {found}"),
        ));
    }
    Ok(())
}

/// Parses `"n m"` followed by `m` lines `"u v"`.
pub fn read_graph(text: &str) -> Result<Graph> {
    let rows = pairs(text)?;
    let (n, m) = header(&rows)?;
    check_count(&rows, m)?;
    let mut g = Graph::empty(n);
    for &(line, u, v) in &rows[1..] {
        g.add_edge(u, v)
            .map_err(|e| parse_err(line, e.to_string()))?;
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses `"n k"` followed by `k` lines `"x y"` meaning `x ≺ y`, then
/// closes the relation.
pub fn read_poset(text: &str) -> Result<Poset> {
    let rows = pairs(text)?;
    let (n, k) = header(&rows)?;
    check_count(&rows, k)?;
    for &(line, x, y) in &rows[1..] {
        if let Some(v) = [x, y].into_iter().find(|&v| v >= n) {
            return Err(parse_err(
                line,
                format!("element {v} out of range for {n} elements"),
            ));
        }
    }
    Poset::from_relations(n, rows[1..].iter().map(|&(_, x, y)| (x, y)))
}

/// Writes the cover relations only.
pub fn write_poset(p: &Poset) -> String {
    let n = p.n();
    let covers: Vec<(usize, usize)> = p
        .relations()
        .into_iter()
        .filter(|&(x, y)| !(0..n).any(|z| p.less(x, z) && p.less(z, y)))
        .collect();
    let mut out = format!("{n} {}\n", covers.len());
    for (x, y) in covers {
        out.push_str(&format!("{x} {y}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::poset::{comparability_graph, crown_poset};

    #[test]
    fn graph_examples() {
        assert_eq!(read_graph("3 2\n0 1\n1 2").unwrap(), generators::path(3));
        assert_eq!(read_graph("2 0").unwrap(), Graph::empty(2));
        match read_graph("3 1\n0 0") {
            Err(Error::Parse { line: 2, message }) => assert!(message.contains("self-loop")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            read_graph("3 2\n0 1\n1 0"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            read_graph("3 1\n0 x"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(read_graph("3 2\n0 1"), Err(Error::Parse { .. })));
        assert!(matches!(read_graph(""), Err(Error::Parse { line: 1, .. })));
        assert_eq!(read_graph("# seed=1\n2 1\n0 1 # edge\n").unwrap().m(), 1);
    }

    #[test]
    fn graph_round_trip() {
        let g = generators::petersen();
        let text = write_graph(&g);
        assert_eq!(read_graph(&text).unwrap(), g);
        assert_eq!(write_graph(&read_graph(&text).unwrap()), text);
    }

    #[test]
    fn poset_examples() {
        let p = read_poset("3 2\n0 1\n1 2").unwrap();
        assert!(p.less(0, 2));
        assert_eq!(read_poset("2 2\n0 1\n1 0"), Err(Error::Cycle(vec![0, 1])));

        let s3 = crown_poset(3).unwrap();
        let back = read_poset(&write_poset(&s3)).unwrap();
        assert_eq!(back, s3);
        let g = comparability_graph(&back);
        assert_eq!(g.m(), 6);
        assert!((0..6).all(|v| g.degree(v) == 2));
    }
}
