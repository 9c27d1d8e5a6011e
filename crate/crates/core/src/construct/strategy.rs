use std::fmt;
use std::str::FromStr;

use crate::claw::find_claw;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{exact_product_dimension, OracleLimits, Outcome};
use crate::representation::{verify_representation, LocalBoxRepresentation};

use super::biclique::{biclique_representation, greedy_biclique_partition};
use super::clawfree::clawfree_representation;
use super::pairwise::{find_bounded_degree_partition, pairwise_composition};
use super::peel::{peel_representation, peeled_vertices};
use super::product::product_representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrategyKind {
    Clawfree,
    Biclique,
    Peel,
    Pairwise,
    Product,
    Auto,
}

impl StrategyKind {
    pub const ALL: [StrategyKind; 6] = [
        StrategyKind::Clawfree,
        StrategyKind::Biclique,
        StrategyKind::Peel,
        StrategyKind::Pairwise,
        StrategyKind::Product,
        StrategyKind::Auto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StrategyKind::Clawfree => "clawfree",
            StrategyKind::Biclique => "biclique",
            StrategyKind::Peel => "peel",
            StrategyKind::Pairwise => "pairwise",
            StrategyKind::Product => "product",
            StrategyKind::Auto => "auto",
        }
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StrategyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrategyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown strategy '{s}'")))
    }
}

/// A strategy together with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum Strategy {
    Clawfree,
    Biclique,
    Peel {
        threshold: Option<usize>,
    },
    /// Random bounded-degree partition into `parts` parts, then pairwise
    /// composition with the biclique strategy inside each pair.
    Pairwise {
        parts: usize,
        bound: usize,
        tries: usize,
        seed: u64,
    },
    /// Product encoding found by the exact oracle; small graphs only.
    Product {
        limits: OracleLimits,
    },
    Auto,
}

impl Strategy {
    pub fn kind(&self) -> StrategyKind {
        match self {
            Strategy::Clawfree => StrategyKind::Clawfree,
            Strategy::Biclique => StrategyKind::Biclique,
            Strategy::Peel { .. } => StrategyKind::Peel,
            Strategy::Pairwise { .. } => StrategyKind::Pairwise,
            Strategy::Product { .. } => StrategyKind::Product,
            Strategy::Auto => StrategyKind::Auto,
        }
    }
}

/// Frequency estimates used by the automatic choice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutoEstimates {
    /// `3Δ`, only for claw-free graphs.
    pub clawfree: Option<usize>,
    /// Largest block membership of the greedy complement partition.
    pub biclique: usize,
    /// `|V'|` plus the biclique estimate on the remainder; needs an edge.
    pub peel: Option<usize>,
}

fn biclique_estimate(g: &Graph) -> usize {
    greedy_biclique_partition(&g.complement())
        .membership_counts()
        .into_iter()
        .max()
        .unwrap_or(0)
}

/// Picks the strategy with the smallest estimate; ties favour clawfree,
/// then biclique, then peel.
pub fn auto_choice(g: &Graph) -> (StrategyKind, AutoEstimates) {
    let clawfree = find_claw(g).is_none().then(|| 3 * g.max_degree());
    let biclique = biclique_estimate(g);
    let peel = (g.m() > 0).then(|| {
        let peeled = peeled_vertices(g, None).expect("m >= 1");
        let mut keep = vec![true; g.n()];
        for &v in &peeled {
            keep[v] = false;
        }
        let rest: Vec<usize> = (0..g.n()).filter(|&v| keep[v]).collect();
        peeled.len() + biclique_estimate(&g.induced(&rest))
    });
    let est = AutoEstimates {
        clawfree,
        biclique,
        peel,
    };
    let mut best = (StrategyKind::Biclique, biclique);
    if let Some(c) = clawfree {
        if c <= best.1 {
            best = (StrategyKind::Clawfree, c);
        }
    }
    if let Some(p) = peel {
        if p < best.1 {
            best = (StrategyKind::Peel, p);
        }
    }
    (best.0, est)
}

/// Runs `strategy` on `g` and verifies the result. A representation that
/// fails verification is reported as an internal error, never returned.
pub fn construct(g: &Graph, strategy: &Strategy) -> Result<LocalBoxRepresentation> {
    let rep = match strategy {
        Strategy::Clawfree => clawfree_representation(g)?,
        Strategy::Biclique => biclique_representation(g)?,
        Strategy::Peel { threshold } => peel_representation(g, *threshold)?,
        Strategy::Pairwise {
            parts,
            bound,
            tries,
            seed,
        } => {
            let partition = find_bounded_degree_partition(g, *parts, *bound, *tries, *seed)
                .ok_or_else(|| {
                    Error::InvalidPartition(format!(
                        "no partition into {parts} parts with bound {bound} found in {tries} tries"
                    ))
                })?;
            pairwise_composition(g, &partition, biclique_representation)?
        }
        Strategy::Product { limits } => match exact_product_dimension(g, limits)? {
            Outcome::Exact((_, enc)) => product_representation(g, &enc)?,
            Outcome::Unknown => {
                return Err(Error::InvalidParameter(
                    "product encoding search exhausted its budget".into(),
                ))
            }
        },
        Strategy::Auto => {
            let (kind, _) = auto_choice(g);
            let chosen = match kind {
                StrategyKind::Clawfree => Strategy::Clawfree,
                StrategyKind::Peel => Strategy::Peel { threshold: None },
                _ => Strategy::Biclique,
            };
            return construct(g, &chosen);
        }
    };
    let report = verify_representation(g, &rep)?;
    if !report.exact {
        return Err(Error::Internal(format!(
            "{} produced an inexact representation ({} missing edges, {} surviving non-edges)",
            rep.strategy(),
            report.missing_edges.len(),
            report.surviving_nonedges.len()
        )));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn parse_names() {
        for k in StrategyKind::ALL {
            assert_eq!(k.name().parse::<StrategyKind>(), Ok(k));
        }
        assert!("box".parse::<StrategyKind>().is_err());
    }

    #[test]
    fn auto_prefers_clawfree_on_sparse_line_graphs() {
        let g = generators::bounded_line_graph(60, 1).unwrap();
        let (kind, est) = auto_choice(&g);
        let c = est.clawfree.unwrap();
        assert!(c <= est.biclique && est.peel.is_none_or(|p| c <= p));
        assert_eq!(kind, StrategyKind::Clawfree);
        assert_eq!(
            construct(&g, &Strategy::Auto).unwrap().strategy(),
            "clawfree"
        );
    }

    #[test]
    fn every_strategy_verifies() {
        let g = generators::gnp(6, 0.5, 9).unwrap();
        let strategies = [
            Strategy::Biclique,
            Strategy::Peel { threshold: None },
            Strategy::Pairwise {
                parts: 2,
                bound: g.max_degree(),
                tries: 10,
                seed: 0,
            },
            Strategy::Product {
                limits: OracleLimits::default(),
            },
            Strategy::Auto,
        ];
        for s in &strategies {
            construct(&g, s).unwrap();
        }
        assert!(matches!(
            construct(&generators::star(3), &Strategy::Clawfree),
            Err(Error::ClawFound(_))
        ));
    }
}
