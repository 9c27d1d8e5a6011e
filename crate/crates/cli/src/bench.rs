//! Timing sweeps over bounded-degree line graphs.

use std::time::{Duration, Instant};

use localbox::construct::{construct, Strategy, StrategyKind};
use localbox::generators::bounded_line_graph;
use localbox::verify_representation;

use crate::{CliError, CliResult};

pub const CSV_HEADER: &str = "n,delta,strategy,frequency,wall_ms";

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub delta: usize,
    pub strategy: StrategyKind,
    pub frequency: usize,
    /// Fastest of the timed runs.
    pub wall: Duration,
}

impl BenchRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{:.4}",
            self.n,
            self.delta,
            self.strategy,
            self.frequency,
            self.wall.as_secs_f64() * 1e3
        )
    }
}

/// Builds the instance once, verifies one output outside the clock, then
/// times `repeats` constructions and keeps the minimum.
pub fn run_one(n: usize, kind: StrategyKind, seed: u64, repeats: usize) -> CliResult<BenchRow> {
    let g = bounded_line_graph(n, seed)?;
    let strategy = match kind {
        StrategyKind::Clawfree => Strategy::Clawfree,
        StrategyKind::Biclique => Strategy::Biclique,
        StrategyKind::Peel => Strategy::Peel { threshold: None },
        StrategyKind::Auto => Strategy::Auto,
        other => {
            return Err(CliError {
                code: crate::exit::INPUT,
                message: format!("bench does not support the {other} strategy"),
            })
        }
    };
    let rep = construct(&g, &strategy)?;
    let frequency = verify_representation(&g, &rep)?.max_frequency;
    let mut best = Duration::MAX;
    for _ in 0..repeats {
        let start = Instant::now();
        let rep = run_unverified(&g, &strategy)?;
        best = best.min(start.elapsed());
        std::hint::black_box(rep);
    }
    Ok(BenchRow {
        n,
        delta: g.max_degree(),
        strategy: kind,
        frequency,
        wall: best,
    })
}

fn run_unverified(
    g: &localbox::Graph,
    s: &Strategy,
) -> localbox::Result<localbox::LocalBoxRepresentation> {
    use localbox::construct::{
        biclique_representation, clawfree_representation, peel_representation,
    };
    match s {
        Strategy::Clawfree => clawfree_representation(g),
        Strategy::Biclique => biclique_representation(g),
        Strategy::Peel { threshold } => peel_representation(g, *threshold),
        _ => construct(g, s),
    }
}
