//! Constructions of local box representations, one per strategy.

pub mod biclique;
pub mod clawfree;
pub mod pairwise;
pub mod paths_cycles;
pub mod peel;
pub mod product;
pub mod roberts;
mod strategy;

pub use biclique::{biclique_representation, greedy_biclique_partition, BicliquePartition};
pub use clawfree::clawfree_representation;
pub use pairwise::{find_bounded_degree_partition, pairwise_composition, BoundedDegreePartition};
pub use paths_cycles::paths_cycles_layers;
pub use peel::{peel_representation, peel_representation_with, peeled_vertices};
pub use product::{product_representation, ProductEncoding};
pub use roberts::roberts_representation;
pub use strategy::{auto_choice, construct, Strategy, StrategyKind};
