//! File formats: edge lists, relation lists, representation JSON and the
//! compact per-vertex records.

mod compact;
mod json;
mod text;

pub use compact::{
    adjacency_query, from_compact, to_compact, CompactGraphRecord, CompactPosetRecord, Triple,
};
pub use json::{read_representation_json, write_representation_json, JSON_VERSION};
pub use text::{read_graph, read_poset, write_graph, write_poset};
