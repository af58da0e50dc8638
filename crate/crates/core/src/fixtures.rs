//! Named example hypergraphs bundled with the crate.

use crate::hypergraph::{Hypergraph, HypergraphError};

/// `(name, canonical JSON)` for every bundled example.
pub const FIXTURES: &[(&str, &str)] = &[
    ("h1-increase", include_str!("../fixtures/h1-increase.json")),
    ("h2-decrease", include_str!("../fixtures/h2-decrease.json")),
    ("single-edge", include_str!("../fixtures/single-edge.json")),
    ("hstar", include_str!("../fixtures/hstar.json")),
    ("c3-3-6", include_str!("../fixtures/c3-3-6.json")),
    ("c3-3-6-minus-type1", include_str!("../fixtures/c3-3-6-minus-type1.json")),
    ("c3-3-6-minus-type2", include_str!("../fixtures/c3-3-6-minus-type2.json")),
];

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(name, _)| *name)
}

pub fn fixture_json(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

pub fn fixture(name: &str) -> Result<Hypergraph, HypergraphError> {
    let text = fixture_json(name).ok_or_else(|| {
        HypergraphError::InvalidParams(format!(
            "unknown fixture {name:?} (known: {})",
            fixture_names().collect::<Vec<_>>().join(", ")
        ))
    })?;
    Hypergraph::from_json(text)
}
