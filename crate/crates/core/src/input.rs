//! Graph ingestion from JSON.
//!
//! Two forms are accepted:
//! `{"n": 6, "edges": [[1,2],[2,4]]}` for a plain edge list, and
//! `{"n": 6, "clique": [2,4,6], "stars": {"2": [1], "4": [3], "6": [5]}}`
//! for a clique-plus-stars family spec. Star keys are JSON object keys and
//! therefore strings.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hfamily::HFamilySpec;

/// A parsed topology: either a family spec (which keeps its closed-form
/// structure available) or a bare edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphInput {
    Family(HFamilySpec),
    EdgeList {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawInput {
    Family {
        n: usize,
        clique: Vec<usize>,
        #[serde(default)]
        stars: BTreeMap<String, Vec<usize>>,
    },
    Edges {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl GraphInput {
    pub fn from_json(json: &str) -> Result<Self> {
        let raw: RawInput = serde_json::from_str(json)
            .map_err(|e| Error::InvalidInput(format!("cannot parse graph JSON: {e}")))?;
        match raw {
            RawInput::Family { n, clique, stars } => {
                let mut parsed = BTreeMap::new();
                for (key, leaves) in stars {
                    let center: usize = key.parse().map_err(|_| {
                        Error::InvalidInput(format!("star key {key:?} is not a vertex label"))
                    })?;
                    parsed.insert(center, leaves);
                }
                let spec = HFamilySpec::new(n, clique, parsed);
                spec.validate()?;
                Ok(GraphInput::Family(spec))
            }
            RawInput::Edges { n, edges } => {
                // validate eagerly so bad input surfaces at parse time
                SimpleGraph::from_edges(n, &edges)?;
                Ok(GraphInput::EdgeList { n, edges })
            }
        }
    }

    pub fn to_graph(&self) -> Result<SimpleGraph> {
        match self {
            GraphInput::Family(spec) => spec.build_graph(),
            GraphInput::EdgeList { n, edges } => SimpleGraph::from_edges(*n, edges),
        }
    }

    pub fn family_spec(&self) -> Option<&HFamilySpec> {
        match self {
            GraphInput::Family(spec) => Some(spec),
            GraphInput::EdgeList { .. } => None,
        }
    }
}
