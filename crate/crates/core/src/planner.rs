//! Leader placement: a minimum vertex cover as the gateway set.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::covers::minimal_covers;
use crate::error::Result;
use crate::graph::SimpleGraph;
use crate::vset::VertexSet;

/// Convention for picking one adjacent leader per sensor; kept in the plan
/// output because the choice is ours, not forced by the cover.
pub const ASSIGNMENT_RULE: &str = "lowest-index-adjacent-leader";

/// A gateway placement: the chosen minimum cover, the other minimum covers
/// as alternatives, and one adjacent leader per remaining sensor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlacementPlan {
    pub leaders: VertexSet,
    pub cardinality: usize,
    pub alternatives: Vec<VertexSet>,
    pub assignment: BTreeMap<usize, usize>,
    pub assignment_rule: &'static str,
    pub warnings: Vec<String>,
}

/// Plans leaders for `g`: the lexicographically smallest minimum-cardinality
/// minimal cover wins, every other sensor reports to its lowest-index
/// adjacent leader. Edgeless graphs produce an empty plan with a warning;
/// disconnected graphs are planned whole, with a warning, since covers of
/// separate components are independent.
pub fn plan_placement(g: &SimpleGraph, cap: usize) -> Result<PlacementPlan> {
    let mut warnings = Vec::new();
    if g.is_edgeless() {
        warnings.push("graph has no edges; nothing to cover".to_string());
        return Ok(PlacementPlan {
            leaders: VertexSet::EMPTY,
            cardinality: 0,
            alternatives: Vec::new(),
            assignment: BTreeMap::new(),
            assignment_rule: ASSIGNMENT_RULE,
            warnings,
        });
    }
    let components = g.component_count();
    if components > 1 {
        warnings.push(format!(
            "graph has {components} components; leaders cover each component independently"
        ));
    }

    let covers = minimal_covers(g, cap)?;
    let minimum = covers.minimum_covers();
    let leaders = minimum[0];
    let alternatives = minimum[1..].to_vec();

    let mut assignment = BTreeMap::new();
    for v in 1..=g.n() {
        if leaders.contains(v) || g.neighbors(v).is_empty() {
            continue;
        }
        let adjacent_leaders = g.neighbors(v).intersection(&leaders);
        let target = adjacent_leaders
            .min_label()
            .expect("a cover meets every edge, so some neighbor is a leader");
        assignment.insert(v, target);
    }

    Ok(PlacementPlan {
        leaders,
        cardinality: covers.alpha0,
        alternatives,
        assignment,
        assignment_rule: ASSIGNMENT_RULE,
        warnings,
    })
}
