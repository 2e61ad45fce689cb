//! Minimal vertex covers via incremental transversal expansion.
//!
//! The engine walks the edge list once, keeping the antichain of minimal
//! transversals of the edges seen so far: a transversal that already hits
//! the new edge survives unchanged, anything else branches into one
//! extension per endpoint, and inclusion pruning restores minimality. The
//! antichain is the whole state, so edges are processed sequentially; the
//! expansion and pruning of each step are data-parallel.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec;
use crate::graph::SimpleGraph;
use crate::hfamily::HFamilySpec;
use crate::vset::VertexSet;

/// Default bound on the working antichain; adversarial graphs can grow it
/// exponentially while the clique-plus-stars family stays at `m + 1`.
pub const DEFAULT_ANTICHAIN_CAP: usize = 1_000_000;

/// All minimal vertex covers of one graph, sorted by (cardinality, lex),
/// together with the vertex covering number `alpha0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCollection {
    pub alpha0: usize,
    pub covers: Vec<VertexSet>,
}

impl CoverCollection {
    /// Covers must already be a deduplicated antichain; sorting and the
    /// minimum are normalized here.
    pub fn from_covers(mut covers: Vec<VertexSet>) -> Self {
        covers.sort_unstable();
        let alpha0 = covers.first().map(|c| c.len()).unwrap_or(0);
        CoverCollection { alpha0, covers }
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    /// Covers of minimum cardinality, in lex order.
    pub fn minimum_covers(&self) -> Vec<VertexSet> {
        self.covers
            .iter()
            .filter(|c| c.len() == self.alpha0)
            .copied()
            .collect()
    }
}

/// Minimal transversals of an arbitrary family of nonempty sets over
/// `1..=n`. An empty family has the single empty transversal; a family
/// containing the empty set has none.
pub fn minimal_transversals(sets: &[VertexSet], cap: usize) -> Result<Vec<VertexSet>> {
    let mut antichain = vec![VertexSet::EMPTY];
    for s in sets {
        let expanded = exec::expand_all(&antichain, s.len().max(1), |t, out| {
            if t.intersects(s) {
                out.push(*t);
            } else {
                for w in s.iter() {
                    let mut extended = *t;
                    extended.insert(w);
                    out.push(extended);
                }
            }
        });
        antichain = exec::keep_minimal(expanded);
        if antichain.len() > cap {
            return Err(Error::AntichainCap {
                size: antichain.len(),
                cap,
            });
        }
    }
    Ok(antichain)
}

/// Enumerates every minimal vertex cover of `g`; the edgeless graph yields
/// the single empty cover.
pub fn minimal_covers(g: &SimpleGraph, cap: usize) -> Result<CoverCollection> {
    let edge_sets: Vec<VertexSet> = g
        .edges()
        .into_iter()
        .map(|(u, v)| VertexSet::from_labels([u, v]))
        .collect();
    let covers = minimal_transversals(&edge_sets, cap)?;
    Ok(CoverCollection::from_covers(covers))
}

/// Decision problem: does `g` have a vertex cover of size at most `k`?
pub fn has_cover_of_size(g: &SimpleGraph, k: usize, cap: usize) -> Result<bool> {
    Ok(minimal_covers(g, cap)?.alpha0 <= k)
}

/// The minimal covers of a family graph straight from the closed form,
/// bypassing enumeration.
pub fn predicted_covers_h(spec: &HFamilySpec) -> Result<CoverCollection> {
    Ok(CoverCollection::from_covers(
        spec.closed_form_cover_supports()?,
    ))
}

/// True when `set` meets every edge of `g`.
pub fn is_vertex_cover(g: &SimpleGraph, set: &VertexSet) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| set.contains(u) || set.contains(v))
}

/// True when `set` covers `g` and no proper subset does.
pub fn is_minimal_cover(g: &SimpleGraph, set: &VertexSet) -> bool {
    if !is_vertex_cover(g, set) {
        return false;
    }
    set.iter().all(|v| {
        let mut smaller = *set;
        smaller.remove(v);
        !is_vertex_cover(g, &smaller)
    })
}
