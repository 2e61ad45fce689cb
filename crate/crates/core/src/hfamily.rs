//! The clique-plus-stars topology family and its closed-form cover structure.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::vset::VertexSet;

/// A graph built from a complete core on `clique` plus a star of leaves
/// hanging off each clique vertex. `stars` maps a clique vertex to its leaf
/// labels; missing or empty entries mean the vertex keeps bare clique degree.
///
/// A spec is valid when the clique is strictly increasing with at least two
/// vertices, all labels lie in `1..=n`, and clique plus leaves partition
/// `{1..=n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HFamilySpec {
    pub n: usize,
    pub clique: Vec<usize>,
    #[serde(default)]
    pub stars: BTreeMap<usize, Vec<usize>>,
}

impl HFamilySpec {
    pub fn new(n: usize, clique: Vec<usize>, stars: BTreeMap<usize, Vec<usize>>) -> Self {
        HFamilySpec { n, clique, stars }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > crate::vset::MAX_LABEL {
            return Err(Error::BadVertexCount { n: self.n });
        }
        if self.clique.len() < 2 {
            return Err(Error::InvalidInput(
                "clique must contain at least 2 vertices".into(),
            ));
        }
        let mut seen = VertexSet::EMPTY;
        let mut prev = 0;
        for &a in &self.clique {
            if a < 1 || a > self.n {
                return Err(Error::spec_out_of_range(a, self.n));
            }
            if a <= prev {
                return Err(Error::InvalidSpec {
                    vertex: a,
                    reason: "clique labels must be strictly increasing".into(),
                });
            }
            prev = a;
            seen.insert(a);
        }
        let clique_set = seen;
        for (&center, leaves) in &self.stars {
            if !clique_set.contains(center) {
                return Err(Error::InvalidSpec {
                    vertex: center,
                    reason: "star center is not a clique vertex".into(),
                });
            }
            for &leaf in leaves {
                if leaf < 1 || leaf > self.n {
                    return Err(Error::spec_out_of_range(leaf, self.n));
                }
                if seen.contains(leaf) {
                    return Err(Error::spec_overlap(leaf));
                }
                seen.insert(leaf);
            }
        }
        if let Some(missing) = VertexSet::full(self.n).difference(&seen).min_label() {
            return Err(Error::spec_uncovered(missing));
        }
        Ok(())
    }

    /// Number of clique vertices.
    pub fn m(&self) -> usize {
        self.clique.len()
    }

    pub fn clique_set(&self) -> VertexSet {
        VertexSet::from_labels(self.clique.iter().copied())
    }

    pub fn leaf_set(&self, center: usize) -> VertexSet {
        self.stars
            .get(&center)
            .map(|l| VertexSet::from_labels(l.iter().copied()))
            .unwrap_or(VertexSet::EMPTY)
    }

    /// Star edge counts per clique vertex, in clique order.
    pub fn star_sizes(&self) -> Vec<usize> {
        self.clique
            .iter()
            .map(|&a| self.leaf_set(a).len())
            .collect()
    }

    pub fn all_starred(&self) -> bool {
        self.star_sizes().iter().all(|&s| s >= 1)
    }

    pub fn max_star_size(&self) -> usize {
        self.star_sizes().into_iter().max().unwrap_or(0)
    }

    /// True when there are no leaves at all (`n == m`), the bare-clique
    /// boundary the closed formulas exclude.
    pub fn is_pure_clique(&self) -> bool {
        self.star_sizes().iter().all(|&s| s == 0)
    }

    fn reject_pure_clique(&self) -> Result<()> {
        if self.is_pure_clique() {
            Err(Error::Unsupported(
                "bare clique with no stars is outside the topology family".into(),
            ))
        } else {
            Ok(())
        }
    }

    /// Builds the graph: all clique pairs plus one edge per leaf.
    pub fn build_graph(&self) -> Result<SimpleGraph> {
        self.validate()?;
        let mut g = SimpleGraph::new(self.n)?;
        for (i, &u) in self.clique.iter().enumerate() {
            for &v in &self.clique[i + 1..] {
                g.add_edge(u, v)?;
            }
        }
        for (&center, leaves) in &self.stars {
            for &leaf in leaves {
                g.add_edge(center, leaf)?;
            }
        }
        Ok(g)
    }

    /// The minimal vertex covers in closed form, unordered.
    ///
    /// For each clique vertex, the cover that swaps it for its leaves; plus
    /// the all-centers cover when every vertex has a star (otherwise the
    /// centers-minus-starless swap already sits below it).
    pub fn closed_form_cover_supports(&self) -> Result<Vec<VertexSet>> {
        self.validate()?;
        self.reject_pure_clique()?;
        let centers = self.clique_set();
        let mut covers: Vec<VertexSet> = self
            .clique
            .iter()
            .map(|&a| {
                let mut c = centers;
                c.remove(a);
                c.union(&self.leaf_set(a))
            })
            .collect();
        if self.all_starred() {
            covers.push(centers);
        }
        Ok(covers)
    }

    /// The generator order under which every colon ideal is generated by a
    /// single variable: the all-centers cover first when present, then the
    /// swap covers by descending clique position, starless ones ahead of
    /// starred ones whenever the largest clique vertex keeps its star.
    pub fn linear_quotient_order_supports(&self) -> Result<Vec<VertexSet>> {
        self.validate()?;
        self.reject_pure_clique()?;
        let centers = self.clique_set();
        let swap = |a: usize| {
            let mut c = centers;
            c.remove(a);
            c.union(&self.leaf_set(a))
        };
        let mut order = Vec::with_capacity(self.m() + 1);
        if self.all_starred() {
            order.push(centers);
            for &a in self.clique.iter().rev() {
                order.push(swap(a));
            }
        } else if self
            .leaf_set(*self.clique.last().expect("m >= 2"))
            .is_empty()
        {
            for &a in self.clique.iter().rev() {
                order.push(swap(a));
            }
        } else {
            let (starless, starred): (Vec<usize>, Vec<usize>) = self
                .clique
                .iter()
                .rev()
                .partition(|&&a| self.leaf_set(a).is_empty());
            for a in starless.into_iter().chain(starred) {
                order.push(swap(a));
            }
        }
        Ok(order)
    }

    /// Minimum cover cardinality in closed form: `m` with all stars present,
    /// `m - 1` once a starless clique vertex can be dropped.
    pub fn predicted_alpha0(&self) -> Result<usize> {
        self.validate()?;
        self.reject_pure_clique()?;
        Ok(if self.all_starred() {
            self.m()
        } else {
            self.m() - 1
        })
    }
}
