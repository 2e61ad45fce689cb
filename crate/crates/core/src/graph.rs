//! Simple undirected graphs on 1-based vertex labels.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_LABEL};

/// An undirected simple graph on vertices `1..=n`, adjacency stored as one
/// bit set per vertex. No loops, no parallel edges. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_LABEL {
            return Err(Error::BadVertexCount { n });
        }
        Ok(SimpleGraph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge { vertex: u });
        }
        self.adj[u - 1].insert(v);
        self.adj[v - 1].insert(u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < 1 || v > self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && self.adj[u - 1].contains(v)
    }

    /// Neighbors of `v` as a bit set.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v - 1].len())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in self.adj[u - 1].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|s| s.is_empty())
    }

    /// The complement graph: `{u,v}` is an edge iff `u != v` and `{u,v}` is
    /// not an edge here.
    pub fn complement(&self) -> SimpleGraph {
        let full = VertexSet::full(self.n);
        let adj = (1..=self.n)
            .map(|v| {
                let mut s = full.difference(&self.adj[v - 1]);
                s.remove(v);
                s
            })
            .collect();
        SimpleGraph { n: self.n, adj }
    }

    /// Number of connected components, counting isolated vertices.
    pub fn component_count(&self) -> usize {
        let mut seen = VertexSet::EMPTY;
        let mut components = 0;
        for start in 1..=self.n {
            if seen.contains(start) {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                for w in self.adj[v - 1].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    /// DOT rendering with vertex labels `v1..vn`; vertices in `highlight`
    /// get a fill attribute so renderers can mark the chosen leaders.
    pub fn to_dot(&self, highlight: &VertexSet) -> String {
        let mut out = String::from("graph {\n");
        for v in 1..=self.n {
            if highlight.contains(v) {
                let _ = writeln!(out, "  v{v} [style=filled fillcolor=lightblue];");
            } else {
                let _ = writeln!(out, "  v{v};");
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  v{u} -- v{v};");
        }
        out.push_str("}\n");
        out
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}
