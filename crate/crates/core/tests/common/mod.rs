//! Shared fixtures and independent brute-force oracles for integration
//! tests. The oracles deliberately avoid the library's algorithms: covers
//! come from subset enumeration, chordality from an exhaustive induced-cycle
//! scan.

// each test binary uses its own subset of these helpers
#![allow(dead_code)]

use std::collections::BTreeMap;

use coverdeal_core::{HFamilySpec, SimpleGraph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn spec_ex29() -> HFamilySpec {
    HFamilySpec::new(
        6,
        vec![2, 4, 6],
        BTreeMap::from([(2, vec![1]), (4, vec![3]), (6, vec![5])]),
    )
}

pub fn spec_ex16() -> HFamilySpec {
    HFamilySpec::new(
        11,
        vec![2, 6, 8, 11],
        BTreeMap::from([
            (2, vec![1]),
            (6, vec![3, 4, 5]),
            (8, vec![7]),
            (11, vec![9, 10]),
        ]),
    )
}

/// Every minimal vertex cover by enumerating all 2^n subsets. Usable up to
/// n around 16.
pub fn brute_minimal_covers(g: &SimpleGraph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 20, "oracle is exponential in n");
    let edges = g.edges();
    let covers: Vec<VertexSet> = (0u64..1 << n)
        .filter_map(|bits| {
            let s = VertexSet::from_labels((1..=n).filter(|v| bits >> (v - 1) & 1 == 1));
            edges
                .iter()
                .all(|&(u, v)| s.contains(u) || s.contains(v))
                .then_some(s)
        })
        .collect();
    let mut minimal: Vec<VertexSet> = covers
        .iter()
        .filter(|c| !covers.iter().any(|d| d.is_proper_subset_of(c)))
        .copied()
        .collect();
    minimal.sort_unstable();
    minimal
}

/// Chordality by exhaustive search for an induced cycle on 4 or more
/// vertices: a vertex subset whose induced degrees are all exactly 2 and
/// which is connected induces a chordless cycle.
pub fn brute_is_chordal(g: &SimpleGraph) -> bool {
    let n = g.n();
    assert!(n <= 16, "oracle is exponential in n");
    for bits in 0u64..1 << n {
        if (bits.count_ones() as usize) < 4 {
            continue;
        }
        let s = VertexSet::from_labels((1..=n).filter(|v| bits >> (v - 1) & 1 == 1));
        let all_degree_two = s.iter().all(|v| g.neighbors(v).intersection(&s).len() == 2);
        if all_degree_two && connected_within(g, &s) {
            return false;
        }
    }
    true
}

fn connected_within(g: &SimpleGraph, s: &VertexSet) -> bool {
    let start = match s.min_label() {
        Some(v) => v,
        None => return true,
    };
    let mut seen = VertexSet::singleton(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v).intersection(s).iter() {
            if !seen.contains(w) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    *s == seen
}

/// Checks a claimed chordless cycle: length at least 4, consecutive pairs
/// adjacent, everything else non-adjacent.
pub fn is_valid_hole(g: &SimpleGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// A random family spec with n at most `n_max`. Clique labels are a random
/// subset, leaves are spread at random, so non-contiguous labelings and
/// starless clique vertices both occur. With `force_all_starred` every
/// clique vertex receives at least one leaf.
pub fn random_spec(rng: &mut impl Rng, n_max: usize, force_all_starred: bool) -> HFamilySpec {
    let n = if force_all_starred {
        rng.random_range(4..=n_max)
    } else {
        rng.random_range(3..=n_max)
    };
    let m_cap = if force_all_starred { n / 2 } else { n - 1 };
    let m = rng.random_range(2..=m_cap.clamp(2, 6));

    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(rng);
    let mut clique: Vec<usize> = labels[..m].to_vec();
    clique.sort_unstable();
    let rest: Vec<usize> = labels[m..].to_vec();

    let mut stars: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut remaining = rest.as_slice();
    if force_all_starred {
        for (i, &c) in clique.iter().enumerate() {
            stars.entry(c).or_default().push(rest[i]);
        }
        remaining = &rest[m..];
    }
    for &leaf in remaining {
        let center = clique[rng.random_range(0..m)];
        stars.entry(center).or_default().push(leaf);
    }

    let spec = HFamilySpec::new(n, clique, stars);
    spec.validate().expect("generated spec is valid");
    spec
}

/// A random graph on up to `n_max` vertices with random density.
pub fn random_graph(rng: &mut impl Rng, n_max: usize) -> SimpleGraph {
    let n = rng.random_range(1..=n_max);
    let p: f64 = rng.random_range(0.05..0.95);
    let mut g = SimpleGraph::new(n).expect("n in range");
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}
