//! Chordality testing with an elimination-ordering or bad-cycle witness.

use crate::graph::SimpleGraph;
use crate::vset::VertexSet;

/// Outcome of a chordality test. `Chordal` carries a perfect elimination
/// ordering; `NotChordal` carries a chordless cycle of length at least 4,
/// canonicalized to start at its smallest vertex with the smaller neighbor
/// second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    Chordal { elimination: Vec<usize> },
    NotChordal { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Tests chordality via maximum-cardinality search: the MCS ordering is a
/// perfect elimination ordering exactly when the graph is chordal.
pub fn chordality(g: &SimpleGraph) -> Chordality {
    let order = maximum_cardinality_search(g);
    match check_elimination(g, &order) {
        None => Chordality::Chordal { elimination: order },
        Some((v, a, b)) => Chordality::NotChordal {
            cycle: find_hole(g, v, a, b),
        },
    }
}

/// MCS visit order reversed into an elimination ordering. Ties break toward
/// the smallest label so results are stable.
fn maximum_cardinality_search(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n + 1];
    let mut visited = VertexSet::EMPTY;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (1..=n)
            .filter(|&v| !visited.contains(v))
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited.insert(next);
        visit.push(next);
        for w in g.neighbors(next).iter() {
            if !visited.contains(w) {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// Returns None when `order` is a perfect elimination ordering, else a
/// failing triple: a vertex whose later neighborhood misses the edge `{a,b}`.
fn check_elimination(g: &SimpleGraph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let mut pos = vec![0usize; n + 1];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: VertexSet = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
        for a in later.iter() {
            let mut rest = later;
            rest.remove(a);
            let missing = rest.difference(&g.neighbors(a));
            if let Some(b) = missing.min_label() {
                return Some((v, a, b));
            }
        }
    }
    None
}

/// Recovers a chordless cycle through `v` from the nonadjacent pair `a, b`
/// of its neighbors: a shortest `a`-`b` path avoiding the rest of `N[v]`
/// closes into a hole. Falls back to an exhaustive hole search if that
/// region is disconnected.
fn find_hole(g: &SimpleGraph, v: usize, a: usize, b: usize) -> Vec<usize> {
    let mut blocked = g.neighbors(v);
    blocked.insert(v);
    blocked.remove(a);
    blocked.remove(b);
    if let Some(path) = shortest_path_avoiding(g, a, b, &blocked) {
        let mut cycle = vec![v];
        cycle.extend(path);
        debug_assert!(is_hole(g, &cycle));
        return canonical_cycle(&cycle);
    }
    exhaustive_hole(g).expect("elimination check failed, so a hole exists")
}

fn shortest_path_avoiding(
    g: &SimpleGraph,
    from: usize,
    to: usize,
    blocked: &VertexSet,
) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev = vec![0usize; n + 1];
    let mut seen = *blocked;
    seen.insert(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u).iter() {
            if !seen.contains(w) {
                seen.insert(w);
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Depth-first search over chordless paths; every graph that fails the
/// elimination check contains a hole, and anchoring each search at the
/// hole's minimum vertex keeps the walk short in practice.
fn exhaustive_hole(g: &SimpleGraph) -> Option<Vec<usize>> {
    fn extend(g: &SimpleGraph, path: &mut Vec<usize>, on_path: VertexSet) -> Option<Vec<usize>> {
        let first = path[0];
        let last = *path.last().expect("path nonempty");
        for w in g.neighbors(last).iter() {
            if w <= first || on_path.contains(w) {
                continue;
            }
            let back = g.neighbors(w).intersection(&on_path);
            let closes = back.contains(first);
            if back.len() > 1 + usize::from(closes) || !back.contains(last) {
                continue;
            }
            if closes {
                if path.len() >= 3 {
                    let mut hole = path.clone();
                    hole.push(w);
                    return Some(hole);
                }
                // the edge back to the start would be a chord in any extension
                continue;
            }
            let mut next_on = on_path;
            next_on.insert(w);
            path.push(w);
            if let Some(hole) = extend(g, path, next_on) {
                return Some(hole);
            }
            path.pop();
        }
        None
    }

    for start in 1..=g.n() {
        for second in g.neighbors(start).iter() {
            if second <= start {
                continue;
            }
            let mut path = vec![start, second];
            let on_path = VertexSet::from_labels([start, second]);
            if let Some(hole) = extend(g, &mut path, on_path) {
                return Some(canonical_cycle(&hole));
            }
        }
    }
    None
}

fn is_hole(g: &SimpleGraph, cycle: &[usize]) -> bool {
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

/// Rotate to the smallest vertex and orient toward its smaller neighbor.
fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(i, _)| i)
        .expect("cycle nonempty");
    let forward: Vec<usize> = (0..k).map(|i| cycle[(start + i) % k]).collect();
    let backward: Vec<usize> = (0..k).map(|i| cycle[(start + k - i) % k]).collect();
    if forward[1] <= backward[1] {
        forward
    } else {
        backward
    }
}
