//! Data-parallel kernels with a sequential fallback.
//!
//! The hot loops of the crate are antichain reduction and per-element
//! expansion over antichains that can reach hundreds of thousands of sets.
//! With the `parallel` feature (on by default) large inputs run on rayon;
//! small inputs and `--no-default-features` builds take the sequential path.
//! Both paths produce identical, canonically ordered output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::vset::VertexSet;

/// Inputs below this size stay sequential even with `parallel` enabled;
/// fork-join overhead beats the win on antichains of a few thousand sets.
#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 4096;

/// Reduces a family of sets to its minimal elements (the antichain of
/// inclusion-minimal sets), deduplicated, in (cardinality, lex) order.
pub(crate) fn keep_minimal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable();
    sets.dedup();
    // sorted by size, so only strictly smaller prefixes can contain a subset
    let mut size_start = vec![0usize; sets.len()];
    let mut group_start = 0;
    for i in 0..sets.len() {
        if sets[i].len() != sets[group_start].len() {
            group_start = i;
        }
        size_start[i] = group_start;
    }
    let survives = |i: usize| -> bool {
        let limit = size_start[i];
        !sets[..limit].iter().any(|t| t.is_subset_of(&sets[i]))
    };

    #[cfg(feature = "parallel")]
    if sets.len() >= PAR_THRESHOLD {
        return (0..sets.len())
            .into_par_iter()
            .filter(|&i| survives(i))
            .map(|i| sets[i])
            .collect();
    }

    (0..sets.len())
        .filter(|&i| survives(i))
        .map(|i| sets[i])
        .collect()
}

/// Maps every set through `f`, flattening the expansions. Order of the
/// output is irrelevant to callers, which reduce it right away.
pub(crate) fn expand_all<F>(sets: &[VertexSet], arity: usize, f: F) -> Vec<VertexSet>
where
    F: Fn(&VertexSet, &mut Vec<VertexSet>) + Sync,
{
    #[cfg(feature = "parallel")]
    if sets.len() >= PAR_THRESHOLD {
        return sets
            .par_iter()
            .fold(Vec::new, |mut acc: Vec<VertexSet>, s| {
                f(s, &mut acc);
                acc
            })
            .reduce(Vec::new, |mut a, mut b| {
                a.append(&mut b);
                a
            });
    }

    let mut out = Vec::with_capacity(sets.len() * arity);
    for s in sets {
        f(s, &mut out);
    }
    out
}
