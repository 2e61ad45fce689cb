//! Linear-quotient certification and the Betti data it determines.
//!
//! An ordering of the minimal generators has linear quotients when every
//! colon ideal against the preceding generators is generated by single
//! variables. The per-step variable counts determine the length and ranks
//! of the minimal free resolution without computing differentials.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::vset::VertexSet;

/// Proof object for a linear-quotient ordering: the order itself (0-based
/// indices into the canonical generator list), the colon variables of every
/// step from the second generator on, their counts `q_values`, and the
/// maximum `q`. A principal ideal certifies trivially with `q = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientCertificate {
    pub order: Vec<usize>,
    #[serde(skip_serializing)]
    pub colon_vars: Vec<VertexSet>,
    pub q_values: Vec<usize>,
    pub q: usize,
}

/// Outcome of checking one ordering. Failure is a value: the 1-based
/// position of the first bad step and a colon generator of degree above 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientCheck {
    Certified(QuotientCertificate),
    Failed { position: usize, witness: Monomial },
}

impl QuotientCheck {
    pub fn certificate(self) -> Option<QuotientCertificate> {
        match self {
            QuotientCheck::Certified(c) => Some(c),
            QuotientCheck::Failed { .. } => None,
        }
    }
}

/// Outcome of searching for any linear-quotient ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(QuotientCertificate),
    Exhausted,
}

/// Default generator bound for the exhaustive ordering search.
pub const DEFAULT_SEARCH_BOUND: usize = 12;

/// Checks whether `order` (a permutation of generator indices) gives linear
/// quotients, producing either a certificate or the first failing step.
pub fn verify_linear_quotients(ideal: &MonomialIdeal, order: &[usize]) -> Result<QuotientCheck> {
    let gens = ideal.gens();
    let t = gens.len();
    if order.len() != t || {
        let mut seen = vec![false; t];
        order
            .iter()
            .any(|&i| i >= t || std::mem::replace(&mut seen[i], true))
    } {
        return Err(Error::NotAPermutation { gens: t });
    }

    let mut colon_vars = Vec::with_capacity(t.saturating_sub(1));
    let mut q_values = Vec::with_capacity(t.saturating_sub(1));
    for j in 1..t {
        match colon_step(gens, &order[..j], order[j]) {
            Ok(vars) => {
                q_values.push(vars.len());
                colon_vars.push(vars);
            }
            Err(witness) => {
                return Ok(QuotientCheck::Failed {
                    position: j + 1,
                    witness,
                });
            }
        }
    }
    let q = q_values.iter().copied().max().unwrap_or(0);
    Ok(QuotientCheck::Certified(QuotientCertificate {
        order: order.to_vec(),
        colon_vars,
        q_values,
        q,
    }))
}

/// Minimal generators of `(u_{order[0]}, ..) : (u_next)`; Ok carries the
/// variable set when all have degree 1, Err carries an offending generator.
fn colon_step(
    gens: &[Monomial],
    prior: &[usize],
    next: usize,
) -> std::result::Result<VertexSet, Monomial> {
    let u = &gens[next];
    let quotients = crate::exec::keep_minimal(
        prior
            .iter()
            .map(|&i| gens[i].colon_quotient(u).support())
            .collect(),
    );
    let mut vars = VertexSet::EMPTY;
    for q in &quotients {
        if q.len() != 1 {
            return Err(Monomial::from_support(*q));
        }
        vars = vars.union(q);
    }
    Ok(vars)
}

/// The family's explicit generator order for the given cover ideal, as
/// indices into its canonical generator list. The ideal must be the closed
/// form for `spec`.
pub fn h_family_order(
    spec: &crate::hfamily::HFamilySpec,
    ideal: &MonomialIdeal,
) -> Result<Vec<usize>> {
    let ordered = spec.linear_quotient_order_supports()?;
    if ordered.len() != ideal.gens().len() {
        return Err(Error::IdealMismatch);
    }
    ordered
        .into_iter()
        .map(|support| {
            ideal
                .gens()
                .iter()
                .position(|g| g.support() == support)
                .ok_or(Error::IdealMismatch)
        })
        .collect()
}

/// Backtracking search for any linear-quotient ordering, trying candidate
/// generators in index order so the first certificate found is the
/// lexicographically smallest ordering that works.
pub fn search_linear_quotients(ideal: &MonomialIdeal, bound: usize) -> Result<SearchOutcome> {
    let t = ideal.gens().len();
    if t > bound {
        return Err(Error::SearchBound { gens: t, bound });
    }
    if t <= 1 {
        let order: Vec<usize> = (0..t).collect();
        return Ok(SearchOutcome::Found(
            verify_linear_quotients(ideal, &order)?
                .certificate()
                .expect("at most one generator always certifies"),
        ));
    }

    fn extend(
        gens: &[Monomial],
        chosen: &mut Vec<usize>,
        used: &mut Vec<bool>,
        vars: &mut Vec<VertexSet>,
    ) -> bool {
        if chosen.len() == gens.len() {
            return true;
        }
        for cand in 0..gens.len() {
            if used[cand] {
                continue;
            }
            let step = if chosen.is_empty() {
                Ok(VertexSet::EMPTY)
            } else {
                colon_step(gens, chosen, cand)
            };
            if let Ok(v) = step {
                chosen.push(cand);
                used[cand] = true;
                if chosen.len() > 1 {
                    vars.push(v);
                }
                if extend(gens, chosen, used, vars) {
                    return true;
                }
                if chosen.len() > 1 {
                    vars.pop();
                }
                used[cand] = false;
                chosen.pop();
            }
        }
        false
    }

    let gens = ideal.gens();
    let mut chosen = Vec::with_capacity(t);
    let mut used = vec![false; t];
    let mut vars = Vec::with_capacity(t - 1);
    if extend(gens, &mut chosen, &mut used, &mut vars) {
        let q_values: Vec<usize> = vars.iter().map(|v| v.len()).collect();
        let q = q_values.iter().copied().max().unwrap_or(0);
        Ok(SearchOutcome::Found(QuotientCertificate {
            order: chosen,
            colon_vars: vars,
            q_values,
            q,
        }))
    } else {
        Ok(SearchOutcome::Exhausted)
    }
}

/// Total and graded Betti data of `R/I` for a linear-quotient ideal.
/// `betti[i]` is the rank at homological degree `i`; `shifts[i]` lists the
/// twists there, ordered by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionShape {
    pub betti: Vec<usize>,
    pub shifts: Vec<Vec<i64>>,
}

impl ResolutionShape {
    /// Length of the resolution (the projective dimension of `R/I`).
    pub fn length(&self) -> usize {
        self.betti.len() - 1
    }
}

/// Betti numbers from a certificate: each step with `q_j` colon variables
/// contributes binomially to the later ranks, and every contribution at
/// homological degree `i` twists the step's generator degree by `i - 1`.
/// `degrees` lists generator degrees in the ideal's canonical index order.
pub fn betti_from_certificate(cert: &QuotientCertificate, degrees: &[usize]) -> ResolutionShape {
    let t = cert.order.len();
    if t == 0 {
        return ResolutionShape {
            betti: vec![1],
            shifts: vec![vec![0]],
        };
    }
    // the first generator enters with no colon step, q = 0
    let q_by_position: Vec<usize> = std::iter::once(0)
        .chain(cert.q_values.iter().copied())
        .collect();
    let length = cert.q + 1;
    let mut betti = vec![0usize; length + 1];
    let mut shifts = vec![Vec::new(); length + 1];
    betti[0] = 1;
    shifts[0].push(0);
    for hom in 1..=length {
        for (pos, &gen_index) in cert.order.iter().enumerate() {
            let count = binomial(q_by_position[pos], hom - 1);
            betti[hom] += count;
            let twist = -((degrees[gen_index] + hom - 1) as i64);
            shifts[hom].extend(std::iter::repeat(twist).take(count));
        }
        shifts[hom].sort_unstable_by_key(|s| -s);
    }
    ResolutionShape { betti, shifts }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
