//! Squarefree monomials and monomial ideals.
//!
//! A squarefree monomial is its support set, so divisibility is inclusion,
//! lcm is union, and the colon quotient is set difference. A monomial ideal
//! is kept as its unique minimal generating set: an antichain under
//! divisibility in a fixed (degree, lex) order, which makes serialized
//! ideals byte-stable.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::covers::CoverCollection;
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::SimpleGraph;
use crate::hfamily::HFamilySpec;
use crate::vset::VertexSet;

/// A squarefree monomial over variables `1..=n`, stored as its support.
/// The empty support is the unit monomial `1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    support: VertexSet,
}

impl Monomial {
    pub const UNIT: Monomial = Monomial {
        support: VertexSet::EMPTY,
    };

    pub fn var(i: usize) -> Self {
        Monomial {
            support: VertexSet::singleton(i),
        }
    }

    pub fn from_support(support: VertexSet) -> Self {
        Monomial { support }
    }

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        Monomial {
            support: VertexSet::from_labels(labels),
        }
    }

    pub fn support(&self) -> VertexSet {
        self.support
    }

    pub fn degree(&self) -> usize {
        self.support.len()
    }

    pub fn is_unit(&self) -> bool {
        self.support.is_empty()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.support.is_subset_of(&other.support)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            support: self.support.union(&other.support),
        }
    }

    /// `self / gcd(self, other)`: what is left after dividing out the
    /// common part. This is the generator the colon ideal construction
    /// needs.
    pub fn colon_quotient(&self, other: &Monomial) -> Monomial {
        Monomial {
            support: self.support.difference(&other.support),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        for (i, v) in self.support.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "X{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monomial ideal in `n` variables, held as its minimal generating set in
/// (degree, lex) order. The zero ideal has no generators; the unit ideal has
/// the single generator `1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::UNIT],
        }
    }

    /// Builds an ideal from arbitrary generators: prunes divisible ones,
    /// deduplicates, and sorts canonically. Rejects supports outside
    /// `1..=n`.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(n: usize, gens: I) -> Result<Self> {
        if n > crate::vset::MAX_LABEL {
            return Err(Error::BadVertexCount { n });
        }
        let ambient = VertexSet::full(n);
        let mut supports = Vec::new();
        for g in gens {
            if let Some(v) = g.support().difference(&ambient).min_label() {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            supports.push(g.support());
        }
        let gens = exec::keep_minimal(supports)
            .into_iter()
            .map(Monomial::from_support)
            .collect();
        Ok(MonomialIdeal { n, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.gens.iter().map(Monomial::degree).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    /// Membership test: a monomial lies in the ideal iff some generator
    /// divides it.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Structural equality of minimal generating sets; ideals over
    /// different ambient rings do not compare.
    pub fn equal(&self, other: &MonomialIdeal) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self.gens == other.gens)
    }

    /// The colon ideal `(self : u)`, generated by `g / gcd(g, u)` over the
    /// generators, minimalized.
    pub fn colon(&self, u: &Monomial) -> MonomialIdeal {
        let supports = self
            .gens
            .iter()
            .map(|g| g.colon_quotient(u).support())
            .collect();
        MonomialIdeal {
            n: self.n,
            gens: exec::keep_minimal(supports)
                .into_iter()
                .map(Monomial::from_support)
                .collect(),
        }
    }

    /// `self ∩ other` by pairwise lcm of generators followed by pruning.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.n));
        }
        let mine: Vec<VertexSet> = self.gens.iter().map(|g| g.support()).collect();
        let products = exec::expand_all(&mine, other.gens.len(), |g, out| {
            for h in &other.gens {
                out.push(g.union(&h.support()));
            }
        });
        Ok(MonomialIdeal {
            n: self.n,
            gens: exec::keep_minimal(products)
                .into_iter()
                .map(Monomial::from_support)
                .collect(),
        })
    }

    /// Rendering like `(X2*X4*X6, X1*X4)`; the zero ideal prints `(0)`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        format!("({})", parts.join(", "))
    }
}

/// The edge ideal: one degree-2 generator per edge.
pub fn edge_ideal(g: &SimpleGraph) -> MonomialIdeal {
    let gens = g
        .edges()
        .into_iter()
        .map(|(u, v)| Monomial::from_labels([u, v]));
    MonomialIdeal::from_monomials(g.n(), gens).expect("edges lie in 1..=n")
}

/// The ideal of vertex covers built from an enumerated cover collection:
/// one generator per minimal cover.
pub fn cover_ideal_from_covers(covers: &CoverCollection, n: usize) -> Result<MonomialIdeal> {
    MonomialIdeal::from_monomials(n, covers.covers.iter().map(|c| Monomial::from_support(*c)))
}

/// The ideal of vertex covers as the intersection of the edge primes
/// `(X_u, X_v)`, folded pairwise with pruning after every edge. The
/// edgeless graph yields the unit ideal, the empty intersection.
pub fn cover_ideal_by_intersection(g: &SimpleGraph, cap: usize) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(g.n());
    for (u, v) in g.edges() {
        let prime = MonomialIdeal::from_monomials(g.n(), [Monomial::var(u), Monomial::var(v)])?;
        acc = acc.intersect(&prime)?;
        if acc.gens.len() > cap {
            return Err(Error::AntichainCap {
                size: acc.gens.len(),
                cap,
            });
        }
    }
    Ok(acc)
}

/// The ideal of vertex covers of a family graph straight from the closed
/// form.
pub fn closed_form_cover_ideal_h(spec: &HFamilySpec) -> Result<MonomialIdeal> {
    let supports = spec.closed_form_cover_supports()?;
    MonomialIdeal::from_monomials(spec.n, supports.into_iter().map(Monomial::from_support))
}
