//! Fixed-width sets of 1-based vertex/variable labels.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A set of labels from `1..=128`, backed by a `u128` bit mask.
///
/// Label `v` occupies bit `v - 1`. The same type carries graph vertex sets,
/// vertex covers, and squarefree monomial supports; vertices and variables
/// share labels throughout the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u128);

/// Largest label a `VertexSet` can hold.
pub const MAX_LABEL: usize = 128;

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    /// The full set `{1..=n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_LABEL, "label {n} exceeds {MAX_LABEL}");
        if n == 0 {
            Self::EMPTY
        } else {
            VertexSet(u128::MAX >> (MAX_LABEL - n))
        }
    }

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        let mut s = Self::EMPTY;
        for v in labels {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v >= 1 && v <= MAX_LABEL, "label {v} out of 1..={MAX_LABEL}");
        self.0 |= 1u128 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v >= 1 && v <= MAX_LABEL, "label {v} out of 1..={MAX_LABEL}");
        self.0 &= !(1u128 << (v - 1));
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= MAX_LABEL && self.0 & (1u128 << (v - 1)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, other: &Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(&self, other: &Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(&self, other: &Self) -> bool {
        self.0 != other.0 && self.is_subset_of(other)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest label, if any.
    pub fn min_label(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Labels in ascending order.
    pub fn iter(&self) -> Iter {
        Iter(self.0)
    }

    pub fn labels(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize + 1;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_labels(iter)
    }
}

/// Total order by (cardinality, lexicographic on the ascending label list).
///
/// For equal cardinalities neither set is a prefix of the other, so the
/// owner of the lowest differing bit is the lexicographically smaller set.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = VertexSet;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of labels in 1..=128")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<VertexSet, A::Error> {
                let mut s = VertexSet::EMPTY;
                while let Some(v) = seq.next_element::<usize>()? {
                    if v < 1 || v > MAX_LABEL {
                        return Err(serde::de::Error::custom(format!(
                            "label {v} out of 1..={MAX_LABEL}"
                        )));
                    }
                    s.insert(v);
                }
                Ok(s)
            }
        }
        deserializer.deserialize_seq(V)
    }
}
