//! Vertex pairs and edit sets.
//!
//! An edit set is a set of unordered vertex pairs interpreted as edge
//! toggles: applying it to a graph removes the pairs that are present and
//! adds the ones that are absent.

use std::collections::BTreeSet;
use std::fmt;

/// An unordered pair of distinct vertices, stored with `u < v` so that set
/// membership is well-defined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPair {
    u: usize,
    v: usize,
}

impl VertexPair {
    /// Builds the canonical pair for two distinct vertices, in either order.
    ///
    /// Panics if `a == b`; a self-pair is never a valid edge toggle.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "a vertex pair needs two distinct vertices");
        if a < b {
            VertexPair { u: a, v: b }
        } else {
            VertexPair { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// Both endpoints as a `(u, v)` tuple with `u < v`.
    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl fmt::Display for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.u, self.v)
    }
}

/// A set of vertex pairs, the `F` operand of the graph symmetric difference.
///
/// Iteration order is always ascending in the canonical pair order, which
/// keeps every downstream listing deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EditSet {
    pairs: BTreeSet<VertexPair>,
}

impl EditSet {
    pub fn new() -> Self {
        EditSet::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = VertexPair>>(pairs: I) -> Self {
        EditSet {
            pairs: pairs.into_iter().collect(),
        }
    }

    /// Inserts a pair; returns false if it was already present.
    pub fn insert(&mut self, pair: VertexPair) -> bool {
        self.pairs.insert(pair)
    }

    pub fn contains(&self, pair: &VertexPair) -> bool {
        self.pairs.contains(pair)
    }

    /// Flips membership of `pair`: absent pairs are inserted, present ones
    /// removed. This is the "toggled an odd number of times" accumulator
    /// used when composing edits along a search path.
    pub fn toggle(&mut self, pair: VertexPair) {
        if !self.pairs.remove(&pair) {
            self.pairs.insert(pair);
        }
    }

    /// Pairs present in exactly one of the two sets.
    pub fn symmetric_difference(&self, other: &EditSet) -> EditSet {
        EditSet {
            pairs: self
                .pairs
                .symmetric_difference(&other.pairs)
                .copied()
                .collect(),
        }
    }

    /// True if every pair of `self` is also in `other`.
    pub fn is_subset(&self, other: &EditSet) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexPair> {
        self.pairs.iter()
    }
}

impl FromIterator<VertexPair> for EditSet {
    fn from_iter<I: IntoIterator<Item = VertexPair>>(iter: I) -> Self {
        EditSet::from_pairs(iter)
    }
}

impl<'a> IntoIterator for &'a EditSet {
    type Item = &'a VertexPair;
    type IntoIter = std::collections::btree_set::Iter<'a, VertexPair>;

    fn into_iter(self) -> Self::IntoIter {
        self.pairs.iter()
    }
}

impl fmt::Display for EditSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({},{})", p.u(), p.v())?;
        }
        write!(f, "}}")
    }
}
