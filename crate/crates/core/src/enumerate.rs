//! Exhaustive editing-set machinery for small graphs.
//!
//! Two operations live here: enumerating every inclusion-minimal editing set
//! of a graph (the family the branching rules recurse over) and computing a
//! minimum-size editing set by brute force (the solver's base case and the
//! independent oracle in the test suites).
//!
//! Candidate edit sets are subsets of the `n(n-1)/2` vertex pairs, encoded
//! as bitmasks. Subsets are scanned in increasing size and, within a size,
//! in lexicographic order of the canonical pair list, so the minimality
//! filter is a plain superset test against previously kept members and all
//! reported orders are deterministic.

use itertools::Itertools;

use crate::edit::{EditSet, VertexPair};
use crate::graph::Graph;
use crate::Error;

/// Largest vertex count the default family enumeration accepts. The search
/// tree only ever asks for six-vertex subgraphs.
pub const DEFAULT_FAMILY_BOUND: usize = 6;

/// Largest vertex count the default minimum computation accepts. The base
/// case needs five; the extra slack exists for oracle use in tests.
pub const DEFAULT_MINIMUM_BOUND: usize = 8;

/// Hard cap: pair masks are stored in a `u64`, so 11 vertices (55 pairs) is
/// the most the scan can represent. Enumeration above that would be
/// astronomically slow anyway.
const MAX_ENUMERABLE: usize = 11;

/// All inclusion-minimal editing sets of one graph.
///
/// Members are listed by size, then lexicographically on their canonical
/// pair sequences. Every member turns the graph into a bicluster graph, no
/// member contains another, and every editing set of the graph contains
/// some member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalEditFamily {
    pub graph_size: usize,
    pub members: Vec<EditSet>,
}

impl MinimalEditFamily {
    /// Member sizes in listing order (ascending by construction).
    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(EditSet::len).collect()
    }
}

/// Canonical pair list for `n` vertices: `(0,1), (0,2), ..., (n-2,n-1)`.
pub(crate) fn canonical_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Edge set of `g` as a bitmask over the canonical pair list.
pub(crate) fn graph_mask(g: &Graph, pairs: &[(usize, usize)]) -> u64 {
    pairs
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| g.has_edge(u, v))
        .fold(0u64, |acc, (i, _)| acc | 1 << i)
}

/// Rebuilds per-vertex adjacency masks from a pair bitmask.
fn adjacency_from_mask(pairs: &[(usize, usize)], mask: u64, adj: &mut [u16; 16]) {
    adj.fill(0);
    let mut m = mask;
    while m != 0 {
        let (u, v) = pairs[m.trailing_zeros() as usize];
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        m &= m - 1;
    }
}

/// Bicluster test on a mask-encoded graph: every component of two or more
/// vertices must split into two non-empty independent sides with all cross
/// pairs adjacent.
fn small_is_bicluster(n: usize, adj: &[u16; 16]) -> bool {
    debug_assert!(n <= MAX_ENUMERABLE);
    let mut unvisited: u16 = if n == 0 { 0 } else { (1u16 << n) - 1 };
    while unvisited != 0 {
        let root = unvisited.trailing_zeros() as usize;
        let mut side = [0u16; 2];
        let mut comp = 1u16 << root;
        let mut frontier = comp;
        let mut parity = 0usize;
        while frontier != 0 {
            side[parity] |= frontier;
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                next |= adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = next & !comp;
            comp |= frontier;
            parity ^= 1;
        }
        unvisited &= !comp;
        if comp.count_ones() <= 1 {
            continue;
        }
        let mut c = comp;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            let own = if side[0] >> v & 1 == 1 {
                side[0]
            } else {
                side[1]
            };
            let other = (side[0] | side[1]) & !own;
            if adj[v] & own != 0 || adj[v] & other != other {
                return false;
            }
            c &= c - 1;
        }
    }
    true
}

fn mask_to_edit_set(pairs: &[(usize, usize)], mask: u64) -> EditSet {
    let mut m = mask;
    let mut set = EditSet::new();
    while m != 0 {
        let (u, v) = pairs[m.trailing_zeros() as usize];
        set.insert(VertexPair::new(u, v));
        m &= m - 1;
    }
    set
}

fn check_bound(n: usize, bound: usize) -> Result<(), Error> {
    assert!(
        bound <= MAX_ENUMERABLE,
        "enumeration bound {bound} exceeds the representable maximum {MAX_ENUMERABLE}"
    );
    if n > bound {
        return Err(Error::EnumerationBound { n, bound });
    }
    Ok(())
}

/// Every inclusion-minimal editing set of `g`, under the default size bound.
pub fn minimal_editing_sets(g: &Graph) -> Result<MinimalEditFamily, Error> {
    minimal_editing_sets_with_bound(g, DEFAULT_FAMILY_BOUND)
}

/// Every inclusion-minimal editing set of `g`; rejects graphs larger than
/// `bound` to guard against the `2^(n(n-1)/2)` blow-up.
pub fn minimal_editing_sets_with_bound(
    g: &Graph,
    bound: usize,
) -> Result<MinimalEditFamily, Error> {
    let n = g.n();
    check_bound(n, bound)?;
    let pairs = canonical_pairs(n);
    let m = pairs.len();
    let base = graph_mask(g, &pairs);
    let mut adj = [0u16; 16];
    let mut kept: Vec<u64> = Vec::new();
    for size in 0..=m {
        for combo in (0..m).combinations(size) {
            let f = combo.iter().fold(0u64, |acc, &i| acc | 1 << i);
            // a candidate containing an already-kept member is not minimal
            if kept.iter().any(|&k| k & !f == 0) {
                continue;
            }
            adjacency_from_mask(&pairs, base ^ f, &mut adj);
            if small_is_bicluster(n, &adj) {
                kept.push(f);
            }
        }
    }
    Ok(MinimalEditFamily {
        graph_size: n,
        members: kept
            .into_iter()
            .map(|mask| mask_to_edit_set(&pairs, mask))
            .collect(),
    })
}

/// A minimum-size editing set of `g`, under the default size bound.
pub fn minimum_editing_set(g: &Graph) -> Result<EditSet, Error> {
    minimum_editing_set_with_bound(g, DEFAULT_MINIMUM_BOUND)
}

/// A minimum-size editing set of `g` by exhaustive scan in increasing
/// subset size; ties break to the lexicographically smallest canonical
/// encoding. Deleting every edge is always an editing set, so the scan
/// terminates.
pub fn minimum_editing_set_with_bound(g: &Graph, bound: usize) -> Result<EditSet, Error> {
    let n = g.n();
    check_bound(n, bound)?;
    let pairs = canonical_pairs(n);
    let m = pairs.len();
    let base = graph_mask(g, &pairs);
    let mut adj = [0u16; 16];
    for size in 0..=m {
        for combo in (0..m).combinations(size) {
            let f = combo.iter().fold(0u64, |acc, &i| acc | 1 << i);
            adjacency_from_mask(&pairs, base ^ f, &mut adj);
            if small_is_bicluster(n, &adj) {
                return Ok(mask_to_edit_set(&pairs, f));
            }
        }
    }
    unreachable!("deleting all edges is an editing set");
}
