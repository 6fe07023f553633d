//! Simple undirected graphs over vertices `0..n-1` and the structure
//! detection the editing algorithm branches on: triangles, induced paths on
//! four vertices, and the periphery/independent split around such a path.
//!
//! Adjacency is kept as one bitset row per vertex, so containment tests and
//! the detection scans reduce to word operations. All operations build new
//! values; nothing mutates a graph after construction except the explicit
//! `add_edge`/`toggle_edge` builders.

use std::ops::ControlFlow;

use crate::edit::{EditSet, VertexPair};
use crate::Error;

const WORD_BITS: usize = 64;

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// Iterates the set bit positions of a row, ascending.
fn set_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        std::iter::successors(if w == 0 { None } else { Some(w) }, |&rest| {
            let next = rest & (rest - 1);
            if next == 0 {
                None
            } else {
                Some(next)
            }
        })
        .map(move |w| wi * WORD_BITS + w.trailing_zeros() as usize)
    })
}

/// An undirected graph without self-loops, edges stored symmetrically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = word_count(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, out-of-range
    /// endpoints, and repeated pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// The path on `n` vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The complete bipartite graph with sides `0..left` and `left..left+right`.
    pub fn complete_bipartite(left: usize, right: usize) -> Self {
        let mut g = Graph::new(left + right);
        for u in 0..left {
            for v in left..left + right {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v);
        self.bits[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.bits[v * self.words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    /// Removes the edge if present, adds it otherwise.
    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v);
        self.bits[u * self.words + v / WORD_BITS] ^= 1 << (v % WORD_BITS);
        self.bits[v * self.words + u / WORD_BITS] ^= 1 << (u % WORD_BITS);
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.bits
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        set_bits(self.row(v))
    }

    /// All edges as canonical `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The graph with every pair of `f` toggled: pairs present in the graph
    /// are removed, absent ones added. Vertex count is unchanged.
    pub fn symmetric_difference(&self, f: &EditSet) -> Result<Graph, Error> {
        for pair in f {
            if pair.v() >= self.n {
                return Err(Error::VertexOutOfRange {
                    v: pair.v(),
                    n: self.n,
                });
            }
        }
        let mut g = self.clone();
        for pair in f {
            g.toggle_edge(pair.u(), pair.v());
        }
        Ok(g)
    }

    /// The subgraph induced by `s` (set semantics; duplicates collapse),
    /// together with the map from new vertex indices back to the originals.
    /// New indices follow the ascending order of the original vertices.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>), Error> {
        for &v in s {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        let mut map: Vec<usize> = s.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut g = Graph::new(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok((g, map))
    }

    /// Maximal connected vertex sets, each sorted ascending, ordered by
    /// their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            let mut comp = vec![root];
            seen[root] = true;
            let mut queue = vec![root];
            while let Some(u) = queue.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// True if the vertex set splits into two non-empty independent sides
    /// with every cross pair adjacent. Graphs on fewer than two vertices
    /// have no such split and are not bicliques.
    pub fn is_biclique(&self) -> bool {
        if self.n < 2 {
            return false;
        }
        // 2-color by BFS from vertex 0; a biclique is connected.
        let mut side = vec![None; self.n];
        side[0] = Some(false);
        let mut queue = vec![0];
        while let Some(u) = queue.pop() {
            let s = side[u].unwrap();
            for v in self.neighbors(u) {
                if side[v].is_none() {
                    side[v] = Some(!s);
                    queue.push(v);
                }
            }
        }
        let mut mask = [vec![0u64; self.words], vec![0u64; self.words]];
        for v in 0..self.n {
            match side[v] {
                None => return false, // disconnected
                Some(s) => mask[s as usize][v / WORD_BITS] |= 1 << (v % WORD_BITS),
            }
        }
        // Every vertex must miss its own side entirely and cover the other.
        for v in 0..self.n {
            let (own, other) = (
                &mask[side[v].unwrap() as usize],
                &mask[!side[v].unwrap() as usize],
            );
            let row = self.row(v);
            for w in 0..self.words {
                if row[w] & own[w] != 0 || row[w] & other[w] != other[w] {
                    return false;
                }
            }
        }
        true
    }

    /// True if every connected component with at least two vertices is a
    /// biclique; isolated vertices are always acceptable.
    pub fn is_bicluster(&self) -> bool {
        self.connected_components().into_iter().all(|comp| {
            comp.len() < 2
                || self
                    .induced_subgraph(&comp)
                    .expect("component vertices are in range")
                    .0
                    .is_biclique()
        })
    }

    /// Redundant recognizer used for cross-checks: a graph is a bicluster
    /// graph exactly when it is bipartite and has no induced path on four
    /// vertices.
    pub fn is_bicluster_by_characterization(&self) -> bool {
        self.find_odd_cycle().is_none() && self.find_induced_p4().is_none()
    }

    /// True if the graph is 2-colorable.
    pub fn is_bipartite(&self) -> bool {
        self.find_odd_cycle().is_none()
    }

    /// Returns an odd cycle as a vertex sequence (consecutive vertices
    /// adjacent, last adjacent to first), or `None` if the graph is
    /// bipartite.
    pub fn find_odd_cycle(&self) -> Option<Vec<usize>> {
        let mut depth = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if depth[v] == usize::MAX {
                        depth[v] = depth[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if (depth[u] ^ depth[v]) & 1 == 0 {
                        // Same-parity BFS levels joined by an edge: walking
                        // both endpoints up to their common ancestor closes
                        // an odd cycle.
                        let (mut a, mut b) = (u, v);
                        let mut up_a = vec![a];
                        let mut up_b = vec![b];
                        while depth[a] > depth[b] {
                            a = parent[a];
                            up_a.push(a);
                        }
                        while depth[b] > depth[a] {
                            b = parent[b];
                            up_b.push(b);
                        }
                        while a != b {
                            a = parent[a];
                            b = parent[b];
                            up_a.push(a);
                            up_b.push(b);
                        }
                        up_b.pop(); // drop the shared ancestor from one side
                        up_b.reverse();
                        up_a.extend(up_b);
                        return Some(up_a);
                    }
                }
            }
        }
        None
    }

    /// Lexicographically smallest triple `u < v < w` inducing a triangle.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for u in 0..self.n {
            let row_u = self.row(u);
            for v in set_bits(row_u).filter(|&v| v > u) {
                let row_v = self.row(v);
                // smallest common neighbor above v
                for w in (v / WORD_BITS)..self.words {
                    let mut common = row_u[w] & row_v[w];
                    if w == v / WORD_BITS {
                        common &= !(u64::MAX >> (WORD_BITS - 1 - v % WORD_BITS));
                    }
                    if common != 0 {
                        let wv = w * WORD_BITS + common.trailing_zeros() as usize;
                        return Some((u, v, wv));
                    }
                }
            }
        }
        None
    }

    /// True if the four vertices (in the given order) induce a path.
    pub fn is_induced_p4(&self, occ: &P4Occurrence) -> bool {
        let [a1, a2, a3, a4] = occ.vertices();
        if a1 >= self.n || a2 >= self.n || a3 >= self.n || a4 >= self.n {
            return false;
        }
        let distinct = a1 != a2 && a1 != a3 && a1 != a4 && a2 != a3 && a2 != a4 && a3 != a4;
        distinct
            && self.has_edge(a1, a2)
            && self.has_edge(a2, a3)
            && self.has_edge(a3, a4)
            && !self.has_edge(a1, a3)
            && !self.has_edge(a1, a4)
            && !self.has_edge(a2, a4)
    }

    /// Visits every induced path on four vertices, as ordered tuples with
    /// `a1 < a4` (each path once per orientation), in lexicographic tuple
    /// order. The callback can break to stop the scan early.
    pub(crate) fn for_each_induced_p4<F>(&self, mut f: F) -> ControlFlow<()>
    where
        F: FnMut(P4Occurrence) -> ControlFlow<()>,
    {
        let words = self.words;
        let mut cand3 = vec![0u64; words];
        let mut cand4 = vec![0u64; words];
        for a1 in 0..self.n {
            let row1 = self.row(a1);
            for a2 in set_bits(row1) {
                let row2 = self.row(a2);
                // a3: neighbors of a2 that miss a1 (and are not a1 itself)
                for w in 0..words {
                    cand3[w] = row2[w] & !row1[w];
                }
                cand3[a1 / WORD_BITS] &= !(1 << (a1 % WORD_BITS));
                for a3 in set_bits(&cand3) {
                    let row3 = self.row(a3);
                    // a4: neighbors of a3 missing both a1 and a2, above a1
                    for w in 0..words {
                        cand4[w] = row3[w] & !row2[w] & !row1[w];
                    }
                    for w in cand4.iter_mut().take(a1 / WORD_BITS) {
                        *w = 0;
                    }
                    cand4[a1 / WORD_BITS] &= !(u64::MAX >> (WORD_BITS - 1 - a1 % WORD_BITS));
                    cand4[a2 / WORD_BITS] &= !(1 << (a2 % WORD_BITS));
                    for a4 in set_bits(&cand4) {
                        f(P4Occurrence::new(a1, a2, a3, a4))?;
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// First induced path on four vertices under the lexicographic scan of
    /// ordered tuples with `a1 < a4`, or `None` if the graph is P4-free.
    pub fn find_induced_p4(&self) -> Option<P4Occurrence> {
        let mut found = None;
        let _ = self.for_each_induced_p4(|occ| {
            found = Some(occ);
            ControlFlow::Break(())
        });
        found
    }

    /// Splits the vertices outside an induced path `A` into the periphery
    /// `P(A)` (at least one neighbor on the path) and the independent part
    /// `I(A)` (no neighbor on the path). Both come back sorted.
    pub fn partition_periphery(
        &self,
        occ: &P4Occurrence,
    ) -> Result<(Vec<usize>, Vec<usize>), Error> {
        if !self.is_induced_p4(occ) {
            return Err(Error::NotAnInducedP4 {
                vertices: occ.vertices(),
            });
        }
        let mut in_a = vec![false; self.n];
        let mut touched = vec![0u64; self.words];
        for &v in &occ.vertices() {
            in_a[v] = true;
            for (w, t) in touched.iter_mut().enumerate() {
                *t |= self.row(v)[w];
            }
        }
        let mut periphery = Vec::new();
        let mut independent = Vec::new();
        for v in 0..self.n {
            if in_a[v] {
                continue;
            }
            if touched[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1 {
                periphery.push(v);
            } else {
                independent.push(v);
            }
        }
        Ok((periphery, independent))
    }
}

/// An ordered 4-tuple of distinct vertices inducing a path `a1-a2-a3-a4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct P4Occurrence {
    vertices: [usize; 4],
}

impl P4Occurrence {
    /// Records the ordered tuple; validity in a particular graph is checked
    /// by `Graph::is_induced_p4`.
    pub fn new(a1: usize, a2: usize, a3: usize, a4: usize) -> Self {
        assert!(
            a1 != a2 && a1 != a3 && a1 != a4 && a2 != a3 && a2 != a4 && a3 != a4,
            "a path occurrence needs four distinct vertices"
        );
        P4Occurrence {
            vertices: [a1, a2, a3, a4],
        }
    }

    pub fn vertices(&self) -> [usize; 4] {
        self.vertices
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

/// Convenience for building an edit set from raw endpoint pairs.
pub fn edit_set(pairs: &[(usize, usize)]) -> EditSet {
    pairs.iter().map(|&(u, v)| VertexPair::new(u, v)).collect()
}
