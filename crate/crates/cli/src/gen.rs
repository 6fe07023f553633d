//! Seeded test-instance generator: a random bicluster graph perturbed by a
//! fixed number of random edge toggles. Reverting the toggles restores a
//! bicluster graph, so the toggle count is an upper bound on the minimum
//! editing size — an upper bound only, since fewer edits may also work.

use std::collections::BTreeSet;

use bicluster_core::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("instance needs at least one vertex")]
    NoVertices,

    #[error("budget {budget} exceeds the {max} distinct vertex pairs")]
    BudgetTooLarge { budget: usize, max: usize },
}

/// A generated instance and the number of planted toggles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    pub planted: usize,
}

/// Builds a random bicluster graph on `n` vertices (random biclique blocks
/// plus isolated vertices) and toggles `budget` distinct random pairs.
/// Output is fully determined by `(n, budget, seed)`.
pub fn generate(n: usize, budget: usize, seed: u64) -> Result<Generated, GenError> {
    if n == 0 {
        return Err(GenError::NoVertices);
    }
    let max = n * (n - 1) / 2;
    if budget > max {
        return Err(GenError::BudgetTooLarge { budget, max });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(&mut rng);

    let mut graph = Graph::new(n);
    let mut rest = vertices.as_slice();
    while !rest.is_empty() {
        let take = rng.random_range(1..=rest.len());
        let (block, tail) = rest.split_at(take);
        rest = tail;
        if block.len() >= 2 {
            // vertices are already shuffled, so a prefix split is a
            // uniform bipartition with both sides non-empty
            let split = rng.random_range(1..block.len());
            for &u in &block[..split] {
                for &v in &block[split..] {
                    graph.add_edge(u, v);
                }
            }
        }
    }

    let mut toggles: BTreeSet<(usize, usize)> = BTreeSet::new();
    while toggles.len() < budget {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            toggles.insert((u.min(v), u.max(v)));
        }
    }
    for &(u, v) in &toggles {
        graph.toggle_edge(u, v);
    }

    Ok(Generated {
        graph,
        planted: budget,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use bicluster_core::enumerate;

    #[test]
    fn zero_budget_yields_a_bicluster_graph() {
        for seed in 0..20 {
            let out = generate(12, 0, seed).unwrap();
            assert!(out.graph.is_bicluster(), "seed {seed}");
        }
    }

    #[test]
    fn fixed_seed_is_deterministic() {
        let a = generate(15, 6, 99).unwrap();
        let b = generate(15, 6, 99).unwrap();
        assert_eq!(a.graph, b.graph);
        let c = generate(15, 6, 100).unwrap();
        assert!(a.graph != c.graph || a.planted == c.planted);
    }

    #[test]
    fn planted_budget_bounds_the_minimum() {
        for seed in 0..10 {
            let out = generate(7, 3, seed).unwrap();
            let oracle = enumerate::minimum_editing_set(&out.graph).unwrap();
            assert!(oracle.len() <= out.planted, "seed {seed}");
        }
    }

    #[test]
    fn parameter_validation() {
        assert_eq!(generate(0, 0, 1), Err(GenError::NoVertices));
        assert_eq!(
            generate(3, 4, 1),
            Err(GenError::BudgetTooLarge { budget: 4, max: 3 })
        );
    }
}
