//! Case analysis for the search tree's branching rules.
//!
//! Rules B2 and B3 branch over the minimal editing sets of a six-vertex
//! subgraph built from an induced path `a1-a2-a3-a4` plus two attached
//! vertices. Up to the attachment pattern there are finitely many such
//! subgraphs: the first attached vertex `p` ranges over the 15 non-empty
//! neighbor subsets of the path, and the second ranges over the subsets of
//! path-plus-`p` that still touch the path (rule B2, 30 choices) or over
//! the single pattern "adjacent to `p` only" (rule B3). This module
//! materializes every configuration, computes its branching vector from
//! the minimal-family sizes, solves the characteristic equation for the
//! branching number, and reports the maximum over all cases.

use std::fmt;

use crate::enumerate;
use crate::graph::Graph;
use crate::Error;

/// Largest branching number the analysis is expected to certify.
pub const BRANCHING_NUMBER_BOUND: f64 = 3.116;

/// Slack added to the bound before comparing, since the bound is a rounded
/// three-decimal figure.
pub const BOUND_SLACK: f64 = 1e-6;

/// Absolute tolerance of the root computation.
pub const ROOT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BranchRule {
    B1,
    B2,
    B3,
}

impl fmt::Display for BranchRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchRule::B1 => write!(f, "B1"),
            BranchRule::B2 => write!(f, "B2"),
            BranchRule::B3 => write!(f, "B3"),
        }
    }
}

/// A neighbor configuration of one or two vertices attached to a fixed
/// induced path. Bits 0..=3 of a mask stand for the path vertices
/// `a1..a4`; bit 4 of `second_neighbors` stands for `p` itself.
///
/// Invariants: `p_neighbors` is non-empty (that is what makes `p` a
/// periphery vertex). For B2 the second vertex touches the path; for B3 it
/// is adjacent to `p` only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BranchCase {
    pub rule: BranchRule,
    pub p_neighbors: u8,
    pub second_neighbors: u8,
}

const PATH_MASK: u8 = 0b0000_1111;
const P_BIT: u8 = 0b0001_0000;

/// All 450 rule-B2 configurations: 15 non-empty path subsets for `p` times
/// 30 subsets of path-plus-`p` that meet the path, in ascending mask order.
pub fn enumerate_b2_cases() -> Vec<BranchCase> {
    let mut cases = Vec::with_capacity(450);
    for p_neighbors in 1..=PATH_MASK {
        for second_neighbors in 0..=(PATH_MASK | P_BIT) {
            if second_neighbors & PATH_MASK == 0 {
                continue;
            }
            cases.push(BranchCase {
                rule: BranchRule::B2,
                p_neighbors,
                second_neighbors,
            });
        }
    }
    cases
}

/// All 15 rule-B3 configurations: the attached vertex `i` is adjacent to
/// `p` only, so only `p`'s path neighbors vary.
pub fn enumerate_b3_cases() -> Vec<BranchCase> {
    (1..=PATH_MASK)
        .map(|p_neighbors| BranchCase {
            rule: BranchRule::B3,
            p_neighbors,
            second_neighbors: P_BIT,
        })
        .collect()
}

/// Materializes a configuration as a six-vertex graph: vertices 0..=3 are
/// the path, 4 is `p`, 5 is the second vertex.
pub fn case_to_graph(case: &BranchCase) -> Graph {
    let mut g = Graph::new(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    for j in 0..4 {
        if case.p_neighbors >> j & 1 == 1 {
            g.add_edge(4, j);
        }
        if case.second_neighbors >> j & 1 == 1 {
            g.add_edge(5, j);
        }
    }
    if case.second_neighbors & P_BIT != 0 {
        g.add_edge(5, 4);
    }
    g
}

/// The configuration obtained by reversing the path (`a1↔a4`, `a2↔a3`).
/// Reversal is a graph isomorphism, so mirrored cases share a vector.
pub fn mirrored(case: &BranchCase) -> BranchCase {
    fn reverse_path_bits(mask: u8) -> u8 {
        (mask & 1) << 3 | (mask & 2) << 1 | (mask & 4) >> 1 | (mask & 8) >> 3
    }
    BranchCase {
        rule: case.rule,
        p_neighbors: reverse_path_bits(case.p_neighbors),
        second_neighbors: reverse_path_bits(case.second_neighbors & PATH_MASK)
            | (case.second_neighbors & P_BIT),
    }
}

/// Budget decrements of one branching step: the sizes of the minimal
/// editing sets the rule recurses over. Entries ascend and are at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingVector {
    decrements: Vec<u32>,
}

impl BranchingVector {
    pub fn new(mut decrements: Vec<u32>) -> Result<Self, Error> {
        if decrements.is_empty() {
            return Err(Error::EmptyBranchingVector);
        }
        assert!(
            decrements.iter().all(|&d| d >= 1),
            "budget decrements must be positive"
        );
        decrements.sort_unstable();
        Ok(BranchingVector { decrements })
    }

    pub fn decrements(&self) -> &[u32] {
        &self.decrements
    }

    /// `Σ x^(-dᵢ)` — strictly decreasing in `x`, equal to 1 at the
    /// branching number.
    pub fn characteristic_sum(&self, x: f64) -> f64 {
        self.decrements.iter().map(|&d| x.powi(-(d as i32))).sum()
    }

    /// The unique root `x ≥ 1` of the characteristic equation, found by
    /// bisection on `[1, 1 + len]`. Single-entry vectors have root exactly
    /// 1; the bisection runs well below `ROOT_TOLERANCE`.
    pub fn branching_number(&self) -> f64 {
        if self.decrements.len() == 1 {
            return 1.0;
        }
        let mut lo = 1.0f64;
        let mut hi = 1.0 + self.decrements.len() as f64;
        for _ in 0..200 {
            if hi - lo <= 1e-12 {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if self.characteristic_sum(mid) > 1.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

impl fmt::Display for BranchingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.decrements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Branching vector of one configuration, computed from the minimal
/// editing sets of its case graph.
pub fn branching_vector_of(case: &BranchCase) -> BranchingVector {
    let family = enumerate::minimal_editing_sets(&case_to_graph(case))
        .expect("case graphs have six vertices");
    BranchingVector::new(family.members.iter().map(|m| m.len() as u32).collect())
        .expect("case graphs contain an induced path, so the family is never {∅}")
}

/// One evaluated case. `case` is `None` for the fixed rule-B1 entry.
#[derive(Clone, Debug)]
pub struct CaseResult {
    pub id: usize,
    pub rule: BranchRule,
    pub case: Option<BranchCase>,
    pub vector: BranchingVector,
    pub number: f64,
}

/// The full analysis: per-case vectors and numbers plus the maximum.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub results: Vec<CaseResult>,
    pub max_number: f64,
    /// Every case attaining the maximum (mirror pairs tie exactly).
    pub max_ids: Vec<usize>,
}

impl AnalysisReport {
    /// True when every evaluated case stays within the certified bound.
    pub fn verified(&self) -> bool {
        self.max_number <= BRANCHING_NUMBER_BOUND + BOUND_SLACK
    }

    pub fn result_by_id(&self, id: usize) -> Option<&CaseResult> {
        self.results.iter().find(|r| r.id == id)
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.case {
                None => writeln!(
                    f,
                    "{} {} pmask=- qmask=- vector={} number={:.6}",
                    r.rule, r.id, r.vector, r.number
                )?,
                Some(c) => writeln!(
                    f,
                    "{} {} pmask={} qmask={} vector={} number={:.6}",
                    r.rule, r.id, c.p_neighbors, c.second_neighbors, r.vector, r.number
                )?,
            }
        }
        write!(
            f,
            "MAX {:.6} CASE {}",
            self.max_number,
            self.max_ids.first().copied().unwrap_or(0)
        )
    }
}

/// Case ids are stable across filters: 0 is the rule-B1 entry, 1..=450 the
/// B2 configurations in enumeration order, 451..=465 the B3 ones.
const B3_ID_OFFSET: usize = 451;

/// Evaluates every configuration (optionally restricted to one rule, and
/// optionally with one case per mirror pair) and reports all branching
/// vectors and numbers together with the maximum.
pub fn verify_all(rule: Option<BranchRule>, mirror_reduce: bool) -> AnalysisReport {
    let wants = |r: BranchRule| rule.is_none() || rule == Some(r);
    let mut results = Vec::new();

    if wants(BranchRule::B1) {
        // deleting any one of a triangle's three edges: vector (1,1,1)
        let vector = BranchingVector::new(vec![1, 1, 1]).expect("non-empty");
        let number = vector.branching_number();
        results.push(CaseResult {
            id: 0,
            rule: BranchRule::B1,
            case: None,
            vector,
            number,
        });
    }

    let push_case = |results: &mut Vec<CaseResult>, id: usize, case: BranchCase| {
        if mirror_reduce {
            let m = mirrored(&case);
            let key = (case.p_neighbors, case.second_neighbors);
            if (m.p_neighbors, m.second_neighbors) < key {
                return;
            }
        }
        let vector = branching_vector_of(&case);
        let number = vector.branching_number();
        results.push(CaseResult {
            id,
            rule: case.rule,
            case: Some(case),
            vector,
            number,
        });
    };

    if wants(BranchRule::B2) {
        for (i, case) in enumerate_b2_cases().into_iter().enumerate() {
            push_case(&mut results, 1 + i, case);
        }
    }
    if wants(BranchRule::B3) {
        for (i, case) in enumerate_b3_cases().into_iter().enumerate() {
            push_case(&mut results, B3_ID_OFFSET + i, case);
        }
    }

    let max_number = results.iter().map(|r| r.number).fold(f64::MIN, f64::max);
    let max_ids = results
        .iter()
        .filter(|r| r.number == max_number)
        .map(|r| r.id)
        .collect();
    AnalysisReport {
        results,
        max_number,
        max_ids,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The configuration with the largest branching number: p adjacent to
    /// the first path vertex, the second vertex adjacent to the second
    /// path vertex, and the two not adjacent to each other.
    fn worst_case() -> BranchCase {
        BranchCase {
            rule: BranchRule::B2,
            p_neighbors: 0b0001,
            second_neighbors: 0b0010,
        }
    }

    #[test]
    fn b2_enumeration_counts() {
        let cases = enumerate_b2_cases();
        assert_eq!(cases.len(), 450);
        assert!(cases.contains(&worst_case()));
        // all distinct
        let mut masks: Vec<(u8, u8)> = cases
            .iter()
            .map(|c| (c.p_neighbors, c.second_neighbors))
            .collect();
        masks.dedup();
        assert_eq!(masks.len(), 450);
    }

    #[test]
    fn b3_enumeration_counts() {
        let cases = enumerate_b3_cases();
        assert_eq!(cases.len(), 15);
        for case in &cases {
            let g = case_to_graph(case);
            assert_eq!(g.degree(5), 1, "i is adjacent to p only");
            assert!(g.has_edge(4, 5));
            let dp = g.degree(4);
            assert!((2..=5).contains(&dp), "p touches the path and i");
        }
    }

    #[test]
    fn case_graphs_keep_the_path_induced() {
        for case in enumerate_b2_cases().iter().chain(&enumerate_b3_cases()) {
            let g = case_to_graph(case);
            assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(2, 3));
            assert!(!g.has_edge(0, 2) && !g.has_edge(0, 3) && !g.has_edge(1, 3));
        }
    }

    #[test]
    fn worst_case_graph_has_five_edges() {
        let g = case_to_graph(&worst_case());
        assert_eq!(g.edges(), vec![(0, 1), (0, 4), (1, 2), (1, 5), (2, 3)]);
    }

    #[test]
    fn b3_full_attachment_graph_has_eight_edges() {
        let case = BranchCase {
            rule: BranchRule::B3,
            p_neighbors: 0b1111,
            second_neighbors: P_BIT,
        };
        assert_eq!(case_to_graph(&case).edge_count(), 8);
    }

    #[test]
    fn worst_case_vector_is_the_known_one() {
        let vector = branching_vector_of(&worst_case());
        assert_eq!(
            vector.decrements(),
            &[2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 4]
        );
        let x = vector.branching_number();
        assert!(
            x > 3.115 && x <= BRANCHING_NUMBER_BOUND + BOUND_SLACK,
            "{x}"
        );
    }

    #[test]
    fn branching_number_anchors() {
        let triple = BranchingVector::new(vec![1, 1, 1]).unwrap();
        assert!((triple.branching_number() - 3.0).abs() < ROOT_TOLERANCE);
        let single = BranchingVector::new(vec![1]).unwrap();
        assert_eq!(single.branching_number(), 1.0);
        let deep = BranchingVector::new(vec![7]).unwrap();
        assert_eq!(deep.branching_number(), 1.0);
        assert!(matches!(
            BranchingVector::new(vec![]),
            Err(Error::EmptyBranchingVector)
        ));
    }

    #[test]
    fn roots_satisfy_the_characteristic_equation() {
        let report = verify_all(None, false);
        for r in &report.results {
            if r.vector.decrements().len() == 1 {
                continue; // root exactly 1, sum is x^(-d) = 1 as well
            }
            let residual = (r.vector.characteristic_sum(r.number) - 1.0).abs();
            assert!(residual < ROOT_TOLERANCE, "case {}: {residual}", r.id);
        }
    }

    #[test]
    fn shrinking_a_decrement_never_lowers_the_root() {
        let samples: Vec<Vec<u32>> = vec![
            vec![1, 2],
            vec![2, 2, 3],
            vec![2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 4],
            vec![3, 4, 5],
            vec![1, 1, 4, 4],
        ];
        for sample in samples {
            let base = BranchingVector::new(sample.clone())
                .unwrap()
                .branching_number();
            for i in 0..sample.len() {
                if sample[i] <= 1 {
                    continue;
                }
                let mut shrunk = sample.clone();
                shrunk[i] -= 1;
                let x = BranchingVector::new(shrunk).unwrap().branching_number();
                assert!(x >= base - 1e-12);
            }
        }
    }

    #[test]
    fn mirror_cases_share_vectors() {
        for case in enumerate_b2_cases() {
            let twin = mirrored(&case);
            assert_eq!(
                branching_vector_of(&case),
                branching_vector_of(&twin),
                "case {case:?}"
            );
        }
    }

    #[test]
    fn full_report_is_verified_and_peaks_at_the_known_case() {
        let report = verify_all(None, false);
        assert_eq!(report.results.len(), 1 + 450 + 15);
        assert!(report.verified());
        assert!(report.max_number > 3.0);

        // the maximum is attained at the known worst configuration
        let worst = worst_case();
        let hit = report
            .max_ids
            .iter()
            .filter_map(|&id| report.result_by_id(id))
            .any(|r| r.case.as_ref() == Some(&worst));
        assert!(hit, "worst configuration missing from {:?}", report.max_ids);

        // rule B1's fixed entry
        let b1 = report.result_by_id(0).unwrap();
        assert_eq!(b1.vector.decrements(), &[1, 1, 1]);
        assert!((b1.number - 3.0).abs() < ROOT_TOLERANCE);
    }

    #[test]
    fn mirror_reduction_keeps_the_maximum() {
        let full = verify_all(None, false);
        let reduced = verify_all(None, true);
        assert!(reduced.results.len() < full.results.len());
        assert_eq!(reduced.max_number, full.max_number);
    }

    #[test]
    fn rule_filters_restrict_the_report() {
        let b1 = verify_all(Some(BranchRule::B1), false);
        assert_eq!(b1.results.len(), 1);
        assert!((b1.max_number - 3.0).abs() < ROOT_TOLERANCE);

        let b3 = verify_all(Some(BranchRule::B3), false);
        assert_eq!(b3.results.len(), 15);
        assert!(b3.verified());
    }
}
