//! Witnesses for the `recognize` subcommand: a graph fails to be a
//! bicluster graph exactly when it has an odd cycle (not bipartite) or an
//! induced path on four vertices. A triangle is reported preferentially
//! since it is the shortest certificate.

use std::fmt;

use bicluster_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Triangle(usize, usize, usize),
    OddCycle(Vec<usize>),
    InducedPath([usize; 4]),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Triangle(u, v, w) => write!(f, "TRIANGLE {u} {v} {w}"),
            Witness::OddCycle(cycle) => {
                write!(f, "ODD-CYCLE")?;
                for v in cycle {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            Witness::InducedPath([a, b, c, d]) => write!(f, "P4 {a} {b} {c} {d}"),
        }
    }
}

/// Returns a certificate that `g` is not a bicluster graph, or `None` if
/// it is one.
pub fn find_witness(g: &Graph) -> Option<Witness> {
    if let Some((u, v, w)) = g.find_triangle() {
        return Some(Witness::Triangle(u, v, w));
    }
    if let Some(cycle) = g.find_odd_cycle() {
        return Some(Witness::OddCycle(cycle));
    }
    if let Some(occ) = g.find_induced_p4() {
        let [a, b, c, d] = occ.vertices();
        return Some(Witness::InducedPath([a, b, c, d]));
    }
    debug_assert!(g.is_bicluster());
    None
}
