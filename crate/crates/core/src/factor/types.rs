use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph, Partition};
use crate::symmetry::Permutation;
use serde::Serialize;

/// Vertex-disjoint cycles covering every vertex; cycles are sorted by their
/// smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct TwoFactor {
    cycles: Vec<Cycle>,
}

impl TwoFactor {
    pub fn new(g: &Graph, mut cycles: Vec<Cycle>) -> Result<Self> {
        let n = g.order();
        let mut seen = vec![false; n];
        for c in &cycles {
            c.validate_in(g)?;
            for &v in c.vertices() {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidTwoFactor(format!(
                        "vertex {v} lies on two cycles"
                    )));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidTwoFactor(format!("vertex {v} is uncovered")));
        }
        cycles.sort_unstable_by_key(|c| c.vertices()[0]);
        Ok(TwoFactor { cycles })
    }

    /// Builds cycles from raw vertex sequences and validates them.
    pub fn from_sequences(g: &Graph, seqs: Vec<Vec<usize>>) -> Result<Self> {
        let cycles = seqs.into_iter().map(Cycle::new).collect::<Result<Vec<_>>>()?;
        TwoFactor::new(g, cycles)
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Cycle::len).collect()
    }

    /// `(length, count)` when all cycles share one odd length and their
    /// number is odd.
    pub fn uniform_odd_shape(&self) -> Option<(usize, usize)> {
        let l = self.cycles.first()?.len();
        let c = self.cycles.len();
        (l % 2 == 1 && c % 2 == 1 && self.cycles.iter().all(|x| x.len() == l)).then_some((l, c))
    }

    /// The cycles' vertex sets as a partition (canonical block order).
    pub fn partition(&self) -> Partition {
        let n = self.cycles.iter().map(Cycle::len).sum();
        Partition::new(n, self.cycles.iter().map(|c| c.vertices().to_vec()))
            .expect("cycles are disjoint and covering")
    }
}

/// How a uniform odd 2-factor was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FactorRoute {
    /// The graph is itself a disjoint union of equal odd cycles.
    TwoRegular,
    /// Complete graph: the identity-order Hamilton cycle.
    Complete,
    /// One cycle per orbit of the automorphism; `steps[i]` is the orbit step
    /// that traced orbit `i`, or `None` when a general search was needed.
    OrbitCycles {
        automorphism: Permutation,
        steps: Vec<Option<usize>>,
    },
    /// One spanning cycle per group of orbits (indices into the orbit list).
    GroupedOrbits {
        automorphism: Permutation,
        groups: Vec<Vec<usize>>,
    },
    /// One cycle through a single vertex of every orbit, and its images under
    /// the powers of the automorphism.
    Transversal { automorphism: Permutation },
    /// A Hamilton cycle of the whole graph found from the automorphism's
    /// grouping fallback.
    WholeGraph { automorphism: Permutation },
    /// Exhaustive search over equal-length cycle covers.
    DirectSearch,
}

impl FactorRoute {
    pub fn name(&self) -> &'static str {
        match self {
            FactorRoute::TwoRegular => "two_regular",
            FactorRoute::Complete => "complete",
            FactorRoute::OrbitCycles { .. } => "orbit_cycles",
            FactorRoute::GroupedOrbits { .. } => "grouped_orbits",
            FactorRoute::Transversal { .. } => "transversal",
            FactorRoute::WholeGraph { .. } => "whole_graph",
            FactorRoute::DirectSearch => "direct_search",
        }
    }
}

/// A 2-factor with an odd number of cycles, all of the same odd length,
/// together with how it was found and any notes on departures from the
/// orbit construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniformOddCertificate {
    pub factor: TwoFactor,
    pub cycle_length: usize,
    pub cycle_count: usize,
    pub route: FactorRoute,
    pub notes: Vec<String>,
}

impl UniformOddCertificate {
    pub fn new(factor: TwoFactor, route: FactorRoute, notes: Vec<String>) -> Result<Self> {
        let (cycle_length, cycle_count) = factor.uniform_odd_shape().ok_or_else(|| {
            Error::InvalidTwoFactor(format!(
                "cycle lengths {:?} are not an odd number of equal odd lengths",
                factor.cycle_lengths()
            ))
        })?;
        Ok(UniformOddCertificate {
            factor,
            cycle_length,
            cycle_count,
            route,
            notes,
        })
    }

    /// Re-checks every certificate invariant against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let again = TwoFactor::new(g, self.factor.cycles().to_vec())?;
        let shape = again.uniform_odd_shape();
        if shape != Some((self.cycle_length, self.cycle_count))
            || self.cycle_length * self.cycle_count != g.order()
        {
            return Err(Error::InvalidTwoFactor(format!(
                "claimed {} cycles of length {}, factor has lengths {:?}",
                self.cycle_count,
                self.cycle_length,
                again.cycle_lengths()
            )));
        }
        Ok(())
    }
}
