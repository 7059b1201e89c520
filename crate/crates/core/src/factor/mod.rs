//! Uniform odd 2-factors: spanning sets of an odd number of disjoint cycles
//! that all share one odd length.

mod cover;
mod enumerate;
mod orbits;
mod types;

pub use enumerate::{enumerate_two_factors, two_factors, TWO_FACTOR_ORACLE_BOUND};
pub use orbits::{grouped_orbit_factor, orbit_cycle_factor};
pub use types::{FactorRoute, TwoFactor, UniformOddCertificate};

use crate::budget::{Budget, Search};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry::{
    is_vertex_transitive_with, odd_cycle_lengths, uniform_automorphisms_of_length, Permutation,
    SymmetryConfig,
};
use orbits::{grouped_factor, orbit_factor, OrbitMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorConfig {
    /// Uniform automorphisms tried per cycle length.
    pub candidates_per_length: usize,
    /// Search nodes spent looking for automorphisms of each cycle length.
    pub candidate_work: Option<u64>,
    /// Budget for each exact search inside an orbit or group of orbits.
    pub group_budget_ms: Option<u64>,
    pub symmetry: SymmetryConfig,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            candidates_per_length: 16,
            candidate_work: Some(200_000),
            group_budget_ms: Some(2000),
            symmetry: SymmetryConfig::default(),
        }
    }
}

/// Outcome of a factor search with notes on what was tried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorAttempt {
    pub outcome: Search<UniformOddCertificate>,
    pub notes: Vec<String>,
}

impl FactorAttempt {
    pub(crate) fn found(cert: UniformOddCertificate) -> Self {
        FactorAttempt {
            notes: cert.notes.clone(),
            outcome: Search::Found(cert),
        }
    }

    pub(crate) fn absent(notes: Vec<String>) -> Self {
        FactorAttempt {
            outcome: Search::Absent,
            notes,
        }
    }

    pub(crate) fn unknown(notes: Vec<String>) -> Self {
        FactorAttempt {
            outcome: Search::Unknown,
            notes,
        }
    }
}

/// Searches a connected vertex-transitive graph of odd order for a uniform
/// odd 2-factor.
///
/// Uniform automorphisms are tried longest cycle length first: first for
/// orbit cycles of step form, then with exact search inside orbits and
/// groups of orbits. If none yields a factor, an exhaustive search over
/// equal-length cycle covers decides.
pub fn uniform_odd_two_factor(g: &Graph, cfg: &FactorConfig, budget: &Budget) -> Result<FactorAttempt> {
    check_preconditions(g, cfg)?;
    search_uniform_odd_factor(g, cfg, budget)
}

pub(crate) fn check_preconditions(g: &Graph, cfg: &FactorConfig) -> Result<()> {
    let n = g.order();
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "uniform odd 2-factors need odd order of at least 3, got {n}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    if !is_vertex_transitive_with(g, &cfg.symmetry)? {
        return Err(Error::Precondition("graph is not vertex-transitive".into()));
    }
    Ok(())
}

/// The search behind [`uniform_odd_two_factor`] without its preconditions.
pub(crate) fn search_uniform_odd_factor(
    g: &Graph,
    cfg: &FactorConfig,
    budget: &Budget,
) -> Result<FactorAttempt> {
    let n = g.order();
    let mut notes = Vec::new();
    if g.regular_degree() == Some(2) {
        let factor = TwoFactor::from_sequences(g, cycle_components(g))?;
        return Ok(match UniformOddCertificate::new(factor, FactorRoute::TwoRegular, notes.clone()) {
            Ok(cert) => FactorAttempt::found(cert),
            Err(_) => {
                notes.push("the graph is its own only 2-factor, which is not uniform odd".into());
                FactorAttempt::absent(notes)
            }
        });
    }
    if g.is_complete() && n % 2 == 1 && n >= 3 {
        let factor = TwoFactor::from_sequences(g, vec![(0..n).collect()])?;
        let cert = UniformOddCertificate::new(factor, FactorRoute::Complete, notes)?;
        return Ok(FactorAttempt::found(cert));
    }

    let mut candidates: Vec<Permutation> = Vec::new();
    for len in odd_cycle_lengths(n) {
        let search_budget = match cfg.candidate_work {
            Some(work) => budget.with_work_limit(work),
            None => budget.child(None),
        };
        match uniform_automorphisms_of_length(
            g,
            len,
            Some(cfg.candidates_per_length),
            &search_budget,
            &cfg.symmetry,
        ) {
            Ok((found, _)) => candidates.extend(found),
            Err(Error::Capability { .. }) => {
                notes.push(format!(
                    "automorphism search skipped above {} vertices",
                    cfg.symmetry.max_vertices
                ));
                break;
            }
            Err(e) => return Err(e),
        }
    }
    if candidates.is_empty() && n <= cfg.symmetry.max_vertices {
        notes.push("no uniform odd automorphism found".into());
    }

    for a in &candidates {
        if let Search::Found(cert) = orbit_factor(g, a, OrbitMode::StepOnly, cfg, budget)?.outcome {
            return Ok(FactorAttempt::found(cert));
        }
    }
    for a in &candidates {
        if budget.is_expired() {
            break;
        }
        let orbit = orbit_factor(g, a, OrbitMode::Full, cfg, budget)?;
        if let Search::Found(cert) = orbit.outcome {
            return Ok(FactorAttempt::found(cert));
        }
        let grouped = grouped_factor(g, a, false, cfg, budget)?;
        if let Search::Found(cert) = grouped.outcome {
            return Ok(FactorAttempt::found(cert));
        }
    }
    if !candidates.is_empty() {
        notes.push(format!(
            "none of {} uniform automorphisms yielded a factor",
            candidates.len()
        ));
    }

    match cover::direct_search(g, budget)? {
        Search::Found(mut cert) => {
            notes.push("found by exhaustive cycle-cover search".into());
            cert.notes = notes;
            Ok(FactorAttempt::found(cert))
        }
        Search::Absent => {
            notes.push("exhaustive cycle-cover search found no uniform odd 2-factor".into());
            Ok(FactorAttempt::absent(notes))
        }
        Search::Unknown => {
            notes.push("budget ran out".into());
            Ok(FactorAttempt::unknown(notes))
        }
    }
}

/// Vertex sequences of the components of a 2-regular graph.
fn cycle_components(g: &Graph) -> Vec<Vec<usize>> {
    g.components()
        .into_iter()
        .map(|comp| {
            let s = comp[0];
            let (mut prev, mut cur) = (usize::MAX, s);
            let mut seq = vec![s];
            loop {
                let next = g.neighbors(cur).find(|&w| w != prev).expect("degree 2");
                if next == s {
                    break seq;
                }
                seq.push(next);
                prev = cur;
                cur = next;
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cayley, circulant, complete_multipartite, kneser, petersen};
    use crate::groups::GroupTable;

    fn run(g: &Graph) -> FactorAttempt {
        uniform_odd_two_factor(g, &FactorConfig::default(), &Budget::unlimited()).unwrap()
    }

    #[test]
    fn base_cases() {
        let cert = run(&Graph::cycle(9).unwrap()).outcome.found().unwrap();
        assert_eq!(cert.route, FactorRoute::TwoRegular);
        assert_eq!((cert.cycle_length, cert.cycle_count), (9, 1));

        let cert = run(&Graph::complete(7).unwrap()).outcome.found().unwrap();
        assert_eq!(cert.route, FactorRoute::Complete);
        assert_eq!(cert.factor.cycles()[0].vertices(), &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn circulant_prefers_orbit_steps() {
        let g = circulant(15, &[3, 5]).unwrap();
        let cert = run(&g).outcome.found().unwrap();
        cert.validate(&g).unwrap();
        assert_eq!(cert.route.name(), "orbit_cycles");
        assert_eq!((cert.cycle_length, cert.cycle_count), (5, 3));
    }

    #[test]
    fn multipartite_factor() {
        let g = complete_multipartite(3, 3).unwrap();
        let cert = run(&g).outcome.found().unwrap();
        cert.validate(&g).unwrap();
        assert_eq!(cert.cycle_length * cert.cycle_count, 9);
    }

    #[test]
    fn larger_families() {
        let k72 = kneser(7, 2).unwrap();
        run(&k72).outcome.found().unwrap().validate(&k72).unwrap();
        let f21 = GroupTable::bundled("F21").unwrap();
        let g = cayley(&f21, &[1, f21.inverse(1), 7, f21.inverse(7)]).unwrap();
        run(&g).outcome.found().unwrap().validate(&g).unwrap();
        let g = circulant(21, &[7]).unwrap().complement();
        run(&g).outcome.found().unwrap().validate(&g).unwrap();
    }

    #[test]
    fn preconditions() {
        let cfg = FactorConfig::default();
        let b = Budget::unlimited();
        assert!(matches!(
            uniform_odd_two_factor(&petersen(), &cfg, &b),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            uniform_odd_two_factor(&circulant(9, &[3]).unwrap(), &cfg, &b),
            Err(Error::Precondition(_))
        ));
        let not_vt = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert!(matches!(
            uniform_odd_two_factor(&not_vt, &cfg, &b),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn disconnected_two_regular_internal() {
        let g = circulant(9, &[3]).unwrap();
        let attempt = search_uniform_odd_factor(&g, &FactorConfig::default(), &Budget::unlimited())
            .unwrap();
        let cert = attempt.outcome.found().unwrap();
        assert_eq!((cert.cycle_length, cert.cycle_count), (3, 3));
        let mixed = Graph::new(8, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 3)])
            .unwrap();
        let attempt =
            search_uniform_odd_factor(&mixed, &FactorConfig::default(), &Budget::unlimited())
                .unwrap();
        assert_eq!(attempt.outcome, Search::Absent);
    }
}
