//! 2-factors read off the cycle structure of a uniform odd automorphism.

use super::{FactorAttempt, FactorConfig, FactorRoute, TwoFactor, UniformOddCertificate};
use crate::budget::{Budget, Search};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hamilton::oracle::{search_hamilton, MASK_LIMIT};
use crate::symmetry::{is_automorphism, Permutation};
use itertools::Itertools;

/// Cap on the rotation patterns tried when seeding a grouped cycle.
const MAX_SEEDS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum OrbitMode {
    /// Only cycles of the form `v, a^d v, a^2d v, ...`.
    StepOnly,
    /// Step cycles first, then exact search inside the orbit.
    Full,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn checked_length(g: &Graph, a: &Permutation) -> Result<usize> {
    if !is_automorphism(g, a)? {
        return Err(Error::NotAutomorphism);
    }
    match a.uniform_cycle_length() {
        Some(l) if l > 1 && l % 2 == 1 => Ok(l),
        _ => Err(Error::NotUniformOdd),
    }
}

/// Smallest step `d` (coprime to the orbit length) such that every member of
/// the orbit is adjacent to the member `d` places further along.
fn orbit_step(g: &Graph, orbit: &[usize]) -> Option<usize> {
    let l = orbit.len();
    (1..=l / 2)
        .filter(|&d| gcd(d, l) == 1)
        .find(|&d| (0..l).all(|t| g.has_edge(orbit[t], orbit[(t + d) % l])))
}

fn step_sequence(orbit: &[usize], d: usize) -> Vec<usize> {
    let l = orbit.len();
    (0..l).map(|t| orbit[t * d % l]).collect()
}

/// Exact spanning-cycle search inside `members`, mapped back to `g`'s labels.
fn spanning_cycle(g: &Graph, members: &[usize], budget: &Budget) -> Result<Search<Vec<usize>>> {
    if members.len() > MASK_LIMIT {
        return Ok(Search::Unknown);
    }
    let set = VertexSet::new(g.order(), members.iter().copied())?;
    let h = g.induced(&set)?;
    Ok(search_hamilton(&h, budget).map(|c| {
        c.vertices()
            .iter()
            .map(|&i| set.members()[i])
            .collect()
    }))
}

fn is_closed_walk(g: &Graph, seq: &[usize]) -> bool {
    let k = seq.len();
    (0..k).all(|i| g.has_edge(seq[i], seq[(i + 1) % k]))
}

/// One cycle per orbit of `a`, each spanning its orbit.
pub fn orbit_cycle_factor(
    g: &Graph,
    a: &Permutation,
    cfg: &FactorConfig,
    budget: &Budget,
) -> Result<FactorAttempt> {
    orbit_factor(g, a, OrbitMode::Full, cfg, budget)
}

pub(crate) fn orbit_factor(
    g: &Graph,
    a: &Permutation,
    mode: OrbitMode,
    cfg: &FactorConfig,
    budget: &Budget,
) -> Result<FactorAttempt> {
    checked_length(g, a)?;
    let family = a.orbits();
    let mut notes = Vec::new();
    let with_edges = family
        .orbits()
        .iter()
        .filter(|o| o.iter().tuple_combinations().any(|(&v, &w)| g.has_edge(v, w)))
        .count();
    if with_edges > 0 && with_edges < family.len() {
        notes.push(format!(
            "mixed orbit structure: {with_edges} of {} orbits induce edges",
            family.len()
        ));
    }

    let mut seqs = Vec::with_capacity(family.len());
    let mut steps = Vec::with_capacity(family.len());
    for (i, orbit) in family.orbits().iter().enumerate() {
        if let Some(d) = orbit_step(g, orbit) {
            seqs.push(step_sequence(orbit, d));
            steps.push(Some(d));
            continue;
        }
        if mode == OrbitMode::StepOnly {
            notes.push(format!("orbit {i} has no step cycle"));
            return Ok(FactorAttempt::absent(notes));
        }
        let mut members = orbit.clone();
        members.sort_unstable();
        match spanning_cycle(g, &members, &budget.child(cfg.group_budget_ms))? {
            Search::Found(seq) => {
                seqs.push(seq);
                steps.push(None);
            }
            Search::Absent => {
                notes.push(format!("orbit {i} spans no cycle"));
                return Ok(FactorAttempt::absent(notes));
            }
            Search::Unknown => {
                notes.push(format!("search inside orbit {i} ran out of budget"));
                return Ok(FactorAttempt::unknown(notes));
            }
        }
    }
    let factor = TwoFactor::from_sequences(g, seqs)?;
    let route = FactorRoute::OrbitCycles {
        automorphism: a.clone(),
        steps,
    };
    Ok(FactorAttempt::found(UniformOddCertificate::new(
        factor,
        route,
        notes,
    )?))
}

/// Canonical splits of `0..m` into groups of `size`: each group starts with
/// the smallest index not yet used, and the remaining members ascend.
fn balanced_groupings(m: usize, size: usize, budget: &Budget, out: &mut dyn FnMut(&[Vec<usize>]) -> bool) {
    fn rec(
        unused: &mut Vec<usize>,
        size: usize,
        acc: &mut Vec<Vec<usize>>,
        budget: &Budget,
        out: &mut dyn FnMut(&[Vec<usize>]) -> bool,
    ) -> bool {
        if unused.is_empty() {
            return out(acc);
        }
        if budget.tick() {
            return true;
        }
        let head = unused.remove(0);
        for rest in unused.clone().into_iter().combinations(size - 1) {
            let mut group = vec![head];
            group.extend(&rest);
            unused.retain(|x| !rest.contains(x));
            acc.push(group);
            let stop = rec(unused, size, acc, budget, out);
            acc.pop();
            unused.extend(&rest);
            unused.sort_unstable();
            if stop {
                unused.insert(0, head);
                return true;
            }
        }
        unused.insert(0, head);
        false
    }
    let mut unused: Vec<usize> = (0..m).collect();
    rec(&mut unused, size, &mut Vec::new(), budget, out);
}

/// Round-robin sequences through the given orbits: position `j` of the walk
/// takes orbit `t` at index `j + offset[t]`.
fn seeded_group_cycle(g: &Graph, orbits: &[&Vec<usize>]) -> Option<Vec<usize>> {
    let l = orbits[0].len();
    let k = orbits.len();
    let offsets = (1..k).map(|_| 0..l).multi_cartesian_product();
    let offsets: Box<dyn Iterator<Item = Vec<usize>>> = if k == 1 {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new(offsets)
    };
    for off in offsets.take(MAX_SEEDS) {
        let seq: Vec<usize> = (0..l)
            .flat_map(|j| {
                let off = &off;
                (0..k).map(move |t| {
                    let shift = if t == 0 { 0 } else { off[t - 1] };
                    orbits[t][(j + shift) % l]
                })
            })
            .collect();
        if is_closed_walk(g, &seq) {
            return Some(seq);
        }
    }
    None
}

/// A cycle meeting every orbit exactly once, starting at the first member of
/// the first orbit. By symmetry this start loses no generality.
fn transversal_cycle(g: &Graph, orbits: &[Vec<usize>], budget: &Budget) -> Search<Vec<usize>> {
    let m = orbits.len();
    let mut owner = vec![0usize; g.order()];
    for (i, o) in orbits.iter().enumerate() {
        for &v in o {
            owner[v] = i;
        }
    }
    let start = orbits[0][0];
    let mut path = vec![start];
    let mut used = vec![false; m];
    used[0] = true;

    fn rec(
        g: &Graph,
        owner: &[usize],
        path: &mut Vec<usize>,
        used: &mut [bool],
        budget: &Budget,
    ) -> Option<bool> {
        let end = *path.last().expect("nonempty");
        if path.len() == used.len() {
            return Some(g.has_edge(end, path[0]));
        }
        if budget.tick() {
            return None;
        }
        let next: Vec<usize> = g.neighbors(end).filter(|&w| !used[owner[w]]).collect();
        for w in next {
            used[owner[w]] = true;
            path.push(w);
            match rec(g, owner, path, used, budget) {
                Some(false) => {}
                other => return other,
            }
            path.pop();
            used[owner[w]] = false;
        }
        Some(false)
    }

    match rec(g, &owner, &mut path, &mut used, budget) {
        Some(true) => Search::Found(path),
        Some(false) => Search::Absent,
        None => Search::Unknown,
    }
}

/// Cycles built from groups of whole orbits, for automorphisms whose orbits
/// carry no spanning cycles of their own. Tried in order:
///
/// 1. every odd group count `i >= 3` dividing the orbit count with at least
///    two orbits per group, ascending, over all canonical groupings; each
///    group's cycle is first sought among round-robin orbit walks, then by
///    exact search;
/// 2. cycles through one vertex of every orbit and their images under the
///    powers of `a`;
/// 3. a Hamilton cycle of the whole graph.
///
/// Steps 2 and 3 are recorded in the notes as departures from grouping.
pub fn grouped_orbit_factor(
    g: &Graph,
    a: &Permutation,
    cfg: &FactorConfig,
    budget: &Budget,
) -> Result<FactorAttempt> {
    grouped_factor(g, a, true, cfg, budget)
}

pub(crate) fn grouped_factor(
    g: &Graph,
    a: &Permutation,
    whole_graph_fallback: bool,
    cfg: &FactorConfig,
    budget: &Budget,
) -> Result<FactorAttempt> {
    let l = checked_length(g, a)?;
    let family = a.orbits();
    let orbits = family.orbits();
    let m = orbits.len();
    let mut notes = Vec::new();
    let mut unknown = false;

    let counts: Vec<usize> = (3..m).filter(|i| i % 2 == 1 && m.is_multiple_of(*i) && m / i >= 2).collect();
    if counts.is_empty() {
        notes.push(format!(
            "{m} orbits of length {l} cannot be split into 3 or more equal groups of at least 2 orbits"
        ));
    }
    for i in counts {
        let size = m / i;
        let mut result = None;
        balanced_groupings(m, size, budget, &mut |groups| {
            let mut seqs = Vec::with_capacity(groups.len());
            for group in groups {
                let members: Vec<&Vec<usize>> = group.iter().map(|&o| &orbits[o]).collect();
                if let Some(seq) = seeded_group_cycle(g, &members) {
                    seqs.push(seq);
                    continue;
                }
                let mut union: Vec<usize> = members.iter().flat_map(|o| o.iter().copied()).collect();
                union.sort_unstable();
                match spanning_cycle(g, &union, &budget.child(cfg.group_budget_ms)) {
                    Ok(Search::Found(seq)) => seqs.push(seq),
                    Ok(Search::Absent) => return false,
                    Ok(Search::Unknown) | Err(_) => {
                        unknown = true;
                        return false;
                    }
                }
            }
            result = Some((groups.to_vec(), seqs));
            true
        });
        if let Some((groups, seqs)) = result {
            let factor = TwoFactor::from_sequences(g, seqs)?;
            let route = FactorRoute::GroupedOrbits {
                automorphism: a.clone(),
                groups,
            };
            return Ok(FactorAttempt::found(UniformOddCertificate::new(factor, route, notes)?));
        }
        notes.push(format!("no grouping into {i} groups of {size} orbits spans cycles"));
    }

    if m >= 3 {
        match transversal_cycle(g, orbits, &budget.child(cfg.group_budget_ms)) {
            Search::Found(seq) => {
                notes.push(format!(
                    "used {l} cycles of length {m}, each meeting every orbit once"
                ));
                let mut seqs = vec![seq];
                for _ in 1..l {
                    let prev = seqs.last().expect("nonempty");
                    seqs.push(prev.iter().map(|&v| a.apply(v)).collect());
                }
                let factor = TwoFactor::from_sequences(g, seqs)?;
                let route = FactorRoute::Transversal {
                    automorphism: a.clone(),
                };
                return Ok(FactorAttempt::found(UniformOddCertificate::new(factor, route, notes)?));
            }
            Search::Absent => notes.push("no cycle meets every orbit exactly once".into()),
            Search::Unknown => {
                unknown = true;
                notes.push("transversal search ran out of budget".into());
            }
        }
    }

    if whole_graph_fallback {
        notes.push("fell back to a Hamilton cycle of the whole graph".into());
        let all: Vec<usize> = (0..g.order()).collect();
        match spanning_cycle(g, &all, &budget.child(cfg.group_budget_ms))? {
            Search::Found(seq) => {
                let factor = TwoFactor::from_sequences(g, vec![seq])?;
                let route = FactorRoute::WholeGraph {
                    automorphism: a.clone(),
                };
                return Ok(FactorAttempt::found(UniformOddCertificate::new(factor, route, notes)?));
            }
            Search::Absent => {}
            Search::Unknown => unknown = true,
        }
    }

    Ok(if unknown {
        FactorAttempt::unknown(notes)
    } else {
        FactorAttempt::absent(notes)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{circulant, complete_multipartite};

    fn unlimited() -> (FactorConfig, Budget) {
        (FactorConfig::default(), Budget::unlimited())
    }

    #[test]
    fn orbit_factor_examples() {
        let (cfg, b) = unlimited();
        let c9 = Graph::cycle(9).unwrap();
        let cert = orbit_cycle_factor(&c9, &Permutation::rotation(9, 1), &cfg, &b)
            .unwrap()
            .outcome
            .found()
            .unwrap();
        assert_eq!((cert.cycle_length, cert.cycle_count), (9, 1));
        assert_eq!(cert.factor.cycles()[0].vertices(), &[0, 1, 2, 3, 4, 5, 6, 7, 8]);

        let g = circulant(15, &[3, 5]).unwrap();
        let cert = orbit_cycle_factor(&g, &Permutation::rotation(15, 3), &cfg, &b)
            .unwrap()
            .outcome
            .found()
            .unwrap();
        assert_eq!((cert.cycle_length, cert.cycle_count), (5, 3));
        cert.validate(&g).unwrap();
        for (r, c) in cert.factor.cycles().iter().enumerate() {
            assert!(c.vertices().iter().all(|v| v % 3 == r));
        }

        // Circ(9, {2}) is C9 relabelled; rotation by 3 leaves edgeless orbits.
        let c9b = circulant(9, &[2]).unwrap();
        let attempt = orbit_cycle_factor(&c9b, &Permutation::rotation(9, 3), &cfg, &b).unwrap();
        assert_eq!(attempt.outcome, Search::Absent);
    }

    #[test]
    fn general_search_inside_an_orbit() {
        // One 15-cycle orbit under rotation by 1, but no step d coprime to 15
        // is an edge difference, so the cycle comes from exact search.
        let (cfg, b) = unlimited();
        let g = circulant(15, &[3, 5]).unwrap();
        let a = Permutation::rotation(15, 1);
        let step = orbit_factor(&g, &a, OrbitMode::StepOnly, &cfg, &b).unwrap();
        assert_eq!(step.outcome, Search::Absent);
        let full = orbit_cycle_factor(&g, &a, &cfg, &b).unwrap().outcome.found().unwrap();
        assert_eq!((full.cycle_length, full.cycle_count), (15, 1));
        assert_eq!(
            full.route,
            FactorRoute::OrbitCycles {
                automorphism: a,
                steps: vec![None]
            }
        );
    }

    #[test]
    fn rejects_bad_automorphisms() {
        let (cfg, b) = unlimited();
        let c5 = Graph::cycle(5).unwrap();
        let swap = Permutation::new(vec![2, 1, 0, 3, 4]).unwrap();
        assert_eq!(
            orbit_cycle_factor(&c5, &swap, &cfg, &b).unwrap_err(),
            Error::NotAutomorphism
        );
        let reflection = Permutation::new(vec![0, 4, 3, 2, 1]).unwrap();
        assert_eq!(
            grouped_orbit_factor(&c5, &reflection, &cfg, &b).unwrap_err(),
            Error::NotUniformOdd
        );
    }

    #[test]
    fn grouped_examples() {
        let (cfg, b) = unlimited();
        let k333 = complete_multipartite(3, 3).unwrap();
        let a = Permutation::new(vec![1, 2, 0, 4, 5, 3, 7, 8, 6]).unwrap();
        let attempt = grouped_orbit_factor(&k333, &a, &cfg, &b).unwrap();
        let cert = attempt.outcome.found().unwrap();
        assert_eq!((cert.cycle_length, cert.cycle_count), (3, 3));
        assert_eq!(cert.route.name(), "transversal");
        cert.validate(&k333).unwrap();
        for c in cert.factor.cycles() {
            let mut parts: Vec<usize> = c.vertices().iter().map(|v| v / 3).collect();
            parts.sort_unstable();
            assert_eq!(parts, vec![0, 1, 2]);
        }

        let c15 = circulant(15, &[4]).unwrap();
        let attempt = grouped_orbit_factor(&c15, &Permutation::rotation(15, 5), &cfg, &b).unwrap();
        let cert = attempt.outcome.found().unwrap();
        assert_eq!((cert.cycle_length, cert.cycle_count), (15, 1));
        assert_eq!(cert.route.name(), "whole_graph");
        assert!(cert.notes.iter().any(|n| n.contains("cannot be split")));
        assert!(cert.notes.iter().any(|n| n.contains("whole graph")));
    }

    #[test]
    fn grouped_absence_is_flagged() {
        let (cfg, b) = unlimited();
        // A matching on Z9 invariant under +3, with three isolated vertices.
        let g = Graph::new(9, [(0, 1), (3, 4), (6, 7)]).unwrap();
        let a = Permutation::rotation(9, 3);
        let attempt = grouped_orbit_factor(&g, &a, &cfg, &b).unwrap();
        assert_eq!(attempt.outcome, Search::Absent);
        assert!(!attempt.notes.is_empty());
    }

    #[test]
    fn literal_grouping_on_nine_orbits() {
        // Z27 with rotation by 9: nine orbits {r, r+9, r+18}, none with edges
        // for step 1. Groups of three consecutive residues are 9-cycles.
        let (cfg, b) = unlimited();
        let g = circulant(27, &[1]).unwrap();
        let a = Permutation::rotation(27, 9);
        let attempt = grouped_factor(&g, &a, false, &cfg, &b).unwrap();
        // C27 has only one 2-factor, the Hamilton cycle, so grouping and
        // transversals both fail.
        assert_eq!(attempt.outcome, Search::Absent);

        let g = circulant(27, &[1, 9]).unwrap();
        let attempt = grouped_factor(&g, &a, false, &cfg, &b).unwrap();
        let cert = attempt.outcome.found().unwrap();
        assert_eq!(cert.route.name(), "grouped_orbits");
        assert_eq!((cert.cycle_length, cert.cycle_count), (9, 3));
        cert.validate(&g).unwrap();
    }

    #[test]
    fn groupings_are_canonical_and_complete() {
        let mut all = Vec::new();
        balanced_groupings(6, 2, &Budget::unlimited(), &mut |g| {
            all.push(g.to_vec());
            false
        });
        // 6! / (2!^3 3!) = 15
        assert_eq!(all.len(), 15);
        assert_eq!(all[0], vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 15);
    }
}
