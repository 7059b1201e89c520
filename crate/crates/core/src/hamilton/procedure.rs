use super::lift::lift_hamilton_cycle;
use crate::budget::{Budget, Search};
use crate::error::{Error, Result};
use crate::factor::{check_preconditions, search_uniform_odd_factor, FactorConfig, UniformOddCertificate};
use crate::graph::{Cycle, Graph};
use crate::symmetry::is_vertex_transitive_with;
use serde::Serialize;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ProcedureConfig {
    pub factor: FactorConfig,
}

/// Properties of a contracted graph checked before recursing into it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientAudit {
    #[serde(skip)]
    pub graph: Graph,
    pub order: usize,
    pub connected: bool,
    pub odd_order: bool,
    pub vertex_transitive: bool,
}

/// One contraction level: the factor found on that level's graph and, when
/// it had more than one cycle, the quotient it contracted to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelRecord {
    pub order: usize,
    pub certificate: UniformOddCertificate,
    pub quotient: Option<QuotientAudit>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ProcedureOutcome {
    HamiltonCycleFound { cycle: Cycle },
    /// No uniform odd 2-factor exists on the graph at `level`.
    FactorMissing { level: usize },
    /// The quotient cycle at `level` admits no lift.
    LiftFailed { level: usize },
    BudgetExhausted { level: usize },
}

impl ProcedureOutcome {
    pub fn status(&self) -> &'static str {
        match self {
            ProcedureOutcome::HamiltonCycleFound { .. } => "hamilton_cycle_found",
            ProcedureOutcome::FactorMissing { .. } => "factor_missing",
            ProcedureOutcome::LiftFailed { .. } => "lift_failed",
            ProcedureOutcome::BudgetExhausted { .. } => "budget_exhausted",
        }
    }

    pub fn cycle(&self) -> Option<&Cycle> {
        match self {
            ProcedureOutcome::HamiltonCycleFound { cycle } => Some(cycle),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProcedureTrace {
    pub levels: Vec<LevelRecord>,
    pub outcome: ProcedureOutcome,
}

fn max_depth(n: usize) -> usize {
    let mut d = 0;
    let mut m = n;
    while m >= 3 {
        m /= 3;
        d += 1;
    }
    d + 1
}

/// Contracts the cycles of uniform odd 2-factors level by level until a
/// cycle remains, then lifts that cycle back to a Hamilton cycle of `g`.
///
/// `g` must satisfy the preconditions of
/// [`uniform_odd_two_factor`](crate::factor::uniform_odd_two_factor).
/// Quotients are searched without them; their audits record whether they
/// hold.
pub fn contraction_procedure(
    g: &Graph,
    cfg: &ProcedureConfig,
    budget: &Budget,
) -> Result<ProcedureTrace> {
    check_preconditions(g, &cfg.factor)?;
    let mut levels: Vec<LevelRecord> = Vec::new();
    let mut graphs = vec![g.clone()];
    let cap = max_depth(g.order());

    let bottom = loop {
        let cur = graphs.last().expect("nonempty");
        let depth = levels.len();
        if cur.regular_degree() == Some(2) && cur.is_connected() {
            break cycle_of(cur)?;
        }
        if depth >= cap {
            return Err(Error::Internal(format!(
                "contraction exceeded {cap} levels on {} vertices",
                g.order()
            )));
        }
        let cert = match search_uniform_odd_factor(cur, &cfg.factor, budget)?.outcome {
            Search::Found(cert) => cert,
            Search::Absent => return done(levels, ProcedureOutcome::FactorMissing { level: depth }),
            Search::Unknown => {
                return done(levels, ProcedureOutcome::BudgetExhausted { level: depth })
            }
        };
        if cert.cycle_count == 1 {
            let cycle = cert.factor.cycles()[0].clone();
            levels.push(LevelRecord {
                order: cur.order(),
                certificate: cert,
                quotient: None,
            });
            break cycle;
        }
        let q = cur.quotient(&cert.factor.partition())?;
        let audit = QuotientAudit {
            order: q.order(),
            connected: q.is_connected(),
            odd_order: q.order() % 2 == 1,
            vertex_transitive: is_vertex_transitive_with(&q, &cfg.factor.symmetry)?,
            graph: q.clone(),
        };
        levels.push(LevelRecord {
            order: cur.order(),
            certificate: cert,
            quotient: Some(audit),
        });
        graphs.push(q);
    };

    // `bottom` is a Hamilton cycle of the deepest graph reached.
    let mut cycle = bottom;
    for level in (0..levels.len()).rev() {
        if levels[level].quotient.is_none() {
            continue;
        }
        let order = cycle.vertices().to_vec();
        match lift_hamilton_cycle(&graphs[level], &levels[level].certificate, &order, budget)? {
            Search::Found(c) => cycle = c,
            Search::Absent => return done(levels, ProcedureOutcome::LiftFailed { level }),
            Search::Unknown => return done(levels, ProcedureOutcome::BudgetExhausted { level }),
        }
    }
    if !cycle.is_hamiltonian_in(g) {
        return Err(Error::Internal("lifted cycle is not a Hamilton cycle".into()));
    }
    done(levels, ProcedureOutcome::HamiltonCycleFound { cycle })
}

fn done(levels: Vec<LevelRecord>, outcome: ProcedureOutcome) -> Result<ProcedureTrace> {
    Ok(ProcedureTrace { levels, outcome })
}

fn cycle_of(g: &Graph) -> Result<Cycle> {
    let mut seq = vec![0];
    let mut prev = usize::MAX;
    while seq.len() < g.order() {
        let cur = *seq.last().expect("nonempty");
        let next = g.neighbors(cur).find(|&w| w != prev).expect("degree 2");
        prev = cur;
        seq.push(next);
    }
    Cycle::new(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{circulant, complete_multipartite, kneser};
    use crate::hamilton::hamilton_cycle;

    fn run(g: &Graph) -> ProcedureTrace {
        contraction_procedure(g, &ProcedureConfig::default(), &Budget::unlimited()).unwrap()
    }

    #[test]
    fn cycle_needs_no_levels() {
        let g = Graph::cycle(9).unwrap();
        let t = run(&g);
        assert!(t.levels.is_empty());
        assert!(t.outcome.cycle().unwrap().is_hamiltonian_in(&g));
    }

    #[test]
    fn circulant_contracts_to_triangle() {
        let g = circulant(15, &[3, 5]).unwrap();
        let t = run(&g);
        assert_eq!(t.levels.len(), 1);
        let cert = &t.levels[0].certificate;
        assert_eq!((cert.cycle_length, cert.cycle_count), (5, 3));
        let audit = t.levels[0].quotient.as_ref().unwrap();
        assert_eq!(audit.graph, Graph::complete(3).unwrap());
        assert!(audit.connected && audit.odd_order && audit.vertex_transitive);
        // Each block walk moves by +-3 and each splice by the same +-5, so a
        // lifted closed walk has displacement +-3 or +-9 mod 15: no lift.
        assert_eq!(t.outcome, ProcedureOutcome::LiftFailed { level: 0 });
        assert!(hamilton_cycle(&g, &Budget::unlimited()).unwrap().is_found());
    }

    #[test]
    fn other_families() {
        let k333 = complete_multipartite(3, 3).unwrap();
        let t = run(&k333);
        assert_eq!(t.levels.len(), 1);
        assert!(t.levels[0].quotient.is_none());
        assert!(t.outcome.cycle().unwrap().is_hamiltonian_in(&k333));

        let k72 = kneser(7, 2).unwrap();
        let t = run(&k72);
        assert_eq!(t.levels.len(), 1);
        let audit = t.levels[0].quotient.as_ref().unwrap();
        assert_eq!(audit.order, 3);
        assert!(t.outcome.cycle().unwrap().is_hamiltonian_in(&k72));

        // Same obstruction as Circ(15, {3, 5}) with steps 3 and 7.
        let t = run(&circulant(21, &[3, 7]).unwrap());
        assert_eq!(t.outcome, ProcedureOutcome::LiftFailed { level: 0 });
    }

    #[test]
    fn rejects_ineligible_input() {
        let b = Budget::unlimited();
        let cfg = ProcedureConfig::default();
        assert!(contraction_procedure(&Graph::path(15).unwrap(), &cfg, &b).is_err());
        assert!(contraction_procedure(&Graph::cycle(8).unwrap(), &cfg, &b).is_err());
    }

    #[test]
    fn expired_budget() {
        let g = circulant(21, &[1, 8]).unwrap();
        let t = contraction_procedure(&g, &ProcedureConfig::default(), &Budget::from_millis(Some(0)))
            .unwrap();
        assert!(matches!(t.outcome, ProcedureOutcome::BudgetExhausted { .. }), "{:?}", t.outcome);
    }

    #[test]
    fn depth_cap() {
        assert_eq!(max_depth(9), 3);
        assert_eq!(max_depth(3), 2);
        assert_eq!(max_depth(1), 1);
    }
}
