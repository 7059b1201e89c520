use crate::budget::{Budget, Verdict};
use crate::factor::{enumerate_two_factors, uniform_odd_two_factor, FactorConfig, TWO_FACTOR_ORACLE_BOUND};
use crate::graph::Graph;
use crate::hamilton::{contraction_procedure, hamilton_cycle, ProcedureConfig, ProcedureTrace, ORACLE_BOUND};
use serde::{Deserialize, Serialize};
use std::ops::ControlFlow;
use std::time::Instant;

/// Factor stage summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaResult {
    pub verdict: Verdict,
    pub cycle_length: Option<usize>,
    pub cycle_count: Option<usize>,
    pub route: Option<String>,
    pub certificate_valid: Option<bool>,
    pub notes: Vec<String>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientFlags {
    pub order: usize,
    pub connected: bool,
    pub odd_order: bool,
    pub vertex_transitive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelSummary {
    pub order: usize,
    pub cycle_length: usize,
    pub cycle_count: usize,
    pub route: String,
    pub quotient: Option<QuotientFlags>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProcedureResult {
    pub outcome: String,
    pub level: Option<usize>,
    pub levels: Vec<LevelSummary>,
    pub cycle: Option<Vec<usize>>,
    pub cycle_valid: Option<bool>,
    pub error: Option<String>,
}

/// One line of `records.jsonl`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub id: usize,
    pub spec: String,
    pub family: String,
    pub graph6: String,
    pub n: usize,
    pub degree: Option<usize>,
    pub edges: usize,
    pub connected: bool,
    pub vertex_transitive: bool,
    pub odd_order: bool,
    pub lemma: LemmaResult,
    /// Existence of a uniform odd 2-factor by full enumeration; only for
    /// small graphs.
    pub factor_oracle: Option<Verdict>,
    pub procedure: ProcedureResult,
    /// `None` above the oracle bound.
    pub oracle: Option<Verdict>,
}

/// Wall-clock milliseconds per stage, kept out of the deterministic report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StageTimes {
    pub lemma_ms: u128,
    pub factor_oracle_ms: u128,
    pub procedure_ms: u128,
    pub oracle_ms: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Budgets {
    pub lemma_ms: Option<u64>,
    pub procedure_ms: Option<u64>,
    pub oracle_ms: Option<u64>,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u128) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_millis())
}

/// Runs every stage on an eligible graph.
pub(crate) fn evaluate(
    head: RecordHead,
    g: &Graph,
    factor: &FactorConfig,
    budgets: Budgets,
) -> (CensusRecord, StageTimes) {
    let mut times = StageTimes::default();

    let (lemma, ms) = timed(|| {
        let budget = Budget::from_millis(budgets.lemma_ms);
        match uniform_odd_two_factor(g, factor, &budget) {
            Ok(attempt) => {
                let verdict = attempt.outcome.verdict();
                let cert = attempt.outcome.found();
                LemmaResult {
                    verdict,
                    cycle_length: cert.as_ref().map(|c| c.cycle_length),
                    cycle_count: cert.as_ref().map(|c| c.cycle_count),
                    route: cert.as_ref().map(|c| c.route.name().to_string()),
                    certificate_valid: cert.as_ref().map(|c| c.validate(g).is_ok()),
                    notes: attempt.notes,
                    error: None,
                }
            }
            Err(e) => LemmaResult {
                verdict: Verdict::Unknown,
                cycle_length: None,
                cycle_count: None,
                route: None,
                certificate_valid: None,
                notes: Vec::new(),
                error: Some(e.to_string()),
            },
        }
    });
    times.lemma_ms = ms;

    let (factor_oracle, ms) = timed(|| {
        (g.order() <= TWO_FACTOR_ORACLE_BOUND).then(|| {
            match enumerate_two_factors(g, |f| {
                if f.uniform_odd_shape().is_some() {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            }) {
                Ok(ControlFlow::Break(())) => Verdict::Present,
                Ok(ControlFlow::Continue(())) => Verdict::Absent,
                Err(_) => Verdict::Unknown,
            }
        })
    });
    times.factor_oracle_ms = ms;

    let (procedure, ms) = timed(|| {
        let budget = Budget::from_millis(budgets.procedure_ms);
        let cfg = ProcedureConfig { factor: *factor };
        match contraction_procedure(g, &cfg, &budget) {
            Ok(trace) => procedure_result(g, &trace),
            Err(e) => ProcedureResult {
                outcome: "error".into(),
                level: None,
                levels: Vec::new(),
                cycle: None,
                cycle_valid: None,
                error: Some(e.to_string()),
            },
        }
    });
    times.procedure_ms = ms;

    let (oracle, ms) = timed(|| {
        (g.order() <= ORACLE_BOUND).then(|| {
            let budget = Budget::from_millis(budgets.oracle_ms);
            match hamilton_cycle(g, &budget) {
                Ok(s) => s.verdict(),
                Err(_) => Verdict::Unknown,
            }
        })
    });
    times.oracle_ms = ms;

    let record = CensusRecord {
        id: head.id,
        spec: head.spec,
        family: head.family,
        graph6: head.graph6,
        n: g.order(),
        degree: g.regular_degree(),
        edges: g.edge_count(),
        connected: true,
        vertex_transitive: true,
        odd_order: true,
        lemma,
        factor_oracle,
        procedure,
        oracle,
    };
    (record, times)
}

pub(crate) struct RecordHead {
    pub id: usize,
    pub spec: String,
    pub family: String,
    pub graph6: String,
}

fn procedure_result(g: &Graph, trace: &ProcedureTrace) -> ProcedureResult {
    use crate::hamilton::ProcedureOutcome as O;
    let level = match trace.outcome {
        O::HamiltonCycleFound { .. } => None,
        O::FactorMissing { level } | O::LiftFailed { level } | O::BudgetExhausted { level } => {
            Some(level)
        }
    };
    let cycle = trace.outcome.cycle();
    ProcedureResult {
        outcome: trace.outcome.status().to_string(),
        level,
        levels: trace
            .levels
            .iter()
            .map(|l| LevelSummary {
                order: l.order,
                cycle_length: l.certificate.cycle_length,
                cycle_count: l.certificate.cycle_count,
                route: l.certificate.route.name().to_string(),
                quotient: l.quotient.as_ref().map(|q| QuotientFlags {
                    order: q.order,
                    connected: q.connected,
                    odd_order: q.odd_order,
                    vertex_transitive: q.vertex_transitive,
                }),
            })
            .collect(),
        cycle: cycle.map(|c| c.vertices().to_vec()),
        cycle_valid: cycle.map(|c| c.is_hamiltonian_in(g)),
        error: None,
    }
}

impl CensusRecord {
    /// Verdict-level consistency: a present certificate validates, and a
    /// procedure cycle is matched by the oracle unless it gave up.
    pub fn is_consistent(&self) -> bool {
        let lemma_ok = match self.lemma.verdict {
            Verdict::Present => self.lemma.certificate_valid == Some(true),
            _ => self.lemma.certificate_valid.is_none(),
        };
        let proc_ok = match self.procedure.cycle_valid {
            Some(valid) => valid && self.oracle != Some(Verdict::Absent),
            None => true,
        };
        lemma_ok && proc_ok
    }
}
