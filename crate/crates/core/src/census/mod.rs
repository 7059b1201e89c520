//! Batch runs over generated families of graphs, with deterministic reports.

mod record;
mod spec;

pub use record::{
    CensusRecord, LemmaResult, LevelSummary, ProcedureResult, QuotientFlags, StageTimes,
};
pub use spec::GraphSpec;

use crate::error::{Error, Result};
use crate::factor::FactorConfig;
use crate::graph::{to_graph6, Graph};
use crate::groups::GroupTable;
use crate::symmetry::is_vertex_transitive_with;
use record::{evaluate, Budgets, RecordHead};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

/// Largest circulant order in the default families.
pub const CIRCULANT_MAX_N: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Circulant,
    Cayley,
    Kneser,
    /// Complements of every graph from the other selected families.
    Complement,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Circulant,
        Family::Cayley,
        Family::Kneser,
        Family::Complement,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Circulant => "circulant",
            Family::Cayley => "cayley",
            Family::Kneser => "kneser",
            Family::Complement => "complement",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown family `{s}`")))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusConfig {
    pub families: Vec<Family>,
    pub max_n: usize,
    /// Specs appended after the generated families.
    pub extra_specs: Vec<GraphSpec>,
    pub lemma_budget_ms: Option<u64>,
    pub procedure_budget_ms: Option<u64>,
    pub oracle_budget_ms: Option<u64>,
    /// Worker threads; 0 picks the machine default.
    pub jobs: usize,
    pub factor: FactorConfig,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            families: Family::ALL.to_vec(),
            max_n: 21,
            extra_specs: Vec::new(),
            lemma_budget_ms: Some(2000),
            procedure_budget_ms: Some(5000),
            oracle_budget_ms: Some(10_000),
            jobs: 0,
            factor: FactorConfig::default(),
        }
    }
}

impl CensusConfig {
    /// Nothing generated; only `extra_specs` run.
    pub fn empty() -> Self {
        CensusConfig {
            families: Vec::new(),
            ..CensusConfig::default()
        }
    }
}

/// Every spec the config generates, in id order (ids are positions).
pub fn generate_specs(cfg: &CensusConfig) -> Vec<GraphSpec> {
    let has = |f| cfg.families.contains(&f);
    let mut base = Vec::new();
    if has(Family::Circulant) {
        for n in (3..=cfg.max_n.min(CIRCULANT_MAX_N)).step_by(2) {
            let half = n / 2;
            for mask in 1u32..1 << half {
                let steps = (0..half).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                base.push(GraphSpec::Circulant { n, steps });
            }
        }
    }
    if has(Family::Cayley) {
        for id in GroupTable::bundled_ids() {
            let group = GroupTable::bundled(id).expect("bundled tables are valid");
            if group.order() > cfg.max_n {
                continue;
            }
            let classes = group.inverse_classes();
            for mask in 1u64..1 << classes.len() {
                let mut conn: Vec<usize> = classes
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .flat_map(|(_, c)| c.iter().copied())
                    .collect();
                conn.sort_unstable();
                base.push(GraphSpec::Cayley {
                    group: id.to_string(),
                    conn,
                });
            }
        }
    }
    if has(Family::Kneser) && cfg.max_n >= 21 {
        base.push(GraphSpec::Kneser { n: 7, k: 2 });
    }
    if has(Family::Complement) {
        let complements: Vec<GraphSpec> = base
            .iter()
            .map(|s| GraphSpec::ComplementOf(Box::new(s.clone())))
            .collect();
        base.extend(complements);
    }
    base.extend(cfg.extra_specs.iter().cloned());
    base
}

/// A spec excluded from the records, with the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilteredSpec {
    pub id: usize,
    pub spec: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CensusReport {
    pub records: Vec<CensusRecord>,
    pub filtered: Vec<FilteredSpec>,
    pub timings: Vec<(usize, StageTimes)>,
}

enum Outcome {
    Record(Box<CensusRecord>, StageTimes),
    Filtered(FilteredSpec),
}

/// Why an eligible-looking graph is excluded, if it is.
fn ineligibility(g: &Graph, cfg: &CensusConfig) -> Option<String> {
    if g.order().is_multiple_of(2) {
        return Some("even order".into());
    }
    if g.order() < 3 {
        return Some("fewer than 3 vertices".into());
    }
    if !g.is_connected() {
        return Some("disconnected".into());
    }
    match is_vertex_transitive_with(g, &cfg.factor.symmetry) {
        Ok(true) => None,
        Ok(false) => Some("not vertex-transitive".into()),
        Err(e) => Some(format!("vertex-transitivity undecided: {e}")),
    }
}

/// Generates, deduplicates, filters and evaluates every spec.
pub fn run_census(cfg: &CensusConfig) -> Result<CensusReport> {
    let specs = generate_specs(cfg);
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut filtered = Vec::new();
    let mut work = Vec::new();
    for (id, spec) in specs.iter().enumerate() {
        let text = spec.to_string();
        let g = match spec.build() {
            Ok(g) => g,
            Err(e) => {
                filtered.push(FilteredSpec {
                    id,
                    spec: text,
                    reason: format!("invalid: {e}"),
                });
                continue;
            }
        };
        let g6 = to_graph6(&g);
        if let Some(&first) = seen.get(&g6) {
            filtered.push(FilteredSpec {
                id,
                spec: text,
                reason: format!("duplicate of {first}"),
            });
            continue;
        }
        seen.insert(g6.clone(), id);
        work.push((id, text, spec.family().to_string(), g6, g));
    }

    let budgets = Budgets {
        lemma_ms: cfg.lemma_budget_ms,
        procedure_ms: cfg.procedure_budget_ms,
        oracle_ms: cfg.oracle_budget_ms,
    };
    let outcomes = par_map(work, cfg.jobs, |(id, spec, family, graph6, g)| {
        if let Some(reason) = ineligibility(&g, cfg) {
            return Outcome::Filtered(FilteredSpec { id, spec, reason });
        }
        let head = RecordHead {
            id,
            spec,
            family,
            graph6,
        };
        let (rec, times) = evaluate(head, &g, &cfg.factor, budgets);
        Outcome::Record(Box::new(rec), times)
    })?;

    let mut report = CensusReport::default();
    for o in outcomes {
        match o {
            Outcome::Record(rec, times) => {
                report.timings.push((rec.id, times));
                report.records.push(*rec);
            }
            Outcome::Filtered(f) => filtered.push(f),
        }
    }
    filtered.sort_by_key(|f| f.id);
    report.filtered = filtered;
    report.records.sort_by_key(|r| r.id);
    report.timings.sort_by_key(|t| t.0);
    Ok(report)
}

#[cfg(feature = "parallel")]
fn par_map<T, R, F>(items: Vec<T>, jobs: usize, f: F) -> Result<Vec<R>>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(|| items.into_par_iter().map(f).collect()))
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, R, F>(items: Vec<T>, _jobs: usize, f: F) -> Result<Vec<R>>
where
    F: Fn(T) -> R,
{
    Ok(items.into_iter().map(f).collect())
}

/// One row of `summary.csv`.
#[derive(Debug, Serialize)]
struct SummaryRow<'a> {
    id: usize,
    spec: &'a str,
    family: &'a str,
    n: usize,
    degree: Option<usize>,
    lemma: &'static str,
    cycle_length: Option<usize>,
    cycle_count: Option<usize>,
    route: Option<&'a str>,
    factor_oracle: Option<&'static str>,
    procedure: &'a str,
    levels: usize,
    quotient_connected: String,
    quotient_odd_order: String,
    quotient_vertex_transitive: String,
    oracle: Option<&'static str>,
}

fn flag_list(r: &CensusRecord, pick: impl Fn(&QuotientFlags) -> bool) -> String {
    r.procedure
        .levels
        .iter()
        .filter_map(|l| l.quotient.as_ref())
        .map(|q| pick(q).to_string())
        .collect::<Vec<_>>()
        .join(";")
}

pub const RECORDS_FILE: &str = "records.jsonl";
pub const SUMMARY_FILE: &str = "summary.csv";
pub const FILTERED_FILE: &str = "filtered.log";
pub const TIMINGS_FILE: &str = "timings.csv";

impl CensusReport {
    pub fn records_jsonl(&self) -> Result<String> {
        let mut out = String::new();
        for r in &self.records {
            let line = serde_json::to_string(r)
                .map_err(|e| Error::Internal(format!("serialising record {}: {e}", r.id)))?;
            out.push_str(&line);
            out.push('\n');
        }
        Ok(out)
    }

    pub fn summary_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Internal(format!("writing summary: {e}"));
        if self.records.is_empty() {
            w.write_record([
                "id",
                "spec",
                "family",
                "n",
                "degree",
                "lemma",
                "cycle_length",
                "cycle_count",
                "route",
                "factor_oracle",
                "procedure",
                "levels",
                "quotient_connected",
                "quotient_odd_order",
                "quotient_vertex_transitive",
                "oracle",
            ])
            .map_err(csv_err)?;
        }
        for r in &self.records {
            w.serialize(SummaryRow {
                id: r.id,
                spec: &r.spec,
                family: &r.family,
                n: r.n,
                degree: r.degree,
                lemma: r.lemma.verdict.as_str(),
                cycle_length: r.lemma.cycle_length,
                cycle_count: r.lemma.cycle_count,
                route: r.lemma.route.as_deref(),
                factor_oracle: r.factor_oracle.map(|v| v.as_str()),
                procedure: &r.procedure.outcome,
                levels: r.procedure.levels.len(),
                quotient_connected: flag_list(r, |q| q.connected),
                quotient_odd_order: flag_list(r, |q| q.odd_order),
                quotient_vertex_transitive: flag_list(r, |q| q.vertex_transitive),
                oracle: r.oracle.map(|v| v.as_str()),
            })
            .map_err(csv_err)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Internal(format!("writing summary: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }

    pub fn filtered_log(&self) -> String {
        self.filtered
            .iter()
            .map(|f| format!("{}\t{}\t{}\n", f.id, f.spec, f.reason))
            .collect()
    }

    pub fn timings_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Internal(format!("writing timings: {e}"));
        w.write_record(["id", "lemma_ms", "factor_oracle_ms", "procedure_ms", "oracle_ms"])
            .map_err(csv_err)?;
        for (id, t) in &self.timings {
            w.write_record([
                id.to_string(),
                t.lemma_ms.to_string(),
                t.factor_oracle_ms.to_string(),
                t.procedure_ms.to_string(),
                t.oracle_ms.to_string(),
            ])
            .map_err(csv_err)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Internal(format!("writing timings: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }

    /// Writes the four report files into `dir`, creating it if needed.
    pub fn write_to(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let files = [
            (RECORDS_FILE, self.records_jsonl()?),
            (SUMMARY_FILE, self.summary_csv()?),
            (FILTERED_FILE, self.filtered_log()),
            (TIMINGS_FILE, self.timings_csv()?),
        ];
        for (name, body) in files {
            let path = dir.join(name);
            let mut f = fs::File::create(&path).map_err(|e| Error::io(&path, e))?;
            f.write_all(body.as_bytes()).map_err(|e| Error::io(&path, e))?;
        }
        Ok(())
    }
}
