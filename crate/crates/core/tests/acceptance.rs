use oddvt::census::{generate_specs, run_census, CensusConfig, CensusRecord, CensusReport};
use oddvt::factor::{enumerate_two_factors, TWO_FACTOR_ORACLE_BOUND};
use oddvt::generators::{circulant, complete_multipartite, petersen};
use oddvt::graph::{parse_graph6, Graph};
use oddvt::hamilton::hamilton_cycle;
use oddvt::symmetry::{automorphism_group, is_vertex_transitive};
use oddvt::{Budget, Search, Verdict};
use std::ops::ControlFlow;
use std::process::{Command, Stdio};
use std::sync::OnceLock;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn census() -> &'static CensusReport {
    static REPORT: OnceLock<CensusReport> = OnceLock::new();
    REPORT.get_or_init(|| run_census(&CensusConfig::default()).expect("default census runs"))
}

fn graph_of(r: &CensusRecord) -> Graph {
    parse_graph6(&r.graph6).expect("records hold valid graph6")
}

fn lemma_matches_enumeration() -> Outcome {
    let mut checked = 0;
    for r in census().records.iter().filter(|r| r.n <= TWO_FACTOR_ORACLE_BOUND) {
        let g = graph_of(r);
        let exists = enumerate_two_factors(&g, |f| {
            if f.uniform_odd_shape().is_some() {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .map_err(|e| format!("{}: {e}", r.spec))?
        .is_break();
        if r.lemma.verdict != Verdict::Present || r.lemma.certificate_valid != Some(true) {
            return Err(format!("{}: lemma verdict {:?}", r.spec, r.lemma.verdict));
        }
        if !exists {
            return Err(format!("{}: enumeration finds no uniform odd 2-factor", r.spec));
        }
        if r.factor_oracle != Some(Verdict::Present) {
            return Err(format!("{}: recorded factor oracle {:?}", r.spec, r.factor_oracle));
        }
        checked += 1;
    }
    if checked == 0 {
        return Err("no graphs with n <= 14".into());
    }
    Ok(format!("{checked} graphs with n <= {TWO_FACTOR_ORACLE_BOUND}"))
}

fn oracle_finds_hamilton_cycles() -> Outcome {
    let records: Vec<_> = census().records.iter().filter(|r| r.n <= 21).collect();
    let mut unknown = 0;
    for r in &records {
        match r.oracle {
            Some(Verdict::Present) => {}
            Some(Verdict::Unknown) if r.n > 15 => unknown += 1,
            other => return Err(format!("{}: oracle {:?}", r.spec, other)),
        }
    }
    if unknown * 10 >= records.len() {
        return Err(format!("{unknown} of {} unknown", records.len()));
    }
    Ok(format!("{} graphs, {unknown} unknown", records.len()))
}

fn procedure_cycles_validate() -> Outcome {
    let mut found = 0;
    for r in &census().records {
        let Some(cycle) = &r.procedure.cycle else {
            continue;
        };
        let g = graph_of(r);
        let mut seen = vec![false; g.order()];
        let distinct = cycle.len() == g.order()
            && cycle
                .iter()
                .all(|&v| v < g.order() && !std::mem::replace(&mut seen[v], true));
        let k = cycle.len();
        let adjacent = (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]));
        if !distinct || !adjacent {
            return Err(format!("{}: invalid procedure cycle", r.spec));
        }
        if r.oracle == Some(Verdict::Absent) {
            return Err(format!("{}: procedure cycle but oracle absent", r.spec));
        }
        found += 1;
    }
    let failed = census().records.len() - found;
    Ok(format!("{found} cycles validated, {failed} runs without a cycle"))
}

fn quotient_flags_complete() -> Outcome {
    let report = census();
    let jsonl = report.records_jsonl().map_err(|e| e.to_string())?;
    let mut multi = 0;
    for line in jsonl.lines() {
        let v: serde_json::Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
        let levels = v["procedure"]["levels"].as_array().ok_or("levels missing")?;
        for level in levels.iter().filter(|l| !l["quotient"].is_null()) {
            multi += 1;
            for flag in ["connected", "odd_order", "vertex_transitive"] {
                if !level["quotient"][flag].is_boolean() {
                    return Err(format!("{}: flag {flag} missing", v["spec"]));
                }
            }
        }
    }
    let summary = report.summary_csv().map_err(|e| e.to_string())?;
    let mut rows = csv::Reader::from_reader(summary.as_bytes());
    let headers = rows.headers().map_err(|e| e.to_string())?.clone();
    let col = |name: &str| headers.iter().position(|h| h == name).ok_or(format!("no {name} column"));
    let flag_cols = [
        col("quotient_connected")?,
        col("quotient_odd_order")?,
        col("quotient_vertex_transitive")?,
    ];
    for (row, rec) in rows.records().zip(&report.records) {
        let row = row.map_err(|e| e.to_string())?;
        let quotients = rec.procedure.levels.iter().filter(|l| l.quotient.is_some()).count();
        for &c in &flag_cols {
            let n = row[c].split(';').filter(|s| !s.is_empty()).count();
            if n != quotients {
                return Err(format!("{}: {n} flags for {quotients} quotients", rec.spec));
            }
        }
    }
    if multi == 0 {
        return Err("no multi-level runs".into());
    }
    Ok(format!("{multi} quotient levels, all flags present"))
}

/// Automorphisms by exhaustive search over vertex maps, pruning a partial
/// map as soon as it breaks an adjacency.
fn brute_force_order(g: &Graph) -> usize {
    fn extend(g: &Graph, image: &mut Vec<usize>, used: &mut [bool]) -> usize {
        let v = image.len();
        if v == g.order() {
            return 1;
        }
        let mut count = 0;
        for w in 0..g.order() {
            if used[w] || (0..v).any(|u| g.has_edge(u, v) != g.has_edge(image[u], w)) {
                continue;
            }
            used[w] = true;
            image.push(w);
            count += extend(g, image, used);
            image.pop();
            used[w] = false;
        }
        count
    }
    extend(g, &mut Vec::new(), &mut vec![false; g.order()])
}

fn automorphism_orders() -> Outcome {
    let fixtures = [
        ("C5", Graph::cycle(5).unwrap(), Some(10)),
        ("K4", Graph::complete(4).unwrap(), Some(24)),
        ("Petersen", petersen(), Some(120)),
        ("P6", Graph::path(6).unwrap(), None),
        ("C8", Graph::cycle(8).unwrap(), None),
        ("K2,2,2", complete_multipartite(3, 2).unwrap(), None),
        ("Circ(8,{1,4})", circulant(8, &[1, 4]).unwrap(), None),
        ("Circ(7,{1,2})", circulant(7, &[1, 2]).unwrap(), None),
        ("cube", Graph::new(8, (0..8).flat_map(|v| [1, 2, 4].map(|b| (v, v ^ b))).filter(|(a, b)| a < b)).unwrap(), None),
        ("paw", Graph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap(), None),
        ("K1,3+K1", Graph::new(5, [(0, 1), (0, 2), (0, 3)]).unwrap(), None),
        ("empty6", Graph::empty(6).unwrap(), None),
        ("sparse7", Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (5, 6), (1, 4)]).unwrap(), None),
    ];
    for (name, g, expected) in &fixtures {
        let order = automorphism_group(g).map_err(|e| e.to_string())?.order();
        let brute = brute_force_order(g);
        if order != brute || expected.is_some_and(|e| e != order) {
            return Err(format!("{name}: computed {order}, brute force {brute}, expected {expected:?}"));
        }
    }
    Ok(format!("{} fixtures, Petersen = 120", fixtures.len()))
}

fn complement_invariance() -> Outcome {
    let specs = generate_specs(&CensusConfig::default());
    for spec in &specs {
        let g = spec.build().map_err(|e| format!("{spec}: {e}"))?;
        let a = is_vertex_transitive(&g).map_err(|e| e.to_string())?;
        let b = is_vertex_transitive(&g.complement()).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("{spec}: {a} vs complement {b}"));
        }
    }
    Ok(format!("{} generated graphs", specs.len()))
}

fn petersen_is_not_hamiltonian() -> Outcome {
    match hamilton_cycle(&petersen(), &Budget::unlimited()) {
        Ok(Search::Absent) => Ok("absent".into()),
        other => Err(format!("{other:?}")),
    }
}

fn census_is_deterministic() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for run in ["a", "b"] {
        let out = dir.path().join(run);
        let status = Command::new(env!("CARGO_BIN_EXE_oddvt"))
            .args(["census", "--families", "circulant,cayley,kneser,complement", "--max-n", "15"])
            .arg("--out-dir")
            .arg(&out)
            .stderr(Stdio::null())
            .status()
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("census run {run} failed: {status}"));
        }
        outputs.push(out);
    }
    for name in ["records.jsonl", "summary.csv", "filtered.log"] {
        let a = std::fs::read(outputs[0].join(name)).map_err(|e| e.to_string())?;
        let b = std::fs::read(outputs[1].join(name)).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("{name} differs between runs"));
        }
        if a.is_empty() {
            return Err(format!("{name} is empty"));
        }
    }
    Ok("records.jsonl, summary.csv and filtered.log identical".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("1 uniform odd 2-factor matches enumeration", lemma_matches_enumeration),
        ("2 Hamilton oracle finds cycles", oracle_finds_hamilton_cycles),
        ("3 procedure cycles validate", procedure_cycles_validate),
        ("4 quotient flags reported", quotient_flags_complete),
        ("5 automorphism group orders", automorphism_orders),
        ("6 complement invariance", complement_invariance),
        ("7 Petersen negative control", petersen_is_not_hamiltonian),
        ("8 census determinism", census_is_deterministic),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
