//! Acceptance criteria 1 to 11, one line each.
//!
//! Built with `harness = false` so the verdicts are printed even when the
//! run succeeds. Every comparison is exact: big integers and rationals
//! compared for equality, tolerance zero. The process exits non-zero if
//! any criterion fails.

use std::collections::BTreeSet;
use std::time::Instant;

use mlq::characterize::{characterize_three_species, shift_suite};
use mlq::combinatorics::{brute_force_syt, count_syt, count_syt_skew, skew_shapes, Partition, SkewShape};
use mlq::formulas::{closed_c_gt, closed_c_lt, Registry};
use mlq::golden::{GoldenCell, BETA13, N13, RHO23};
use mlq::verify::{self, Kind, Suite, TableKind, TableRow, VerifyConfig};
use mlq::{CorrelationTable, Engine, ExactRatio};

const TOLERANCE: &str = "exact";

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn engine(workers: usize) -> Engine {
    // The criteria fix their own sizes; the guard only has to admit them.
    Engine::new(workers, 24)
}

fn closed_entry(i: usize, j: usize, n: usize) -> ExactRatio {
    let a = [i as i64, j as i64, n as i64];
    if i > j {
        closed_c_gt(a[0], a[1], a[2]).unwrap()
    } else {
        closed_c_lt(a[0], a[1], a[2]).unwrap()
    }
}

/// Entries that differ from the closed forms.
fn against_closed(t: &CorrelationTable) -> Vec<(usize, usize)> {
    t.entries
        .iter()
        .filter(|((i, j), _)| i != j)
        .filter(|((i, j), v)| **v != closed_entry(*i, *j, t.n))
        .map(|(k, _)| *k)
        .collect()
}

fn direct_tables(e: &Engine) -> Vec<CorrelationTable> {
    (2..=5).map(|n| e.correlations_direct(n).unwrap()).collect()
}

fn projection_tables(e: &Engine) -> Vec<CorrelationTable> {
    (2..=7).map(|n| e.correlations_via_projection(n).unwrap()).collect()
}

fn table_rows(e: &Engine, kind: TableKind, ns: std::ops::RangeInclusive<usize>) -> Vec<TableRow> {
    verify::table(e, &Registry::new(), kind, ns).unwrap()
}

fn crit_correlations(tables: &[CorrelationTable], route: &str) -> Outcome {
    let mut bad = Vec::new();
    let mut entries = 0;
    for t in tables {
        entries += t.n * (t.n - 1);
        for (i, j) in against_closed(t) {
            bad.push(format!("c_{i},{j}({})", t.n));
        }
    }
    let ns: Vec<usize> = tables.iter().map(|t| t.n).collect();
    outcome(
        bad.is_empty(),
        format!("{route}, n = {ns:?}, {entries} off-diagonal entries, {} differ {bad:?}", bad.len()),
    )
}

/// Compares enumeration with published cells.
fn crit_table(rows: &[TableRow], golden: &[GoldenCell], examples: &[(i64, i64, i64, u64)]) -> Outcome {
    let mut bad = Vec::new();
    for g in golden {
        let row = rows
            .iter()
            .find(|r| r.s == g.s && r.t.unwrap_or(0) == g.t && r.n == g.n)
            .expect("cell present");
        if row.enumerated != g.value.into() {
            bad.push(format!("({},{},{}) enumerated {} published {}", g.s, g.t, g.n, row.enumerated, g.value));
        }
    }
    for &(s, t, n, v) in examples {
        let hit = golden.iter().any(|g| (g.s, g.t, g.n, g.value) == (s, t, n, v));
        assert!(hit, "example ({s},{t},{n}) = {v} is not in the reference table");
    }
    outcome(
        bad.is_empty(),
        format!("{} cells, {} differ {bad:?}", golden.len(), bad.len()),
    )
}

fn crit_syt() -> Outcome {
    let mut straight = 0;
    let mut bad = Vec::new();
    for n in 0..=10 {
        for lam in Partition::all_of(n) {
            straight += 1;
            let shape = SkewShape::straight(lam.clone());
            if count_syt(&lam) != brute_force_syt(&shape).unwrap() {
                bad.push(shape.to_string());
            }
        }
    }
    let shapes = skew_shapes(12);
    for s in &shapes {
        if count_syt_skew(s) != brute_force_syt(s).unwrap() {
            bad.push(s.to_string());
        }
    }
    let worked = SkewShape::new(Partition::new(vec![6, 4]).unwrap(), Partition::new(vec![3]).unwrap()).unwrap();
    let worked_value = count_syt_skew(&worked);
    if worked_value != 34.into() {
        bad.push(format!("{worked} = {worked_value}"));
    }
    outcome(
        bad.is_empty(),
        format!(
            "{straight} straight shapes (|λ| <= 10), {} skew shapes (<= 12 cells, no empty rows or columns), f(6,4)/(3) = {worked_value}, {} differ {bad:?}",
            shapes.len(),
            bad.len()
        ),
    )
}

fn crit_characterization(e: &Engine) -> Outcome {
    let reps = characterize_three_species(e, 11).unwrap();
    let mut parts = Vec::new();
    for r in &reps {
        let mut p = format!(
            "{}: {} placements, {} in scope, {} disagree ({} with t >= 1)",
            r.name, r.checked, r.applicable, r.violations, r.violations_t_positive
        );
        if let Some(cx) = &r.first_counterexample {
            p.push_str(&format!(", first at type {:?} rows {:?} word {:?}", cx.m, cx.rows, cx.word));
        }
        parts.push(p);
    }
    outcome(reps.iter().all(|r| r.violations == 0), format!("N <= 11; {}", parts.join("; ")))
}

fn crit_shift(e: &Engine) -> Outcome {
    let r = shift_suite(e, 9).unwrap();
    outcome(
        r.passed(),
        format!(
            "N <= 9, {} types, {} placements; rotation failures {}, preservation failures {}, shift^N failures {}",
            r.types, r.checked, r.rotation_failures, r.preservation_failures, r.period_failures
        ),
    )
}

fn suite_report(e: &Engine, suite: Suite) -> verify::Report {
    let config = VerifyConfig {
        suite,
        max_total: 13,
        registry: Registry::new(),
    };
    verify::run(e, &config).unwrap()
}

fn crit_identities(report: &verify::Report) -> Outcome {
    let groups = [
        "eq:nx3",
        "eq:rhosum",
        "alpha_plus_beta",
        "eq:del1dot",
        "eq:deldot1",
        "eq:del2dot",
        "eq:lumping",
    ];
    let mut parts = Vec::new();
    let mut pass = true;
    for g in groups {
        let checks: Vec<_> = report.checks.iter().filter(|c| c.group == g).collect();
        let failed = checks.iter().filter(|c| !c.ok).count();
        pass &= !checks.is_empty() && failed == 0;
        parts.push(format!("{g} {}/{}", checks.len() - failed, checks.len()));
    }
    outcome(pass, format!("N <= 13; {}", parts.join(", ")))
}

fn crit_conjectures(report: &verify::Report) -> Outcome {
    let checks: Vec<_> = report.checks.iter().filter(|c| c.kind == Kind::Conjecture).collect();
    let counter: Vec<String> = report
        .counterexamples()
        .map(|c| format!("{} {} {} != {}", c.group, c.args_string(), c.left, c.right))
        .collect();
    let documented = report.to_plain().contains("no counterexamples found");
    let groups: BTreeSet<&str> = checks.iter().map(|c| c.group.as_str()).collect();
    outcome(
        !checks.is_empty() && counter.is_empty() && documented,
        format!(
            "N <= 13, {} checks over {groups:?}, {} counterexamples {counter:?}; absence of counterexamples is evidence, not a proof",
            checks.len(),
            counter.len()
        ),
    )
}

type Snapshot = (Vec<CorrelationTable>, Vec<CorrelationTable>, Vec<Vec<TableRow>>);

fn snapshot(e: &Engine) -> Snapshot {
    (
        direct_tables(e),
        projection_tables(e),
        vec![
            table_rows(e, TableKind::N13, 5..=6),
            table_rows(e, TableKind::Beta13, 5..=6),
            table_rows(e, TableKind::Rho23, 3..=6),
        ],
    )
}

fn main() {
    let started = Instant::now();
    println!("acceptance: tolerance {TOLERANCE} (zero) for every comparison");
    let e = engine(mlq::engine::default_workers());
    let mut results: Vec<(usize, Outcome, f64)> = Vec::new();
    let mut run = |k: usize, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let o = f();
        let secs = t.elapsed().as_secs_f64();
        println!("criterion {k:>2}: {} ({secs:.1} s) {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        results.push((k, o, secs));
    };

    let mut direct = Vec::new();
    let mut projection = Vec::new();
    let mut tables = Vec::new();
    run(1, &mut || {
        direct = direct_tables(&e);
        crit_correlations(&direct, "direct enumeration")
    });
    run(2, &mut || {
        projection = projection_tables(&e);
        crit_correlations(&projection, "projection route")
    });
    run(3, &mut || {
        tables.push(table_rows(&e, TableKind::N13, 5..=6));
        crit_table(&tables[0], N13, &[(3, 1, 5, 770), (2, 2, 6, 462)])
    });
    run(4, &mut || {
        tables.push(table_rows(&e, TableKind::Beta13, 5..=6));
        crit_table(&tables[1], BETA13, &[(4, 0, 5, 924), (5, 0, 6, 19110)])
    });
    run(5, &mut || {
        tables.push(table_rows(&e, TableKind::Rho23, 3..=6));
        crit_table(
            &tables[2],
            RHO23,
            &[(1, 0, 3, 3), (2, 0, 4, 40), (2, 0, 5, 70), (2, 0, 6, 112), (3, 0, 5, 630), (3, 0, 6, 1260), (4, 0, 6, 11088)],
        )
    });
    run(6, &mut crit_syt);
    run(7, &mut || crit_characterization(&e));
    run(8, &mut || crit_shift(&e));
    let lemmas = suite_report(&e, Suite::Lemmas);
    run(9, &mut || crit_identities(&lemmas));
    let conj = suite_report(&e, Suite::Conjectures);
    run(10, &mut || crit_conjectures(&conj));
    let base = (direct, projection, tables);
    run(11, &mut || {
        let differ: Vec<usize> = [1, 2, 8]
            .into_iter()
            .filter(|&w| snapshot(&engine(w)) != base)
            .collect();
        outcome(
            differ.is_empty(),
            format!("criteria 1-5 recomputed with 1, 2 and 8 workers; differing worker counts {differ:?}"),
        )
    });

    let failed: Vec<usize> = results.iter().filter(|(_, o, _)| !o.pass).map(|(k, _, _)| *k).collect();
    println!(
        "acceptance: {} of {} criteria pass in {:.1} s; failing {failed:?}",
        results.len() - failed.len(),
        results.len(),
        started.elapsed().as_secs_f64()
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
