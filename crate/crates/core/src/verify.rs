//! Verification suites: closed forms against enumeration, identities,
//! characterizations and conjectures, collected into a report.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::characterize::{characterize_three_species, order_independence, shift_suite};
use crate::combinatorics::{
    binomial, brute_force_syt, count_syt, count_syt_skew, count_syt_three_row, count_syt_two_row, multinomial,
    ratio, ratio_string, skew_shapes, two_row_or_zero, ExactCount, ExactRatio, Partition, SkewShape,
};
use crate::engine::{inclusion_exclusion, CorrelationTable, Engine, PairCounts};
use crate::error::{Error, Result};
use crate::formulas::{
    closed_c, gamma_triple_sum, lumping_lhs, lumping_rhs, rho_triple_sum, GammaVariant, Registry,
    RhoVariant,
};
use crate::golden;
use crate::queue::TypeVector;

/// Default bound on `N` for the enumeration grids.
pub const DEFAULT_MAX_TOTAL: usize = 13;
/// Largest `N` for the exhaustive characterization checks.
pub const CHARACTERIZATION_MAX_TOTAL: usize = 11;
pub const SHIFT_MAX_TOTAL: usize = 9;
pub const ORDER_MAX_TOTAL: usize = 8;
/// Largest skew shape checked against the brute-force count; smaller
/// budgets use `max_total - 1` cells.
pub const SKEW_MAX_CELLS: usize = 12;
/// Largest `n` for the closed-form assembly of the correlations.
pub const ASSEMBLY_MAX_N: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Theorems,
    Lemmas,
    Conjectures,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorems => "theorems",
            Suite::Lemmas => "lemmas",
            Suite::Conjectures => "conjectures",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorems" => Ok(Suite::Theorems),
            "lemmas" => Ok(Suite::Lemmas),
            "conjectures" => Ok(Suite::Conjectures),
            "all" => Ok(Suite::All),
            other => Err(Error::UnknownFormula(format!("suite {other}"))),
        }
    }
}

/// How a check affects the outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// A mismatch fails the run.
    Gate,
    /// Parameters at the edge of a statement's range (no species-2
    /// particles); disagreements are listed but do not fail the run.
    Boundary,
    /// Extra evidence reported without a verdict, such as alternative
    /// readings of a printed sum.
    Informational,
    /// An open conjecture; disagreements are counterexamples, not failures.
    Conjecture,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Gate => "gate",
            Kind::Boundary => "boundary",
            Kind::Informational => "info",
            Kind::Conjecture => "conjecture",
        }
    }
}

/// One comparison of two exact values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub kind: Kind,
    pub group: String,
    pub args: Vec<i64>,
    /// Usually the enumerated value.
    pub left: String,
    /// Usually the formula value.
    pub right: String,
    pub ok: bool,
}

impl Check {
    pub fn args_string(&self) -> String {
        let a: Vec<String> = self.args.iter().map(|x| x.to_string()).collect();
        format!("({})", a.join(","))
    }
}

/// Aggregate over one group of checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSummary {
    pub suite: Suite,
    pub kind: Kind,
    pub group: String,
    pub total: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    fn push(&mut self, suite: Suite, kind: Kind, group: &str, args: &[i64], left: impl fmt::Display, right: impl fmt::Display, ok: bool) {
        self.checks.push(Check {
            suite,
            kind,
            group: group.to_string(),
            args: args.to_vec(),
            left: left.to_string(),
            right: right.to_string(),
            ok,
        });
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, suite: Suite, kind: Kind, group: &str, args: &[i64], left: T, right: T) {
        let ok = left == right;
        self.push(suite, kind, group, args, left, right, ok);
    }

    fn eq_ratio(&mut self, suite: Suite, kind: Kind, group: &str, args: &[i64], left: &ExactRatio, right: &ExactRatio) {
        self.push(suite, kind, group, args, ratio_string(left), ratio_string(right), left == right);
    }

    /// Failed gate checks.
    pub fn mismatches(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.kind == Kind::Gate && !c.ok)
    }

    /// Conjecture checks that disagree.
    pub fn counterexamples(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.kind == Kind::Conjecture && !c.ok)
    }

    pub fn passed(&self) -> bool {
        self.mismatches().next().is_none()
    }

    /// Groups in order of first appearance.
    pub fn summary(&self) -> Vec<GroupSummary> {
        let mut order: Vec<(Suite, Kind, String)> = Vec::new();
        let mut counts: HashMap<(Suite, Kind, String), (usize, usize)> = HashMap::new();
        for c in &self.checks {
            let key = (c.suite, c.kind, c.group.clone());
            let e = counts.entry(key.clone()).or_insert_with(|| {
                order.push(key);
                (0, 0)
            });
            e.0 += 1;
            e.1 += c.ok as usize;
        }
        order
            .into_iter()
            .map(|key| {
                let (total, passed) = counts[&key];
                GroupSummary {
                    suite: key.0,
                    kind: key.1,
                    group: key.2,
                    total,
                    passed,
                }
            })
            .collect()
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for g in self.summary() {
            let status = match (g.kind, g.passed == g.total) {
                (Kind::Gate, true) => "PASS",
                (Kind::Gate, false) => "FAIL",
                (Kind::Conjecture, true) => "AGREE",
                (Kind::Conjecture, false) => "COUNTEREXAMPLE",
                (_, true) => "MATCH",
                (_, false) => "DIFFER",
            };
            out.push_str(&format!(
                "{status:<14} {:<11} {:<10} {} {}/{}\n",
                g.suite.name(),
                g.kind.name(),
                g.group,
                g.passed,
                g.total
            ));
        }
        let listed: Vec<&Check> = self.checks.iter().filter(|c| !c.ok && c.kind != Kind::Informational).collect();
        if !listed.is_empty() {
            out.push('\n');
        }
        for c in listed {
            let tag = match c.kind {
                Kind::Gate => "mismatch",
                Kind::Boundary => "boundary",
                Kind::Conjecture => "counterexample",
                Kind::Informational => "info",
            };
            out.push_str(&format!("{tag} {} {}: {} != {}\n", c.group, c.args_string(), c.left, c.right));
        }
        if self.checks.iter().any(|c| c.kind == Kind::Conjecture) {
            out.push('\n');
            if self.counterexamples().next().is_none() {
                out.push_str("conjectures: no counterexamples found within the budget; this is evidence, not a proof\n");
            } else {
                out.push_str("conjectures: counterexamples listed above\n");
            }
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.passed() { "ok" } else { "mismatch" }
        ));
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,kind,group,args,left,right,ok\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},\"{}\",{},{},{}\n",
                c.suite.name(),
                c.kind.name(),
                c.group,
                c.args_string(),
                c.left,
                c.right,
                c.ok
            ));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "suite": c.suite.name(),
                    "kind": c.kind.name(),
                    "group": c.group,
                    "args": c.args,
                    "left": c.left,
                    "right": c.right,
                    "ok": c.ok,
                })
            })
            .collect();
        let summary: Vec<Value> = self
            .summary()
            .iter()
            .map(|g| {
                json!({
                    "suite": g.suite.name(),
                    "kind": g.kind.name(),
                    "group": g.group,
                    "total": g.total,
                    "passed": g.passed,
                })
            })
            .collect();
        json!({
            "passed": self.passed(),
            "summary": summary,
            "checks": checks,
            "notes": self.notes,
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub max_total: usize,
    pub registry: Registry,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            suite: Suite::All,
            max_total: DEFAULT_MAX_TOTAL,
            registry: Registry::new(),
        }
    }
}

/// `(s, t, n)` with `n >= 2`, `s + t <= n` and `n + 2s + t <= max_total`.
pub fn three_species_grid(max_total: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=max_total {
        for s in 0..=n {
            for t in 0..=n - s {
                if n + 2 * s + t <= max_total {
                    out.push((s, t, n));
                }
            }
        }
    }
    out
}

fn args3(s: usize, t: usize, n: usize) -> [i64; 3] {
    [s as i64, t as i64, n as i64]
}

fn big(v: u64) -> ExactCount {
    BigInt::from(v)
}

/// Enumeration results shared between checks.
struct Ctx<'a> {
    engine: &'a Engine,
    registry: &'a Registry,
    max_total: usize,
    three: HashMap<(usize, usize, usize), PairCounts>,
    two: HashMap<(usize, usize), PairCounts>,
    rho: HashMap<(usize, usize), BTreeMap<(u32, u32), ExactCount>>,
}

impl<'a> Ctx<'a> {
    fn three(&mut self, s: usize, t: usize, n: usize) -> Result<&PairCounts> {
        if !self.three.contains_key(&(s, t, n)) {
            let pc = self.engine.pair_counts(&TypeVector::three_species(s, t, n)?)?;
            self.three.insert((s, t, n), pc);
        }
        Ok(&self.three[&(s, t, n)])
    }

    fn two(&mut self, s: usize, n: usize) -> Result<&PairCounts> {
        if !self.two.contains_key(&(s, n)) {
            let pc = self.engine.pair_counts(&TypeVector::two_species(s, n)?)?;
            self.two.insert((s, n), pc);
        }
        Ok(&self.two[&(s, n)])
    }

    /// `ρ_{c,d}(s,n)` for all first letters `c` and second letters `d`.
    fn rho(&mut self, s: usize, n: usize) -> Result<&BTreeMap<(u32, u32), ExactCount>> {
        if !self.rho.contains_key(&(s, n)) {
            let mut m = BTreeMap::new();
            for c in 1..=3 {
                for d in 1..=3 {
                    m.insert((c, d), self.engine.count_rho(s, n, Some(c), d)?);
                }
            }
            self.rho.insert((s, n), m);
        }
        Ok(&self.rho[&(s, n)])
    }

    fn rho_d(&mut self, s: usize, n: usize, d: u32) -> Result<ExactCount> {
        let m = self.rho(s, n)?;
        Ok((1..=3).map(|c| m[&(c, d)].clone()).sum())
    }

    fn count(&self, id: &str, args: &[i64]) -> Result<ExactCount> {
        self.registry.count(id, args)
    }

    fn value(&self, id: &str, args: &[i64]) -> Result<ExactRatio> {
        Ok(self.registry.evaluate(id, args)?.value)
    }

    /// Registry `c_{i,j}` with zero on the diagonal.
    fn closed_c(&self, i: usize, j: usize, n: usize) -> Result<ExactRatio> {
        let a = [i as i64, j as i64, n as i64];
        match i.cmp(&j) {
            std::cmp::Ordering::Greater => self.value("thm:c_gt", &a),
            std::cmp::Ordering::Less => self.value("thm:c_lt", &a),
            std::cmp::Ordering::Equal => Ok(BigRational::zero()),
        }
    }

    /// Registry `T^<`, `T^>` with the zero conventions outside the range.
    fn closed_t(&self, s: i64, t: i64, n: i64) -> Result<(ExactRatio, ExactRatio)> {
        if s < 0 || t <= 0 || s + t >= n {
            return Ok((BigRational::zero(), BigRational::zero()));
        }
        Ok((self.value("eq:tst", &[s, t, n])?, self.value("eq:fin", &[s, t, n])?))
    }
}

/// Runs the selected suites. The guard applies to `max_total`.
pub fn run(engine: &Engine, config: &VerifyConfig) -> Result<Report> {
    let max_total = config.max_total;
    if max_total > engine.guard() {
        return Err(Error::GuardExceeded {
            total: max_total,
            guard: engine.guard(),
            placements: "budget for the largest grid".into(),
        });
    }
    let mut ctx = Ctx {
        engine,
        registry: &config.registry,
        max_total,
        three: HashMap::new(),
        two: HashMap::new(),
        rho: HashMap::new(),
    };
    let mut report = Report::default();
    if config.suite.includes(Suite::Theorems) {
        theorems(&mut ctx, &mut report)?;
    }
    if config.suite.includes(Suite::Lemmas) {
        lemmas(&mut ctx, &mut report)?;
    }
    if config.suite.includes(Suite::Conjectures) {
        conjectures(&mut ctx, &mut report)?;
    }
    for f in config.registry.faults() {
        report.notes.push(format!("fault injected into {f}"));
    }
    Ok(report)
}

fn correlation_checks(ctx: &Ctx, report: &mut Report, group: &str, table: &CorrelationTable) -> Result<()> {
    let n = table.n;
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let closed = ctx.closed_c(i, j, n)?;
            let got = table.get(i, j).cloned().unwrap_or_default();
            report.eq_ratio(Suite::Theorems, Kind::Gate, group, &[i as i64, j as i64, n as i64], &got, &closed);
        }
        report.eq_ratio(
            Suite::Theorems,
            Kind::Gate,
            &format!("{group}:row_sum"),
            &[i as i64, n as i64],
            &table.row_sum(i),
            &BigRational::from_integer(1.into()),
        );
    }
    Ok(())
}

fn theorems(ctx: &mut Ctx, report: &mut Report) -> Result<()> {
    let th = Suite::Theorems;
    let max_total = ctx.max_total;

    // The closed T values substituted into inclusion-exclusion give the
    // closed correlations.
    for n in 2..=ASSEMBLY_MAX_N {
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let assembled = inclusion_exclusion(n, i, j, |s, t| ctx.closed_t(s, t, n as i64))?;
                let closed = ctx.closed_c(i, j, n)?;
                report.eq_ratio(th, Kind::Gate, "assembly", &[i as i64, j as i64, n as i64], &assembled, &closed);
            }
        }
    }

    for n in 2.. {
        if n * (n + 1) / 2 > max_total {
            break;
        }
        let table = ctx.engine.correlations_direct(n)?;
        correlation_checks(ctx, report, "correlations:direct", &table)?;
    }
    for n in 2.. {
        if 3 * n - 3 > max_total {
            break;
        }
        let table = ctx.engine.correlations_via_projection(n)?;
        correlation_checks(ctx, report, "correlations:projection", &table)?;
    }

    let grid = three_species_grid(max_total);
    for &(s, t, n) in &grid {
        let a = args3(s, t, n);
        let total = n + 2 * s + t;
        let pc = ctx.three(s, t, n)?.clone();
        let mult = multinomial(total as i64, &[n as i64, (s + t) as i64, s as i64]);
        let tau = big(pc.pair(3, 2));
        report.eq(th, Kind::Gate, "eq:finaltau", &a, tau.clone(), ctx.count("eq:finaltau", &a)?);
        report.eq(th, Kind::Gate, "eq:tau", &a, tau.clone(), ctx.count("eq:tau", &a)?);
        let t_gt = ratio(tau.clone(), mult.clone());
        let t_lt = ratio(big(pc.pair(2, 3)), mult.clone());
        let (closed_lt, closed_gt) = if t == 0 || s + t == n {
            (BigRational::zero(), BigRational::zero())
        } else {
            (ctx.value("eq:tst", &a)?, ctx.value("eq:fin", &a)?)
        };
        report.eq_ratio(th, Kind::Gate, "eq:fin", &a, &t_gt, &closed_gt);
        report.eq_ratio(th, Kind::Gate, "eq:tst", &a, &t_lt, &closed_lt);

        // Summing the 3,2 pairs over all rotations and all positions of N.
        let rotated = ctx.engine.rotation_total(&TypeVector::three_species(s, t, n)?, 3, 2)?;
        report.eq(th, Kind::Gate, "rotation", &a, tau * total, rotated);

        let n3 = big(pc.first(3));
        report.eq(th, Kind::Gate, "eq:n3", &a, n3.clone(), ctx.count("eq:n3", &a)?);
        report.eq(th, Kind::Gate, "eq:n3:tableau", &a, n3, crate::formulas::n3_tableau(a[0], a[1], a[2])?);
        report.eq(th, Kind::Gate, "lem:n33", &a, big(pc.pair(3, 3)), ctx.count("lem:n33", &a)?);

        if s >= 1 {
            let n13 = big(pc.pair(1, 3));
            let alpha = big(pc.pair_with_wraps(1, 3, 0));
            let beta = big(pc.pair_with_wraps(1, 3, 1));
            let kind = if t >= 1 { Kind::Gate } else { Kind::Boundary };
            if t >= 1 && n > s + t {
                report.eq(th, Kind::Gate, "thm:n13", &a, n13.clone(), ctx.count("thm:n13", &a)?);
            } else if t == 0 && n > s {
                let extrapolated = binomial(total as i64 - 1, s as i64 - 1) * two_row_or_zero(n as i64 - 1, s as i64);
                report.eq(th, Kind::Boundary, "thm:n13", &a, n13.clone(), extrapolated);
            }
            report.eq(th, kind, "thm:alpha13", &a, alpha, ctx.count("thm:alpha13", &a)?);
            report.eq(th, kind, "thm:beta13", &a, beta, ctx.count("thm:beta13", &a)?);
            if t == 1 && s + 1 < n {
                report.eq(th, Kind::Gate, "prop:n13_s1", &[a[0], a[2]], n13, ctx.count("prop:n13_s1", &[a[0], a[2]])?);
            }
        }
    }

    // Instances above the default grid, when the budget allows.
    for &(s, t, n) in &[(2usize, 2usize, 8usize), (3, 2, 6), (4, 1, 6), (2, 3, 7), (3, 1, 7)] {
        let total = n + 2 * s + t;
        if total <= max_total && total > DEFAULT_MAX_TOTAL {
            let a = args3(s, t, n);
            let pc = ctx.three(s, t, n)?.clone();
            report.eq(th, Kind::Gate, "eq:finaltau:spot", &a, big(pc.pair(3, 2)), ctx.count("eq:finaltau", &a)?);
            report.eq(th, Kind::Gate, "thm:n13:spot", &a, big(pc.pair(1, 3)), ctx.count("thm:n13", &a)?);
        }
    }

    // Two species.
    for n in 2..=max_total {
        for s in 1..n {
            if n + s > max_total {
                continue;
            }
            let pc = ctx.two(s, n)?.clone();
            let a = [s as i64, n as i64];
            let cases: [(&str, u64); 6] = [
                ("eq:delta1", pc.first(1)),
                ("eq:delta2", pc.first(2)),
                ("eq:delta11", pc.pair(1, 1)),
                ("eq:delta12", pc.pair(1, 2)),
                ("eq:delta21", pc.pair(2, 1)),
                ("eq:delta22", pc.pair(2, 2)),
            ];
            for (id, got) in cases {
                report.eq(th, Kind::Gate, id, &a, big(got), ctx.count(id, &a)?);
            }
        }
    }

    // Type (s, 1, n-s-1) statistics.
    for n in 3..=max_total {
        for s in 1..n - 1 {
            if n + 2 * s + 1 > max_total {
                continue;
            }
            let a = [s as i64, n as i64];
            let mut beta_sum = BigInt::zero();
            for ell in 2..=s {
                let g = ctx.engine.count_gamma(s, n, ell)?;
                let ga = [s as i64, n as i64, ell as i64];
                report.eq(th, Kind::Gate, "thm:gamma_sum", &ga, g.clone(), ctx.count("thm:gamma_sum", &ga)?);
                for v in GammaVariant::ALL {
                    let value = gamma_triple_sum(ga[0], ga[1], ga[2], v)?;
                    report.eq(th, Kind::Informational, gamma_label(v), &ga, g.clone(), value);
                }
                beta_sum += g;
            }
            if s >= 2 {
                let beta = big(ctx.three(s, 1, n)?.pair_with_wraps(1, 3, 1));
                report.eq(th, Kind::Gate, "lem:gamma_decomposition", &a, beta_sum, beta);
            }
            let rho23 = ctx.rho(s, n)?[&(2, 3)].clone();
            report.eq(th, Kind::Gate, "thm:rho23_sum", &a, rho23.clone(), ctx.count("thm:rho23_sum", &a)?);
            for v in RhoVariant::ALL {
                report.eq(th, Kind::Informational, rho_label(v), &a, rho23.clone(), rho_triple_sum(a[0], a[1], v)?);
            }
            let rho3 = ctx.rho_d(s, n, 3)?;
            report.eq(th, Kind::Gate, "eq:rho3", &a, rho3, ctx.count("eq:rho3", &a)?);
            let rho33 = ctx.rho(s, n)?[&(3, 3)].clone();
            report.eq(th, Kind::Gate, "eq:rho33", &a, rho33, ctx.count("eq:rho33", &a)?);
        }
    }
    for g in report.summary() {
        if g.kind == Kind::Informational && g.group.starts_with("thm:") {
            report.notes.push(format!("{}: agrees with enumeration on {} of {} cells", g.group, g.passed, g.total));
        }
    }

    // Recurrences of the closed forms.
    type Raw = fn(i64, i64, i64) -> ExactCount;
    let raw: [(&str, Raw); 3] = [
        ("thm:n13:recurrence", |s, t, n| binomial(n + 2 * s + t - 1, s - 1) * two_row_or_zero(n - 1, s + t)),
        ("thm:alpha13:recurrence", |s, t, n| {
            (binomial(n + 2 * s + t - 2, s - 1) - binomial(n + 2 * s + t - 2, s - 3)) * two_row_or_zero(n - 1, s + t)
        }),
        ("thm:beta13:recurrence", |s, t, n| binomial(n + 2 * s + t - 1, s - 2) * two_row_or_zero(n - 1, s + t)),
    ];
    for n in 5..=ASSEMBLY_MAX_N as i64 {
        for s in 2..n {
            for t in 2..n - s {
                for (group, p) in raw {
                    let lhs = p(s, t, n);
                    let rhs = p(s - 1, t + 1, n) + p(s, t - 1, n) + p(s, t, n - 1);
                    report.eq(th, Kind::Gate, group, &[s, t, n], lhs, rhs);
                }
            }
        }
    }
    Ok(())
}

fn gamma_label(v: GammaVariant) -> &'static str {
    match v {
        GammaVariant::Statement => "thm:gamma_sum/statement",
        GammaVariant::ProofBounds => "thm:gamma_sum/proof-bounds",
        GammaVariant::ProofShapes => "thm:gamma_sum/proof-shapes",
        GammaVariant::Reconciled => "thm:gamma_sum/reconciled",
    }
}

fn rho_label(v: RhoVariant) -> &'static str {
    match v {
        RhoVariant::Statement => "thm:rho23_sum/statement",
        RhoVariant::Proof => "thm:rho23_sum/proof",
    }
}

/// Skew shapes with outer parts at most 6, at most 4 rows and at most
/// `max_cells` cells.
fn lemmas(ctx: &mut Ctx, report: &mut Report) -> Result<()> {
    let lm = Suite::Lemmas;
    let max_total = ctx.max_total;

    // Tableau counts.
    for n in 0..=10 {
        for lam in Partition::all_of(n) {
            let shape = SkewShape::straight(lam.clone());
            let args: Vec<i64> = lam.parts().iter().map(|&x| x as i64).collect();
            report.eq(lm, Kind::Gate, "syt:hook", &args, count_syt(&lam), brute_force_syt(&shape)?);
        }
    }
    let mut skew_ok = 0usize;
    let mut skew_total = 0usize;
    for shape in skew_shapes(SKEW_MAX_CELLS.min(max_total.saturating_sub(1))) {
        skew_total += 1;
        let det = count_syt_skew(&shape);
        let brute = brute_force_syt(&shape)?;
        if det == brute {
            skew_ok += 1;
        } else {
            let mut args: Vec<i64> = shape.outer().parts().iter().map(|&x| x as i64).collect();
            args.push(-1);
            args.extend(shape.inner().parts().iter().map(|&x| x as i64));
            report.push(lm, Kind::Gate, "syt:skew", &args, det, brute, false);
        }
    }
    report.push(lm, Kind::Gate, "syt:skew", &[skew_total as i64], skew_ok, skew_total, skew_ok == skew_total);
    let worked = SkewShape::new(Partition::new(vec![6, 4])?, Partition::new(vec![3])?)?;
    report.eq(lm, Kind::Gate, "syt:skew:worked", &[6, 4, 3], count_syt_skew(&worked), BigInt::from(34));
    for a in 0..=12usize {
        for b in 0..=a {
            let lam = Partition::new(vec![a, b])?;
            report.eq(lm, Kind::Gate, "syt:two_row", &[a as i64, b as i64], count_syt_two_row(a, b)?, count_syt(&lam));
            if a > 1 && b >= 1 {
                let left = two_row_or_zero(a as i64 - 1, b as i64) + two_row_or_zero(a as i64, b as i64 - 1);
                report.eq(lm, Kind::Gate, "syt:hook_recurrence", &[a as i64, b as i64], count_syt_two_row(a, b)?, left);
            }
            for c in 0..=b {
                let lam = Partition::new(vec![a, b, c])?;
                report.eq(lm, Kind::Gate, "syt:three_row", &[a as i64, b as i64, c as i64], count_syt_three_row(a, b, c)?, count_syt(&lam));
            }
        }
    }
    for n in 1..=30i64 {
        for k in 1..n {
            report.eq(lm, Kind::Gate, "binomial:pascal", &[n, k], binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }

    // Characterizations.
    let cmax = max_total.min(CHARACTERIZATION_MAX_TOTAL);
    let reps = characterize_three_species(ctx.engine, cmax)?;
    let groups = ["lem:word32", "prop:no_wrap13", "prop:one_wrap13"];
    for (rep, group) in reps.iter().zip(groups) {
        report.eq(lm, Kind::Gate, group, &[cmax as i64], rep.violations_t_positive, 0);
        let boundary = rep.violations - rep.violations_t_positive;
        report.eq(lm, Kind::Boundary, group, &[cmax as i64], boundary, 0);
        report.notes.push(format!(
            "{group}: {} placements, {} within hypotheses, {} disagreements ({} with t >= 1)",
            rep.checked, rep.applicable, rep.violations, rep.violations_t_positive
        ));
        if let Some(cx) = &rep.first_counterexample {
            report.notes.push(format!(
                "{group}: first disagreement at type {:?}, rows {:?}, word {:?}, conditions {}, word-based {}",
                cx.m, cx.rows, cx.word, cx.conditions, cx.word_holds
            ));
        }
    }

    let smax = max_total.min(SHIFT_MAX_TOTAL);
    let shift = shift_suite(ctx.engine, smax)?;
    report.eq(lm, Kind::Gate, "lem:shift:rotation", &[smax as i64], shift.rotation_failures, 0);
    report.eq(lm, Kind::Gate, "lem:shift:preservation", &[smax as i64], shift.preservation_failures, 0);
    report.eq(lm, Kind::Gate, "lem:shift:period", &[smax as i64], shift.period_failures, 0);
    report.notes.push(format!("shift: {} placements over {} types", shift.checked, shift.types));

    let omax = max_total.min(ORDER_MAX_TOTAL);
    let order = order_independence(ctx.engine, omax)?;
    report.eq(lm, Kind::Gate, "order:first_row", &[omax as i64], order.first_row_violations(), 0);
    let later: u64 = order.violations_by_row.iter().skip(1).sum();
    report.eq(lm, Kind::Informational, "order:later_rows", &[omax as i64], later, 0);
    report.notes.push(format!(
        "construction order: {} placements, {} alternative orders, violations by row {:?}",
        order.checked, order.orders_tried, order.violations_by_row
    ));

    // Identities among enumerated counts.
    for (s, t, n) in three_species_grid(max_total) {
        let a = args3(s, t, n);
        let pc = ctx.three(s, t, n)?.clone();
        report.eq(lm, Kind::Gate, "eq:nx3", &a, pc.pair(1, 3) + pc.pair(2, 3) + pc.pair(3, 3), pc.first(3));
        report.eq(
            lm,
            Kind::Gate,
            "alpha_plus_beta",
            &a,
            pc.pair_with_wraps(1, 3, 0) + pc.pair_with_wraps(1, 3, 1),
            pc.pair(1, 3),
        );
        if t == 1 && s >= 1 && s < n {
            let sum = big(pc.pair(2, 2) + pc.pair(3, 2) + pc.pair(2, 3) + pc.pair(3, 3));
            if n + s <= max_total {
                let d22 = big(ctx.two(s, n)?.pair(2, 2));
                report.eq_ratio(lm, Kind::Gate, "eq:lumping", &a, &lumping_lhs(a[0], a[2], &d22), &lumping_rhs(a[0], 1, a[2], &sum));
            }
        }
    }
    // β recurrence on enumerated values.
    for (s, t, n) in three_species_grid(max_total) {
        if s >= 2 && t >= 2 && s + t < n {
            let b = |ctx: &mut Ctx, s, t, n| -> Result<u64> { Ok(ctx.three(s, t, n)?.pair_with_wraps(1, 3, 1)) };
            let lhs = b(ctx, s, t, n)?;
            let rhs = b(ctx, s - 1, t + 1, n)? + b(ctx, s, t - 1, n)? + b(ctx, s, t, n - 1)?;
            report.eq(lm, Kind::Gate, "lem:beta_recurrence", &args3(s, t, n), lhs, rhs);
        }
    }
    for n in 2..=max_total {
        for s in 1..n {
            if n + s > max_total {
                continue;
            }
            let pc = ctx.two(s, n)?.clone();
            let a = [s as i64, n as i64];
            report.eq(lm, Kind::Gate, "eq:del1dot", &a, pc.pair(1, 1) + pc.pair(1, 2), pc.first(1));
            report.eq(lm, Kind::Gate, "eq:deldot1", &a, pc.pair(1, 1) + pc.pair(2, 1), pc.first(1));
            report.eq(lm, Kind::Gate, "eq:del2dot", &a, pc.pair(1, 2) + pc.pair(2, 2), pc.first(2));
            if n <= 5 {
                for c in 1..=2u32 {
                    let at1 = ctx.engine.delta_at_position(s, n, c, 1)?;
                    for pos in 2..=n {
                        let at = ctx.engine.delta_at_position(s, n, c, pos)?;
                        report.eq(lm, Kind::Gate, "delta:rotational", &[s as i64, n as i64, c as i64, pos as i64], at, at1.clone());
                    }
                }
            }
        }
    }
    for n in 3..=max_total {
        for s in 1..n - 1 {
            if n + 2 * s + 1 > max_total {
                continue;
            }
            let m = ctx.rho(s, n)?.clone();
            let sum: ExactCount = (1..=3).map(|c| m[&(c, 3)].clone()).sum();
            report.eq(lm, Kind::Gate, "eq:rhosum", &[s as i64, n as i64], sum, ctx.rho_d(s, n, 3)?);
        }
    }
    Ok(())
}

fn conjectures(ctx: &mut Ctx, report: &mut Report) -> Result<()> {
    let cj = Suite::Conjectures;
    let max_total = ctx.max_total;
    for n in 3..=max_total {
        for s in 1..n - 1 {
            if n + 2 * s + 1 > max_total {
                continue;
            }
            for ell in 2..=s {
                let a = [s as i64, n as i64, ell as i64];
                report.eq(cj, Kind::Conjecture, "conjecture:gamma", &a, ctx.engine.count_gamma(s, n, ell)?, ctx.count("conjecture:gamma", &a)?);
            }
            let a = [s as i64, n as i64];
            let rho = ctx.rho(s, n)?[&(2, 3)].clone();
            report.eq(cj, Kind::Conjecture, "conjecture:rho23", &a, rho.clone(), ctx.count("conjecture:rho23", &a)?);
            if n > s + 2 {
                let predicted = ctx.value("conjecture:rho_recurrence", &a)?;
                let prev = ctx.rho(s, n - 1)?[&(2, 3)].clone();
                report.eq_ratio(cj, Kind::Conjecture, "conjecture:rho_recurrence", &a, &BigRational::from_integer(rho.clone()), &predicted);
                let (lhs, rhs) = crate::formulas::rho_recurrence_sides(a[0], a[1], &rho, &prev);
                report.eq(cj, Kind::Conjecture, "conjecture:rho_recurrence:enumerated", &a, lhs, rhs);
            }
        }
    }
    report.notes.push(
        "conjecture checks compare against enumeration inside the budget; agreement is evidence, not a proof".into(),
    );
    Ok(())
}

/// Which published table to regenerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    N13,
    Beta13,
    Rho23,
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n13" => Ok(TableKind::N13),
            "beta13" => Ok(TableKind::Beta13),
            "rho23" => Ok(TableKind::Rho23),
            other => Err(Error::UnknownFormula(format!("table {other}"))),
        }
    }
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::N13 => "n13",
            TableKind::Beta13 => "beta13",
            TableKind::Rho23 => "rho23",
        }
    }

    fn golden(self) -> &'static [golden::GoldenCell] {
        match self {
            TableKind::N13 => golden::N13,
            TableKind::Beta13 => golden::BETA13,
            TableKind::Rho23 => golden::RHO23,
        }
    }
}

/// One cell of a regenerated table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub s: i64,
    /// `None` for `ρ`.
    pub t: Option<i64>,
    pub n: i64,
    pub enumerated: ExactCount,
    pub formula: ExactCount,
    pub formula_id: &'static str,
    /// Conjectured value, for `ρ`.
    pub conjecture: Option<ExactCount>,
    pub published: Option<ExactCount>,
}

impl TableRow {
    /// Every available value agrees.
    pub fn matches(&self) -> bool {
        self.enumerated == self.formula
            && self.conjecture.as_ref().is_none_or(|c| *c == self.enumerated)
            && self.published.as_ref().is_none_or(|p| *p == self.enumerated)
    }
}

/// Regenerates a table over `n` in `ns`: enumeration, the closed form (or
/// triple sum) and the published value when there is one.
pub fn table(engine: &Engine, registry: &Registry, kind: TableKind, ns: std::ops::RangeInclusive<usize>) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    let published = |s: i64, t: i64, n: i64| {
        kind.golden()
            .iter()
            .find(|c| c.s == s && c.t == t && c.n == n)
            .map(|c| BigInt::from(c.value))
    };
    let hi = *ns.end();
    for n in ns {
        match kind {
            TableKind::N13 | TableKind::Beta13 => {
                let (s_range, t_range) = if kind == TableKind::N13 {
                    (1..=n.saturating_sub(2), 1..=n.saturating_sub(2))
                } else {
                    (2..=n.saturating_sub(1), 0..=n.saturating_sub(3))
                };
                for s in s_range {
                    for t in t_range.clone() {
                        let a = args3(s, t, n);
                        let (id, feasible) = if kind == TableKind::N13 {
                            ("thm:n13", s + t < n)
                        } else {
                            ("thm:beta13", s + t <= n)
                        };
                        let (enumerated, formula) = if s + t > n {
                            (BigInt::zero(), BigInt::zero())
                        } else {
                            engine.check_guard(&TypeVector::three_species(s, t, n)?)?;
                            let pc = engine.pair_counts(&TypeVector::three_species(s, t, n)?)?;
                            let e = if kind == TableKind::N13 { pc.pair(1, 3) } else { pc.pair_with_wraps(1, 3, 1) };
                            let f = if feasible { registry.count(id, &a)? } else { BigInt::zero() };
                            (big(e), f)
                        };
                        rows.push(TableRow {
                            s: a[0],
                            t: Some(a[1]),
                            n: a[2],
                            enumerated,
                            formula,
                            formula_id: id,
                            conjecture: None,
                            published: published(a[0], a[1], a[2]),
                        });
                    }
                }
            }
            TableKind::Rho23 => {
                for s in 1..=hi.saturating_sub(2) {
                    let (si, ni) = (s as i64, n as i64);
                    let (enumerated, formula, conjecture) = if n <= s + 1 {
                        (BigInt::zero(), BigInt::zero(), BigInt::zero())
                    } else {
                        engine.check_guard(&TypeVector::three_species(s, 1, n)?)?;
                        (
                            engine.count_rho(s, n, Some(2), 3)?,
                            registry.count("thm:rho23_sum", &[si, ni])?,
                            registry.count("conjecture:rho23", &[si, ni])?,
                        )
                    };
                    rows.push(TableRow {
                        s: si,
                        t: None,
                        n: ni,
                        enumerated,
                        formula,
                        formula_id: "thm:rho23_sum",
                        conjecture: Some(conjecture),
                        published: published(si, 0, ni),
                    });
                }
            }
        }
    }
    Ok(rows)
}

/// Closed-form correlation table.
pub fn correlations_closed(n: usize) -> Result<CorrelationTable> {
    if n < 2 {
        return Err(crate::error::domain("correlations_closed", &[n as i64], "n must be at least 2"));
    }
    let mut entries = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            entries.insert((i, j), closed_c(i as i64, j as i64, n as i64)?);
        }
    }
    Ok(CorrelationTable { n, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_bounded() {
        let g = three_species_grid(8);
        assert!(g.iter().all(|&(s, t, n)| n + 2 * s + t <= 8 && s + t <= n));
        assert!(g.contains(&(1, 1, 5)));
        assert!(g.contains(&(0, 0, 8)));
    }

    #[test]
    fn small_run_passes() {
        let engine = Engine::new(2, 24);
        let config = VerifyConfig {
            suite: Suite::Theorems,
            max_total: 9,
            ..Default::default()
        };
        let report = run(&engine, &config).unwrap();
        let bad: Vec<_> = report.mismatches().collect();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn fault_is_detected() {
        let engine = Engine::new(1, 24);
        let config = VerifyConfig {
            suite: Suite::Theorems,
            max_total: 8,
            registry: Registry::new().with_fault("lem:n33").unwrap(),
        };
        let report = run(&engine, &config).unwrap();
        assert!(!report.passed());
        assert!(report.mismatches().all(|c| c.group == "lem:n33"));
    }

    #[test]
    fn budget_is_enforced() {
        let engine = Engine::new(1, 10);
        let config = VerifyConfig {
            max_total: 11,
            ..Default::default()
        };
        assert!(matches!(run(&engine, &config), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn closed_table_rows_sum_to_one() {
        let t = correlations_closed(5).unwrap();
        for i in 1..=5 {
            assert_eq!(t.row_sum(i), BigRational::from_integer(1.into()));
        }
    }

    #[test]
    fn small_tables() {
        let engine = Engine::new(1, 24);
        let reg = Registry::new();
        let rows = table(&engine, &reg, TableKind::N13, 5..=5).unwrap();
        assert_eq!(rows.len(), 9);
        assert!(rows.iter().all(|r| r.matches()), "{rows:?}");
        let rho = table(&engine, &reg, TableKind::Rho23, 3..=4).unwrap();
        assert_eq!(rho.len(), 4);
        assert!(rho.iter().all(|r| r.matches()), "{rho:?}");
    }
}
