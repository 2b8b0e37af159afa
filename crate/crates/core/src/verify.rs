//! Verification suites: fixed batteries of checks over one spec.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::aut_search::{aut_group_mod_shift, growth_bound, required_depth, AutReport, CheckStatus, DEFAULT_BUDGET};
use crate::complexity::{
    extension_failure_count, morse_hedlund_flag, nonuniquely_left_extendable_count, profile, right_special_count,
};
use crate::error::{Error, Result};
use crate::models::{builtin_example, BuiltinParams, PeriodicShift, ShiftSpec};
use crate::periodic_aut::{
    as_block_code, brute_force_aut, classify, closure, code_to_permutation, full_group_intersection, generators,
    BRUTE_FORCE_POINTS,
};
use crate::words::LanguageTable;

pub const SUITES: [&str; 6] = ["sturmian", "periodic", "growth", "cassaigne", "boshernitzan", "examples-6"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Warning,
    Skipped,
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Warning => "warning",
            Outcome::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

impl Check {
    fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        let outcome = if ok { Outcome::Pass } else { Outcome::Fail };
        Check { name: name.into(), outcome, detail: detail.into() }
    }

    fn with(name: &str, outcome: Outcome, detail: impl Into<String>) -> Self {
        Check { name: name.into(), outcome, detail: detail.into() }
    }
}

/// Parameters shared by the suites; `None` picks the suite default.
#[derive(Debug, Clone, Default)]
pub struct SuiteParams {
    pub max_n: Option<usize>,
    pub range: Option<usize>,
    pub inv_range: Option<usize>,
    pub horizon: Option<usize>,
    pub budget: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(|c| c.outcome == Outcome::Fail)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name, "outcome": c.outcome.label(), "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Runs suite `name`. `examples-6` ignores `spec`; the others require one.
pub fn run_suite(name: &str, spec: Option<&ShiftSpec>, params: &SuiteParams) -> Result<SuiteReport> {
    let need = || spec.ok_or_else(|| Error::BadParams(format!("suite `{name}` needs a spec")));
    let checks = match name {
        "sturmian" => sturmian_suite(need()?, params)?,
        "periodic" => periodic_suite(need()?, params)?,
        "growth" => growth_suite(need()?, params)?,
        "cassaigne" => cassaigne_suite(need()?, params)?,
        "boshernitzan" => boshernitzan_suite(need()?, params)?,
        "examples-6" => examples_suite(params)?,
        other => return Err(Error::BadParams(format!("unknown suite `{other}`"))),
    };
    Ok(SuiteReport { suite: name.into(), checks })
}

fn aut_checks(report: &AutReport) -> Vec<Check> {
    report
        .invariants
        .iter()
        .map(|inv| match &inv.status {
            CheckStatus::Pass => Check::new(&inv.name, true, ""),
            CheckStatus::Fail(d) => Check::new(&inv.name, false, d.clone()),
            CheckStatus::Skipped(d) => Check::with(&inv.name, Outcome::Skipped, d.clone()),
        })
        .collect()
}

fn aut_report(spec: &ShiftSpec, range: usize, inv_range: usize, horizon: usize, budget: u64) -> Result<AutReport> {
    let table = spec.generate_language(required_depth(range, inv_range, horizon))?;
    aut_group_mod_shift(&table, range, inv_range, horizon, budget)
}

fn first_failure(
    ns: impl IntoIterator<Item = usize>,
    bad: impl Fn(usize) -> Result<Option<String>>,
) -> Result<Option<String>> {
    for n in ns {
        if let Some(msg) = bad(n)? {
            return Ok(Some(msg));
        }
    }
    Ok(None)
}

fn check_from(name: &str, failure: Option<String>, ok_detail: String) -> Check {
    match failure {
        Some(msg) => Check::new(name, false, msg),
        None => Check::new(name, true, ok_detail),
    }
}

fn sturmian_suite(spec: &ShiftSpec, p: &SuiteParams) -> Result<Vec<Check>> {
    if !matches!(spec, ShiftSpec::Sturmian { .. }) {
        return Err(Error::BadParams("the sturmian suite needs a sturmian spec".into()));
    }
    let max_n = p.max_n.unwrap_or(64);
    let table = spec.generate_language(max_n)?;
    let mut checks = Vec::new();
    let fail = first_failure(1..=max_n, |n| {
        let c = table.complexity(n);
        Ok((c != n + 1).then(|| format!("P({n}) = {c}")))
    })?;
    checks.push(check_from("complexity-is-n-plus-one", fail, format!("n <= {max_n}")));
    let fail = first_failure(0..max_n, |n| {
        let c = right_special_count(&table, n)?;
        Ok((c != 1).then(|| format!("{c} right-special words of length {n}")))
    })?;
    checks.push(check_from("one-right-special-per-length", fail, format!("n < {max_n}")));
    let fail = first_failure(0..max_n, |n| {
        let c = nonuniquely_left_extendable_count(&table, n)?;
        Ok((c != 1).then(|| format!("{c} left-special words of length {n}")))
    })?;
    checks.push(check_from("one-left-special-per-length", fail, format!("n < {max_n}")));

    let (r, ri) = (p.range.unwrap_or(2), p.inv_range.unwrap_or(2));
    let horizon = p.horizon.unwrap_or(12);
    let report = aut_report(spec, r, ri, horizon, p.budget.unwrap_or(DEFAULT_BUDGET))?;
    let powers: BTreeSet<i64> = report.certified.iter().filter_map(|c| c.shift_power).collect();
    let all_powers = report.certified.iter().all(|c| c.shift_power.is_some());
    let top = r.min(ri) as i64;
    let expected: BTreeSet<i64> = (-top..=top).collect();
    checks.push(Check::new(
        "automorphisms-are-shift-powers",
        all_powers && powers == expected && report.unknown.is_empty(),
        format!("{} certified, {} unknown, powers {:?}", report.certified.len(), report.unknown.len(), powers),
    ));
    checks.push(Check::new(
        "one-coset-mod-shift",
        report.coset_count() == 1,
        format!("{} cosets at range {r}, inverse range {ri}, horizon {horizon}", report.coset_count()),
    ));
    checks.extend(aut_checks(&report));
    Ok(checks)
}

fn periodic_suite(spec: &ShiftSpec, p: &SuiteParams) -> Result<Vec<Check>> {
    let ps = PeriodicShift::from_spec(spec)?;
    let desc = classify(&ps)?;
    let mut checks = Vec::new();
    if ps.num_points() > BRUTE_FORCE_POINTS {
        checks.push(Check::with(
            "order-formula-matches-brute-force",
            Outcome::Skipped,
            format!("{} points exceeds {BRUTE_FORCE_POINTS}", ps.num_points()),
        ));
        return Ok(checks);
    }
    let group = brute_force_aut(&ps)?;
    checks.push(Check::new(
        "order-formula-matches-brute-force",
        desc.order == BigUint::from(group.len()),
        format!("formula {}, brute force {}", desc.order, group.len()),
    ));
    let generated = closure(&generators(&ps), ps.num_points())?;
    let brute: BTreeSet<Vec<usize>> = group.iter().cloned().collect();
    checks.push(Check::new(
        "generators-generate-aut",
        generated == brute,
        format!("{} elements generated", generated.len()),
    ));

    let full = full_group_intersection(&ps)?;
    let expected_order: usize = desc.factors.iter().map(|&(n, m)| n.pow(m as u32)).product();
    let expected_quotient: usize = desc.factors.iter().map(|&(_, m)| (1..=m).product::<usize>()).product();
    checks.push(Check::new("orbit-preserving-subgroup-abelian", full.abelian, ""));
    checks.push(Check::new("orbit-preserving-subgroup-normal", full.normal, ""));
    checks.push(Check::new(
        "orbit-preserving-subgroup-order",
        full.order == expected_order && full.quotient_order == expected_quotient,
        format!(
            "order {} (expected {expected_order}), quotient {} (expected {expected_quotient})",
            full.order, full.quotient_order
        ),
    ));

    let depth = 2 * ps.lcm_period() + 1;
    let table = spec.generate_language(depth)?;
    let mut max_range = 0;
    let mut realized = true;
    for perm in &group {
        let code = as_block_code(&ps, perm, &table)?;
        max_range = max_range.max(code.range());
        realized &= code_to_permutation(&ps, &code).as_ref() == Some(perm);
    }
    checks.push(Check::new("block-codes-realize-aut", realized, format!("largest range needed {max_range}")));

    let r = p.range.unwrap_or(max_range);
    let ri = p.inv_range.unwrap_or(r);
    let horizon = p.horizon.unwrap_or(2 * (r + ri) + 1);
    match aut_report(spec, r, ri, horizon, p.budget.unwrap_or(DEFAULT_BUDGET)) {
        Ok(report) => {
            let found: Option<BTreeSet<Vec<usize>>> =
                report.certified.iter().map(|c| code_to_permutation(&ps, &c.code)).collect();
            let ok = found.as_ref() == Some(&brute) && report.certified.len() == brute.len();
            checks.push(Check::new(
                "aut-search-matches-brute-force",
                ok,
                format!("{} certified at range {r}, brute force {}", report.certified.len(), brute.len()),
            ));
            checks.extend(aut_checks(&report));
        }
        Err(e @ Error::SearchBudgetExceeded { .. }) => {
            checks.push(Check::with("aut-search-matches-brute-force", Outcome::Skipped, e.to_string()));
        }
        Err(e) => return Err(e),
    }
    Ok(checks)
}

fn growth_suite(spec: &ShiftSpec, p: &SuiteParams) -> Result<Vec<Check>> {
    let r = p.range.unwrap_or(3);
    let ri = p.inv_range.unwrap_or(r);
    let horizon = p.horizon.unwrap_or((4 * r + 1).max(12));
    let report = aut_report(spec, r, ri, horizon, p.budget.unwrap_or(DEFAULT_BUDGET))?;
    let table = spec.generate_language(p.max_n.unwrap_or(horizon).max(2))?;
    let prof = profile(&table);
    let mut checks = Vec::new();
    let counts: Vec<String> =
        report.growth_counts.iter().map(|c| c.map_or("-".to_string(), |c| c.to_string())).collect();
    if spec.is_aperiodic_minimal() {
        let mut bad = Vec::new();
        let mut bounds = Vec::new();
        for (rr, c) in report.growth_counts.iter().enumerate() {
            let bound = growth_bound(&prof, 0, rr);
            bounds.push(bound.to_string());
            if let Some(c) = c {
                if *c > bound {
                    bad.push(format!("r = {rr}: {c} > {bound}"));
                }
            }
        }
        checks.push(Check::new(
            "growth-within-bound",
            bad.is_empty(),
            if bad.is_empty() {
                format!(
                    "counts [{}], bounds [{}] (B = {}, k = {})",
                    counts.join(", "),
                    bounds.join(", "),
                    prof.b,
                    prof.k_linear
                )
            } else {
                bad.join("; ")
            },
        ));
    } else {
        checks.push(Check::with(
            "growth-within-bound",
            Outcome::Skipped,
            format!("bound stated for aperiodic minimal shifts; counts [{}]", counts.join(", ")),
        ));
    }
    checks.extend(aut_checks(&report));
    Ok(checks)
}

fn extension_bound_check(table: &LanguageTable, b: usize) -> Result<Check> {
    let max_n = table.max_n();
    let mut fail = None;
    'outer: for n in 1..max_n {
        for m in 0..=max_n - n {
            let c = extension_failure_count(table, n, m)?;
            if c > b * m {
                fail = Some(format!("n = {n}, m = {m}: {c} > {}", b * m));
                break 'outer;
            }
        }
    }
    Ok(check_from("extension-failures-at-most-Bm", fail, format!("B = {b}, n + m <= {max_n}")))
}

fn cassaigne_suite(spec: &ShiftSpec, p: &SuiteParams) -> Result<Vec<Check>> {
    let max_n = p.max_n.unwrap_or(24);
    let table = spec.generate_language(max_n)?;
    let prof = profile(&table);
    let mut checks = Vec::new();
    let head = prof.differences.iter().take(max_n / 2).copied().max().unwrap_or(0);
    let tail = prof.differences.iter().skip(max_n / 2).copied().max().unwrap_or(0);
    checks.push(Check::new(
        "differences-do-not-grow",
        tail <= head,
        format!("max difference {head} on n < {}, {tail} after; B = {}, k = {}", max_n / 2, prof.b, prof.k_linear),
    ));
    checks.push(extension_bound_check(&table, prof.b)?);
    let flag = morse_hedlund_flag(&prof);
    match (spec, flag) {
        (ShiftSpec::Periodic { .. }, Some(n)) => {
            let points = PeriodicShift::from_spec(spec)?.num_points();
            let steady = (n..=max_n).all(|m| prof.p(m) == points);
            checks.push(Check::new(
                "periodic-flag-consistent",
                steady,
                format!("P(n) <= n first at n = {n}; {points} points"),
            ));
        }
        (ShiftSpec::Periodic { .. }, None) => {
            checks.push(Check::with("periodic-flag-consistent", Outcome::Skipped, "flag not reached at this depth"));
        }
        (_, Some(n)) => checks.push(Check::new(
            "periodic-flag-consistent",
            false,
            format!("P({n}) <= {n} for a spec with non-periodic points"),
        )),
        (_, None) => checks.push(Check::new("periodic-flag-consistent", true, "no flag")),
    }
    Ok(checks)
}

fn sturmian_parts(spec: &ShiftSpec) -> bool {
    match spec {
        ShiftSpec::Sturmian { .. } => true,
        ShiftSpec::Union { parts } => parts.iter().all(sturmian_parts),
        _ => false,
    }
}

fn boshernitzan_suite(spec: &ShiftSpec, p: &SuiteParams) -> Result<Vec<Check>> {
    let max_n = p.max_n.unwrap_or(32);
    let table = spec.generate_language(max_n + 1)?;
    let prof = profile(&table);
    let k = prof.k_linear;
    let counts: Vec<usize> =
        (1..=max_n).map(|n| nonuniquely_left_extendable_count(&table, n)).collect::<Result<_>>()?;
    let name = "left-special-count-below-k";
    let check = if sturmian_parts(spec) {
        let bad = counts.iter().position(|&c| c + 1 > k);
        match bad {
            Some(i) => Check::new(name, false, format!("n = {}: {} words, k = {k}", i + 1, counts[i])),
            None => Check::new(name, true, format!("every n <= {max_n}, k = {k}")),
        }
    } else if matches!(spec, ShiftSpec::Substitution { .. }) {
        let tail = prof.tail_start();
        let good: Vec<usize> = (tail..=max_n).filter(|&n| counts[n - 1] < k).collect();
        Check::new(name, !good.is_empty(), format!("holds at {} of the lengths {tail}..={max_n}, k = {k}", good.len()))
    } else {
        Check::with(name, Outcome::Skipped, "stated for minimal shifts")
    };
    Ok(vec![check])
}

/// `n + 2^{⌊log2 n⌋+1} - 1`, the closed form quoted for the doubling family.
pub fn doubling_closed_form(n: usize) -> usize {
    n + (1 << (usize::BITS - n.leading_zeros())) - 1
}

/// Orbits needed for the doubling table to be exact up to length `max_n`.
pub fn doubling_levels(max_n: usize) -> usize {
    let mut levels = 1;
    while (1 << levels) + 1 < max_n {
        levels += 1;
    }
    levels
}

fn examples_suite(p: &SuiteParams) -> Result<Vec<Check>> {
    let max_n = p.max_n.unwrap_or(32);
    let mut checks = Vec::new();
    for k in [2usize, 3] {
        let spec = builtin_example("union-sturmian", &BuiltinParams { k: Some(k), ..Default::default() })?;
        let table = spec.generate_language(max_n)?;
        let fail = first_failure(1..=max_n, |n| {
            let c = table.complexity(n);
            Ok((c != k * n + k).then(|| format!("P({n}) = {c}, expected {}", k * n + k)))
        })?;
        checks.push(check_from(&format!("union-k{k}-complexity"), fail, format!("P(n) = {k}n + {k}, n <= {max_n}")));
    }

    let marked = builtin_example("marked-transitive", &BuiltinParams::default())?;
    let marked_table = marked.generate_language(max_n)?;
    let base_table = ShiftSpec::fibonacci().generate_language(max_n)?;
    let fail = first_failure(1..=max_n, |n| {
        let (a, b) = (marked_table.complexity(n), base_table.complexity(n));
        Ok((a != b + n).then(|| format!("n = {n}: {a} vs {b} + {n}")))
    })?;
    checks.push(check_from("marked-point-adds-n", fail, format!("n <= {max_n}")));

    let doubling = builtin_example(
        "doubling-periodic",
        &BuiltinParams { n_max: Some(doubling_levels(max_n)), ..Default::default() },
    )?;
    let table = doubling.generate_language(max_n)?;
    let fail = first_failure(1..=max_n, |n| {
        let c = table.complexity(n);
        Ok((c >= 3 * n).then(|| format!("P({n}) = {c}")))
    })?;
    checks.push(check_from("doubling-below-3n", fail, format!("n <= {max_n}")));
    let mismatches: Vec<String> = (1..=max_n)
        .filter(|&n| table.complexity(n) != doubling_closed_form(n))
        .map(|n| format!("n = {n}: measured {}, closed form {}", table.complexity(n), doubling_closed_form(n)))
        .collect();
    checks.push(if mismatches.is_empty() {
        Check::new("doubling-closed-form", true, "matches")
    } else {
        Check::with(
            "doubling-closed-form",
            Outcome::Warning,
            format!("{} lengths differ; measured values are authoritative ({})", mismatches.len(), mismatches[0]),
        )
    });
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        assert_eq!(doubling_closed_form(1), 2);
        assert_eq!(doubling_closed_form(2), 5);
        assert_eq!(doubling_closed_form(4), 11);
        assert_eq!(doubling_levels(32), 5);
        assert_eq!(doubling_levels(3), 1);
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", None, &SuiteParams::default()).is_err());
        assert!(run_suite("sturmian", None, &SuiteParams::default()).is_err());
    }

    #[test]
    fn fibonacci_sturmian_suite() {
        let params = SuiteParams { max_n: Some(20), ..Default::default() };
        let report = run_suite("sturmian", Some(&ShiftSpec::fibonacci()), &params).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
    }
}
