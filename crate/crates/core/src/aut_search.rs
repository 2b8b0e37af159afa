//! Range-bounded search for endomorphisms and automorphisms of a shift.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::block_code::{
    codes_equal, compose, equals_shifted, is_endomorphism, shift_power_code, BlockCode, EndoVerdict,
};
use crate::complexity::ComplexityProfile;
use crate::error::{Error, Result};
use crate::words::{LanguageTable, Sym, Word};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// An automorphism together with an inverse found by bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutCertificate {
    pub code: BlockCode,
    pub inverse: BlockCode,
    pub horizon: usize,
    /// The endomorphism check was exact (SFT language), not horizon-bounded.
    pub exact: bool,
    /// `Some(j)` when the code is `σ^j` for some `|j| <= range`.
    pub shift_power: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Certification {
    Certified(AutCertificate),
    NotInvertibleWithin(usize),
    Refuted(Word),
}

/// A class of certified codes modulo the shift. Members are `(index, j)` with
/// `certified[index] = σ^j ∘ certified[representative]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetClass {
    pub representative: usize,
    pub members: Vec<(usize, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

impl CheckStatus {
    pub fn is_fail(&self) -> bool {
        matches!(self, CheckStatus::Fail(_))
    }

    fn to_json(&self) -> Value {
        match self {
            CheckStatus::Pass => json!({"status": "pass"}),
            CheckStatus::Fail(d) => json!({"status": "fail", "detail": d}),
            CheckStatus::Skipped(d) => json!({"status": "skipped", "detail": d}),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantCheck {
    pub name: String,
    pub status: CheckStatus,
}

impl InvariantCheck {
    fn new(name: &str, failures: Vec<String>) -> Self {
        let status = if failures.is_empty() { CheckStatus::Pass } else { CheckStatus::Fail(failures.join("; ")) };
        InvariantCheck { name: name.into(), status }
    }

    fn skipped(name: &str, reason: impl Into<String>) -> Self {
        InvariantCheck { name: name.into(), status: CheckStatus::Skipped(reason.into()) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutReport {
    pub range: usize,
    pub inv_range: usize,
    pub horizon: usize,
    pub candidates: u64,
    pub certified: Vec<AutCertificate>,
    pub refuted_count: u64,
    pub unknown: Vec<BlockCode>,
    pub cosets: Vec<CosetClass>,
    /// Entry `r` counts certified `φ` with `φ, φ⁻¹` both of range `r`; `None`
    /// when the horizon is too short to decide it.
    pub growth_counts: Vec<Option<usize>>,
    pub invariants: Vec<InvariantCheck>,
}

impl AutReport {
    pub fn coset_count(&self) -> usize {
        self.cosets.len()
    }

    pub fn invariants_hold(&self) -> bool {
        !self.invariants.iter().any(|c| c.status.is_fail())
    }

    pub fn to_json(&self) -> Value {
        let rule = |c: &BlockCode| c.codomain_alphabet().format_word(c.outputs());
        let certified: Vec<Value> = self
            .certified
            .iter()
            .map(|c| {
                json!({
                    "rule": rule(&c.code),
                    "shift_power": c.shift_power,
                    "inverse_range": c.inverse.range(),
                    "inverse_rule": rule(&c.inverse),
                    "exact": c.exact,
                })
            })
            .collect();
        let cosets: Vec<Value> = self
            .cosets
            .iter()
            .map(|c| {
                json!({
                    "representative": c.representative,
                    "members": c.members.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
                })
            })
            .collect();
        let invariants: Vec<Value> = self
            .invariants
            .iter()
            .map(|c| {
                let mut v = c.status.to_json();
                v["name"] = json!(c.name);
                v
            })
            .collect();
        json!({
            "range": self.range,
            "inv_range": self.inv_range,
            "horizon": self.horizon,
            "candidates": self.candidates,
            "certified": certified,
            "refuted_count": self.refuted_count,
            "unknown": self.unknown.iter().map(rule).collect::<Vec<_>>(),
            "cosets_mod_shift": {"count": self.cosets.len(), "classes": cosets},
            "growth_counts": self.growth_counts,
            "invariants": invariants,
        })
    }
}

/// `B·k·(C+2)·(r+1)`: the bound on `|{φ ∈ Aut_r : φ⁻¹ ∈ Aut_r}|` for a
/// transitive shift with one dense orbit.
pub fn growth_bound(profile: &ComplexityProfile, c: usize, r: usize) -> usize {
    profile.b * profile.k_linear * (c + 2) * (r + 1)
}

/// Number of range-`R` rules, `|A|^{P(2R+1)}`, saturating.
pub fn candidate_count(table: &LanguageTable, range: usize) -> Result<u64> {
    table.check_depth(2 * range + 1)?;
    let d = table.alphabet().len() as u64;
    let p = table.complexity(2 * range + 1) as u32;
    Ok(d.checked_pow(p).unwrap_or(u64::MAX))
}

struct Constraints {
    // by_last[i]: window-index sequences whose largest index is i.
    by_last: Vec<Vec<Vec<u32>>>,
}

impl Constraints {
    fn new(table: &LanguageTable, range: usize, horizon: usize) -> Self {
        let n0 = 2 * range + 1;
        let mut by_last = vec![Vec::new(); table.complexity(n0)];
        for n in n0..=horizon {
            for w in table.level(n) {
                let idx: Vec<u32> =
                    w.windows(n0).map(|win| table.index_of(win).expect("factor of a table word") as u32).collect();
                let last = *idx.iter().max().expect("nonempty") as usize;
                by_last[last].push(idx);
            }
        }
        Constraints { by_last }
    }

    fn satisfied(&self, table: &LanguageTable, i: usize, assign: &[Sym], buf: &mut Vec<Sym>) -> bool {
        self.by_last[i].iter().all(|idx| {
            buf.clear();
            buf.extend(idx.iter().map(|&k| assign[k as usize]));
            table.index_of(buf).is_some()
        })
    }
}

fn backtrack(
    table: &LanguageTable,
    cons: &Constraints,
    assign: &mut Vec<Sym>,
    total: usize,
    out: &mut Vec<Vec<Sym>>,
    buf: &mut Vec<Sym>,
) {
    let i = assign.len();
    if i == total {
        out.push(assign.clone());
        return;
    }
    for s in 0..table.alphabet().len() as Sym {
        assign.push(s);
        if cons.satisfied(table, i, assign, buf) {
            backtrack(table, cons, assign, total, out, buf);
        }
        assign.pop();
    }
}

/// Every range-`R` rule that is not refuted at `horizon`, in canonical order
/// (lexicographic in the outputs listed in window order).
pub fn enumerate_endomorphisms(
    table: &LanguageTable,
    range: usize,
    horizon: usize,
    budget: u64,
) -> Result<Vec<BlockCode>> {
    let n0 = 2 * range + 1;
    if horizon < n0 {
        return Err(Error::BadParams(format!("horizon {horizon} shorter than window {n0}")));
    }
    table.check_depth(horizon)?;
    let d = table.alphabet().len();
    let p = table.complexity(n0);
    if (p as f64) * (d as f64).ln() > (budget as f64).ln() + 1e-9 {
        return Err(Error::SearchBudgetExceeded { candidates: format!("{d}^{p}"), budget });
    }
    let cons = Constraints::new(table, range, horizon);
    let found: Vec<Vec<Vec<Sym>>> = (0..d as Sym)
        .into_par_iter()
        .map(|s| {
            let mut out = Vec::new();
            let mut buf = Vec::new();
            let mut assign = vec![s];
            if cons.satisfied(table, 0, &assign, &mut buf) {
                backtrack(table, &cons, &mut assign, p, &mut out, &mut buf);
            }
            out
        })
        .collect();
    found.into_iter().flatten().map(|outputs| BlockCode::from_outputs(table, range, outputs)).collect()
}

type WindowCheck<'a> = dyn Fn(usize, &[Sym], &mut Vec<Sym>) -> bool + 'a;

/// Looks for a range-`r` inverse of `code`, using words of length `2(R+r)+1`.
fn find_inverse(code: &BlockCode, table: &LanguageTable, r: usize) -> Result<Option<BlockCode>> {
    let big_r = code.range();
    let n = 2 * (big_r + r) + 1;
    let m = 2 * r + 1;
    let count = table.complexity(m);
    let mut forced: Vec<Option<Sym>> = vec![None; count];
    // ψ∘φ = id fixes ψ on every image window.
    for w in table.level(n) {
        let img = code.apply_to_word(w)?;
        let Some(i) = table.index_of(&img) else {
            return Ok(None);
        };
        let c = w[big_r + r];
        match forced[i] {
            None => forced[i] = Some(c),
            Some(x) if x != c => return Ok(None),
            _ => {}
        }
    }
    // φ∘ψ = id, one constraint per word, attached to its last free window.
    let free: Vec<usize> = (0..count).filter(|&i| forced[i].is_none()).collect();
    let mut rank = vec![usize::MAX; count];
    for (k, &i) in free.iter().enumerate() {
        rank[i] = k;
    }
    let mut by_last: Vec<Vec<(Vec<u32>, Sym)>> = vec![Vec::new(); free.len()];
    let mut fixed: Vec<(Vec<u32>, Sym)> = Vec::new();
    for w in table.level(n) {
        let idx: Vec<u32> =
            w.windows(m).map(|win| table.index_of(win).expect("factor of a table word") as u32).collect();
        let target = w[big_r + r];
        match idx.iter().filter(|&&i| rank[i as usize] != usize::MAX).map(|&i| rank[i as usize]).max() {
            Some(k) => by_last[k].push((idx, target)),
            None => fixed.push((idx, target)),
        }
    }
    let ok = |assign: &[Sym], (idx, target): &(Vec<u32>, Sym), buf: &mut Vec<Sym>| {
        buf.clear();
        buf.extend(idx.iter().map(|&k| assign[k as usize]));
        code.rule(buf) == Some(*target)
    };
    let mut assign: Vec<Sym> = forced.iter().map(|f| f.unwrap_or(0)).collect();
    let mut buf = Vec::new();
    if !fixed.iter().all(|c| ok(&assign, c, &mut buf)) {
        return Ok(None);
    }
    let d = table.alphabet().len() as Sym;

    fn search(
        k: usize,
        free: &[usize],
        d: Sym,
        assign: &mut Vec<Sym>,
        check: &WindowCheck<'_>,
        buf: &mut Vec<Sym>,
    ) -> bool {
        if k == free.len() {
            return true;
        }
        for s in 0..d {
            assign[free[k]] = s;
            if check(k, assign, buf) && search(k + 1, free, d, assign, check, buf) {
                return true;
            }
        }
        false
    }

    let check = |k: usize, assign: &[Sym], buf: &mut Vec<Sym>| by_last[k].iter().all(|c| ok(assign, c, buf));
    if !search(0, &free, d, &mut assign, &check, &mut buf) {
        return Ok(None);
    }
    BlockCode::from_outputs(table, r, assign).map(Some)
}

fn shift_power_of(code: &BlockCode, table: &LanguageTable) -> Result<Option<i64>> {
    let r = code.range() as i64;
    for j in -r..=r {
        if codes_equal(code, &shift_power_code(j, table)?, table)? {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

fn inverse_pair_holds(code: &BlockCode, inverse: &BlockCode, table: &LanguageTable) -> Result<bool> {
    let id = BlockCode::identity(table)?;
    Ok(codes_equal(&compose(inverse, code, table)?, &id, table)?
        && codes_equal(&compose(code, inverse, table)?, &id, table)?)
}

/// Checks `code` at `horizon`, then searches inverses of range `0..=inv_range`
/// and returns the first one found.
pub fn certify_automorphism(
    code: &BlockCode,
    table: &LanguageTable,
    inv_range: usize,
    horizon: usize,
) -> Result<Certification> {
    let needed = 2 * (code.range() + inv_range) + 1;
    if horizon < needed {
        return Err(Error::DepthExceeded { needed, max_n: horizon });
    }
    let verdict = match is_endomorphism(code, table, horizon)? {
        EndoVerdict::Refuted { witness } => return Ok(Certification::Refuted(witness)),
        v => v,
    };
    for r in 0..=inv_range {
        if let Some(inverse) = find_inverse(code, table, r)? {
            if !inverse_pair_holds(code, &inverse, table)? {
                continue;
            }
            return Ok(Certification::Certified(AutCertificate {
                shift_power: shift_power_of(code, table)?,
                code: code.clone(),
                inverse,
                horizon,
                exact: verdict == EndoVerdict::CertifiedExact,
            }));
        }
    }
    Ok(Certification::NotInvertibleWithin(inv_range))
}

/// Table depth `aut_group_mod_shift` needs.
pub fn required_depth(range: usize, inv_range: usize, horizon: usize) -> usize {
    horizon.max(2 * (range + inv_range) + 1).max(3 * range + inv_range + 1)
}

fn certify_all(
    table: &LanguageTable,
    range: usize,
    inv_range: usize,
    horizon: usize,
    budget: u64,
) -> Result<(Vec<AutCertificate>, Vec<BlockCode>, u64, u64)> {
    let candidates = candidate_count(table, range)?;
    let consistent = enumerate_endomorphisms(table, range, horizon, budget)?;
    let results: Vec<Result<Certification>> =
        consistent.par_iter().map(|c| certify_automorphism(c, table, inv_range, horizon)).collect();
    let mut certified = Vec::new();
    let mut unknown = Vec::new();
    for (code, res) in consistent.iter().zip(results) {
        match res? {
            Certification::Certified(c) => certified.push(c),
            Certification::NotInvertibleWithin(_) => unknown.push(code.clone()),
            Certification::Refuted(_) => unreachable!("enumerated codes are consistent"),
        }
    }
    let refuted = candidates.saturating_sub(consistent.len() as u64);
    Ok((certified, unknown, refuted, candidates))
}

fn partition_cosets(certified: &[AutCertificate], table: &LanguageTable, max_shift: i64) -> Result<Vec<CosetClass>> {
    let mut classes: Vec<CosetClass> = Vec::new();
    'codes: for (i, cert) in certified.iter().enumerate() {
        for class in classes.iter_mut() {
            let rep = &certified[class.representative].code;
            for j in -max_shift..=max_shift {
                if equals_shifted(rep, &cert.code, j, table)? {
                    class.members.push((i, j));
                    continue 'codes;
                }
            }
        }
        classes.push(CosetClass { representative: i, members: vec![(i, 0)] });
    }
    Ok(classes)
}

/// Enumerates range-`R` endomorphisms, certifies those with an inverse of
/// range at most `R_inv`, and groups them modulo the shift.
pub fn aut_group_mod_shift(
    table: &LanguageTable,
    range: usize,
    inv_range: usize,
    horizon: usize,
    budget: u64,
) -> Result<AutReport> {
    table.check_depth(required_depth(range, inv_range, horizon))?;
    let (certified, unknown, refuted_count, candidates) = certify_all(table, range, inv_range, horizon, budget)?;
    let max_shift = (range + inv_range) as i64;
    let cosets = partition_cosets(&certified, table, max_shift)?;

    let mut growth_counts = Vec::with_capacity(range + 1);
    for r in 0..=range {
        if horizon < 4 * r + 1 {
            growth_counts.push(None);
        } else if r == range && inv_range == range {
            growth_counts.push(Some(certified.len()));
        } else {
            let (c, _, _, _) = certify_all(table, r, r, horizon, budget)?;
            growth_counts.push(Some(c.len()));
        }
    }

    let mut report = AutReport {
        range,
        inv_range,
        horizon,
        candidates,
        certified,
        refuted_count,
        unknown,
        cosets,
        growth_counts,
        invariants: Vec::new(),
    };
    report.invariants = check_invariants(&report, table)?;
    Ok(report)
}

fn check_invariants(report: &AutReport, table: &LanguageTable) -> Result<Vec<InvariantCheck>> {
    let alphabet = table.alphabet();
    let rule = |c: &BlockCode| alphabet.format_word(c.outputs());
    let mut checks = Vec::new();

    let mut failures = Vec::new();
    for cert in &report.certified {
        if !inverse_pair_holds(&cert.code, &cert.inverse, table)? {
            failures.push(rule(&cert.code));
        }
    }
    checks.push(InvariantCheck::new("inverse-compositions-are-identity", failures));

    let mut failures = Vec::new();
    let sigma = shift_power_code(1, table)?;
    if table.max_n() > 2 * (report.range + 1) {
        for cert in &report.certified {
            let a = compose(&sigma, &cert.code, table)?;
            let b = compose(&cert.code, &sigma, table)?;
            if !codes_equal(&a, &b, table)? {
                failures.push(rule(&cert.code));
            }
        }
        checks.push(InvariantCheck::new("commutes-with-shift", failures));
    } else {
        checks.push(InvariantCheck::skipped("commutes-with-shift", "table too shallow"));
    }

    let mut failures = Vec::new();
    let top = report.range.min(report.inv_range) as i64;
    for j in -top..=top {
        let code = crate::block_code::inflate(&shift_power_code(j, table)?, report.range, table)?;
        if !report.certified.iter().any(|c| c.code == code) {
            failures.push(format!("shift^{j} missing"));
        }
    }
    checks.push(InvariantCheck::new("shift-powers-certified", failures));

    let mut failures = Vec::new();
    let mut seen = vec![0usize; report.certified.len()];
    for class in &report.cosets {
        for &(i, _) in &class.members {
            seen[i] += 1;
        }
    }
    if seen.iter().any(|&c| c != 1) {
        failures.push("certified codes not partitioned".into());
    }
    // The same classes must come out of pre-composition with σ^j.
    for class in &report.cosets {
        let rep = &report.certified[class.representative].code;
        for &(i, j) in &class.members {
            let need = 2 * (rep.range() + j.unsigned_abs() as usize) + 1;
            if need > table.max_n() {
                continue;
            }
            let pre = compose(rep, &shift_power_code(j, table)?, table)?;
            if !codes_equal(&pre, &report.certified[i].code, table)? {
                failures.push(format!("pre-composition disagrees for {}", rule(&report.certified[i].code)));
            }
        }
    }
    checks.push(InvariantCheck::new("cosets-partition-certified", failures));

    let mut failures = Vec::new();
    let counts: Vec<usize> = report.growth_counts.iter().flatten().copied().collect();
    if counts.windows(2).any(|w| w[0] > w[1]) {
        failures.push(format!("{counts:?}"));
    }
    checks.push(InvariantCheck::new("growth-counts-nondecreasing", failures));

    checks.push(closure_check(report, table)?);
    checks.push(left_special_check(report, table)?);
    Ok(checks)
}

/// Products of coset representatives stay consistent at the horizon.
fn closure_check(report: &AutReport, table: &LanguageTable) -> Result<InvariantCheck> {
    let name = "representative-products-consistent";
    let reps: Vec<&BlockCode> = report.cosets.iter().map(|c| &report.certified[c.representative].code).collect();
    let n = 4 * report.range + 1;
    if n > report.horizon {
        return Ok(InvariantCheck::skipped(name, format!("needs horizon {n}")));
    }
    let mut failures = Vec::new();
    for a in &reps {
        for b in &reps {
            let ab = compose(a, b, table)?;
            if let EndoVerdict::Refuted { witness } = is_endomorphism(&ab, table, report.horizon)? {
                failures.push(format!("product refuted at {}", table.alphabet().format_word(&witness)));
            }
        }
    }
    Ok(InvariantCheck::new(name, failures))
}

/// Certified codes that act as symbol maps carry left-special words to
/// left-special words.
fn left_special_check(report: &AutReport, table: &LanguageTable) -> Result<InvariantCheck> {
    let name = "left-special-words-preserved";
    let r = report.range;
    let mut failures = Vec::new();
    let mut checked = 0;
    for cert in &report.certified {
        let mut map: Vec<Option<Sym>> = vec![None; table.alphabet().len()];
        let mut local = true;
        for (w, &s) in cert.code.windows().iter().zip(cert.code.outputs()) {
            match map[w[r] as usize] {
                None => map[w[r] as usize] = Some(s),
                Some(x) if x != s => {
                    local = false;
                    break;
                }
                _ => {}
            }
        }
        if !local {
            continue;
        }
        checked += 1;
        for n in 1..table.max_n().min(12) {
            for w in table.level(n) {
                if table.left_extensions(w)?.len() < 2 {
                    continue;
                }
                let img: Vec<Sym> = w.iter().map(|&a| map[a as usize].unwrap_or(a)).collect();
                if table.index_of(&img).is_none() || table.left_extensions(&img)?.len() < 2 {
                    failures.push(format!(
                        "{} maps {}",
                        table.alphabet().format_word(cert.code.outputs()),
                        table.alphabet().format_word(w)
                    ));
                }
            }
        }
    }
    if checked == 0 {
        return Ok(InvariantCheck::skipped(name, "no certified code acts symbol-wise"));
    }
    Ok(InvariantCheck::new(name, failures))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::ShiftSpec;

    fn words(t: &LanguageTable, codes: &[BlockCode]) -> Vec<String> {
        codes.iter().map(|c| t.alphabet().format_word(c.outputs())).collect()
    }

    #[test]
    fn golden_mean_range_zero() {
        let t = ShiftSpec::golden_mean().generate_language(6).unwrap();
        let codes = enumerate_endomorphisms(&t, 0, 6, DEFAULT_BUDGET).unwrap();
        // Outputs are listed for windows "0", "1".
        assert_eq!(words(&t, &codes), vec!["00", "01"]);
    }

    #[test]
    fn fibonacci_range_one() {
        let t = ShiftSpec::fibonacci().generate_language(7).unwrap();
        let codes = enumerate_endomorphisms(&t, 1, 7, DEFAULT_BUDGET).unwrap();
        assert_eq!(codes.len(), 3);
        for j in -1..=1 {
            let s = crate::block_code::inflate(&shift_power_code(j, &t).unwrap(), 1, &t).unwrap();
            assert!(codes.contains(&s), "shift^{j} missing");
        }
    }

    #[test]
    fn full_shift_range_zero() {
        let t = ShiftSpec::full_shift(2).generate_language(4).unwrap();
        let codes = enumerate_endomorphisms(&t, 0, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(words(&t, &codes), vec!["00", "01", "10", "11"]);
    }

    #[test]
    fn budget_error() {
        let t = ShiftSpec::full_shift(2).generate_language(5).unwrap();
        let err = enumerate_endomorphisms(&t, 2, 5, 1000).unwrap_err();
        assert_eq!(err, Error::SearchBudgetExceeded { candidates: "2^32".into(), budget: 1000 });
    }

    #[test]
    fn certify_examples() {
        let t = ShiftSpec::fibonacci().generate_language(9).unwrap();
        let s = shift_power_code(1, &t).unwrap();
        match certify_automorphism(&s, &t, 1, 9).unwrap() {
            Certification::Certified(c) => {
                assert!(codes_equal(&c.inverse, &shift_power_code(-1, &t).unwrap(), &t).unwrap());
                assert_eq!(c.shift_power, Some(1));
                assert!(!c.exact);
            }
            other => panic!("{other:?}"),
        }

        let gm = ShiftSpec::golden_mean().generate_language(9).unwrap();
        let zero = BlockCode::constant(&gm, 0, 0).unwrap();
        assert_eq!(certify_automorphism(&zero, &gm, 3, 9).unwrap(), Certification::NotInvertibleWithin(3));
        let flip = BlockCode::symbol_map(&gm, &[1, 0]).unwrap();
        assert!(matches!(certify_automorphism(&flip, &gm, 0, 3).unwrap(), Certification::Refuted(_)));

        let full = ShiftSpec::full_shift(2).generate_language(3).unwrap();
        let flip = BlockCode::symbol_map(&full, &[1, 0]).unwrap();
        match certify_automorphism(&flip, &full, 0, 3).unwrap() {
            Certification::Certified(c) => {
                assert_eq!(c.inverse, flip);
                assert!(c.exact);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(certify_automorphism(&s, &t, 4, 9), Err(Error::DepthExceeded { needed: 11, .. })));
    }

    #[test]
    fn fibonacci_report() {
        let t = ShiftSpec::fibonacci().generate_language(12).unwrap();
        let rep = aut_group_mod_shift(&t, 2, 2, 12, DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.certified.len(), 5);
        assert_eq!(rep.coset_count(), 1);
        assert!(rep.unknown.is_empty());
        assert_eq!(rep.growth_counts, vec![Some(1), Some(3), Some(5)]);
        assert!(rep.invariants_hold(), "{:?}", rep.invariants);
        let mut powers: Vec<i64> = rep.certified.iter().map(|c| c.shift_power.unwrap()).collect();
        powers.sort();
        assert_eq!(powers, vec![-2, -1, 0, 1, 2]);
    }

    #[test]
    fn thue_morse_has_flip() {
        let t = ShiftSpec::thue_morse().generate_language(14).unwrap();
        let rep = aut_group_mod_shift(&t, 1, 1, 14, DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.coset_count(), 2);
        assert_eq!(rep.certified.len(), 6);
        assert!(rep.invariants_hold(), "{:?}", rep.invariants);
    }
}
