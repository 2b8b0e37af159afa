//! Acceptance criteria. Each criterion prints one PASS/FAIL line with its
//! timing; the run fails if any criterion fails or overruns its limit.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde_json::Value;
use shiftaut::aut_search::{aut_group_mod_shift, enumerate_endomorphisms, growth_bound, DEFAULT_BUDGET};
use shiftaut::complexity::{extension_failure_count, nonuniquely_left_extendable_count, profile};
use shiftaut::models::{builtin_example, BuiltinParams, PeriodicShift};
use shiftaut::periodic_aut::{brute_force_aut, classify, closure, full_group_intersection, generators};
use shiftaut::verify::doubling_closed_form;
use shiftaut::{Alphabet, LanguageTable, ShiftSpec, Sym};

type Outcome = Result<String, String>;
type PeriodicCase = (PeriodicShift, u64, Vec<(usize, usize)>);
type Criterion = (&'static str, u64, fn() -> Outcome);
type Membership = Box<dyn Fn(&[Sym]) -> bool>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: shiftaut::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn spec_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("specs").join(name)
}

fn sturmians() -> Vec<(&'static str, ShiftSpec)> {
    vec![("fibonacci", ShiftSpec::fibonacci()), ("cf [2]", ShiftSpec::sturmian(vec![2]))]
}

fn builtin(name: &str, params: BuiltinParams) -> ShiftSpec {
    builtin_example(name, &params).expect("builtin")
}

fn union(k: usize) -> ShiftSpec {
    builtin("union-sturmian", BuiltinParams { k: Some(k), ..Default::default() })
}

fn sturmian_rigidity() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut details = Vec::new();
    for file in ["fibonacci.json", "sturmian_cf2.json"] {
        let json = dir.path().join(format!("{file}.out"));
        let status = Command::new(env!("CARGO_BIN_EXE_shiftaut"))
            .arg("aut")
            .arg("--spec")
            .arg(spec_path(file))
            .args(["--range", "2", "--inv-range", "2", "--horizon", "12", "--json"])
            .arg(&json)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(status.status.success(), || format!("{file}: exit {:?}", status.status.code()))?;
        let v: Value =
            serde_json::from_slice(&std::fs::read(&json).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let powers: BTreeSet<i64> =
            v["certified"].as_array().unwrap().iter().filter_map(|c| c["shift_power"].as_i64()).collect();
        let certified = v["certified"].as_array().unwrap().len();
        let cosets = v["cosets_mod_shift"]["count"].as_u64();
        let unknown = v["unknown"].as_array().unwrap().len();
        ensure(certified == 5 && powers == (-2..=2).collect() && cosets == Some(1) && unknown == 0, || {
            format!("{file}: {certified} certified, powers {powers:?}, cosets {cosets:?}, {unknown} unknown")
        })?;
        details.push(format!("{file}: 5 shift powers, 1 coset"));
    }
    Ok(details.join("; "))
}

fn minimal_coset_bound() -> Outcome {
    let mut cases = sturmians();
    cases.push(("thue-morse", ShiftSpec::thue_morse()));
    let mut details = Vec::new();
    for (name, spec) in cases {
        let horizon = if name == "thue-morse" { 16 } else { 12 };
        let k = profile(&lib(spec.generate_language(32))?).k_linear;
        let table = lib(spec.generate_language(horizon))?;
        for r in 0..=2 {
            let report = lib(aut_group_mod_shift(&table, r, r, horizon, DEFAULT_BUDGET))?;
            let cosets = report.coset_count();
            ensure(cosets < k, || format!("{name}, R = {r}: {cosets} cosets, k = {k}"))?;
            ensure(report.invariants_hold(), || format!("{name}, R = {r}: invariant failed"))?;
        }
        let at2 = lib(aut_group_mod_shift(&table, 2, 2, horizon, DEFAULT_BUDGET))?.coset_count();
        details.push(format!("{name} {at2} < {k}"));
    }
    Ok(details.join(", "))
}

fn periodic_cases() -> Vec<PeriodicCase> {
    let make = |symbols: &[&str], seeds: &[&str]| {
        let a = Alphabet::new(symbols.iter().copied()).unwrap();
        let orbits = seeds.iter().map(|s| a.parse_word(s).unwrap()).collect();
        PeriodicShift::new(a, orbits).unwrap()
    };
    vec![
        (make(&["0", "1"], &["01", "001"]), 6, vec![(2, 1), (3, 1)]),
        (make(&["0", "1", "2", "3"], &["01", "23"]), 8, vec![(2, 2)]),
        (make(&["0", "1", "2", "3"], &["01", "23", "001"]), 24, vec![(2, 2), (3, 1)]),
        (make(&["0", "1"], &["0", "01"]), 2, vec![(1, 1), (2, 1)]),
        (make(&["0", "1"], &["01", "0011"]), 8, vec![(2, 1), (4, 1)]),
        (make(&["0", "1"], &["0", "1", "01", "001", "011"]), 72, vec![(1, 2), (2, 1), (3, 2)]),
    ]
}

fn periodic_classification() -> Outcome {
    let mut orders = Vec::new();
    for (ps, expected, _) in periodic_cases() {
        let periods = ps.periods();
        let desc = lib(classify(&ps))?;
        let brute: BTreeSet<Vec<usize>> = lib(brute_force_aut(&ps))?.into_iter().collect();
        let generated = lib(closure(&generators(&ps), ps.num_points()))?;
        ensure(desc.order == BigUint::from(brute.len()), || {
            format!("{periods:?}: formula {} vs brute force {}", desc.order, brute.len())
        })?;
        ensure(brute.len() as u64 == expected, || format!("{periods:?}: order {} expected {expected}", brute.len()))?;
        ensure(generated == brute, || format!("{periods:?}: generators give {} elements", generated.len()))?;
        orders.push(format!("{periods:?} -> {expected}"));
    }
    Ok(orders.join(", "))
}

fn full_group_structure() -> Outcome {
    let mut out = Vec::new();
    for (ps, _, factors) in periodic_cases() {
        let full = lib(full_group_intersection(&ps))?;
        let order: usize = factors.iter().map(|&(n, m)| n.pow(m as u32)).product();
        let quotient: usize = factors.iter().map(|&(_, m)| (1..=m).product::<usize>()).product();
        ensure(full.abelian && full.normal, || {
            format!("{:?}: abelian {}, normal {}", ps.periods(), full.abelian, full.normal)
        })?;
        ensure(full.order == order && full.quotient_order == quotient, || {
            format!("{:?}: order {} / {order}, quotient {} / {quotient}", ps.periods(), full.order, full.quotient_order)
        })?;
        out.push(format!("{}/{}", full.order, full.quotient_order));
    }
    Ok(format!("orders/quotients {}", out.join(", ")))
}

fn complexity_formulas() -> Outcome {
    for (name, spec) in sturmians() {
        let table = lib(spec.generate_language(64))?;
        for n in 1..=64 {
            ensure(table.complexity(n) == n + 1, || format!("{name}: P({n}) = {}", table.complexity(n)))?;
        }
    }
    for k in [2, 3] {
        let table = lib(union(k).generate_language(32))?;
        for n in 1..=32 {
            ensure(table.complexity(n) == k * n + k, || format!("union k = {k}: P({n}) = {}", table.complexity(n)))?;
        }
    }
    let marked = lib(builtin("marked-transitive", BuiltinParams::default()).generate_language(32))?;
    let base = lib(ShiftSpec::fibonacci().generate_language(32))?;
    for n in 1..=32 {
        ensure(marked.complexity(n) == base.complexity(n) + n, || {
            format!("marked: P({n}) = {} vs {}", marked.complexity(n), base.complexity(n))
        })?;
    }
    Ok("sturmian n <= 64, union k = 2, 3 and marked n <= 32".into())
}

fn builtin_specs() -> Vec<(String, ShiftSpec)> {
    let mut specs: Vec<(String, ShiftSpec)> = sturmians().into_iter().map(|(n, s)| (n.to_string(), s)).collect();
    specs.push(("thue-morse".into(), ShiftSpec::thue_morse()));
    specs.push(("union k = 2".into(), union(2)));
    specs.push(("union k = 3".into(), union(3)));
    specs.push(("marked".into(), builtin("marked-transitive", BuiltinParams::default())));
    for name in ["doubling-periodic", "doubling-pair"] {
        specs.push((name.into(), builtin(name, BuiltinParams { n_max: Some(5), ..Default::default() })));
    }
    specs
}

fn extension_bound() -> Outcome {
    let mut out = Vec::new();
    for (name, spec) in builtin_specs() {
        let table = lib(spec.generate_language(24))?;
        let b = profile(&table).b;
        for n in 1..24 {
            for m in 0..=24 - n {
                let c = lib(extension_failure_count(&table, n, m))?;
                ensure(c <= b * m, || format!("{name}: n = {n}, m = {m}: {c} > {}", b * m))?;
            }
        }
        out.push(format!("{name} B = {b}"));
    }
    Ok(out.join(", "))
}

fn left_special_count() -> Outcome {
    for (name, spec) in sturmians() {
        let table = lib(spec.generate_language(33))?;
        let k = profile(&lib(table.truncate(32))?).k_linear;
        for n in 1..=32 {
            let c = lib(nonuniquely_left_extendable_count(&table, n))?;
            ensure(c == 1 && c < k, || format!("{name}: {c} words at n = {n}, k = {k}"))?;
        }
    }
    Ok("one word per length n <= 32, k = 2".into())
}

fn growth_estimate() -> Outcome {
    let spec = ShiftSpec::fibonacci();
    let table = lib(spec.generate_language(13))?;
    let prof = profile(&table);
    let report = lib(aut_group_mod_shift(&table, 3, 3, 13, DEFAULT_BUDGET))?;
    let mut out = Vec::new();
    for r in 0..=3 {
        let count = report.growth_counts.get(r).copied().flatten();
        let bound = growth_bound(&prof, 0, r);
        ensure(count == Some(2 * r + 1), || format!("r = {r}: count {count:?}"))?;
        ensure(bound == 4 * (r + 1) && 2 * r < bound, || format!("r = {r}: bound {bound}"))?;
        out.push(format!("{}<={bound}", 2 * r + 1));
    }
    Ok(out.join(", "))
}

/// Factors of the doubling family, read off the generating points directly.
fn doubling_oracle(n: usize) -> usize {
    let mut words: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut m = 1;
    while (1usize << m) < n + 1 {
        let period = 1usize << m;
        for start in 0..period {
            words.insert((start..start + n).map(|i| u8::from(i % period == 0)).collect());
        }
        m += 1;
    }
    let mut lone = vec![0u8; 2 * n + 1];
    lone[n] = 1;
    for w in lone.windows(n) {
        words.insert(w.to_vec());
    }
    words.len()
}

fn doubling_construction() -> Outcome {
    let table = lib(
        builtin("doubling-periodic", BuiltinParams { n_max: Some(5), ..Default::default() }).generate_language(32)
    )?;
    let mut differ = Vec::new();
    for n in 1..=32 {
        let p = table.complexity(n);
        let oracle = doubling_oracle(n);
        ensure(p == oracle, || format!("P({n}) = {p}, direct enumeration {oracle}"))?;
        ensure(p < 3 * n, || format!("P({n}) = {p} >= {}", 3 * n))?;
        if p != doubling_closed_form(n) {
            differ.push(n);
        }
    }
    let n = differ.first().copied().unwrap_or(0);
    Ok(format!(
        "P(n) < 3n for n <= 32; warning: closed form differs at {} lengths (n = {n}: {} vs {})",
        differ.len(),
        table.complexity(n.max(1)),
        doubling_closed_form(n.max(1)),
    ))
}

/// All rules of range `r`, kept when every length-`h` word maps into the language.
fn naive_endomorphisms(
    words: &dyn Fn(usize) -> Vec<Vec<Sym>>,
    in_language: &dyn Fn(&[Sym]) -> bool,
    d: usize,
    r: usize,
    h: usize,
) -> BTreeSet<Vec<Sym>> {
    let windows = words(2 * r + 1);
    let total = d.pow(windows.len() as u32);
    let mut kept = BTreeSet::new();
    for code in 0..total {
        let outputs: Vec<Sym> = (0..windows.len()).map(|i| ((code / d.pow(i as u32)) % d) as Sym).collect();
        let apply = |w: &[Sym]| -> Vec<Sym> {
            w.windows(2 * r + 1).map(|win| outputs[windows.iter().position(|x| x == win).unwrap()]).collect()
        };
        if (2 * r + 1..=h).all(|n| words(n).iter().all(|w| in_language(&apply(w)))) {
            kept.insert(outputs);
        }
    }
    kept
}

fn all_words(d: usize, n: usize) -> Vec<Vec<Sym>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| (0..d as Sym).map(move |a| [w.clone(), vec![a]].concat())).collect();
    }
    out
}

fn endomorphism_oracle() -> Outcome {
    let golden = |w: &[Sym]| !w.windows(2).any(|p| p == [1, 1]);
    let cases: Vec<(&str, ShiftSpec, Membership)> = vec![
        ("golden mean", ShiftSpec::golden_mean(), Box::new(golden)),
        ("full 2-shift", ShiftSpec::full_shift(2), Box::new(|_: &[Sym]| true)),
    ];
    let mut out = Vec::new();
    for (name, spec, in_language) in cases {
        let words = |n: usize| all_words(2, n).into_iter().filter(|w| in_language(w)).collect::<Vec<_>>();
        for r in 0..=1 {
            let h = 2 * r + 4;
            let table: LanguageTable = lib(spec.generate_language(h))?;
            let found: BTreeSet<Vec<Sym>> = lib(enumerate_endomorphisms(&table, r, h, DEFAULT_BUDGET))?
                .iter()
                .map(|c| {
                    let windows: Vec<Vec<Sym>> = c.windows().iter().map(|w| w.0.clone()).collect();
                    let mut pairs: Vec<(Vec<Sym>, Sym)> =
                        windows.into_iter().zip(c.outputs().iter().copied()).collect();
                    pairs.sort();
                    pairs.into_iter().map(|(_, s)| s).collect()
                })
                .collect();
            let expected = naive_endomorphisms(
                &|n| {
                    let mut ws = words(n);
                    ws.sort();
                    ws
                },
                &*in_language,
                2,
                r,
                h,
            );
            ensure(found == expected, || {
                format!("{name}, R = {r}: {} found, {} by brute force", found.len(), expected.len())
            })?;
            out.push(format!("{name} R = {r}: {}", found.len()));
        }
    }
    Ok(out.join(", "))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("sturmian rigidity", 5, sturmian_rigidity),
        ("minimal-shift coset bound", 10, minimal_coset_bound),
        ("periodic classification", 5, periodic_classification),
        ("full-group structure", 5, full_group_structure),
        ("complexity formulas", 10, complexity_formulas),
        ("extension-counting bound", 10, extension_bound),
        ("left-special word count", 5, left_special_count),
        ("growth estimate", 60, growth_estimate),
        ("doubling construction", 10, doubling_construction),
        ("endomorphism oracle", 30, endomorphism_oracle),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(d) if elapsed > Duration::from_secs(*limit) => Err(format!("{d}; over the {limit} s limit")),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("{tag} {:>2} {name} [{:.2} s / {limit} s]: {detail}", i + 1, elapsed.as_secs_f64());
        failed += usize::from(outcome.is_err());
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
