//! JSON shift specifications and the on-disk table cache.

use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::models::{builtin_example, BuiltinParams, ContinuedFraction, ShiftSpec};
use crate::words::{Alphabet, LanguageTable, Word};

/// Environment variable naming the table cache directory.
pub const CACHE_DIR_VAR: &str = "SHIFTAUT_CACHE_DIR";

pub fn load_spec(path: &Path) -> Result<ShiftSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_spec(&text)
}

pub fn parse_spec(text: &str) -> Result<ShiftSpec> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::spec("", e.to_string()))?;
    let spec = spec_from_value(&value, "")?;
    spec.validate()?;
    Ok(spec)
}

fn object<'a>(v: &'a Value, ptr: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::spec(ptr, "expected an object"))
}

fn only_keys(obj: &Map<String, Value>, ptr: &str, allowed: &[&str]) -> Result<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::spec(format!("{ptr}/{k}"), "unknown field")),
        None => Ok(()),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, ptr: &str, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::spec(format!("{ptr}/{key}"), "missing field"))
}

fn string<'a>(v: &'a Value, ptr: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| Error::spec(ptr, "expected a string"))
}

fn array<'a>(v: &'a Value, ptr: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::spec(ptr, "expected an array"))
}

fn count(v: &Value, ptr: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| Error::spec(ptr, "expected a nonnegative integer"))
}

fn counts(v: &Value, ptr: &str) -> Result<Vec<u64>> {
    array(v, ptr)?.iter().enumerate().map(|(i, x)| count(x, &format!("{ptr}/{i}"))).collect()
}

fn alphabet(obj: &Map<String, Value>, ptr: &str) -> Result<Alphabet> {
    let p = format!("{ptr}/alphabet");
    let tokens = array(field(obj, ptr, "alphabet")?, &p)?
        .iter()
        .enumerate()
        .map(|(i, t)| string(t, &format!("{p}/{i}")).map(str::to_string))
        .collect::<Result<Vec<_>>>()?;
    Alphabet::new(tokens).map_err(|e| Error::spec(p, e.to_string()))
}

fn word(a: &Alphabet, v: &Value, ptr: &str) -> Result<Word> {
    a.parse_word(string(v, ptr)?).map_err(|e| Error::spec(ptr, e.to_string()))
}

fn words(a: &Alphabet, v: &Value, ptr: &str) -> Result<Vec<Word>> {
    array(v, ptr)?.iter().enumerate().map(|(i, w)| word(a, w, &format!("{ptr}/{i}"))).collect()
}

fn cf(v: &Value, ptr: &str) -> Result<ContinuedFraction> {
    let obj = object(v, ptr)?;
    only_keys(obj, ptr, &["pre", "period"])?;
    let pre = match obj.get("pre") {
        Some(p) => counts(p, &format!("{ptr}/pre"))?,
        None => Vec::new(),
    };
    let period = counts(field(obj, ptr, "period")?, &format!("{ptr}/period"))?;
    if period.is_empty() {
        return Err(Error::spec(format!("{ptr}/period"), "period must be nonempty"));
    }
    Ok(ContinuedFraction { pre, period })
}

/// Parses a spec object found at JSON pointer `ptr`; does not run [`ShiftSpec::validate`].
pub fn spec_from_value(v: &Value, ptr: &str) -> Result<ShiftSpec> {
    let obj = object(v, ptr)?;
    let model = string(field(obj, ptr, "model")?, &format!("{ptr}/model"))?;
    match model {
        "sft" => {
            only_keys(obj, ptr, &["model", "alphabet", "forbidden"])?;
            let alphabet = alphabet(obj, ptr)?;
            let forbidden = words(&alphabet, field(obj, ptr, "forbidden")?, &format!("{ptr}/forbidden"))?;
            Ok(ShiftSpec::Sft { alphabet, forbidden })
        }
        "substitution" => {
            only_keys(obj, ptr, &["model", "alphabet", "rules"])?;
            let alphabet = alphabet(obj, ptr)?;
            let p = format!("{ptr}/rules");
            let rules_obj = object(field(obj, ptr, "rules")?, &p)?;
            if let Some(k) = rules_obj.keys().find(|k| alphabet.index_of(k).is_none()) {
                return Err(Error::spec(format!("{p}/{k}"), "not a symbol of the alphabet"));
            }
            let rules = alphabet
                .symbols()
                .iter()
                .map(|s| {
                    let rp = format!("{p}/{s}");
                    let v = rules_obj.get(s).ok_or_else(|| Error::spec(&rp, "missing rule"))?;
                    word(&alphabet, v, &rp)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ShiftSpec::Substitution { alphabet, rules })
        }
        "sturmian" => {
            only_keys(obj, ptr, &["model", "cf", "alphabet"])?;
            let cf = cf(field(obj, ptr, "cf")?, &format!("{ptr}/cf"))?;
            let alphabet = if obj.contains_key("alphabet") { alphabet(obj, ptr)? } else { Alphabet::binary() };
            Ok(ShiftSpec::Sturmian { cf, alphabet })
        }
        "periodic" => {
            only_keys(obj, ptr, &["model", "alphabet", "orbits"])?;
            let alphabet = alphabet(obj, ptr)?;
            let orbits = words(&alphabet, field(obj, ptr, "orbits")?, &format!("{ptr}/orbits"))?;
            Ok(ShiftSpec::Periodic { alphabet, orbits })
        }
        "union" => {
            only_keys(obj, ptr, &["model", "parts"])?;
            let p = format!("{ptr}/parts");
            let parts = array(field(obj, ptr, "parts")?, &p)?
                .iter()
                .enumerate()
                .map(|(i, part)| spec_from_value(part, &format!("{p}/{i}")))
                .collect::<Result<Vec<_>>>()?;
            Ok(ShiftSpec::Union { parts })
        }
        "marked" => {
            only_keys(obj, ptr, &["model", "base", "marker"])?;
            let base = spec_from_value(field(obj, ptr, "base")?, &format!("{ptr}/base"))?;
            let marker = string(field(obj, ptr, "marker")?, &format!("{ptr}/marker"))?.to_string();
            Ok(ShiftSpec::Marked { base: Box::new(base), marker })
        }
        "doubling" => {
            only_keys(obj, ptr, &["model", "alphabet", "levels"])?;
            let alphabet = alphabet(obj, ptr)?;
            let levels = count(field(obj, ptr, "levels")?, &format!("{ptr}/levels"))? as usize;
            Ok(ShiftSpec::Doubling { alphabet, levels })
        }
        "builtin" => {
            only_keys(obj, ptr, &["model", "name", "k", "cfs", "n_max", "base"])?;
            let name = string(field(obj, ptr, "name")?, &format!("{ptr}/name"))?;
            let mut params = BuiltinParams::default();
            if let Some(k) = obj.get("k") {
                params.k = Some(count(k, &format!("{ptr}/k"))? as usize);
            }
            if let Some(cfs) = obj.get("cfs") {
                let p = format!("{ptr}/cfs");
                params.cfs = array(cfs, &p)?
                    .iter()
                    .enumerate()
                    .map(|(i, c)| counts(c, &format!("{p}/{i}")))
                    .collect::<Result<_>>()?;
            }
            if let Some(n) = obj.get("n_max") {
                params.n_max = Some(count(n, &format!("{ptr}/n_max"))? as usize);
            }
            if let Some(b) = obj.get("base") {
                params.base = Some(spec_from_value(b, &format!("{ptr}/base"))?);
            }
            builtin_example(name, &params)
        }
        other => Err(Error::spec(format!("{ptr}/model"), format!("unknown model `{other}`"))),
    }
}

/// Canonical JSON form of a spec. Builtins are written out in expanded form.
pub fn spec_to_value(spec: &ShiftSpec) -> Value {
    let tokens = |a: &Alphabet| json!(a.symbols());
    let texts = |a: &Alphabet, ws: &[Word]| ws.iter().map(|w| a.format_word(w)).collect::<Vec<_>>();
    match spec {
        ShiftSpec::Sft { alphabet, forbidden } => json!({
            "model": "sft", "alphabet": tokens(alphabet), "forbidden": texts(alphabet, forbidden),
        }),
        ShiftSpec::Substitution { alphabet, rules } => {
            let rules: Map<String, Value> = alphabet
                .symbols()
                .iter()
                .zip(rules)
                .map(|(s, w)| (s.clone(), json!(alphabet.format_word(w))))
                .collect();
            json!({"model": "substitution", "alphabet": tokens(alphabet), "rules": rules})
        }
        ShiftSpec::Sturmian { cf, alphabet } => json!({
            "model": "sturmian", "cf": {"pre": cf.pre, "period": cf.period}, "alphabet": tokens(alphabet),
        }),
        ShiftSpec::Periodic { alphabet, orbits } => json!({
            "model": "periodic", "alphabet": tokens(alphabet), "orbits": texts(alphabet, orbits),
        }),
        ShiftSpec::Union { parts } => json!({
            "model": "union", "parts": parts.iter().map(spec_to_value).collect::<Vec<_>>(),
        }),
        ShiftSpec::Marked { base, marker } => json!({
            "model": "marked", "base": spec_to_value(base), "marker": marker,
        }),
        ShiftSpec::Doubling { alphabet, levels } => json!({
            "model": "doubling", "alphabet": tokens(alphabet), "levels": levels,
        }),
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Cache file for `spec` at depth `max_n` inside `dir`.
pub fn cache_path(dir: &Path, spec: &ShiftSpec, max_n: usize) -> PathBuf {
    let key = spec_to_value(spec).to_string();
    dir.join(format!("{}-{:016x}-{max_n}.table", spec.model_name(), fnv1a(key.as_bytes())))
}

/// Generates the table, reading and writing the cache in `dir` when given.
pub fn load_or_generate(spec: &ShiftSpec, max_n: usize, dir: Option<&Path>) -> Result<LanguageTable> {
    let Some(dir) = dir else {
        return spec.generate_language(max_n);
    };
    let path = cache_path(dir, spec, max_n);
    let table = if path.exists() {
        let table = LanguageTable::load(&path)?;
        if table.max_n() != max_n || table.alphabet() != &spec.alphabet()? {
            return Err(Error::InvalidCache(format!("{} does not match the spec", path.display())));
        }
        table
    } else {
        let table = spec.generate_language(max_n)?;
        std::fs::create_dir_all(dir)?;
        table.save(&path)?;
        table
    };
    Ok(match spec.sft_window() {
        Some(w) => table.with_sft_window(w),
        None => table,
    })
}

/// The cache directory named by [`CACHE_DIR_VAR`], if set.
pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_DIR_VAR).filter(|v| !v.is_empty()).map(PathBuf::from)
}
