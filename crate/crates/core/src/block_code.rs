//! Sliding block codes on a language table.
//!
//! A code of range `R` is a rule `L_{2R+1} -> A`; the output at coordinate 0
//! depends on coordinates `-R..=R`. Rules are total on the `(2R+1)`-words of the
//! table they were built against and every operation taking a table checks
//! that it is the same one.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::words::{Alphabet, LanguageTable, Sym, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockCode {
    range: usize,
    domain_alphabet: Alphabet,
    codomain_alphabet: Alphabet,
    windows: Vec<Word>,
    outputs: Vec<Sym>,
}

/// Outcome of checking that a code maps the shift into itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EndoVerdict {
    /// SFT language checked on every window that matters.
    CertifiedExact,
    /// No word up to this length has an image outside the language.
    ConsistentToHorizon { horizon: usize },
    /// The image of `witness` leaves the language.
    Refuted { witness: Word },
}

impl EndoVerdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, EndoVerdict::Refuted { .. })
    }
}

impl BlockCode {
    /// A code whose output on window `w` is `outputs[i]` when `w` is the `i`-th
    /// word of `L_{2R+1}`.
    pub fn from_outputs(table: &LanguageTable, range: usize, outputs: Vec<Sym>) -> Result<Self> {
        table.check_depth(2 * range + 1)?;
        let windows = table.level(2 * range + 1).to_vec();
        if outputs.len() != windows.len() {
            return Err(Error::BadParams(format!(
                "rule has {} entries, L_{} has {}",
                outputs.len(),
                2 * range + 1,
                windows.len()
            )));
        }
        if outputs.iter().any(|&s| s as usize >= table.alphabet().len()) {
            return Err(Error::BadParams("output symbol outside the alphabet".into()));
        }
        Ok(BlockCode {
            range,
            domain_alphabet: table.alphabet().clone(),
            codomain_alphabet: table.alphabet().clone(),
            windows,
            outputs,
        })
    }

    pub fn from_fn(table: &LanguageTable, range: usize, f: impl Fn(&[Sym]) -> Sym) -> Result<Self> {
        table.check_depth(2 * range + 1)?;
        let outputs = table.level(2 * range + 1).iter().map(|w| f(w)).collect();
        Self::from_outputs(table, range, outputs)
    }

    pub fn identity(table: &LanguageTable) -> Result<Self> {
        Self::from_fn(table, 0, |w| w[0])
    }

    pub fn constant(table: &LanguageTable, range: usize, s: Sym) -> Result<Self> {
        Self::from_fn(table, range, |_| s)
    }

    /// Range-0 code relabelling symbol `a` as `map[a]`.
    pub fn symbol_map(table: &LanguageTable, map: &[Sym]) -> Result<Self> {
        if map.len() != table.alphabet().len() {
            return Err(Error::BadParams("symbol map must cover the alphabet".into()));
        }
        Self::from_fn(table, 0, |w| map[w[0] as usize])
    }

    pub fn range(&self) -> usize {
        self.range
    }

    pub fn window_len(&self) -> usize {
        2 * self.range + 1
    }

    pub fn domain_alphabet(&self) -> &Alphabet {
        &self.domain_alphabet
    }

    pub fn codomain_alphabet(&self) -> &Alphabet {
        &self.codomain_alphabet
    }

    pub fn windows(&self) -> &[Word] {
        &self.windows
    }

    pub fn outputs(&self) -> &[Sym] {
        &self.outputs
    }

    /// Output on a single window, if the window is in the domain.
    pub fn rule(&self, window: &[Sym]) -> Option<Sym> {
        self.windows.binary_search_by(|w| w.as_slice().cmp(window)).ok().map(|i| self.outputs[i])
    }

    pub(crate) fn check_table(&self, table: &LanguageTable) -> Result<()> {
        let n = self.window_len();
        if n > table.max_n() || table.alphabet() != &self.domain_alphabet || table.level(n) != self.windows.as_slice() {
            return Err(Error::TableMismatch);
        }
        Ok(())
    }

    /// Image of a word of length `>= 2R+1`; the result has length `|w| - 2R`.
    pub fn apply_to_word(&self, w: &[Sym]) -> Result<Word> {
        let n = self.window_len();
        if w.len() < n {
            return Err(Error::BadParams(format!("word shorter than window length {n}")));
        }
        w.windows(n)
            .map(|win| self.rule(win).ok_or_else(|| Error::WindowNotInDomain(self.domain_alphabet.format_word(win))))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Rule table as text: header `range<TAB>R`, then `window<TAB>symbol` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "range\t{}", self.range);
        for (w, &s) in self.windows.iter().zip(&self.outputs) {
            let _ = writeln!(out, "{}\t{}", self.domain_alphabet.format_word(w), self.codomain_alphabet.token(s));
        }
        out
    }

    pub fn from_text(text: &str, table: &LanguageTable) -> Result<Self> {
        let mut lines = text.lines();
        let range: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("range\t"))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::BadParams("missing `range` header".into()))?;
        table.check_depth(2 * range + 1)?;
        let alphabet = table.alphabet();
        let mut outputs = Vec::new();
        for (line, expected) in lines.zip(table.level(2 * range + 1)) {
            let (w, s) =
                line.split_once('\t').ok_or_else(|| Error::BadParams(format!("malformed rule line `{line}`")))?;
            if &alphabet.parse_word(w)? != expected {
                return Err(Error::TableMismatch);
            }
            outputs.push(alphabet.index_of(s).ok_or_else(|| Error::UnknownSymbol(s.into()))?);
        }
        Self::from_outputs(table, range, outputs)
    }
}

/// `σ^j` as a code of range `|j|`: `(σ^j x)(0) = x(j)`.
pub fn shift_power_code(j: i64, table: &LanguageTable) -> Result<BlockCode> {
    let r = j.unsigned_abs() as usize;
    BlockCode::from_fn(table, r, |w| w[(r as i64 + j) as usize])
}

/// `outer ∘ inner`, of range `R_outer + R_inner`.
pub fn compose(outer: &BlockCode, inner: &BlockCode, table: &LanguageTable) -> Result<BlockCode> {
    if inner.codomain_alphabet != outer.domain_alphabet {
        return Err(Error::AlphabetMismatch);
    }
    inner.check_table(table)?;
    let range = outer.range + inner.range;
    table.check_depth(2 * range + 1)?;
    let outputs = table
        .level(2 * range + 1)
        .iter()
        .map(|w| {
            let mid = inner.apply_to_word(w)?;
            let out = outer.apply_to_word(&mid)?;
            Ok(out[0])
        })
        .collect::<Result<Vec<_>>>()?;
    let mut code = BlockCode::from_outputs(table, range, outputs)?;
    code.codomain_alphabet = outer.codomain_alphabet.clone();
    Ok(code)
}

/// The same map written with a larger range.
pub fn inflate(code: &BlockCode, target: usize, table: &LanguageTable) -> Result<BlockCode> {
    if target < code.range {
        return Err(Error::BadParams(format!("cannot inflate range {} down to {target}", code.range)));
    }
    code.check_table(table)?;
    table.check_depth(2 * target + 1)?;
    let d = target - code.range;
    let outputs = table
        .level(2 * target + 1)
        .iter()
        .map(|w| code.rule(&w[d..w.len() - d]).ok_or_else(|| Error::WindowNotInDomain(table.alphabet().format_word(w))))
        .collect::<Result<Vec<_>>>()?;
    let mut out = BlockCode::from_outputs(table, target, outputs)?;
    out.codomain_alphabet = code.codomain_alphabet.clone();
    Ok(out)
}

/// Whether two codes define the same map on the shift.
pub fn codes_equal(a: &BlockCode, b: &BlockCode, table: &LanguageTable) -> Result<bool> {
    let r = a.range.max(b.range);
    table.check_depth(2 * r + 1)?;
    if a.codomain_alphabet != b.codomain_alphabet {
        return Ok(false);
    }
    Ok(inflate(a, r, table)?.outputs == inflate(b, r, table)?.outputs)
}

/// Whether `b = σ^j ∘ a` on the shift, comparing outputs over the smallest
/// window that covers both codes.
pub fn equals_shifted(a: &BlockCode, b: &BlockCode, j: i64, table: &LanguageTable) -> Result<bool> {
    a.check_table(table)?;
    b.check_table(table)?;
    let (ra, rb) = (a.range as i64, b.range as i64);
    let lo = (-rb).min(j - ra);
    let hi = rb.max(j + ra);
    let len = (hi - lo + 1) as usize;
    table.check_depth(len)?;
    let (na, nb) = (a.window_len(), b.window_len());
    let (sa, sb) = ((j - ra - lo) as usize, (-rb - lo) as usize);
    for w in table.level(len) {
        if a.rule(&w[sa..sa + na]) != b.rule(&w[sb..sb + nb]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks every word of length `2R+1 ..= horizon` for an image outside the
/// language. Returns the shortest (then canonically first) witness when one
/// exists.
pub fn is_endomorphism(code: &BlockCode, table: &LanguageTable, horizon: usize) -> Result<EndoVerdict> {
    let n0 = code.window_len();
    if horizon < n0 {
        return Err(Error::BadParams(format!("horizon {horizon} shorter than window {n0}")));
    }
    table.check_depth(horizon)?;
    code.check_table(table)?;
    if code.codomain_alphabet != code.domain_alphabet {
        return Err(Error::AlphabetMismatch);
    }
    for n in n0..=horizon {
        for w in table.level(n) {
            let img = code.apply_to_word(w)?;
            if table.index_of(&img).is_none() {
                return Ok(EndoVerdict::Refuted { witness: w.clone() });
            }
        }
    }
    match table.sft_window() {
        Some(window) if horizon >= 2 * code.range + window => Ok(EndoVerdict::CertifiedExact),
        _ => Ok(EndoVerdict::ConsistentToHorizon { horizon }),
    }
}
