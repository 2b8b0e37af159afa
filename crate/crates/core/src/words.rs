//! Alphabets, finite words and the language table of a subshift.
//!
//! A [`LanguageTable`] stores the sets `L_1 .. L_N` of words of a shift up to a
//! fixed depth `N`, each level in canonical lexicographic order (symbols ordered
//! as in the alphabet). Everything downstream queries the shift through it.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::ops::{Deref, Range};
use std::path::Path;

use crate::error::{Error, Result};

/// Index of a symbol in its [`Alphabet`].
pub type Sym = u16;

/// An ordered, finite set of symbol tokens.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        if symbols.len() > Sym::MAX as usize {
            return Err(Error::InvalidAlphabet("too many symbols".into()));
        }
        let mut seen = BTreeSet::new();
        for s in &symbols {
            if s.is_empty() {
                return Err(Error::InvalidAlphabet("empty symbol token".into()));
            }
            if s.chars().any(|c| c.is_whitespace() || c == ',' || c == '.') {
                return Err(Error::InvalidAlphabet(format!("symbol `{s}` contains whitespace, ',' or '.'")));
            }
            if !seen.insert(s.as_str()) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol `{s}`")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The alphabet `{0, 1}`.
    pub fn binary() -> Self {
        Alphabet { symbols: vec!["0".into(), "1".into()] }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn token(&self, s: Sym) -> &str {
        &self.symbols[s as usize]
    }

    pub fn index_of(&self, token: &str) -> Option<Sym> {
        self.symbols.iter().position(|t| t == token).map(|i| i as Sym)
    }

    /// Whether words are written with `.` between tokens.
    pub fn is_multi_char(&self) -> bool {
        self.symbols.iter().any(|s| s.chars().count() > 1)
    }

    pub fn format_word(&self, w: &[Sym]) -> String {
        let sep = if self.is_multi_char() { "." } else { "" };
        let mut out = String::new();
        for (i, &s) in w.iter().enumerate() {
            if i > 0 {
                out.push_str(sep);
            }
            out.push_str(self.token(s));
        }
        out
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let syms = if self.is_multi_char() {
            text.split('.')
                .map(|t| self.index_of(t).ok_or_else(|| Error::UnknownSymbol(t.to_string())))
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| {
                    let t = c.to_string();
                    self.index_of(&t).ok_or(Error::UnknownSymbol(t))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Word(syms))
    }
}

/// A finite word, stored as symbol indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Sym>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_slice(s: &[Sym]) -> Self {
        Word(s.to_vec())
    }

    pub fn as_slice(&self) -> &[Sym] {
        &self.0
    }
}

impl Deref for Word {
    type Target = [Sym];

    fn deref(&self) -> &[Sym] {
        &self.0
    }
}

impl From<Vec<Sym>> for Word {
    fn from(v: Vec<Sym>) -> Self {
        Word(v)
    }
}

/// The words of length `1..=max_n` of a shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageTable {
    alphabet: Alphabet,
    // levels[n] holds L_n in canonical order; levels[0] = [ε].
    levels: Vec<Vec<Word>>,
    sft_window: Option<usize>,
}

impl LanguageTable {
    /// Builds a table from per-length word sets (`sets[i]` is `L_{i+1}`),
    /// checking factor closure and bi-extendability.
    pub fn from_levels(alphabet: Alphabet, sets: Vec<BTreeSet<Word>>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidTable("max_n must be at least 1".into()));
        }
        let mut levels = Vec::with_capacity(sets.len() + 1);
        levels.push(vec![Word::empty()]);
        for (i, set) in sets.into_iter().enumerate() {
            let n = i + 1;
            for w in &set {
                if w.len() != n {
                    return Err(Error::InvalidTable(format!("word of length {} stored at level {n}", w.len())));
                }
                if let Some(&s) = w.iter().find(|&&s| s as usize >= alphabet.len()) {
                    return Err(Error::InvalidTable(format!("symbol index {s} out of range")));
                }
            }
            levels.push(set.into_iter().collect());
        }
        let table = LanguageTable { alphabet, levels, sft_window: None };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        if self.levels[1].is_empty() {
            return Err(Error::InvalidTable("empty language".into()));
        }
        for n in 2..=self.max_n() {
            for w in &self.levels[n] {
                if !self.has(&w[..n - 1]) || !self.has(&w[1..]) {
                    let text = self.alphabet.format_word(w);
                    return Err(Error::InvalidTable(format!("not factor-closed at `{text}`")));
                }
            }
            let mut has_left = vec![false; self.levels[n - 1].len()];
            for u in &self.levels[n] {
                if let Some(i) = self.index_of(&u[1..]) {
                    has_left[i] = true;
                }
            }
            for (w, &left) in self.levels[n - 1].iter().zip(&has_left) {
                let right = self.prefix_range(w, n);
                if right.is_empty() || !left {
                    let text = self.alphabet.format_word(w);
                    return Err(Error::InvalidTable(format!("`{text}` is not bi-extendable")));
                }
            }
        }
        Ok(())
    }

    /// Marks the table as the exact language of an SFT whose forbidden words
    /// have length at most `window`.
    pub fn with_sft_window(mut self, window: usize) -> Self {
        self.sft_window = Some(window);
        self
    }

    pub fn sft_window(&self) -> Option<usize> {
        self.sft_window
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn max_n(&self) -> usize {
        self.levels.len() - 1
    }

    /// `L_n`, with `L_0 = {ε}`. Panics if `n > max_n`.
    pub fn level(&self, n: usize) -> &[Word] {
        &self.levels[n]
    }

    /// `P(n) = |L_n|`.
    pub fn complexity(&self, n: usize) -> usize {
        self.levels[n].len()
    }

    pub(crate) fn check_depth(&self, needed: usize) -> Result<()> {
        if needed > self.max_n() {
            Err(Error::DepthExceeded { needed, max_n: self.max_n() })
        } else {
            Ok(())
        }
    }

    /// Position of `w` in `L_{|w|}`, if present. Requires `|w| <= max_n`.
    pub fn index_of(&self, w: &[Sym]) -> Option<usize> {
        self.levels[w.len()].binary_search_by(|u| u.as_slice().cmp(w)).ok()
    }

    fn has(&self, w: &[Sym]) -> bool {
        self.index_of(w).is_some()
    }

    /// Membership in `L_{|w|}`.
    pub fn contains(&self, w: &[Sym]) -> Result<bool> {
        self.check_depth(w.len())?;
        Ok(self.has(w))
    }

    /// Index range within `L_len` of the words having `prefix` as leftmost factor.
    pub fn prefix_range(&self, prefix: &[Sym], len: usize) -> Range<usize> {
        let level = &self.levels[len];
        let k = prefix.len();
        let lo = level.partition_point(|u| &u[..k] < prefix);
        let hi = level.partition_point(|u| &u[..k] <= prefix);
        lo..hi
    }

    fn extension_query(&self, w: &[Sym]) -> Result<()> {
        self.check_depth(w.len() + 1)?;
        if !self.has(w) {
            return Err(Error::WordNotInLanguage(self.alphabet.format_word(w)));
        }
        Ok(())
    }

    /// The symbols `a` with `w·a` in the language, in alphabet order.
    pub fn right_extensions(&self, w: &[Sym]) -> Result<Vec<Sym>> {
        self.extension_query(w)?;
        let n = w.len() + 1;
        Ok(self.levels[n][self.prefix_range(w, n)].iter().map(|u| u[n - 1]).collect())
    }

    /// The symbols `a` with `a·w` in the language, in alphabet order.
    pub fn left_extensions(&self, w: &[Sym]) -> Result<Vec<Sym>> {
        self.extension_query(w)?;
        let mut u = Vec::with_capacity(w.len() + 1);
        Ok((0..self.alphabet.len() as Sym)
            .filter(|&a| {
                u.clear();
                u.push(a);
                u.extend_from_slice(w);
                self.has(&u)
            })
            .collect())
    }

    /// Whether exactly one word of length `|w| + m` has `w` as its leftmost factor.
    pub fn extends_uniquely_right(&self, w: &[Sym], m: usize) -> Result<bool> {
        self.check_depth(w.len() + m)?;
        if m == 0 {
            return Ok(true);
        }
        Ok(self.prefix_range(w, w.len() + m).len() == 1)
    }

    /// The table restricted to lengths `<= n`.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        self.check_depth(n)?;
        if n == 0 {
            return Err(Error::InvalidTable("max_n must be at least 1".into()));
        }
        Ok(LanguageTable {
            alphabet: self.alphabet.clone(),
            levels: self.levels[..=n].to_vec(),
            sft_window: self.sft_window,
        })
    }

    /// Serializes to the text cache format.
    pub fn to_cache_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "alphabet\t{}", self.alphabet.symbols().join(","));
        let _ = writeln!(out, "max_n\t{}", self.max_n());
        for n in 1..=self.max_n() {
            for w in &self.levels[n] {
                let _ = writeln!(out, "{n}\t{}", self.alphabet.format_word(w));
            }
        }
        out
    }

    pub fn from_cache_str(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidCache(msg);
        let mut lines = text.lines();
        let alphabet = match lines.next().and_then(|l| l.strip_prefix("alphabet\t")) {
            Some(rest) => Alphabet::new(rest.split(',')).map_err(|e| bad(e.to_string()))?,
            None => return Err(bad("missing `alphabet` header".into())),
        };
        let max_n: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("max_n\t"))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad("missing or malformed `max_n` header".into()))?;
        if max_n == 0 {
            return Err(bad("max_n must be at least 1".into()));
        }
        let mut sets = vec![BTreeSet::new(); max_n];
        let mut last: Option<(usize, Word)> = None;
        for (lineno, line) in lines.enumerate() {
            let (n, text) =
                line.split_once('\t').ok_or_else(|| bad(format!("line {}: expected `n<TAB>word`", lineno + 3)))?;
            let n: usize = n.parse().map_err(|_| bad(format!("line {}: bad length", lineno + 3)))?;
            let w = alphabet.parse_word(text).map_err(|e| bad(e.to_string()))?;
            if n == 0 || n > max_n || w.len() != n {
                return Err(bad(format!("line {}: length mismatch", lineno + 3)));
            }
            let key = (n, w);
            if last.as_ref().is_some_and(|prev| prev >= &key) {
                return Err(bad(format!("line {}: entries not in canonical order", lineno + 3)));
            }
            sets[n - 1].insert(key.1.clone());
            last = Some(key);
        }
        LanguageTable::from_levels(alphabet, sets).map_err(|e| bad(e.to_string()))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_cache_string())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_cache_str(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binary_full(n: usize) -> LanguageTable {
        let mut sets = Vec::new();
        for len in 1..=n {
            let mut set = BTreeSet::new();
            for bits in 0..(1u32 << len) {
                set.insert(Word((0..len).rev().map(|i| ((bits >> i) & 1) as Sym).collect()));
            }
            sets.push(set);
        }
        LanguageTable::from_levels(Alphabet::binary(), sets).unwrap()
    }

    #[test]
    fn alphabet_rejects_duplicates_and_empty() {
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["a", "b,c"]).is_err());
    }

    #[test]
    fn multi_char_words_use_dots() {
        let a = Alphabet::new(["0_1", "1_1"]).unwrap();
        let w = a.parse_word("0_1.1_1.1_1").unwrap();
        assert_eq!(w.0, vec![0, 1, 1]);
        assert_eq!(a.format_word(&w), "0_1.1_1.1_1");
        assert!(a.parse_word("0_1.2_1").is_err());
    }

    #[test]
    fn full_shift_extensions() {
        let t = binary_full(4);
        let w = Alphabet::binary().parse_word("01").unwrap();
        assert_eq!(t.right_extensions(&w).unwrap(), vec![0, 1]);
        assert_eq!(t.left_extensions(&w).unwrap(), vec![0, 1]);
        assert_eq!(t.right_extensions(&[]).unwrap(), vec![0, 1]);
        assert!(!t.extends_uniquely_right(&w, 1).unwrap());
        assert!(t.extends_uniquely_right(&w, 0).unwrap());
    }

    #[test]
    fn depth_errors() {
        let t = binary_full(3);
        assert_eq!(t.right_extensions(&[0, 0, 0]), Err(Error::DepthExceeded { needed: 4, max_n: 3 }));
        assert!(t.contains(&[0, 0, 0, 0]).is_err());
        assert!(t.extends_uniquely_right(&[0], 3).is_err());
    }

    #[test]
    fn rejects_non_factor_closed() {
        let mut sets = vec![BTreeSet::new(), BTreeSet::new()];
        sets[0].insert(Word(vec![0]));
        sets[1].insert(Word(vec![0, 1]));
        assert!(LanguageTable::from_levels(Alphabet::binary(), sets).is_err());
    }

    #[test]
    fn cache_round_trip() {
        let t = binary_full(3);
        let text = t.to_cache_string();
        assert!(text.starts_with("alphabet\t0,1\nmax_n\t3\n1\t0\n1\t1\n2\t00\n"));
        let back = LanguageTable::from_cache_str(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_cache_string(), text);
    }

    #[test]
    fn cache_rejects_unsorted() {
        let text = "alphabet\t0,1\nmax_n\t1\n1\t1\n1\t0\n";
        assert!(matches!(LanguageTable::from_cache_str(text), Err(Error::InvalidCache(_))));
    }
}
