//! Concrete subshifts and their languages.
//!
//! Every [`ShiftSpec`] produces the exact set of words of length `<= max_n`
//! occurring in the shift it describes:
//!
//! * SFTs are trimmed to the essential part of their window graph, so words
//!   that cannot be extended to a bi-infinite admissible sequence are dropped.
//! * Primitive substitutions use the closure of the two-letter language under
//!   the substitution, then read factors of `σ^k(bc)` for a `k` large enough
//!   that every image block is at least `max_n - 1` long.
//! * Sturmian shifts are read off a prefix of the characteristic word built
//!   from the standard-word recursion; the prefix is lengthened until every
//!   length carries exactly `n + 1` factors.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::words::{Alphabet, LanguageTable, Sym, Word};

/// Upper bound on the number of candidate windows an SFT construction will enumerate.
const SFT_WINDOW_BUDGET: usize = 1 << 22;

/// Upper bound on the number of words stored for a single SFT level.
const SFT_LEVEL_BUDGET: usize = 1 << 22;

/// Longest characteristic-word prefix tried for a Sturmian language.
const STURMIAN_PREFIX_LIMIT: usize = 1 << 24;

/// An eventually periodic continued fraction expansion `[0; pre, period, period, ...]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    pub pre: Vec<u64>,
    pub period: Vec<u64>,
}

impl ContinuedFraction {
    pub fn periodic(period: Vec<u64>) -> Self {
        ContinuedFraction { pre: Vec::new(), period }
    }

    /// The partial quotients, repeating the period forever.
    pub fn terms(&self) -> impl Iterator<Item = u64> + '_ {
        self.pre.iter().copied().chain(self.period.iter().copied().cycle())
    }
}

/// Declarative description of a subshift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShiftSpec {
    /// Bi-infinite sequences avoiding every forbidden word.
    Sft { alphabet: Alphabet, forbidden: Vec<Word> },
    /// Orbit closure of a primitive substitution; `rules[a]` is the image of symbol `a`.
    Substitution { alphabet: Alphabet, rules: Vec<Word> },
    /// Sturmian shift with slope given by a continued fraction, written over a
    /// two-symbol alphabet (default `{0, 1}`).
    Sturmian { cf: ContinuedFraction, alphabet: Alphabet },
    /// Finitely many periodic orbits, one primitive seed per orbit.
    Periodic { alphabet: Alphabet, orbits: Vec<Word> },
    /// Disjoint union of shifts over pairwise disjoint alphabets.
    Union { parts: Vec<ShiftSpec> },
    /// Orbit closure of a point of `base` whose zeroth coordinate is replaced by `marker`.
    Marked { base: Box<ShiftSpec>, marker: String },
    /// Closure of the periodic points with a `one` at every multiple of `2^m`
    /// for `1 <= m <= levels`, together with the single-`one` point and the
    /// all-`zero` point. Exact for word lengths up to `2^levels + 1`.
    Doubling { alphabet: Alphabet, levels: usize },
}

impl ShiftSpec {
    /// The Fibonacci Sturmian shift, slope `[0; 1, 1, 1, ...]`.
    pub fn fibonacci() -> Self {
        ShiftSpec::Sturmian { cf: ContinuedFraction::periodic(vec![1]), alphabet: Alphabet::binary() }
    }

    pub fn sturmian(period: Vec<u64>) -> Self {
        ShiftSpec::Sturmian { cf: ContinuedFraction::periodic(period), alphabet: Alphabet::binary() }
    }

    /// Thue–Morse substitution `0 -> 01, 1 -> 10`.
    pub fn thue_morse() -> Self {
        ShiftSpec::Substitution { alphabet: Alphabet::binary(), rules: vec![Word(vec![0, 1]), Word(vec![1, 0])] }
    }

    /// The golden-mean SFT (no two consecutive `1`s).
    pub fn golden_mean() -> Self {
        ShiftSpec::Sft { alphabet: Alphabet::binary(), forbidden: vec![Word(vec![1, 1])] }
    }

    /// The full shift on `k` symbols `0..k`.
    pub fn full_shift(k: usize) -> Self {
        let alphabet = Alphabet::new((0..k).map(|i| i.to_string())).expect("k >= 1");
        ShiftSpec::Sft { alphabet, forbidden: Vec::new() }
    }

    pub fn periodic(alphabet: Alphabet, seeds: &[&str]) -> Result<Self> {
        let orbits = seeds.iter().map(|s| alphabet.parse_word(s)).collect::<Result<Vec<_>>>()?;
        Ok(ShiftSpec::Periodic { alphabet, orbits })
    }

    pub fn model_name(&self) -> &'static str {
        match self {
            ShiftSpec::Sft { .. } => "sft",
            ShiftSpec::Substitution { .. } => "substitution",
            ShiftSpec::Sturmian { .. } => "sturmian",
            ShiftSpec::Periodic { .. } => "periodic",
            ShiftSpec::Union { .. } => "union",
            ShiftSpec::Marked { .. } => "marked",
            ShiftSpec::Doubling { .. } => "doubling",
        }
    }

    /// The alphabet the generated table is written over.
    pub fn alphabet(&self) -> Result<Alphabet> {
        match self {
            ShiftSpec::Sft { alphabet, .. }
            | ShiftSpec::Substitution { alphabet, .. }
            | ShiftSpec::Sturmian { alphabet, .. }
            | ShiftSpec::Periodic { alphabet, .. }
            | ShiftSpec::Doubling { alphabet, .. } => Ok(alphabet.clone()),
            ShiftSpec::Union { parts } => {
                let mut symbols: Vec<String> = Vec::new();
                for part in parts {
                    for s in part.alphabet()?.symbols() {
                        if symbols.contains(s) {
                            return Err(Error::AlphabetCollision(s.clone()));
                        }
                        symbols.push(s.clone());
                    }
                }
                Alphabet::new(symbols)
            }
            ShiftSpec::Marked { base, marker } => {
                let mut symbols = base.alphabet()?.symbols().to_vec();
                if symbols.contains(marker) {
                    return Err(Error::AlphabetCollision(marker.clone()));
                }
                symbols.push(marker.clone());
                Alphabet::new(symbols)
            }
        }
    }

    /// Minimal shifts in this family: Sturmian shifts and primitive substitutions.
    pub fn is_minimal(&self) -> bool {
        matches!(self, ShiftSpec::Sturmian { .. } | ShiftSpec::Substitution { .. })
    }

    /// Aperiodic minimal shifts have no singleton cylinders.
    pub fn is_aperiodic_minimal(&self) -> bool {
        match self {
            ShiftSpec::Sturmian { .. } => true,
            ShiftSpec::Substitution { alphabet, .. } => alphabet.len() > 1,
            _ => false,
        }
    }

    /// Longest forbidden word of an SFT spec.
    pub fn sft_window(&self) -> Option<usize> {
        match self {
            ShiftSpec::Sft { forbidden, .. } => Some(forbidden.iter().map(|w| w.len()).max().unwrap_or(0).max(1)),
            _ => None,
        }
    }

    /// Checks the structural invariants of the spec.
    pub fn validate(&self) -> Result<()> {
        match self {
            ShiftSpec::Sft { alphabet, forbidden } => {
                for w in forbidden {
                    if w.is_empty() {
                        return Err(Error::spec("/forbidden", "forbidden words must be nonempty"));
                    }
                    check_symbols(alphabet, w)?;
                }
                Ok(())
            }
            ShiftSpec::Substitution { alphabet, rules } => {
                if rules.len() != alphabet.len() {
                    return Err(Error::spec("/rules", "substitution must map every symbol"));
                }
                for w in rules {
                    if w.is_empty() {
                        return Err(Error::spec("/rules", "substitution images must be nonempty"));
                    }
                    check_symbols(alphabet, w)?;
                }
                if !is_primitive(alphabet.len(), rules) {
                    return Err(Error::NonPrimitiveSubstitution);
                }
                Ok(())
            }
            ShiftSpec::Sturmian { cf, alphabet } => {
                if cf.period.is_empty() {
                    return Err(Error::spec("/cf/period", "period must be nonempty"));
                }
                if cf.pre.iter().chain(&cf.period).any(|&a| a == 0) {
                    return Err(Error::spec("/cf", "coefficients must be positive"));
                }
                if alphabet.len() != 2 {
                    return Err(Error::spec("/alphabet", "sturmian alphabet must have two symbols"));
                }
                Ok(())
            }
            ShiftSpec::Periodic { alphabet, orbits } => {
                if orbits.is_empty() {
                    return Err(Error::spec("/orbits", "at least one orbit is required"));
                }
                for w in orbits {
                    if w.is_empty() {
                        return Err(Error::spec("/orbits", "seeds must be nonempty"));
                    }
                    check_symbols(alphabet, w)?;
                    if minimal_period(w) != w.len() {
                        return Err(Error::NonPrimitiveSeed(alphabet.format_word(w)));
                    }
                }
                for (i, a) in orbits.iter().enumerate() {
                    for b in &orbits[i + 1..] {
                        if is_rotation(a, b) {
                            return Err(Error::DuplicateOrbit(alphabet.format_word(a), alphabet.format_word(b)));
                        }
                    }
                }
                Ok(())
            }
            ShiftSpec::Union { parts } => {
                if parts.is_empty() {
                    return Err(Error::spec("/parts", "union needs at least one part"));
                }
                for part in parts {
                    part.validate()?;
                }
                self.alphabet().map(|_| ())
            }
            ShiftSpec::Marked { base, .. } => {
                base.validate()?;
                self.alphabet().map(|_| ())
            }
            ShiftSpec::Doubling { alphabet, levels } => {
                if alphabet.len() != 2 {
                    return Err(Error::spec("/alphabet", "doubling alphabet must have two symbols"));
                }
                if *levels == 0 || *levels > 20 {
                    return Err(Error::spec("/levels", "levels must be in 1..=20"));
                }
                Ok(())
            }
        }
    }

    /// The language of the shift up to length `max_n`.
    pub fn generate_language(&self, max_n: usize) -> Result<LanguageTable> {
        if max_n == 0 {
            return Err(Error::BadParams("max_n must be at least 1".into()));
        }
        self.validate()?;
        let alphabet = self.alphabet()?;
        let sets = self.word_sets(max_n)?;
        let table = LanguageTable::from_levels(alphabet, sets)?;
        Ok(match self.sft_window() {
            Some(w) => table.with_sft_window(w),
            None => table,
        })
    }

    fn word_sets(&self, max_n: usize) -> Result<Vec<BTreeSet<Word>>> {
        match self {
            ShiftSpec::Sft { alphabet, forbidden } => sft_language(alphabet.len(), forbidden, max_n),
            ShiftSpec::Substitution { alphabet, rules } => Ok(substitution_language(alphabet.len(), rules, max_n)),
            ShiftSpec::Sturmian { cf, .. } => sturmian_language(cf, max_n),
            ShiftSpec::Periodic { orbits, .. } => Ok(periodic_language(orbits, max_n)),
            ShiftSpec::Union { parts } => {
                let mut sets = vec![BTreeSet::new(); max_n];
                let mut offset: Sym = 0;
                for part in parts {
                    for (level, part_level) in sets.iter_mut().zip(part.word_sets(max_n)?) {
                        level.extend(part_level.into_iter().map(|w| Word(w.iter().map(|&s| s + offset).collect())));
                    }
                    offset += part.alphabet()?.len() as Sym;
                }
                Ok(sets)
            }
            ShiftSpec::Marked { base, .. } => {
                let marker = base.alphabet()?.len() as Sym;
                marked_language(base, marker, max_n)
            }
            ShiftSpec::Doubling { levels, .. } => Ok(doubling_language(*levels, max_n)),
        }
    }
}

fn check_symbols(alphabet: &Alphabet, w: &Word) -> Result<()> {
    match w.iter().find(|&&s| s as usize >= alphabet.len()) {
        Some(s) => Err(Error::UnknownSymbol(format!("#{s}"))),
        None => Ok(()),
    }
}

/// Smallest `p` such that `w` is a power of its length-`p` prefix.
pub fn minimal_period(w: &[Sym]) -> usize {
    let n = w.len();
    (1..=n).find(|&p| n.is_multiple_of(p) && w.chunks(p).all(|c| c == &w[..p])).unwrap_or(n)
}

/// Whether `a` and `b` are cyclic rotations of each other.
pub fn is_rotation(a: &[Sym], b: &[Sym]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|r| a[r..].iter().chain(&a[..r]).eq(b.iter()))
}

fn is_primitive(d: usize, rules: &[Word]) -> bool {
    let mut m = vec![vec![false; d]; d];
    for (a, img) in rules.iter().enumerate() {
        for &b in img.iter() {
            m[a][b as usize] = true;
        }
    }
    // Wielandt: a primitive d×d matrix has a positive power at most (d-1)^2 + 1.
    let mut power = m.clone();
    for _ in 0..((d - 1) * (d - 1) + 1) {
        if power.iter().all(|row| row.iter().all(|&x| x)) {
            return true;
        }
        let mut next = vec![vec![false; d]; d];
        for i in 0..d {
            for k in 0..d {
                if power[i][k] {
                    for j in 0..d {
                        next[i][j] |= m[k][j];
                    }
                }
            }
        }
        power = next;
    }
    false
}

fn avoids_at_end(w: &[Sym], forbidden: &[Word]) -> bool {
    !forbidden.iter().any(|f| w.ends_with(f))
}

fn sft_language(d: usize, forbidden: &[Word], max_n: usize) -> Result<Vec<BTreeSet<Word>>> {
    let longest = forbidden.iter().map(|w| w.len()).max().unwrap_or(1);
    let k = longest.saturating_sub(1).max(1);
    if (d as f64).powi(k as i32 + 1) > SFT_WINDOW_BUDGET as f64 {
        return Err(Error::BadParams(format!("SFT window graph too large ({d}^{} windows)", k + 1)));
    }
    // Admissible words of length k and k+1, extended symbol by symbol.
    let mut admissible: Vec<Vec<Sym>> = vec![Vec::new()];
    let mut vertices: Vec<Vec<Sym>> = Vec::new();
    for len in 1..=k + 1 {
        let mut next = Vec::new();
        for w in &admissible {
            for a in 0..d as Sym {
                let mut u = w.clone();
                u.push(a);
                if avoids_at_end(&u, forbidden) {
                    next.push(u);
                }
            }
        }
        admissible = next;
        if len == k {
            vertices = admissible.clone();
        }
    }
    let edges = admissible;
    let index: BTreeMap<&[Sym], usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    let mut succ = vec![Vec::new(); vertices.len()];
    let mut pred = vec![Vec::new(); vertices.len()];
    for e in &edges {
        let (u, v) = (index[&e[..k]], index[&e[1..]]);
        succ[u].push(v);
        pred[v].push(u);
    }
    // Trim to the essential subgraph: vertices on some bi-infinite path.
    let mut alive = vec![true; vertices.len()];
    loop {
        let mut changed = false;
        for v in 0..vertices.len() {
            if alive[v] && (!succ[v].iter().any(|&s| alive[s]) || !pred[v].iter().any(|&p| alive[p])) {
                alive[v] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let core: BTreeSet<Word> = vertices.iter().zip(&alive).filter(|(_, &a)| a).map(|(v, _)| Word(v.clone())).collect();
    if core.is_empty() {
        return Err(Error::InvalidTable("SFT is empty".into()));
    }
    let mut sets = Vec::with_capacity(max_n);
    for n in 1..=max_n.min(k) {
        sets.push(core.iter().map(|v| Word(v[..n].to_vec())).collect::<BTreeSet<_>>());
    }
    let mut current = core;
    for _ in k + 1..=max_n {
        let mut next = BTreeSet::new();
        for w in &current {
            let tail = &w[w.len() - k..];
            for &t in &succ[index[tail]] {
                if alive[t] {
                    let mut u = w.0.clone();
                    u.push(vertices[t][k - 1]);
                    next.insert(Word(u));
                }
            }
        }
        if next.len() > SFT_LEVEL_BUDGET {
            return Err(Error::BadParams(format!(
                "SFT language too large: more than {SFT_LEVEL_BUDGET} words of length {}",
                w_len(&next)
            )));
        }
        sets.push(next.clone());
        current = next;
    }
    Ok(sets)
}

fn w_len(set: &BTreeSet<Word>) -> usize {
    set.first().map_or(0, |w| w.len())
}

fn substitute(rules: &[Word], w: &[Sym]) -> Vec<Sym> {
    w.iter().flat_map(|&s| rules[s as usize].iter().copied()).collect()
}

fn factor_sets(sources: &[Vec<Sym>], max_n: usize) -> Vec<BTreeSet<Word>> {
    (1..=max_n)
        .map(|n| sources.iter().flat_map(|s| s.windows(n)).map(Word::from_slice).collect::<BTreeSet<_>>())
        .collect()
}

fn substitution_language(d: usize, rules: &[Word], max_n: usize) -> Vec<BTreeSet<Word>> {
    if d == 1 {
        return (1..=max_n).map(|n| BTreeSet::from([Word(vec![0; n])])).collect();
    }
    // Two-letter language: closure of the 2-factors of σ(a) under w -> 2-factors of σ(w).
    let mut pairs: BTreeSet<[Sym; 2]> = BTreeSet::new();
    let mut work: Vec<Vec<Sym>> = rules.iter().map(|r| r.0.clone()).collect();
    while let Some(w) = work.pop() {
        for p in w.windows(2) {
            if pairs.insert([p[0], p[1]]) {
                work.push(substitute(rules, p));
            }
        }
    }
    // Iterate until every block σ^k(a) has length >= max_n - 1.
    let mut blocks: Vec<Vec<Sym>> = (0..d as Sym).map(|a| vec![a]).collect();
    while blocks.iter().map(Vec::len).min().unwrap_or(0) + 1 < max_n {
        blocks = blocks.iter().map(|b| substitute(rules, b)).collect();
    }
    let sources: Vec<Vec<Sym>> = pairs
        .iter()
        .map(|&[b, c]| {
            let mut s = blocks[b as usize].clone();
            s.extend_from_slice(&blocks[c as usize]);
            s
        })
        .collect();
    factor_sets(&sources, max_n)
}

/// Prefix of the characteristic word: `s_{-1} = 1`, `s_0 = 0`,
/// `s_{k+1} = s_k^{a_{k+1}} s_{k-1}`, stopped once the length reaches `min_len`.
pub fn standard_word(cf: &ContinuedFraction, min_len: usize) -> Vec<Sym> {
    let mut prev: Vec<Sym> = vec![1];
    let mut cur: Vec<Sym> = vec![0];
    for a in cf.terms() {
        if cur.len() >= min_len && cur.len() > 1 {
            break;
        }
        let mut next = Vec::with_capacity(cur.len() * a as usize + prev.len());
        for _ in 0..a {
            next.extend_from_slice(&cur);
        }
        next.extend_from_slice(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn sturmian_language(cf: &ContinuedFraction, max_n: usize) -> Result<Vec<BTreeSet<Word>>> {
    let mut target = 4 * max_n + 16;
    loop {
        let prefix = standard_word(cf, target);
        let sets = factor_sets(std::slice::from_ref(&prefix), max_n);
        if sets.iter().enumerate().all(|(i, s)| s.len() == i + 2) {
            return Ok(sets);
        }
        if prefix.len() > STURMIAN_PREFIX_LIMIT {
            return Err(Error::BadParams("sturmian prefix limit reached".into()));
        }
        target = prefix.len() * 2;
    }
}

fn periodic_language(orbits: &[Word], max_n: usize) -> Vec<BTreeSet<Word>> {
    (1..=max_n)
        .map(|n| {
            let mut set = BTreeSet::new();
            for seed in orbits {
                let p = seed.len();
                for r in 0..p {
                    set.insert(Word((0..n).map(|i| seed[(r + i) % p]).collect()));
                }
            }
            set
        })
        .collect()
}

/// A two-sided word of length `2 * radius + 1` centred on a point of the
/// shift, grown symmetrically by taking the first admissible extension.
pub fn canonical_central_word(table: &LanguageTable, radius: usize) -> Result<Vec<Sym>> {
    table.check_depth(2 * radius + 1)?;
    let mut w = table.level(1)[0].0.clone();
    for _ in 0..radius {
        let a = table.left_extensions(&w)?[0];
        w.insert(0, a);
        let b = table.right_extensions(&w)?[0];
        w.push(b);
    }
    Ok(w)
}

fn marked_language(base: &ShiftSpec, marker: Sym, max_n: usize) -> Result<Vec<BTreeSet<Word>>> {
    let base_table = base.generate_language(2 * max_n - 1)?;
    let mut sets: Vec<BTreeSet<Word>> = (1..=max_n).map(|n| base_table.level(n).iter().cloned().collect()).collect();
    let mut point = canonical_central_word(&base_table, max_n - 1)?;
    let center = max_n - 1;
    point[center] = marker;
    for n in 1..=max_n {
        for offset in 0..n {
            let start = center - offset;
            sets[n - 1].insert(Word::from_slice(&point[start..start + n]));
        }
    }
    Ok(sets)
}

/// Seed of the doubling orbit of period `2^m`: a single `1` followed by zeros.
pub fn doubling_seed(m: usize) -> Word {
    let mut w = vec![0; 1 << m];
    w[0] = 1;
    Word(w)
}

fn doubling_language(levels: usize, max_n: usize) -> Vec<BTreeSet<Word>> {
    let orbits: Vec<Word> = (1..=levels).map(doubling_seed).collect();
    let mut sets = periodic_language(&orbits, max_n);
    for (i, set) in sets.iter_mut().enumerate() {
        let n = i + 1;
        set.insert(Word(vec![0; n]));
        for j in 0..n {
            let mut w = vec![0; n];
            w[j] = 1;
            set.insert(Word(w));
        }
    }
    sets
}

/// A shift consisting of finitely many periodic orbits, with points indexed
/// as `(orbit, phase)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicShift {
    pub alphabet: Alphabet,
    pub orbits: Vec<Word>,
}

impl PeriodicShift {
    pub fn new(alphabet: Alphabet, orbits: Vec<Word>) -> Result<Self> {
        ShiftSpec::Periodic { alphabet: alphabet.clone(), orbits: orbits.clone() }.validate()?;
        Ok(PeriodicShift { alphabet, orbits })
    }

    pub fn from_spec(spec: &ShiftSpec) -> Result<Self> {
        match spec {
            ShiftSpec::Periodic { alphabet, orbits } => Self::new(alphabet.clone(), orbits.clone()),
            other => Err(Error::BadParams(format!("expected a periodic spec, got `{}`", other.model_name()))),
        }
    }

    pub fn to_spec(&self) -> ShiftSpec {
        ShiftSpec::Periodic { alphabet: self.alphabet.clone(), orbits: self.orbits.clone() }
    }

    pub fn periods(&self) -> Vec<usize> {
        self.orbits.iter().map(|w| w.len()).collect()
    }

    /// Total number of points, `Σ n_i`.
    pub fn num_points(&self) -> usize {
        self.orbits.iter().map(|w| w.len()).sum()
    }

    /// All points in canonical order: orbit by orbit, phase by phase.
    pub fn points(&self) -> Vec<(usize, usize)> {
        self.orbits.iter().enumerate().flat_map(|(i, w)| (0..w.len()).map(move |p| (i, p))).collect()
    }

    pub fn point_index(&self, orbit: usize, phase: usize) -> usize {
        self.orbits[..orbit].iter().map(|w| w.len()).sum::<usize>() + phase
    }

    /// The coordinate `x(i)` of point `(orbit, phase)`, i.e. of `σ^phase(x_orbit)`.
    pub fn symbol_at(&self, orbit: usize, phase: usize, i: i64) -> Sym {
        let seed = &self.orbits[orbit];
        let p = seed.len() as i64;
        seed[(phase as i64 + i).rem_euclid(p) as usize]
    }

    /// The shift as a permutation of point indices.
    pub fn shift_permutation(&self) -> Vec<usize> {
        self.points().into_iter().map(|(i, p)| self.point_index(i, (p + 1) % self.orbits[i].len())).collect()
    }

    /// Least common multiple of the periods.
    pub fn lcm_period(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.periods().into_iter().fold(1, |acc, p| acc / gcd(acc, p) * p)
    }
}

/// Parameters for [`builtin_example`].
#[derive(Debug, Clone, Default)]
pub struct BuiltinParams {
    /// Number of Sturmian components for `union-sturmian`.
    pub k: Option<usize>,
    /// Periodic continued-fraction periods, one per Sturmian component.
    pub cfs: Vec<Vec<u64>>,
    /// Number of doubling orbits for `doubling-periodic` / `doubling-pair`.
    pub n_max: Option<usize>,
    /// Base shift for `marked-transitive` (Fibonacci when absent).
    pub base: Option<ShiftSpec>,
}

pub const BUILTIN_NAMES: [&str; 4] = ["union-sturmian", "marked-transitive", "doubling-periodic", "doubling-pair"];

fn doubling(zero: &str, one: &str, levels: usize) -> Result<ShiftSpec> {
    Ok(ShiftSpec::Doubling { alphabet: Alphabet::new([zero, one])?, levels })
}

/// The example shifts used throughout the verification suites.
///
/// * `union-sturmian`: disjoint union of `k` Sturmian shifts with distinct
///   slopes, over alphabets `{0_i, 1_i}`.
/// * `marked-transitive`: a minimal base (default Fibonacci) with one point
///   marked by a fresh symbol.
/// * `doubling-periodic`: the doubling family truncated at `n_max` orbits.
/// * `doubling-pair`: two copies of `doubling-periodic` over `{0,1}` and `{2,3}`.
pub fn builtin_example(name: &str, params: &BuiltinParams) -> Result<ShiftSpec> {
    let spec = match name {
        "union-sturmian" => {
            let cfs = if params.cfs.is_empty() {
                let k = params.k.ok_or_else(|| Error::BadParams("k or cfs required".into()))?;
                (1..=k as u64).map(|a| vec![a]).collect()
            } else {
                params.cfs.clone()
            };
            if let Some(k) = params.k {
                if k != cfs.len() {
                    return Err(Error::BadParams(format!("k = {k} but {} expansions", cfs.len())));
                }
            }
            if cfs.is_empty() {
                return Err(Error::BadParams("k must be at least 1".into()));
            }
            let distinct: BTreeSet<&Vec<u64>> = cfs.iter().collect();
            if distinct.len() != cfs.len() {
                return Err(Error::BadParams("continued fractions must be distinct".into()));
            }
            let parts = cfs
                .iter()
                .enumerate()
                .map(|(i, period)| {
                    Ok(ShiftSpec::Sturmian {
                        cf: ContinuedFraction::periodic(period.clone()),
                        alphabet: Alphabet::new([format!("0_{}", i + 1), format!("1_{}", i + 1)])?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            ShiftSpec::Union { parts }
        }
        "marked-transitive" => {
            let base = params.base.clone().unwrap_or_else(ShiftSpec::fibonacci);
            if !base.is_minimal() {
                return Err(Error::BadParams("marked-transitive needs a minimal base".into()));
            }
            let symbols = base.alphabet()?;
            let marker =
                (0..).map(|i: usize| i.to_string()).find(|t| symbols.index_of(t).is_none()).expect("unbounded");
            ShiftSpec::Marked { base: Box::new(base), marker }
        }
        "doubling-periodic" => doubling("0", "1", n_max_param(params)?)?,
        "doubling-pair" => {
            let n = n_max_param(params)?;
            ShiftSpec::Union { parts: vec![doubling("0", "1", n)?, doubling("2", "3", n)?] }
        }
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    };
    spec.validate()?;
    Ok(spec)
}

fn n_max_param(params: &BuiltinParams) -> Result<usize> {
    params.n_max.ok_or_else(|| Error::BadParams("n_max required".into()))
}
