use std::collections::{BTreeSet, HashMap};

use proptest::prelude::*;
use shiftaut::block_code::inflate;
use shiftaut::words::LanguageTable;
use shiftaut::{compose, Alphabet, BlockCode, ShiftSpec, Sym, Word};

fn alphabet(d: usize) -> Alphabet {
    Alphabet::new((0..d).map(|i| i.to_string())).unwrap()
}

/// Language of an SFT by direct search: a word is in the language when it
/// sits inside an allowed word that can be continued for as many steps as
/// there are states, in both directions.
struct SftOracle {
    d: usize,
    forbidden: Vec<Vec<Sym>>,
    memory: usize,
}

impl SftOracle {
    fn allowed(&self, w: &[Sym]) -> bool {
        !self.forbidden.iter().any(|f| w.windows(f.len()).any(|x| x == f.as_slice()))
    }

    fn extends(&self, w: &mut Vec<Sym>, steps: usize, memo: &mut HashMap<(Vec<Sym>, usize), bool>) -> bool {
        if steps == 0 {
            return true;
        }
        let key = (w[w.len() - self.memory..].to_vec(), steps);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut ok = false;
        for a in 0..self.d as Sym {
            w.push(a);
            if self.allowed(&w[w.len().saturating_sub(self.memory + 1)..]) && self.extends(w, steps - 1, memo) {
                ok = true;
            }
            w.pop();
            if ok {
                break;
            }
        }
        memo.insert(key, ok);
        ok
    }

    fn words(&self, n: usize) -> BTreeSet<Vec<Sym>> {
        let states = self.d.pow(self.memory as u32) + 1;
        let pad = self.memory;
        let mut right = HashMap::new();
        let mut left = HashMap::new();
        let mut out = BTreeSet::new();
        for u in all_words(self.d, n + 2 * pad) {
            if !self.allowed(&u) {
                continue;
            }
            let mut r = u.clone();
            let mut l: Vec<Sym> = u.iter().rev().copied().collect();
            let reversed = SftOracle {
                d: self.d,
                forbidden: self.forbidden.iter().map(|f| f.iter().rev().copied().collect()).collect(),
                memory: self.memory,
            };
            if self.extends(&mut r, states, &mut right) && reversed.extends(&mut l, states, &mut left) {
                out.insert(u[pad..pad + n].to_vec());
            }
        }
        out
    }
}

fn all_words(d: usize, n: usize) -> Vec<Vec<Sym>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| (0..d as Sym).map(move |a| [w.clone(), vec![a]].concat())).collect();
    }
    out
}

fn sft_strategy() -> impl Strategy<Value = (usize, Vec<Vec<Sym>>)> {
    (2usize..=3).prop_flat_map(|d| {
        let word = (1usize..=3).prop_flat_map(move |len| prop::collection::vec(0..d as Sym, len));
        (Just(d), prop::collection::vec(word, 0..=3))
    })
}

fn full_shift_table(d: usize, max_n: usize) -> LanguageTable {
    ShiftSpec::full_shift(d).generate_language(max_n).unwrap()
}

fn random_code(table: &LanguageTable, range: usize, seed: &[Sym]) -> BlockCode {
    let count = table.complexity(2 * range + 1);
    let outputs = (0..count).map(|i| seed[i % seed.len()]).collect();
    BlockCode::from_outputs(table, range, outputs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sft_language_matches_oracle((d, forbidden) in sft_strategy()) {
        let max_n = 6;
        let memory = forbidden.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1).max(1);
        let oracle = SftOracle { d, forbidden: forbidden.clone(), memory };
        let spec = ShiftSpec::Sft { alphabet: alphabet(d), forbidden: forbidden.into_iter().map(Word).collect() };
        match spec.generate_language(max_n) {
            Ok(table) => {
                for n in 1..=max_n {
                    let got: BTreeSet<Vec<Sym>> = table.level(n).iter().map(|w| w.0.clone()).collect();
                    prop_assert_eq!(got, oracle.words(n), "n = {}", n);
                }
            }
            Err(_) => prop_assert!(oracle.words(1).is_empty()),
        }
    }

    #[test]
    fn compose_is_sequential_application(
        d in 2usize..=3,
        ra in 0usize..=1,
        rb in 0usize..=1,
        sa in prop::collection::vec(0u16..3, 1..40),
        sb in prop::collection::vec(0u16..3, 1..40),
        w in prop::collection::vec(0u16..3, 5..12),
    ) {
        let table = full_shift_table(d, 2 * (ra + rb) + 1);
        let clamp = |s: &[Sym]| s.iter().map(|&x| x % d as Sym).collect::<Vec<_>>();
        let a = random_code(&table, ra, &clamp(&sa));
        let b = random_code(&table, rb, &clamp(&sb));
        let ab = compose(&a, &b, &table).unwrap();
        let w = clamp(&w);
        let direct = a.apply_to_word(&b.apply_to_word(&w).unwrap()).unwrap();
        prop_assert_eq!(ab.apply_to_word(&w).unwrap(), direct);
    }

    #[test]
    fn inflate_keeps_the_map(
        r in 0usize..=1,
        extra in 0usize..=2,
        seed in prop::collection::vec(0u16..2, 1..20),
        w in prop::collection::vec(0u16..2, 7..14),
    ) {
        let table = full_shift_table(2, 2 * (r + extra) + 1);
        let code = random_code(&table, r, &seed);
        let big = inflate(&code, r + extra, &table).unwrap();
        let direct = code.apply_to_word(&w).unwrap();
        prop_assert_eq!(big.apply_to_word(&w).unwrap().0, direct.0[extra..direct.len() - extra].to_vec());
        prop_assert!(shiftaut::block_code::codes_equal(&code, &big, &table).unwrap());
    }

    #[test]
    fn cache_round_trip(period in prop::collection::vec(1u64..4, 1..3), max_n in 1usize..20) {
        let table = ShiftSpec::sturmian(period).generate_language(max_n).unwrap();
        let back = LanguageTable::from_cache_str(&table.to_cache_string()).unwrap();
        prop_assert_eq!(back, table);
    }

    #[test]
    fn differences_count_right_extensions(period in prop::collection::vec(1u64..4, 1..3)) {
        let max_n = 16;
        for spec in [ShiftSpec::sturmian(period), ShiftSpec::thue_morse()] {
            let table = spec.generate_language(max_n).unwrap();
            for n in 1..max_n {
                let extra: usize = table
                    .level(n)
                    .iter()
                    .map(|w| table.right_extensions(w).unwrap().len() - 1)
                    .sum();
                prop_assert_eq!(table.complexity(n + 1) - table.complexity(n), extra);
            }
        }
    }

    #[test]
    fn union_complexity_adds(a in 1u64..5, b in 1u64..5) {
        prop_assume!(a != b);
        let parts = vec![
            ShiftSpec::Sturmian { cf: shiftaut::models::ContinuedFraction::periodic(vec![a]), alphabet: Alphabet::new(["a", "b"]).unwrap() },
            ShiftSpec::Sturmian { cf: shiftaut::models::ContinuedFraction::periodic(vec![b]), alphabet: Alphabet::new(["c", "d"]).unwrap() },
        ];
        let union = ShiftSpec::Union { parts: parts.clone() }.generate_language(12).unwrap();
        let tables: Vec<LanguageTable> = parts.iter().map(|p| p.generate_language(12).unwrap()).collect();
        for n in 1..=12 {
            prop_assert_eq!(union.complexity(n), tables.iter().map(|t| t.complexity(n)).sum::<usize>());
        }
    }
}
