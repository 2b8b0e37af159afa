use shiftaut::aut_search::certify_automorphism;
use shiftaut::block_code::{codes_equal, is_endomorphism};
use shiftaut::models::{builtin_example, BuiltinParams};
use shiftaut::periodic_aut::doubling_swap_code;
use shiftaut::{compose, shift_power_code, BlockCode, LanguageTable};

fn pair(levels: usize, max_n: usize) -> LanguageTable {
    let params = BuiltinParams { n_max: Some(levels), ..Default::default() };
    builtin_example("doubling-pair", &params).unwrap().generate_language(max_n).unwrap()
}

fn is_involution(code: &BlockCode, table: &LanguageTable) -> bool {
    let square = compose(code, code, table).unwrap();
    codes_equal(&square, &BlockCode::identity(table).unwrap(), table).unwrap()
}

#[test]
fn alphabet_swap_is_a_range_zero_involution() {
    let table = pair(3, 9);
    let delta = BlockCode::symbol_map(&table, &[2, 3, 0, 1]).unwrap();
    assert_eq!(delta.range(), 0);
    assert!(!is_endomorphism(&delta, &table, 9).unwrap().is_refuted());
    assert!(is_involution(&delta, &table));
}

#[test]
fn orbit_swaps_are_involutions() {
    for m in 1..=2 {
        let gap = 1usize << m;
        let table = pair(3, 4 * gap + 1);
        let swap = doubling_swap_code(&table, m).unwrap();
        assert_eq!(swap.range(), gap);
        assert!(!is_endomorphism(&swap, &table, 4 * gap + 1).unwrap().is_refuted());
        assert!(is_involution(&swap, &table));
        assert!(!codes_equal(&swap, &BlockCode::identity(&table).unwrap(), &table).unwrap());
        for j in -(gap as i64)..=gap as i64 {
            let shift = shift_power_code(j, &table).unwrap();
            assert!(!codes_equal(&swap, &shift, &table).unwrap());
        }
    }
}

#[test]
fn orbit_swap_moves_only_its_orbit() {
    let table = pair(3, 9);
    let swap = doubling_swap_code(&table, 1).unwrap();
    let a = table.alphabet();
    let image = |s: &str| a.format_word(swap.apply_to_word(&a.parse_word(s).unwrap()).unwrap().as_slice());
    assert_eq!(image("10101"), "3");
    assert_eq!(image("01010"), "2");
    assert_eq!(image("10001"), "0");
    assert_eq!(image("00100"), "1");
    assert_eq!(image("32323"), "1");
    assert_eq!(image("101010101"), "32323");
}

#[test]
fn orbit_swap_certifies_with_itself_as_inverse() {
    let table = pair(2, 2 * (2 + 2) + 1);
    let swap = doubling_swap_code(&table, 1).unwrap();
    match certify_automorphism(&swap, &table, 2, 9).unwrap() {
        shiftaut::aut_search::Certification::Certified(c) => {
            assert!(codes_equal(&c.inverse, &swap, &table).unwrap());
            assert_eq!(c.shift_power, None);
        }
        other => panic!("{other:?}"),
    }
}
