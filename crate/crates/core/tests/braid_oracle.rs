mod common;

use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use satknot_core::braid::{state_sum_annulus, state_sum_sphere, BraidWord, STATE_SUM_LIMIT};
use satknot_core::catalog::Catalog;
use satknot_core::Error;

fn random_word(rng: &mut StdRng, max_strands: usize, max_len: usize) -> BraidWord {
    let strands = rng.gen_range(1..=max_strands);
    let len = if strands == 1 { 0 } else { rng.gen_range(0..=max_len) };
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands) as i32;
            if rng.gen_bool(0.5) { g } else { -g }
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

fn sample(seed: u64, count: usize) -> Vec<BraidWord> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| random_word(&mut rng, 4, 8)).collect()
}

#[test]
fn transfer_matches_state_sum() {
    for word in sample(0x5eed, 600) {
        assert_eq!(word.bracket_sphere(), state_sum_sphere(&word).unwrap(), "{word}");
        assert_eq!(word.bracket_annulus(), state_sum_annulus(&word).unwrap(), "{word}");
    }
}

#[test]
fn annulus_reading_embeds_to_sphere_reading() {
    for word in sample(17, 300) {
        assert_eq!(word.bracket_annulus().embed_to_s3().unwrap(), word.bracket_sphere(), "{word}");
    }
}

#[test]
fn jones_is_invariant_under_markov_moves() {
    let mut rng = StdRng::seed_from_u64(99);
    for word in sample(99, 200) {
        let j = word.jones_closure();
        let k = rng.gen_range(0..=word.len());
        assert_eq!(word.rotated(k).jones_closure(), j, "{word} rotated by {k}");
        assert_eq!(word.stabilized(true).jones_closure(), j, "{word} stabilized +");
        assert_eq!(word.stabilized(false).jones_closure(), j, "{word} stabilized -");
    }
}

#[test]
fn state_sum_guard() {
    let long = BraidWord::new(2, vec![1; STATE_SUM_LIMIT + 1]).unwrap();
    assert_eq!(
        state_sum_sphere(&long),
        Err(Error::GuardExceeded { letters: STATE_SUM_LIMIT + 1, limit: STATE_SUM_LIMIT })
    );
}

#[test]
fn small_oracle_values() {
    assert!(state_sum_sphere(&BraidWord::unknot()).unwrap().is_one());
    let s: BraidWord = "B2: 1".parse().unwrap();
    assert_eq!(state_sum_sphere(&s).unwrap(), a("-A^3"));
    let left: BraidWord = "B2: -1 -1 -1".parse().unwrap();
    let annular = state_sum_annulus(&left).unwrap();
    assert_eq!(annular.coefficient(0), a("A^7 - A^3 + A^-1"));
    assert_eq!(annular.coefficient(2), a("A^-3"));
    assert_eq!(annular.geometric_degree().unwrap(), 2);
    let id = state_sum_annulus(&BraidWord::identity(2)).unwrap();
    assert_eq!(id, satknot_core::SkeinElement::basis(satknot_core::Variable::A, 2));
}

/// Cable built with the crossings of each block in the transposed order.
fn cable_transposed(word: &BraidWord, k: usize) -> BraidWord {
    let mut letters = Vec::new();
    for &l in word.letters() {
        let base = (l.unsigned_abs() as usize - 1) * k;
        for a in 0..k {
            for b in 0..k {
                letters.push((base + k + b - a) as i32 * l.signum());
            }
        }
    }
    BraidWord::new(word.strands() * k, letters).unwrap()
}

#[test]
fn cable_matches_independent_construction() {
    let sigma: BraidWord = "B2: 1".parse().unwrap();
    let cabled = sigma.cable(2).unwrap();
    assert_eq!(cabled.bracket_sphere(), state_sum_sphere(&cable_transposed(&sigma, 2)).unwrap());
    let left: BraidWord = "B2: -1 -1 -1".parse().unwrap();
    assert_eq!(left.cable(2).unwrap().len(), 12);
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..40 {
        let word = random_word(&mut rng, 3, 4);
        for k in 1..=2 {
            let c = word.cable(k).unwrap();
            let other = cable_transposed(&word, k);
            assert_eq!(c.bracket_sphere(), other.bracket_sphere(), "{word} k={k}");
            if c.len() <= 16 {
                assert_eq!(c.bracket_annulus(), state_sum_annulus(&other).unwrap(), "{word} k={k}");
            }
        }
    }
}

#[test]
fn framing_twists_can_sit_on_any_cable_group() {
    for name in ["3_1", "4_1", "5_1"] {
        let c = Catalog::builtin().braid(name).unwrap();
        for k in 2..=3 {
            let cabled = c.cable(k).unwrap();
            let twists = BraidWord::half_twists(k, -2 * c.exponent_sum()).unwrap();
            let last_group = twists.shifted((c.strands() - 1) * k, cabled.strands()).unwrap();
            let elsewhere = cabled.then(&last_group).unwrap();
            assert_eq!(elsewhere.jones_closure(), c.parallel_jones(k).unwrap(), "{name} k={k}");
        }
    }
}

#[test]
fn half_twist_shapes() {
    assert_eq!(BraidWord::half_twists(3, 1).unwrap().to_string(), "B3: 1 2 1");
    for k in 1..=5usize {
        let d = BraidWord::half_twists(k, 1).unwrap();
        assert_eq!(d.len(), k * (k - 1) / 2);
        // the half twist reverses the strands
        assert_eq!(d.permutation(), (0..k).rev().collect::<Vec<_>>());
        assert_eq!(BraidWord::half_twists(k, -3).unwrap(), BraidWord::half_twists(k, 3).unwrap().inverse());
    }
}

#[test]
fn catalog_parallels() {
    let cat = Catalog::builtin();
    for entry in cat.entries() {
        let b = &entry.braid;
        assert_eq!(b.parallel_jones(1).unwrap(), b.jones_closure(), "{}", entry.name);
        for k in 1..=3usize {
            let cable = b.zero_framed_cable(k).unwrap();
            assert_eq!(cable.exponent_sum(), k as i64 * b.exponent_sum(), "{} k={k}", entry.name);
        }
    }
}

#[test]
fn jones_is_multiplicative_under_connected_sum() {
    let cat = Catalog::builtin();
    let names = ["0_1", "3_1", "4_1", "5_1", "8_19"];
    for x in names {
        for y in names {
            let (bx, by) = (cat.braid(x).unwrap(), cat.braid(y).unwrap());
            let sum = bx.connected_sum(&by).unwrap();
            assert!(sum.is_knot());
            assert_eq!(sum.jones_closure(), &bx.jones_closure() * &by.jones_closure(), "{x} # {y}");
        }
    }
}

#[test]
fn knot_jones_constraints() {
    for word in sample(41, 300).into_iter().filter(BraidWord::is_knot) {
        let j = word.jones_closure();
        assert!(j.eval_at_one() == 1.into(), "{word}");
        assert_eq!(at_cube_root_of_unity(&j), (1, 0), "{word}");
        assert_eq!(derivative_at_one(&j), 0, "{word}");
    }
}
