mod common;

use common::*;
use satknot_core::lasso::{closed_form_simple, eq1_simple, formula_l1r, BracketCache, Lasso};
use satknot_core::poly::{LaurentPolynomial, Variable};
use satknot_core::skein::{delta, SkeinElement};

#[test]
fn degree_bounds_exhaustive() {
    for twists in sequences(6, &nonzero(3)) {
        let m = twists.len() as u32;
        let d = lasso(&twists).degree().unwrap();
        assert!(d <= m + 1, "{twists:?}: degree {d}");
        if m % 2 == 0 {
            assert!(d >= 1, "{twists:?}: degree {d}");
        }
    }
}

#[test]
fn reversal_preserves_bracket_and_degree() {
    let mut cache = BracketCache::default();
    for twists in sequences(6, &nonzero(3)) {
        let l = lasso(&twists);
        let r = l.reversed();
        assert_eq!(l.degree().unwrap(), r.degree().unwrap(), "{l}");
        assert_eq!(cache.bracket(l.twists()), cache.bracket(r.twists()), "{l}");
    }
}

#[test]
fn whitehead_patterns_have_degree_zero() {
    assert_eq!(Lasso::simple(2).degree().unwrap(), 0);
    assert_eq!(Lasso::simple(-2).degree().unwrap(), 0);
}

#[test]
fn normalization_is_confluent() {
    let values: Vec<i64> = (-2..=2).collect();
    for twists in sequences(6, &values) {
        let forms = all_normal_forms(&twists);
        let expected = lasso(&twists).normalize();
        assert_eq!(forms.len(), 1, "{twists:?} reaches {forms:?}");
        assert_eq!(forms.into_iter().next().unwrap(), expected.twists(), "{twists:?}");
        assert_eq!(expected.normalize(), expected);
    }
}

#[test]
fn zero_elimination_preserves_jones_st() {
    let values: Vec<i64> = (-2..=2).collect();
    let mut cache = BracketCache::default();
    for twists in sequences(5, &values) {
        if !twists.contains(&0) {
            continue;
        }
        let raw = lasso(&twists);
        let normal = raw.normalize();
        assert_eq!(
            raw.jones_st_with(&mut cache).unwrap(),
            normal.jones_st_with(&mut cache).unwrap(),
            "{raw} vs {normal}"
        );
    }
}

#[test]
fn simple_closed_form_matches_recursion() {
    for r in (-10..=10).filter(|&r| r != 0) {
        assert_eq!(Lasso::simple(r).bracket(), closed_form_simple(r).unwrap(), "r = {r}");
        assert_eq!(Lasso::simple(r).jones_st().unwrap(), eq1_simple(r).unwrap(), "r = {r}");
    }
}

/// The L(r) formula evaluated as written, for any sign of `r`.
fn eq1_literal(r: i64) -> SkeinElement {
    let minus_t_power = LaurentPolynomial::monomial(Variable::U, -2 * r, if r % 2 == 0 { 1 } else { -1 });
    let quotient = (&u("1") - &minus_t_power).exact_div(&u("t + 1")).unwrap();
    SkeinElement::from_terms(Variable::U, [(0, minus_t_power), (2, &u("-t^1/2") * &quotient)]).unwrap()
}

#[test]
fn simple_formula_holds_literally_for_negative_twists() {
    for r in -10..0 {
        assert_eq!(eq1_literal(r), eq1_simple(r).unwrap(), "r = {r}");
    }
}

#[test]
fn l1r_formula_matches_recursion() {
    for r in (-10..=10).filter(|&r| r != 0) {
        assert_eq!(Lasso::new(vec![1, r]).jones_st().unwrap(), formula_l1r(r).unwrap(), "r = {r}");
    }
}

fn scale(x: &SkeinElement, by: &str) -> SkeinElement {
    x.scale(&u(by)).unwrap()
}

#[test]
fn difference_identity_for_simple_lassos() {
    for r in 1..=8i64 {
        let diff = eq1_simple(r).unwrap().checked_sub(&eq1_simple(r + 2).unwrap()).unwrap();
        let lhs = scale(&diff, &format!("t^{}", r + 2));
        let bracketed = SkeinElement::from_terms(Variable::U, [(0, u("t + 1")), (2, u("t^1/2"))]).unwrap();
        let sign = if r % 2 == 0 { "t - 1" } else { "1 - t" };
        assert_eq!(lhs, scale(&bracketed, sign), "r = {r}");
    }
}

#[test]
fn difference_identity_for_l1r() {
    for r in 1..=8i64 {
        let diff = formula_l1r(r).unwrap().checked_sub(&formula_l1r(r + 2).unwrap()).unwrap();
        let lhs = scale(&diff, &format!("t^{}", r + 3));
        let bracketed = SkeinElement::from_terms(Variable::U, [(1, u("t^2 + 2t + 1")), (3, u("-t"))]).unwrap();
        let sign = if r % 2 == 0 { "t - 1" } else { "1 - t" };
        assert_eq!(lhs, scale(&bracketed, sign), "r = {r}");
    }
}

#[test]
fn unknot_companion_gives_the_unknot() {
    let d = delta(Variable::U).unwrap();
    let mut cache = BracketCache::default();
    for twists in sequences(6, &nonzero(3)) {
        let value = lasso(&twists)
            .jones_st_with(&mut cache)
            .unwrap()
            .substitute_basis(|k| Some(if k == 0 { LaurentPolynomial::one(Variable::U) } else { d.pow(k - 1) }))
            .unwrap();
        assert!(value.is_one(), "{twists:?}: {value}");
    }
}

#[test]
fn geometric_degree_at_most_length_plus_one() {
    let mut cache = BracketCache::default();
    for twists in sequences(5, &nonzero(3)) {
        let m = twists.len() as u32;
        let bracket = cache.bracket(&twists);
        assert!(bracket.geometric_degree().unwrap() <= m + 1, "{twists:?}");
        // the top power and the winding number have the same parity
        let degree = lasso(&twists).degree().unwrap();
        assert_eq!(bracket.geometric_degree().unwrap() % 2, degree % 2, "{twists:?}");
    }
}
