#![allow(dead_code)]

use std::collections::BTreeSet;

use satknot_core::lasso::Lasso;
use satknot_core::poly::{LaurentPolynomial, Variable};

/// Every twist sequence of length `0..=max_len` over `values`.
pub fn sequences(max_len: usize, values: &[i64]) -> Vec<Vec<i64>> {
    let mut all = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * values.len());
        for s in &layer {
            for &v in values {
                let mut t = s.clone();
                t.push(v);
                next.push(t);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

pub fn nonzero(bound: i64) -> Vec<i64> {
    (-bound..=bound).filter(|&r| r != 0).collect()
}

/// Every terminal form reachable by applying the zero-elimination rules in
/// any order.
pub fn all_normal_forms(twists: &[i64]) -> BTreeSet<Vec<i64>> {
    let mut terminal = BTreeSet::new();
    let mut seen = BTreeSet::new();
    let mut stack = vec![twists.to_vec()];
    while let Some(s) = stack.pop() {
        if !seen.insert(s.clone()) {
            continue;
        }
        let m = s.len();
        let mut successors = Vec::new();
        if m >= 2 && s[0] == 0 {
            successors.push(s[2..].to_vec());
        }
        for i in 1..m.saturating_sub(1) {
            if s[i] == 0 {
                let mut t = s[..i - 1].to_vec();
                t.push(s[i - 1] + s[i + 1]);
                t.extend_from_slice(&s[i + 2..]);
                successors.push(t);
            }
        }
        if m >= 2 && s[m - 1] == 0 {
            successors.push(s[..m - 2].to_vec());
        }
        if successors.is_empty() {
            terminal.insert(s);
        } else {
            stack.extend(successors);
        }
    }
    terminal
}

pub fn lasso(twists: &[i64]) -> Lasso {
    Lasso::new(twists.to_vec())
}

pub fn u(s: &str) -> LaurentPolynomial {
    LaurentPolynomial::parse(s, Variable::U).unwrap()
}

pub fn t(s: &str) -> LaurentPolynomial {
    LaurentPolynomial::parse(s, Variable::T).unwrap()
}

pub fn a(s: &str) -> LaurentPolynomial {
    LaurentPolynomial::parse(s, Variable::A).unwrap()
}

/// Value of a Jones polynomial (integer powers of `t`) at a primitive cube
/// root of unity `ω`, returned as `(x, y)` meaning `x + y ω`.
pub fn at_cube_root_of_unity(jones: &LaurentPolynomial) -> (i64, i64) {
    let (mut x, mut y) = (0i64, 0i64);
    for (e, c) in jones.terms() {
        assert!(e % 2 == 0, "half-integer power in a knot's Jones polynomial");
        let c: i64 = c.try_into().unwrap();
        match (e / 2).rem_euclid(3) {
            0 => x += c,
            1 => y += c,
            // ω² = -1 - ω
            _ => {
                x -= c;
                y -= c;
            }
        }
    }
    (x, y)
}

/// `V'(1)` of a Jones polynomial with integer powers of `t`.
pub fn derivative_at_one(jones: &LaurentPolynomial) -> i64 {
    jones
        .terms()
        .map(|(e, c)| {
            let c: i64 = c.try_into().unwrap();
            c * (e / 2)
        })
        .sum()
}
