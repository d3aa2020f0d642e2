//! Bracket evaluation by transfer over planar matchings.
//!
//! After reading a prefix of the word, the smoothed diagram is a sum of
//! crossingless tangles. Each is recorded as a perfect non-crossing matching
//! of the `2n` boundary points (bottom `0..n`, top `n..2n`) with its
//! amplitude; loops closed inside the braid are absorbed as factors of `δ`.
//! Each letter replaces a tangle by `A^±1` times itself plus `A^∓1` times
//! the tangle with a cup-cap pair stacked on top.

use std::collections::{BTreeMap, HashMap};

use super::BraidWord;
use crate::poly::{LaurentPolynomial, Variable};
use crate::skein::{delta, SkeinElement};

type Matching = Box<[u8]>;

fn times_delta(p: &LaurentPolynomial) -> LaurentPolynomial {
    let mut out = p.mul_monomial(2, true);
    out.add_assign_unchecked(&p.mul_monomial(-2, true));
    out
}

fn accumulate(into: &mut HashMap<Matching, LaurentPolynomial>, key: Matching, value: LaurentPolynomial) {
    match into.get_mut(&key) {
        Some(existing) => existing.add_assign_unchecked(&value),
        None => {
            into.insert(key, value);
        }
    }
}

/// Amplitudes of every crossingless tangle after smoothing all letters.
fn tangles(word: &BraidWord) -> HashMap<Matching, LaurentPolynomial> {
    let n = word.strands();
    let start: Matching = (0..2 * n)
        .map(|p| if p < n { (p + n) as u8 } else { (p - n) as u8 })
        .collect();
    let mut states = HashMap::new();
    states.insert(start, LaurentPolynomial::one(Variable::A));

    for &letter in word.letters() {
        let i = letter.unsigned_abs() as usize;
        let (a, b) = (n + i - 1, n + i);
        // σ = A·id + A^-1·e, σ^-1 = A^-1·id + A·e
        let id_shift = letter.signum() as i64;
        let mut next = HashMap::with_capacity(states.len() * 2);
        for (m, amp) in states {
            let cupped = amp.mul_monomial(-id_shift, false);
            let x = m[a] as usize;
            if x == b {
                accumulate(&mut next, m.clone(), times_delta(&cupped));
            } else {
                let y = m[b] as usize;
                let mut e = m.clone();
                e[x] = y as u8;
                e[y] = x as u8;
                e[a] = b as u8;
                e[b] = a as u8;
                accumulate(&mut next, e, cupped);
            }
            accumulate(&mut next, m, amp.mul_monomial(id_shift, false));
        }
        next.retain(|_, amp| !amp.is_zero());
        states = next;
    }
    states
}

/// Closes the tangle by joining top point `n + j` to bottom point `j` and
/// returns `(contractible loops, loops wrapping the core)`.
fn close(m: &[u8], n: usize) -> (u32, u32) {
    let mut seen = vec![false; 2 * n];
    let (mut contractible, mut wrapping) = (0, 0);
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        let mut winding = 0i32;
        let mut p = start;
        loop {
            let q = m[p] as usize;
            seen[p] = true;
            seen[q] = true;
            // crossing the closure arcs is crossing the radial cut
            p = if q >= n {
                winding += 1;
                q - n
            } else {
                winding -= 1;
                q + n
            };
            if p == start {
                break;
            }
        }
        assert!(winding.abs() <= 1, "closure loop winds {winding} times");
        if winding == 0 {
            contractible += 1;
        } else {
            wrapping += 1;
        }
    }
    (contractible, wrapping)
}

fn grouped_closures(word: &BraidWord) -> BTreeMap<(u32, u32), LaurentPolynomial> {
    let n = word.strands();
    let mut groups: BTreeMap<(u32, u32), LaurentPolynomial> = BTreeMap::new();
    for (m, amp) in tangles(word) {
        groups
            .entry(close(&m, n))
            .and_modify(|acc| acc.add_assign_unchecked(&amp))
            .or_insert(amp);
    }
    groups
}

pub(super) fn closure_sphere(word: &BraidWord) -> LaurentPolynomial {
    let d = delta(Variable::A).expect("delta in A");
    let mut total = LaurentPolynomial::zero(Variable::A);
    for ((contractible, wrapping), amp) in grouped_closures(word) {
        let loops = contractible + wrapping;
        total.add_assign_unchecked(&(&amp * &d.pow(loops - 1)));
    }
    total
}

pub(super) fn closure_annulus(word: &BraidWord) -> SkeinElement {
    let d = delta(Variable::A).expect("delta in A");
    let mut total = SkeinElement::zero(Variable::A);
    for ((contractible, wrapping), amp) in grouped_closures(word) {
        // z^0 already carries one factor of δ
        let factor = if wrapping == 0 { d.pow(contractible - 1) } else { d.pow(contractible) };
        let term = SkeinElement::term(wrapping, &amp * &factor);
        total = total.checked_add(&term).expect("single variable");
    }
    total
}
