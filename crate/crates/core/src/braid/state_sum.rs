//! Direct state-sum evaluation of closure brackets: all `2^c` smoothings are
//! enumerated and the resulting loops traced through an explicit port graph.
//! Exponential, and only used to check the transfer evaluator.

use super::BraidWord;
use crate::error::{Error, Result};
use crate::poly::{LaurentPolynomial, Variable};
use crate::skein::{delta, SkeinElement};

pub const STATE_SUM_LIMIT: usize = 20;

/// Segment `(p, level)` is the piece of the strand at position `p` between
/// letters `level - 1` and `level`. Its two ports are `2·id` (lower) and
/// `2·id + 1` (upper).
struct Ports {
    n: usize,
}

impl Ports {
    fn lower(&self, p: usize, level: usize) -> usize {
        2 * (level * self.n + p)
    }

    fn upper(&self, p: usize, level: usize) -> usize {
        self.lower(p, level) + 1
    }
}

/// For each state, returns `(A-exponent, contractible, wrapping)`.
fn states(word: &BraidWord) -> Result<Vec<(i64, u32, u32)>> {
    let c = word.len();
    if c > STATE_SUM_LIMIT {
        return Err(Error::GuardExceeded { letters: c, limit: STATE_SUM_LIMIT });
    }
    let n = word.strands();
    let ports = Ports { n };
    let total_ports = 2 * n * (c + 1);
    let mut out = Vec::with_capacity(1 << c);

    for state in 0u32..(1u32 << c) {
        // external[x] = (partner, winding change when leaving x along the edge)
        let mut external = vec![(usize::MAX, 0i32); total_ports];
        let mut link = |x: usize, y: usize, w: i32| {
            external[x] = (y, w);
            external[y] = (x, -w);
        };
        let mut a_exponent = 0i64;
        for (level, &letter) in word.letters().iter().enumerate() {
            let i = letter.unsigned_abs() as usize;
            for p in 0..n {
                if p + 1 != i && p != i {
                    link(ports.upper(p, level), ports.lower(p, level + 1), 0);
                }
            }
            let a_smoothing = state >> level & 1 == 1;
            a_exponent += if a_smoothing { 1 } else { -1 };
            let vertical = a_smoothing == (letter > 0);
            let (ll, lr) = (ports.upper(i - 1, level), ports.upper(i, level));
            let (ul, ur) = (ports.lower(i - 1, level + 1), ports.lower(i, level + 1));
            if vertical {
                link(ll, ul, 0);
                link(lr, ur, 0);
            } else {
                link(ll, lr, 0);
                link(ul, ur, 0);
            }
        }
        for p in 0..n {
            link(ports.upper(p, c), ports.lower(p, 0), 1);
        }

        let mut seen = vec![false; total_ports];
        let (mut contractible, mut wrapping) = (0u32, 0u32);
        for start in 0..total_ports {
            if seen[start] {
                continue;
            }
            let mut winding = 0;
            let mut x = start;
            loop {
                seen[x] = true;
                let along = x ^ 1;
                seen[along] = true;
                let (next, w) = external[along];
                winding += w;
                x = next;
                if x == start {
                    break;
                }
            }
            if winding == 0 {
                contractible += 1;
            } else {
                wrapping += 1;
            }
        }
        out.push((a_exponent, contractible, wrapping));
    }
    Ok(out)
}

pub fn state_sum_sphere(word: &BraidWord) -> Result<LaurentPolynomial> {
    let d = delta(Variable::A)?;
    let mut total = LaurentPolynomial::zero(Variable::A);
    for (e, contractible, wrapping) in states(word)? {
        let term = &LaurentPolynomial::monomial(Variable::A, e, 1) * &d.pow(contractible + wrapping - 1);
        total = total.checked_add(&term)?;
    }
    Ok(total)
}

pub fn state_sum_annulus(word: &BraidWord) -> Result<SkeinElement> {
    let d = delta(Variable::A)?;
    let mut total = SkeinElement::zero(Variable::A);
    for (e, contractible, wrapping) in states(word)? {
        let monomial = LaurentPolynomial::monomial(Variable::A, e, 1);
        // the empty diagram is δ^-1 z^0
        let coefficient = if wrapping == 0 {
            &monomial * &d.pow(contractible - 1)
        } else {
            &monomial * &d.pow(contractible)
        };
        total = total.checked_add(&SkeinElement::term(wrapping, coefficient))?;
    }
    Ok(total)
}
