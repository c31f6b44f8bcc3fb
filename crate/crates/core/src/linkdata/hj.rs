//! Hirzebruch–Jung (negative) continued fractions
//! `p/q = a_1 - 1/(a_2 - 1/(… - 1/a_k))` with every `a_i ≥ 2`.

use num_integer::Integer;

use crate::{Error, Result};

/// Expands `p/q` for coprime `0 ≤ q < p`. `(1, 0)` gives the empty list.
pub fn hj_expand(p: i64, q: i64) -> Result<Vec<i64>> {
    if p < 1 || q < 0 || q >= p {
        return Err(Error::InvalidInput(format!(
            "continued fraction needs 0 <= q < p, got ({p}, {q})"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidInput(format!("gcd({p}, {q}) != 1")));
    }
    let (mut num, mut den) = (p, q);
    let mut out = Vec::new();
    while den != 0 {
        let a = Integer::div_ceil(&num, &den);
        out.push(a);
        (num, den) = (den, a * den - num);
    }
    Ok(out)
}

/// Evaluates a continued fraction back to `(p, q)`.
///
/// Entries are not required to be ≥ 2 here, which lets callers evaluate
/// non-minimal chains; the result is then `(p, q)` up to a common sign and
/// may have `q` outside `[0, p)`.
pub fn hj_value(cf: &[i64]) -> (i64, i64) {
    // product of [[a, -1], [1, 0]]; first column is (p, q)
    let (mut m00, mut m01, mut m10, mut m11) = (1i64, 0i64, 0i64, 1i64);
    for &a in cf {
        (m00, m01, m10, m11) = (m00 * a + m01, -m00, m10 * a + m11, -m10);
    }
    (m00, m10)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Evaluates the continued fraction with rationals, independently of
    /// the matrix product in `hj_value`.
    fn eval_oracle(cf: &[i64]) -> (i64, i64) {
        let (mut num, mut den) = (*cf.last().unwrap(), 1i64);
        for &a in cf[..cf.len() - 1].iter().rev() {
            // a - den/num
            (num, den) = (a * num - den, num);
        }
        let g = num.gcd(&den);
        (num / g, den / g)
    }

    #[test]
    fn known_expansions() {
        assert_eq!(hj_expand(5, 2).unwrap(), vec![3, 2]);
        assert_eq!(hj_expand(7, 1).unwrap(), vec![7]);
        assert_eq!(hj_expand(1, 0).unwrap(), Vec::<i64>::new());
        for n in 1..10 {
            assert_eq!(hj_expand(n + 1, n).unwrap(), vec![2; n as usize]);
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(hj_value(&[3, 2]), (5, 2));
        assert_eq!(hj_value(&[2]), (2, 1));
        assert_eq!(hj_value(&[2, 2, 2]), (4, 3));
        assert_eq!(eval_oracle(&[3, 2]), (5, 2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(hj_expand(6, 4).is_err());
        assert!(hj_expand(3, 0).is_err());
        assert!(hj_expand(3, 3).is_err());
        assert!(hj_expand(0, 0).is_err());
    }

    #[test]
    fn round_trip_up_to_200() {
        for p in 2..=200i64 {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let cf = hj_expand(p, q).unwrap();
                assert!(cf.iter().all(|&a| a >= 2));
                assert_eq!(hj_value(&cf), (p, q));
                assert_eq!(eval_oracle(&cf), (p, q));
            }
        }
    }

    proptest! {
        #[test]
        fn value_then_expand_is_identity(cf in proptest::collection::vec(2i64..8, 1..8)) {
            let (p, q) = hj_value(&cf);
            prop_assert_eq!(hj_expand(p, q).unwrap(), cf);
        }
    }
}
