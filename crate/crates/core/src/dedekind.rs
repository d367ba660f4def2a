//! Dedekind sums, both a fast reciprocity-based evaluator and a direct
//! summation used as a cross-check oracle.
//!
//! Conventions pinned here and relied on by every downstream formula:
//!
//! * the sawtooth is `((x)) = x - floor(x) - 1/2` for non-integral `x` and
//!   `0` at integers;
//! * `s(p, q) = sum_{k=1}^{|q|-1} ((k/q)) ((k p / q))`, so `s(p, q)`
//!   depends on `q` only through `|q|`;
//! * the normalized symbol is `S(p/q) = 12 * sign(q) * s(p, q)`, which makes
//!   `S` odd as a function of the rational `p/q`.
//!
//! With these conventions the reciprocity law for coprime `p, q > 0` reads
//! `S(p/q) - p/q = -S(q/p) + q/p + 1/(pq) - 3`, which the test suite uses as
//! an arbiter between the two evaluators.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::casson_walker::Slope;
use crate::error::{Error, Result};
use crate::rational::{gcd_pair, make_rational, Rational};

/// The sawtooth `((x))`: zero at integers, otherwise `x - floor(x) - 1/2`.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        return Rational::zero();
    }
    x - &Rational::from_int(x.floor()) - make_rational(1, 2).expect("2 != 0")
}

fn validate(p: i64, q: i64) -> Result<()> {
    if q == 0 {
        return Err(Error::ZeroDenominator);
    }
    if gcd_pair(p, q) != 1 {
        return Err(Error::NotCoprime {
            what: "dedekind sum arguments",
            a: p,
            b: q,
        });
    }
    Ok(())
}

/// `s(p, q)` for coprime arguments, assuming `q >= 1`, via the Euclidean
/// reciprocity recursion: for `0 < p < q`,
/// `s(p, q) = -1/4 + (p^2 + q^2 + 1) / (12 p q) - s(q mod p, p)`.
fn sum_coprime(p: i64, q: i64) -> Rational {
    debug_assert!(q >= 1);
    let mut acc = Rational::zero();
    let mut sign = 1i64;
    // Reduce into [0, q) first; s is q-periodic in p.
    let mut p = p.rem_euclid(q);
    let mut q = q;
    while p != 0 {
        let pb = BigInt::from(p);
        let qb = BigInt::from(q);
        let numer = &pb * &pb + &qb * &qb + 1u32;
        let term = Rational::new(numer, 12 * &pb * &qb).expect("p, q nonzero")
            - make_rational(1, 4).expect("4 != 0");
        acc = if sign == 1 { acc + term } else { acc - term };
        sign = -sign;
        let next_p = q.rem_euclid(p);
        q = p;
        p = next_p;
    }
    acc
}

/// The Dedekind sum `s(p, q)`, evaluated in `O(log q)` exact steps.
///
/// Requires `q != 0` and `gcd(p, q) = 1`; `s(p, q) = s(p, |q|)`.
pub fn dedekind_sum(p: i64, q: i64) -> Result<Rational> {
    validate(p, q)?;
    Ok(sum_coprime(p, q.unsigned_abs() as i64))
}

/// The Dedekind sum by direct summation over `k = 1 .. |q| - 1`.
///
/// Clearing denominators gives
/// `s(p, q) = sum_k (2k - q)(2r_k - q) / (4 q^2)` with `r_k = k p mod q`,
/// dropping the terms with `r_k = 0`. The accumulator fits in `i128` for
/// `|q| <= 10^6`; larger inputs fall back to `BigInt`.
pub fn dedekind_sum_naive(p: i64, q: i64) -> Result<Rational> {
    validate(p, q)?;
    let q = q.unsigned_abs() as i64;
    if q == 1 {
        return Ok(Rational::zero());
    }
    if q <= 1_000_000 {
        let mut acc: i128 = 0;
        let pq = p.rem_euclid(q); // kept in [0, q) so r stays small
        let mut r: i64 = 0;
        for k in 1..q {
            r += pq;
            if r >= q {
                r -= q;
            }
            if r != 0 {
                acc += (2 * k - q) as i128 * (2 * r - q) as i128;
            }
        }
        let qb = BigInt::from(q);
        Rational::new(BigInt::from(acc), 4 * &qb * &qb)
    } else {
        let mut acc = BigInt::from(0);
        let qb = BigInt::from(q);
        let pq = BigInt::from(p.rem_euclid(q));
        let mut r = BigInt::from(0);
        for k in 1..q {
            r += &pq;
            if r >= qb {
                r -= &qb;
            }
            if !r.is_zero() {
                acc += (BigInt::from(2 * k) - &qb) * (&r * 2u32 - &qb);
            }
        }
        Rational::new(acc, 4 * &qb * &qb)
    }
}

/// The normalized symbol `S(p/q) = 12 * sign(q) * s(p, q)` of a slope.
///
/// Slopes are stored reduced with positive denominator, so this is
/// `12 * s(p, q)` on the stored pair; the function is odd in the slope and
/// vanishes on integers.
pub fn dedekind_symbol(slope: &Slope) -> Rational {
    Rational::from_int(12) * sum_coprime(slope.p(), slope.q())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        make_rational(n, d).unwrap()
    }

    fn sl(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn sawtooth_values() {
        assert_eq!(sawtooth(&Rational::from_int(3)), Rational::zero());
        assert_eq!(sawtooth(&Rational::from_int(0)), Rational::zero());
        assert_eq!(sawtooth(&r(1, 4)), r(-1, 4));
        assert_eq!(sawtooth(&r(3, 4)), r(1, 4));
        assert_eq!(sawtooth(&r(-1, 4)), r(1, 4));
        assert_eq!(sawtooth(&r(7, 2)), Rational::zero());
        assert_eq!(sawtooth(&r(-5, 3)), r(-1, 6));
    }

    #[test]
    fn frozen_small_sums() {
        let cases = [
            (0, 1, r(0, 1)),
            (1, 1, r(0, 1)),
            (1, 2, r(0, 1)),
            (1, 3, r(1, 18)),
            (2, 3, r(-1, 18)),
            (1, 4, r(1, 8)),
            (3, 4, r(-1, 8)),
            (1, 5, r(1, 5)),
            (2, 5, r(0, 1)),
            (3, 5, r(0, 1)),
            (4, 5, r(-1, 5)),
            (1, 6, r(5, 18)),
            (5, 6, r(-5, 18)),
            (5, 7, r(-1, 14)),
        ];
        for (p, q, want) in cases {
            assert_eq!(dedekind_sum(p, q).unwrap(), want, "s({p}, {q})");
            assert_eq!(dedekind_sum_naive(p, q).unwrap(), want, "naive s({p}, {q})");
        }
    }

    #[test]
    fn invalid_arguments_are_rejected() {
        assert!(matches!(dedekind_sum(1, 0), Err(Error::ZeroDenominator)));
        assert!(matches!(dedekind_sum(2, 4), Err(Error::NotCoprime { .. })));
        assert!(matches!(
            dedekind_sum_naive(3, 9),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(dedekind_sum(0, 5), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn depends_on_q_only_through_its_magnitude() {
        for (p, q) in [(1, 3), (2, 7), (5, 9), (-4, 11)] {
            assert_eq!(dedekind_sum(p, q).unwrap(), dedekind_sum(p, -q).unwrap());
            assert_eq!(
                dedekind_sum_naive(p, q).unwrap(),
                dedekind_sum_naive(p, -q).unwrap()
            );
        }
    }

    #[test]
    fn periodic_and_odd_in_p() {
        for q in 2i64..40 {
            for p in 1..q {
                if gcd_pair(p, q) != 1 {
                    continue;
                }
                let s = dedekind_sum(p, q).unwrap();
                assert_eq!(dedekind_sum(p + q, q).unwrap(), s);
                assert_eq!(dedekind_sum(p - q, q).unwrap(), s);
                assert_eq!(dedekind_sum(-p, q).unwrap(), -&s);
            }
        }
    }

    /// A third implementation straight from the definition, with rational
    /// sawtooth products and no denominator-clearing tricks.
    fn sum_by_definition(p: i64, q: i64) -> Rational {
        let qa = q.unsigned_abs() as i64;
        let mut acc = Rational::zero();
        for k in 1..qa {
            acc = acc + sawtooth(&r(k, qa)) * sawtooth(&make_rational(k * p, qa).unwrap());
        }
        acc
    }

    #[test]
    fn all_three_evaluators_agree_on_small_inputs() {
        for q in 1i64..=60 {
            for p in -q..=2 * q {
                if gcd_pair(p, q) != 1 {
                    continue;
                }
                let fast = dedekind_sum(p, q).unwrap();
                assert_eq!(fast, dedekind_sum_naive(p, q).unwrap(), "naive s({p},{q})");
                assert_eq!(fast, sum_by_definition(p, q), "definition s({p},{q})");
            }
        }
    }

    #[test]
    fn symbol_is_odd_and_matches_the_sum() {
        assert_eq!(
            dedekind_symbol(&sl(5, 7)),
            Rational::from_int(12) * dedekind_sum(5, 7).unwrap()
        );
        assert_eq!(dedekind_symbol(&sl(-5, 7)), -dedekind_symbol(&sl(5, 7)));
        assert_eq!(dedekind_symbol(&sl(1, 4)), r(3, 2));
        assert_eq!(dedekind_symbol(&sl(9, 1)), Rational::zero());
        // Negative-denominator inputs normalize before evaluation: 1/-3 = -1/3.
        assert_eq!(dedekind_symbol(&sl(1, -3)), -dedekind_symbol(&sl(1, 3)));
    }

    #[test]
    fn reciprocity_holds_on_small_coprime_pairs() {
        let three = Rational::from_int(3);
        for p in 1i64..=40 {
            for q in 1i64..=40 {
                if gcd_pair(p, q) != 1 {
                    continue;
                }
                let lhs = dedekind_symbol(&sl(p, q)) - r(p, q);
                let rhs = -dedekind_symbol(&sl(q, p)) + r(q, p) + r(1, p * q) - &three;
                assert_eq!(lhs, rhs, "reciprocity failed at ({p}, {q})");
            }
        }
    }

    #[test]
    fn symbol_times_denominator_is_even() {
        // n * S(m/n) is an even integer; downstream congruence arguments
        // depend on this integrality.
        for n in 1i64..=60 {
            for m in 1..=n {
                if gcd_pair(m, n) != 1 {
                    continue;
                }
                let v = Rational::from_int(n) * dedekind_symbol(&sl(m, n));
                assert!(v.is_integer(), "n S(m/n) not integral at ({m}, {n})");
                assert!((v.numer() % 2u32).is_zero(), "n S(m/n) odd at ({m}, {n})");
            }
        }
    }

    #[test]
    fn mod_three_and_mod_six_constants() {
        for m in 1i64..=100 {
            if gcd_pair(m, 3) == 1 {
                let v = Rational::from_int(3) * dedekind_symbol(&sl(m, 3));
                let want = if m.rem_euclid(3) == 1 { 2 } else { -2 };
                assert_eq!(v, Rational::from_int(want), "3 S({m}/3)");
            }
            if gcd_pair(m, 6) == 1 {
                let v = Rational::from_int(3) * dedekind_symbol(&sl(m, 6));
                let want = if m.rem_euclid(6) == 1 { 10 } else { -10 };
                assert_eq!(v, Rational::from_int(want), "3 S({m}/6)");
            }
        }
    }

    #[test]
    fn naive_big_integer_path_matches_fast_path() {
        // Force the BigInt branch with a denominator just over the i128
        // fast-path cutoff.
        let q = 1_000_003i64; // prime
        let p = 12_345i64;
        assert_eq!(
            dedekind_sum_naive(p, q).unwrap(),
            dedekind_sum(p, q).unwrap()
        );
    }
}
