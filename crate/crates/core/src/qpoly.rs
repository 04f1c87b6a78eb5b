//! Exact integer-coefficient polynomial arithmetic in one variable `t`,
//! together with the q-analogs (Gaussian binomials) used throughout the
//! character computations.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub, SubAssign};

/// Polynomial in `t` with arbitrary-precision integer coefficients.
///
/// Coefficients are stored lowest degree first with no trailing zeros, so
/// every polynomial has a unique representation and the zero polynomial is
/// the empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial `t^deg`.
    pub fn monomial(deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = BigInt::one();
        QPoly { coeffs }
    }

    /// Builds a polynomial from coefficients (lowest degree first),
    /// dropping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from machine integers, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^deg` (zero beyond the stored length).
    pub fn coeff(&self, deg: usize) -> BigInt {
        self.coeffs.get(deg).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficients lowest degree first, without trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.sign() != num_bigint::Sign::Minus)
    }

    /// Sum of coefficients, i.e. the specialization at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Adds `c * t^deg` in place.
    pub fn add_term(&mut self, deg: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= deg {
            self.coeffs.resize(deg + 1, BigInt::zero());
        }
        self.coeffs[deg] += c;
        self.normalize();
    }

    /// Multiplies every coefficient by the scalar `c`.
    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Reverses the coefficients of a degree-`d` polynomial, i.e. computes
    /// `t^d * p(1/t)`. Used for the cocharge/charge flip of Kostka
    /// polynomials, where `d` is an externally supplied degree bound.
    pub fn reverse_on_degree(&self, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            assert!(e <= d, "degree exceeds reversal bound");
            coeffs[d - e] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "{c}*t")?,
                _ if c.is_one() => write!(f, "t^{e}")?,
                _ => write!(f, "{c}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        *self = &*self - rhs;
    }
}

/// Gaussian binomial coefficient `[n choose k]_t`, computed by the Pascal
/// recurrence `[n,k] = [n-1,k-1] + t^k [n-1,k]` in pure integer arithmetic.
///
/// Returns zero unless `0 <= k <= n`; in particular `n < 0` yields zero,
/// which is the convention needed when the top argument comes from a
/// weight-dependent count that may go negative.
pub fn qbinom(n: i64, k: i64) -> QPoly {
    if k < 0 || k > n {
        return QPoly::zero();
    }
    let n = n as usize;
    let k = k as usize;
    // row m holds [m choose j]_t for 0 <= j <= min(m, k)
    let mut row: Vec<QPoly> = vec![QPoly::one()];
    for m in 1..=n {
        let hi = m.min(k);
        let mut next: Vec<QPoly> = Vec::with_capacity(hi + 1);
        next.push(QPoly::one());
        for j in 1..=hi {
            let mut entry = if j <= m - 1 {
                row[j].shift_up(j)
            } else {
                QPoly::zero()
            };
            entry += &row[j - 1];
            next.push(entry);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Ordinary binomial coefficient as a big integer, zero unless `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_ints(coeffs)
    }

    #[test]
    fn mul_binomial_square() {
        let one_plus_t = p(&[1, 1]);
        assert_eq!(&one_plus_t * &one_plus_t, p(&[1, 2, 1]));
    }

    #[test]
    fn mul_by_zero_annihilates() {
        let q = p(&[3, 0, 7]);
        assert_eq!(&q * &QPoly::zero(), QPoly::zero());
        assert_eq!(&QPoly::zero() * &q, QPoly::zero());
    }

    #[test]
    fn mul_hand_expansion() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1, 1]), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), QPoly::zero());
        assert_eq!(QPoly::zero().degree(), None);
    }

    #[test]
    fn qbinom_k_zero_is_one() {
        for n in 0..=12 {
            assert_eq!(qbinom(n, 0), QPoly::one());
        }
    }

    #[test]
    fn qbinom_out_of_range_is_zero() {
        assert_eq!(qbinom(3, 4), QPoly::zero());
        assert_eq!(qbinom(3, -1), QPoly::zero());
        assert_eq!(qbinom(-2, 0), QPoly::zero());
    }

    #[test]
    fn qbinom_two_one() {
        assert_eq!(qbinom(2, 1), p(&[1, 1]));
    }

    #[test]
    fn qbinom_four_two() {
        let q = qbinom(4, 2);
        assert_eq!(q, p(&[1, 1, 2, 1, 1]));
        assert_eq!(q.eval_at_one(), BigInt::from(6));
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(p(&[1, 2, 1]).eval_at_one(), BigInt::from(4));
        assert_eq!(QPoly::zero().eval_at_one(), BigInt::zero());
        assert_eq!(qbinom(5, 2).eval_at_one(), BigInt::from(10));
    }

    #[test]
    fn qbinom_pascal_identity_exhaustive() {
        for n in 1..=12i64 {
            for k in 1..n {
                let lhs = qbinom(n, k);
                let rhs = &qbinom(n - 1, k - 1) + &qbinom(n - 1, k).shift_up(k as usize);
                assert_eq!(lhs, rhs, "pascal failed at n={n} k={k}");
            }
        }
    }

    #[test]
    fn qbinom_degree_and_positivity() {
        for n in 0..=12i64 {
            for k in 0..=n {
                let q = qbinom(n, k);
                assert!(q.has_nonnegative_coeffs());
                assert_eq!(q.degree(), Some((k * (n - k)) as usize));
                assert_eq!(q.eval_at_one(), binom(n, k));
            }
        }
    }

    // Independent oracle: enumerate all weakly increasing tuples
    // 0 <= s(1) <= ... <= s(l) <= m - l and sum t^{s(1)+...+s(l)}.
    fn tuple_generating_function(m: i64, l: i64) -> QPoly {
        fn rec(remaining: i64, min: i64, max: i64, total: usize, acc: &mut QPoly) {
            if remaining == 0 {
                acc.add_term(total, &BigInt::one());
                return;
            }
            for v in min..=max {
                rec(remaining - 1, v, max, total + v as usize, acc);
            }
        }
        let mut acc = QPoly::zero();
        if m < 0 || l > m {
            return acc;
        }
        rec(l, 0, m - l, 0, &mut acc);
        acc
    }

    #[test]
    fn qbinom_matches_tuple_enumeration() {
        for m in 0..=10i64 {
            for l in 0..=m {
                assert_eq!(
                    qbinom(m, l),
                    tuple_generating_function(m, l),
                    "mismatch at m={m} l={l}"
                );
            }
        }
    }

    #[test]
    fn reverse_on_degree_flips() {
        let q = p(&[0, 1, 0, 2]);
        assert_eq!(q.reverse_on_degree(4), p(&[0, 2, 0, 1, 0]));
    }
}
