//! Truncated power-series division over exact coefficient rings.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// First `terms` coefficients of `numerator / denominator`.
///
/// The constant term of `denominator` must be one, so no division in the
/// coefficient ring is needed.
pub fn divide<T>(numerator: &[T], denominator: &[T], terms: usize) -> Vec<T>
where
    T: Clone + Zero + One + PartialEq + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    assert!(
        denominator.first().is_some_and(|c| c.is_one()),
        "denominator must have constant term 1"
    );
    let mut out: Vec<T> = Vec::with_capacity(terms);
    for n in 0..terms {
        let mut c = numerator.get(n).cloned().unwrap_or_else(T::zero);
        for (j, q) in denominator.iter().enumerate().skip(1).take(n) {
            if !q.is_zero() {
                c = c - q.clone() * out[n - j].clone();
            }
        }
        out.push(c);
    }
    out
}

/// Polynomial in one variable with big-integer coefficients, lowest degree
/// first. Used as the coefficient ring for bivariate series.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly(pub Vec<BigInt>);

impl Poly {
    pub fn monomial(coeff: i64, degree: usize) -> Self {
        let mut c = vec![BigInt::zero(); degree + 1];
        c[degree] = BigInt::from(coeff);
        Poly(c).trimmed()
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.0.get(degree).cloned().unwrap_or_default()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect()).trimmed()
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect()).trimmed()
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return Poly::default();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).trimmed()
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::default()
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly(vec![BigInt::one()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        let one = BigInt::one();
        let c = divide(
            std::slice::from_ref(&one),
            &[one.clone(), BigInt::from(-1)],
            5,
        );
        assert!(c.iter().all(|x| x.is_one()));
    }

    #[test]
    fn fibonacci() {
        let c = divide(
            &[BigInt::zero(), BigInt::one()],
            &[BigInt::one(), BigInt::from(-1), BigInt::from(-1)],
            10,
        );
        let expected: Vec<BigInt> = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34].map(BigInt::from).into();
        assert_eq!(c, expected);
    }

    #[test]
    fn poly_arithmetic() {
        let p = Poly::monomial(2, 1) + Poly::one();
        let q = p.clone() * p.clone();
        assert_eq!(q, Poly([1, 4, 4].map(BigInt::from).into()));
        assert!((q.clone() - q).is_zero());
    }
}
