//! Exact counts of maximum independent sets of `B(d,3)` and `B(d,2)`.
//!
//! Orbit counts by stabilizer size satisfy
//! `b(d,k) = 2 b(d−1,k) + 2 b(d−2,k−1)` from `b(1,0) = 1`, `b(2,0) = 3`,
//! and the total count satisfies `a(d) = 2d a(d−1) + d(d−1) a(d−2)` from
//! `a(1) = 1`, `a(2) = 6`. All arithmetic is on big integers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{self, Poly};

/// Counts for `1 ≤ d ≤ d_max`. Vectors are indexed by `d` (index 0 unused)
/// and, for orbit tables, by `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub d_max: usize,
    /// `a[d]`: number of maximum independent sets of `B(d,3)`.
    pub a: Vec<BigUint>,
    /// `b[d][k]`: orbits whose stabilizer has order `2^k`.
    pub b: Vec<Vec<BigUint>>,
    /// Orbits with one loop, split like `b`.
    pub one_loop: Vec<Vec<BigUint>>,
    /// Orbits with two loops, split like `b`.
    pub two_loop: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn a(&self, d: usize) -> &BigUint {
        &self.a[d]
    }

    pub fn b(&self, d: usize, k: usize) -> BigUint {
        cell(&self.b, d, k)
    }

    pub fn one_loop(&self, d: usize, k: usize) -> BigUint {
        cell(&self.one_loop, d, k)
    }

    pub fn two_loop(&self, d: usize, k: usize) -> BigUint {
        cell(&self.two_loop, d, k)
    }

    /// Largest `k` with a nonzero `b(d,k)`.
    pub fn max_k(&self, d: usize) -> usize {
        self.b[d].iter().rposition(|x| !x.is_zero()).unwrap_or(0)
    }

    /// Total number of orbits over `d` digits.
    pub fn orbits(&self, d: usize) -> BigUint {
        self.b[d].iter().sum()
    }

    /// `a(d) = Σ_k d!·b(d,k)/2^k`, checked with integer arithmetic only.
    pub fn orbit_stabilizer_identity_holds(&self, d: usize) -> bool {
        let top = self.b[d].len();
        let fact = factorial(d);
        let scaled: BigUint = self.b[d]
            .iter()
            .enumerate()
            .map(|(k, b)| &fact * b * (BigUint::one() << (top - k)))
            .sum();
        scaled == &self.a[d] * (BigUint::one() << top)
    }

    /// CSV with columns `d,k,b_dk,one_loop_orbits,two_loop_orbits,a_d`, one
    /// row per nonzero `b(d,k)`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("d,k,b_dk,one_loop_orbits,two_loop_orbits,a_d\n");
        for d in 1..=self.d_max {
            for k in 0..=self.max_k(d) {
                out.push_str(&format!(
                    "{d},{k},{},{},{},{}\n",
                    self.b(d, k),
                    self.one_loop(d, k),
                    self.two_loop(d, k),
                    self.a(d)
                ));
            }
        }
        out
    }
}

fn cell(table: &[Vec<BigUint>], d: usize, k: usize) -> BigUint {
    table
        .get(d)
        .and_then(|row| row.get(k))
        .cloned()
        .unwrap_or_default()
}

fn orbit_recurrence(d_max: usize, base1: u32, base2: u32) -> Vec<Vec<BigUint>> {
    let mut t: Vec<Vec<BigUint>> = vec![Vec::new(); d_max + 1];
    for d in 1..=d_max {
        t[d] = match d {
            1 => vec![BigUint::from(base1)],
            2 => vec![BigUint::from(base2)],
            _ => {
                let width = d / 2 + 1;
                (0..width)
                    .map(|k| {
                        let mut v = cell(&t, d - 1, k) * 2u32;
                        if k > 0 {
                            v += cell(&t, d - 2, k - 1) * 2u32;
                        }
                        v
                    })
                    .collect()
            }
        };
    }
    t
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Counts for every `d ≤ d_max` from the recurrences.
pub fn count_mis(d_max: usize) -> Result<CountTable> {
    if d_max == 0 {
        return Err(Error::invalid("d_max must be at least 1"));
    }
    let mut a = vec![BigUint::zero(); d_max + 1];
    for d in 1..=d_max {
        a[d] = match d {
            1 => BigUint::one(),
            2 => BigUint::from(6u32),
            _ => {
                let d_big = BigUint::from(d);
                &a[d - 1] * (&d_big * 2u32) + &a[d - 2] * (&d_big * (d - 1))
            }
        };
    }
    let table = CountTable {
        d_max,
        a,
        b: orbit_recurrence(d_max, 1, 3),
        one_loop: orbit_recurrence(d_max, 1, 2),
        two_loop: orbit_recurrence(d_max, 0, 1),
    };
    for d in 1..=d_max {
        if !table.orbit_stabilizer_identity_holds(d) {
            return Err(Error::internal(format!(
                "a({d}) disagrees with its orbit counts"
            )));
        }
    }
    Ok(table)
}

/// Coefficient of `t^d` in the exponential generating function
/// `(t + t²)/(1 − 2t − t²)` together with `d!` times it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfCoefficient {
    pub d: usize,
    pub coefficient: BigInt,
    pub scaled: BigInt,
}

/// Coefficients for `1 ≤ d ≤ d_max`, by power-series division.
pub fn egf_coefficients(d_max: usize) -> Vec<EgfCoefficient> {
    let num = [0, 1, 1].map(BigInt::from);
    let den = [1, -2, -1].map(BigInt::from);
    series::divide(&num, &den, d_max + 1)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(d, coefficient)| EgfCoefficient {
            d,
            scaled: &coefficient * BigInt::from(factorial(d)),
            coefficient,
        })
        .collect()
}

/// Coefficients of `t^d` in `(t + t²)/(1 − 2t − 2t²s)` as polynomials in
/// `s`; entry `[d][k]` is the coefficient of `t^d s^k`.
pub fn bivariate_coefficients(d_max: usize) -> Vec<Vec<BigInt>> {
    let num = [Poly::default(), Poly::monomial(1, 0), Poly::monomial(1, 0)];
    let den = [
        Poly::monomial(1, 0),
        Poly::monomial(-2, 0),
        Poly::monomial(-2, 1),
    ];
    series::divide(&num, &den, d_max + 1)
        .into_iter()
        .map(|p| p.0)
        .collect()
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Number of maximum independent sets of `B(d,2)`, for `d ≥ 4`:
/// `C(d, d/2)` for even `d`, `2·C(d, (d−1)/2)` for odd `d`.
pub fn count_mis_d2(d: usize) -> Result<BigUint> {
    if d < 4 {
        return Err(Error::invalid(format!(
            "the closed form for B(d,2) applies to d >= 4, got {d}"
        )));
    }
    Ok(if d.is_multiple_of(2) {
        binomial(d, d / 2)
    } else {
        binomial(d, (d - 1) / 2) * 2u32
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn small_values() {
        let t = count_mis(6).unwrap();
        assert_eq!(t.a(1), &n(1));
        assert_eq!(t.a(2), &n(6));
        assert_eq!(t.a(3), &n(42));
        assert_eq!(t.a(4), &n(408));
        assert_eq!(t.a(5), &n(4920));
        assert_eq!(t.b(5, 2), n(4));
        assert_eq!(t.b(6, 2), n(28));
    }

    #[test]
    fn egf_low_terms() {
        let c = egf_coefficients(3);
        assert_eq!(c[0].coefficient, BigInt::from(1));
        assert_eq!(c[2].coefficient, BigInt::from(7));
        assert_eq!(c[2].scaled, BigInt::from(42));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), n(6));
        assert_eq!(binomial(10, 3), n(120));
        assert_eq!(binomial(3, 5), n(0));
    }

    #[test]
    fn d2_closed_form() {
        assert_eq!(count_mis_d2(4).unwrap(), n(6));
        assert_eq!(count_mis_d2(5).unwrap(), n(20));
        assert!(count_mis_d2(3).is_err());
    }

    #[test]
    fn csv_header_and_rows() {
        let csv = count_mis(3).unwrap().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "d,k,b_dk,one_loop_orbits,two_loop_orbits,a_d");
        assert_eq!(lines[1], "1,0,1,1,0,1");
        assert_eq!(lines[2], "2,0,3,2,1,6");
        assert_eq!(lines[3], "3,0,6,4,2,42");
        assert_eq!(lines[4], "3,1,2,2,0,42");
    }
}
