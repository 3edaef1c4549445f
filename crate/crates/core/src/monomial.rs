use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// A monomial as a dense exponent vector.
///
/// The vector length is the number of ring variables; the ring itself is
/// carried by the ideal, not by each monomial. The total degree is cached as
/// a `u128` so that it cannot overflow for any vector of `u64` exponents.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u64]>,
    degree: u128,
}

impl Monomial {
    pub fn new(exps: impl Into<Box<[u64]>>) -> Self {
        let exps = exps.into();
        let degree = exps.iter().map(|&e| u128::from(e)).sum();
        Self { exps, degree }
    }

    /// The unit monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    /// The pure power `x_index^exp` in `n` variables.
    pub fn pure_power(n: usize, index: usize, exp: u64) -> Self {
        let mut exps = vec![0; n];
        exps[index] = exp;
        Self::new(exps)
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u64 {
        self.exps[index]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u128 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// `self | other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<u64>>>()
            .ok_or(Error::Overflow("a monomial product"))?;
        Ok(Self::new(exps))
    }

    pub fn pow(&self, k: u64) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|a| a.checked_mul(k))
            .collect::<Option<Vec<u64>>>()
            .ok_or(Error::Overflow("a monomial power"))?;
        Ok(Self::new(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Self::new(zip_with(&self.exps, &other.exps, u64::max))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Self::new(zip_with(&self.exps, &other.exps, u64::min))
    }

    /// Exact quotient `self / other`; fails unless `other | self`.
    pub fn divide(&self, other: &Monomial) -> Result<Monomial> {
        if !other.divides(self) {
            return Err(Error::NotDivisible(format!("{:?}", self.exps), format!("{:?}", other.exps)));
        }
        Ok(Self::new(zip_with(&self.exps, &other.exps, |a, b| a - b)))
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Self::new(zip_with(&self.exps, &other.exps, u64::saturating_sub))
    }

    /// Indices of the variables dividing this monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_len(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    /// The product of the variables in the support.
    pub fn squarefree(&self) -> Monomial {
        Self::new(self.exps.iter().map(|&e| e.min(1)).collect::<Vec<_>>())
    }

    /// `Some((i, a))` when this is `x_i^a` with `a > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u64)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Renders with the variable names of `ring`, e.g. `x^2*y`.
    pub fn display<'a>(&'a self, ring: &'a Ring) -> DisplayMonomial<'a> {
        DisplayMonomial { mono: self, ring }
    }
}

fn zip_with(a: &[u64], b: &[u64], f: impl Fn(u64, u64) -> u64) -> Vec<u64> {
    a.iter().zip(b.iter()).map(|(&x, &y)| f(x, y)).collect()
}

/// Canonical generator order: ascending total degree, then lexicographic
/// with `x_1 > x_2 > ... > x_n` (higher exponent on an earlier variable first).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

pub struct DisplayMonomial<'a> {
    mono: &'a Monomial,
    ring: &'a Ring,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
