use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial in `t`, index = degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = UniPoly { coeffs: coeffs.into_iter().map(Into::into).collect() };
        p.trim();
        p
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        let mut c = Vec::with_capacity(k + 1);
        let mut cur = BigInt::one();
        for a in 0..=k {
            c.push(if a % 2 == 0 { cur.clone() } else { -cur.clone() });
            cur = cur * BigInt::from(k - a) / BigInt::from(a + 1);
        }
        UniPoly::from_coeffs(c)
    }

    /// `(1 + t)^k`.
    pub fn one_plus_t_pow(k: usize) -> Self {
        let mut c = Vec::with_capacity(k + 1);
        let mut cur = BigInt::one();
        for a in 0..=k {
            c.push(cur.clone());
            cur = cur * BigInt::from(k - a) / BigInt::from(a + 1);
        }
        UniPoly::from_coeffs(c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn derivative(&self) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: c }
    }

    /// Exact division by `(1 - t)`; `None` if `(1 - t)` does not divide.
    pub fn div_one_minus_t(&self) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        // q = p / (1 - t) as a power series is the prefix sum of p; it is a
        // polynomial of degree deg p - 1 exactly when p(1) = 0.
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc += c;
            q.push(acc.clone());
        }
        if !acc.is_zero() {
            return None;
        }
        q.pop();
        Some(UniPoly::from_coeffs(q))
    }

    /// Writes `self = (1 - t)^k * q` with `q(1) != 0`; returns `(k, q)`.
    /// The zero polynomial returns `(0, 0)`.
    pub fn split_one_minus_t(&self) -> (usize, UniPoly) {
        let mut k = 0;
        let mut q = self.clone();
        if q.is_zero() {
            return (0, q);
        }
        while let Some(next) = q.div_one_minus_t() {
            q = next;
            k += 1;
        }
        (k, q)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(UniPoly::one(), |acc, _| &acc * self)
    }

    pub(crate) fn fmt_in(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_sign(f, c, first)?;
            first = false;
            let abs = c.abs();
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    f.write_str(var)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn write_sign(f: &mut fmt::Formatter<'_>, c: &BigInt, first: bool) -> fmt::Result {
    match (first, c.is_negative()) {
        (true, true) => f.write_str("-"),
        (true, false) => Ok(()),
        (false, true) => f.write_str(" - "),
        (false, false) => f.write_str(" + "),
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in(f, "t")
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)))
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)))
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(c)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// First `k_max + 1` power-series coefficients of `num(t) / (1 - t)^n`,
/// obtained by `n` rounds of prefix summation.
pub fn expand_series(num: &UniPoly, n: usize, k_max: usize) -> Vec<BigInt> {
    let mut s: Vec<BigInt> = (0..=k_max).map(|k| num.coeff(k)).collect();
    for _ in 0..n {
        let mut acc = BigInt::zero();
        for c in s.iter_mut() {
            acc += &*c;
            *c = acc.clone();
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn series_examples() {
        assert_eq!(expand_series(&UniPoly::one(), 1, 3), ints(&[1, 1, 1, 1]));
        let k3 = UniPoly::from_coeffs([1, 0, -3, 2]);
        assert_eq!(expand_series(&k3, 3, 4), ints(&[1, 3, 3, 3, 3]));
        for n in 0..6 {
            let mut expected = vec![BigInt::zero(); 8];
            expected[0] = BigInt::one();
            assert_eq!(expand_series(&UniPoly::one_minus_t_pow(n), n, 7), expected);
        }
    }

    #[test]
    fn division_by_one_minus_t() {
        let k3 = UniPoly::from_coeffs([1, 0, -3, 2]);
        let (k, q) = k3.split_one_minus_t();
        assert_eq!(k, 2);
        assert_eq!(q, UniPoly::from_coeffs([1, 2]));
        assert_eq!(UniPoly::one().div_one_minus_t(), None);
        assert_eq!(&UniPoly::one_minus_t_pow(2) * &q, k3);
    }

    #[test]
    fn rendering() {
        assert_eq!(UniPoly::from_coeffs([1, 0, -3, 2]).to_string(), "1 - 3*t^2 + 2*t^3");
        assert_eq!(UniPoly::from_coeffs([0, -1, 1]).to_string(), "-t + t^2");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn binomial_powers() {
        let (p, m) = (UniPoly::one_plus_t_pow(5), UniPoly::one_minus_t_pow(5));
        assert_eq!(p, UniPoly::from_coeffs([1, 1]).pow(5));
        assert_eq!(m, UniPoly::from_coeffs([1, -1]).pow(5));
        assert_eq!(p.eval(&BigInt::from(1)), BigInt::from(32));
    }
}
