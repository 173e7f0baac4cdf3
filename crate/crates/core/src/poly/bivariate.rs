use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::univariate::{write_sign, UniPoly};

/// Sparse polynomial in `x` and `y` with big-integer coefficients.
///
/// Terms are keyed by `(x exponent, y exponent)`; zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(0, 0, 1)
    }

    pub fn monomial(i: usize, j: usize, c: impl Into<BigInt>) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(i, j, c.into());
        p
    }

    pub fn from_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, T)>,
        T: Into<BigInt>,
    {
        let mut p = BiPoly::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c.into());
        }
        p
    }

    /// Univariate polynomial in `x` viewed as a bivariate one.
    pub fn from_x_poly(p: &UniPoly) -> Self {
        BiPoly::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| (i, 0, c.clone())))
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Nonzero terms in ascending `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect() }
    }

    /// Formal partial derivative in `x`.
    pub fn partial_x(&self) -> Self {
        BiPoly::from_terms(self.terms().filter(|&(i, _, _)| i > 0).map(|(i, j, c)| (i - 1, j, c * BigInt::from(i))))
    }

    /// Multiplies by `x^a y^b`.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        BiPoly { terms: self.terms.iter().map(|(&(i, j), c)| ((i + a, j + b), c.clone())).collect() }
    }

    /// `x * dF/dx`, i.e. every term scaled by its x-exponent.
    pub fn euler_x(&self) -> Self {
        BiPoly::from_terms(self.terms().map(|(i, j, c)| (i, j, c * BigInt::from(i))))
    }

    /// Substitutes `y = c` and collects in `x`.
    pub fn eval_y(&self, c: &BigInt) -> UniPoly {
        let deg = match self.x_degree() {
            Some(d) => d,
            None => return UniPoly::zero(),
        };
        let mut out = alloc::vec![BigInt::zero(); deg + 1];
        for (i, j, a) in self.terms() {
            out[i] += a * num_traits::pow(c.clone(), j);
        }
        UniPoly::from_coeffs(out)
    }

    /// Substitutes `x = c` and collects in `y`.
    pub fn eval_x(&self, c: &BigInt) -> UniPoly {
        let deg = match self.y_degree() {
            Some(d) => d,
            None => return UniPoly::zero(),
        };
        let mut out = alloc::vec![BigInt::zero(); deg + 1];
        for (i, j, a) in self.terms() {
            out[j] += a * num_traits::pow(c.clone(), i);
        }
        UniPoly::from_coeffs(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(BiPoly::one(), |acc, _| &acc * self)
    }

    /// Coefficient table `[(i, j, c)]` in ascending order.
    pub fn to_triples(&self) -> Vec<(usize, usize, BigInt)> {
        self.terms().map(|(i, j, c)| (i, j, c.clone())).collect()
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (i, j, c)) in self.terms().enumerate() {
            write_sign(f, c, k == 0)?;
            let abs = c.abs();
            if i == 0 && j == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            let mut need_star = false;
            for (var, e) in [("x", i), ("y", j)] {
                if e == 0 {
                    continue;
                }
                if need_star {
                    f.write_str("*")?;
                }
                f.write_str(var)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                need_star = true;
            }
        }
        Ok(())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (i, j, a) in self.terms() {
            for (k, l, b) in rhs.terms() {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(&k, v)| (k, -v)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl core::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::zero(), |acc, p| &acc + &p)
    }
}

impl core::iter::Product for BiPoly {
    fn product<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::one(), |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn x() -> BiPoly {
        BiPoly::monomial(1, 0, 1)
    }

    #[test]
    fn ring_examples() {
        let one_x = &BiPoly::one() + &x();
        assert_eq!(&one_x * &one_x, BiPoly::from_terms([(0, 0, 1), (1, 0, 2), (2, 0, 1)]));
        assert_eq!(&one_x + &BiPoly::zero(), one_x);
        assert_eq!(&BiPoly::monomial(2, 1, 1) * &BiPoly::monomial(3, 2, 1), BiPoly::monomial(5, 3, 1));
        assert!((&one_x - &one_x).is_zero());
        assert_eq!(one_x.scale(&BigInt::from(0)), BiPoly::zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(BiPoly::monomial(3, 2, 1).partial_x(), BiPoly::monomial(2, 2, 3));
        assert!(BiPoly::monomial(0, 4, 7).partial_x().is_zero());
        let p = BiPoly::from_terms([(0, 0, 1), (2, 1, 2)]);
        assert_eq!(p.partial_x(), BiPoly::monomial(1, 1, 4));
        assert_eq!(p.euler_x(), p.partial_x().shift(1, 0));
    }

    #[test]
    fn eval_y_examples() {
        let s = BiPoly::from_terms([(0, 0, 1), (2, 1, 3), (3, 2, 3), (3, 3, 1)]);
        assert_eq!(s.eval_y(&BigInt::from(-1)), UniPoly::from_coeffs([1, 0, -3, 2]));
        let p = BiPoly::from_terms([(0, 0, 1), (1, 0, 3), (2, 0, 1), (2, 1, 2), (3, 2, 1)]);
        assert_eq!(p.eval_y(&BigInt::from(0)), UniPoly::from_coeffs([1, 3, 1]));
        let binom = (&BiPoly::one() + &x()).pow(6);
        assert_eq!(binom.eval_y(&BigInt::from(-1)), UniPoly::one_plus_t_pow(6));
    }

    #[test]
    fn rendering() {
        let s = BiPoly::from_terms([(0, 0, 1), (2, 1, 3), (3, 2, 3), (3, 3, 1)]);
        assert_eq!(s.to_string(), "1 + 3*x^2*y + 3*x^3*y^2 + x^3*y^3");
        let t = BiPoly::from_terms([(0, 0, 1), (1, 0, -1), (0, 1, -2)]);
        assert_eq!(t.to_string(), "1 - 2*y - x");
        assert_eq!(BiPoly::monomial(1, 0, -1).to_string(), "-x");
        assert_eq!(BiPoly::zero().to_string(), "0");
    }
}
