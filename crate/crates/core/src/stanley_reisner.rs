//! Invariants of the Stanley-Reisner ring `R = A / I_H` of the independence
//! complex: f-vector, h-vector, K-polynomial, Hilbert function, Krull
//! dimension and multiplicity.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::enumerate::{edge_induced_poly, independence_poly};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::poly::{expand_series, BiPoly, Binomials, UniPoly};
use crate::Limits;

/// `(f_{-1}, f_0, ..., f_{d-1})`: independent sets counted by size.
pub fn f_vector(h: &Hypergraph, limits: &Limits) -> Result<Vec<BigInt>> {
    Ok(independence_poly(h, limits)?.into_coeffs())
}

/// `sum_i f_{i-1} t^i (1 - t)^(d - i) = sum_i h_i t^i`.
pub fn h_vector(f: &[BigInt], d: usize) -> Result<Vec<BigInt>> {
    if f.len() != d + 1 {
        return Err(Error::LengthMismatch { len: f.len(), expected: d + 1 });
    }
    let poly = f_polynomial_against(f, d);
    let mut h: Vec<BigInt> = (0..=d).map(|k| poly.coeff(k)).collect();
    h.truncate(d + 1);
    Ok(h)
}

/// `sum_i f_{i-1} t^i (1 - t)^(n - i)` for `n >= len(f) - 1`.
pub fn f_polynomial_against(f: &[BigInt], n: usize) -> UniPoly {
    f.iter()
        .enumerate()
        .map(|(i, fi)| UniPoly::one_minus_t_pow(n - i).shift(i).scale(fi))
        .fold(UniPoly::zero(), |acc, p| &acc + &p)
}

/// `K(R, t) = S_H(t, -1)` from an already computed `S_H`.
pub fn k_polynomial_of(s: &BiPoly) -> UniPoly {
    s.eval_y(&BigInt::from(-1))
}

/// Numerator of the Hilbert series over `(1 - t)^n`.
pub fn k_polynomial(h: &Hypergraph, limits: &Limits) -> Result<UniPoly> {
    Ok(k_polynomial_of(&edge_induced_poly(h, limits)?))
}

/// `dim R_k` for `k = 0..=k_max` from `K(t) / (1 - t)^n`.
pub fn hilbert_from_k_polynomial(k_poly: &UniPoly, n: usize, k_max: usize) -> Vec<BigInt> {
    expand_series(k_poly, n, k_max)
}

/// `dim R_k` for `k = 0..=k_max` from `sum_i f_{i-1} t^i / (1 - t)^i`, i.e.
/// `dim R_0 = 1` and `dim R_k = sum_{i>=1} f_{i-1} C(k - 1, i - 1)`.
pub fn hilbert_from_f_vector(f: &[BigInt], k_max: usize) -> Vec<BigInt> {
    let mut binom = Binomials::new();
    (0..=k_max)
        .map(|k| {
            if k == 0 {
                return f.first().cloned().unwrap_or_default();
            }
            f.iter().enumerate().skip(1).map(|(i, fi)| fi * binom.get(k - 1, i - 1)).sum()
        })
        .collect()
}

/// Hilbert function computed from both the K-polynomial and the f-vector.
pub fn hilbert_function(h: &Hypergraph, k_max: usize, limits: &Limits) -> Result<Vec<BigInt>> {
    let a = hilbert_from_k_polynomial(&k_polynomial(h, limits)?, h.n(), k_max);
    let b = hilbert_from_f_vector(&f_vector(h, limits)?, k_max);
    if a != b {
        return Err(Error::InternalMismatch("Hilbert function: K-polynomial and f-vector routes"));
    }
    Ok(a)
}

/// Size of a largest independent set.
pub fn krull_dim(h: &Hypergraph, limits: &Limits) -> Result<usize> {
    Ok(f_vector(h, limits)?.len() - 1)
}

/// `e(R) = f_{d-1}`, the number of maximum-size independent sets.
pub fn multiplicity(h: &Hypergraph, limits: &Limits) -> Result<BigInt> {
    Ok(f_vector(h, limits)?.pop().expect("the empty set is always independent"))
}

/// Hilbert series of the exterior face ring `R / (x_1^2, ..., x_n^2)`;
/// numerically the independence polynomial.
pub fn exterior_face_poly(h: &Hypergraph, limits: &Limits) -> Result<UniPoly> {
    independence_poly(h, limits)
}

/// `K(t) / (1 - t)^n` with common factors of `(1 - t)` cancelled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHilbertSeries {
    pub numerator: UniPoly,
    pub denominator_power: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrInvariants {
    pub n: usize,
    pub f: Vec<BigInt>,
    pub h: Vec<BigInt>,
    pub krull_dim: usize,
    pub multiplicity: BigInt,
    pub k_polynomial: UniPoly,
    pub reduced: ReducedHilbertSeries,
}

impl SrInvariants {
    pub fn compute(h: &Hypergraph, limits: &Limits) -> Result<Self> {
        Self::from_parts(h.n(), f_vector(h, limits)?, k_polynomial(h, limits)?)
    }

    /// Assembles the invariants from the f-vector and the K-polynomial,
    /// checking that `(1 - t)^(n - d)` divides `K` with cofactor the h-polynomial.
    pub fn from_parts(n: usize, f: Vec<BigInt>, k_polynomial: UniPoly) -> Result<Self> {
        let d = f.len() - 1;
        let h = h_vector(&f, d)?;
        let multiplicity = f[d].clone();
        let (power, quotient) = k_polynomial.split_one_minus_t();
        if power != n - d || quotient != UniPoly::from_coeffs(h.iter().cloned()) {
            return Err(Error::InternalMismatch("K-polynomial does not reduce to the h-polynomial"));
        }
        if quotient.eval(&BigInt::one()) != multiplicity {
            return Err(Error::InternalMismatch("h-polynomial at 1 differs from the multiplicity"));
        }
        Ok(SrInvariants {
            n,
            krull_dim: d,
            multiplicity,
            reduced: ReducedHilbertSeries { numerator: quotient, denominator_power: d },
            f,
            h,
            k_polynomial,
        })
    }

    pub fn hilbert_function(&self, k_max: usize) -> Vec<BigInt> {
        hilbert_from_k_polynomial(&self.k_polynomial, self.n, k_max)
    }
}

/// `true` iff `K(R, t) = sum_i f_{i-1} t^i (1 - t)^(n - i)` exactly.
pub fn k_polynomial_matches_f_vector(k_poly: &UniPoly, f: &[BigInt], n: usize) -> bool {
    f.len() <= n + 1 && *k_poly == f_polynomial_against(f, n)
}
