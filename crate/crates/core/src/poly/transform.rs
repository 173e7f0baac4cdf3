//! The change of variables between vertex-induced and edge-induced
//! polynomials, carried out term by term so everything stays polynomial:
//!
//! `S(x, y) = sum b_ij x^i (1 - x)^(n - i) (1 + y)^j`
//! `P(x, y) = sum t_ij x^i (1 + x)^(n - i) (y - 1)^j`

use num_bigint::BigInt;
use num_traits::Zero;

use super::binomial::Binomials;
use super::bivariate::BiPoly;
use crate::error::{Error, Result};

fn check_degree(p: &BiPoly, n: usize) -> Result<()> {
    match p.x_degree() {
        Some(d) if d > n => Err(Error::DegreeExceedsN { degree: d, n }),
        _ => Ok(()),
    }
}

fn signed(c: BigInt, negative: bool) -> BigInt {
    if negative {
        -c
    } else {
        c
    }
}

/// Vertex-induced polynomial `P` of an `n`-vertex hypergraph to its
/// edge-induced polynomial `S`.
pub fn p_to_s(p: &BiPoly, n: usize) -> Result<BiPoly> {
    check_degree(p, n)?;
    let mut binom = Binomials::new();
    let mut out = BiPoly::zero();
    for (i, j, beta) in p.terms() {
        for a in 0..=n - i {
            let xa = signed(binom.get(n - i, a), a % 2 == 1) * beta;
            for b in 0..=j {
                out.add_term(i + a, b, &xa * binom.get(j, b));
            }
        }
    }
    Ok(out)
}

/// Inverse of [`p_to_s`].
pub fn s_to_p(s: &BiPoly, n: usize) -> Result<BiPoly> {
    check_degree(s, n)?;
    let mut binom = Binomials::new();
    let mut out = BiPoly::zero();
    for (i, j, theta) in s.terms() {
        for a in 0..=n - i {
            let xa = binom.get(n - i, a) * theta;
            for b in 0..=j {
                out.add_term(i + a, b, signed(&xa * binom.get(j, b), (j - b) % 2 == 1));
            }
        }
    }
    Ok(out)
}

/// Checks the double-counting relation between the coefficients of `P` and
/// `S` for an `n`-vertex hypergraph:
///
/// `sum_{r >= j} b_{i,r} C(r, j) = sum_{l=0}^{i} t_{i-l,j} C(n - (i - l), l)`
///
/// for every `0 <= i <= n` and every `j` up to the y-degree. Both sides count
/// pairs `(W, L)` with `|W| = i`, `|L| = j` and every edge of `L` inside `W`.
/// Returns the first `(i, j)` where the sides differ.
pub fn binomial_relation_holds(p: &BiPoly, s: &BiPoly, n: usize) -> core::result::Result<(), (usize, usize)> {
    let mut binom = Binomials::new();
    let jmax = p.y_degree().unwrap_or(0).max(s.y_degree().unwrap_or(0));
    for i in 0..=n {
        for j in 0..=jmax {
            let mut lhs = BigInt::zero();
            for (pi, r, beta) in p.terms() {
                if pi == i && r >= j {
                    lhs += beta * binom.get(r, j);
                }
            }
            let mut rhs = BigInt::zero();
            for l in 0..=i {
                let theta = s.coeff(i - l, j);
                if !theta.is_zero() {
                    rhs += theta * binom.get(n - (i - l), l);
                }
            }
            if lhs != rhs {
                return Err((i, j));
            }
        }
    }
    Ok(())
}
