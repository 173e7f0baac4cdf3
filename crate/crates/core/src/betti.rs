//! Multigraded and graded Betti numbers of `R = A / I_H` by Hochster's
//! formula, `b_{i,B} = dim H~_{|B|-i-1}(Delta_H(B))`, and the invariants read
//! off the Betti table.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::homology::{collect_independent, reduced_homology_at, reduced_homology_dims_with, Pivot, SimplicialComplex};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::poly::UniPoly;
use crate::Limits;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub n: usize,
    /// `(i, B) -> b_{i,B}`, nonzero entries only.
    pub multigraded: BTreeMap<(usize, VertexSet), u64>,
    /// `(i, j) -> b_{ij}`, nonzero entries only.
    pub graded: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn from_multigraded<I>(n: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = ((usize, VertexSet), u64)>,
    {
        let mut multigraded = BTreeMap::new();
        let mut graded = BTreeMap::new();
        for ((i, b), v) in entries {
            if v == 0 {
                continue;
            }
            *multigraded.entry((i, b)).or_insert(0) += v;
            *graded.entry((i, b.len())).or_insert(0) += v;
        }
        BettiTable { n, multigraded, graded }
    }

    pub fn graded_at(&self, i: usize, j: usize) -> u64 {
        self.graded.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn multigraded_at(&self, i: usize, b: VertexSet) -> u64 {
        self.multigraded.get(&(i, b)).copied().unwrap_or(0)
    }

    /// `sum_{i,j} (-1)^i b_ij t^j`.
    pub fn alternating_sum(&self) -> UniPoly {
        let top = self.graded.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut c = alloc::vec![BigInt::from(0); top + 1];
        for (&(i, j), &b) in &self.graded {
            let b = BigInt::from(b);
            if i % 2 == 0 {
                c[j] += b;
            } else {
                c[j] -= b;
            }
        }
        UniPoly::from_coeffs(c)
    }

    /// Homological degrees `i` with `b_ij != 0` in column `j`.
    pub fn column(&self, j: usize) -> Vec<usize> {
        self.graded.keys().filter(|&&(_, jj)| jj == j).map(|&(i, _)| i).collect()
    }
}

/// Builds `Delta_H(B)` directly from the independent subsets of `b`.
pub fn restricted_independence_complex(h: &Hypergraph, b: VertexSet) -> Result<SimplicialComplex> {
    if !b.is_subset(h.vertex_set()) {
        return Err(Error::UnknownVertex(b.0));
    }
    let mut faces = Vec::new();
    collect_independent(h, b, &mut faces);
    SimplicialComplex::generated_by(h.n(), &faces)
}

/// True if some vertex of `b` lies in no edge inside `b`; then `Delta_H(B)`
/// is a cone and all of its reduced homology vanishes.
pub fn is_cone(h: &Hypergraph, b: VertexSet) -> bool {
    let covered = h.edges().iter().filter(|e| e.is_subset(b)).fold(VertexSet::EMPTY, |acc, &e| acc.union(e));
    covered != b
}

/// Nonzero `(i, b_{i,B})` for one vertex set `B`, computed from homology.
pub fn betti_at_subset(h: &Hypergraph, b: VertexSet, pivot: Pivot) -> Result<Vec<(usize, u64)>> {
    let delta = restricted_independence_complex(h, b)?;
    let dims = reduced_homology_dims_with(&delta, pivot);
    let size = b.len() as isize;
    Ok((0..=b.len())
        .filter_map(|i| {
            let v = reduced_homology_at(&dims, size - i as isize - 1) as u64;
            (v != 0).then_some((i, v))
        })
        .collect())
}

/// Like [`betti_at_subset`] but skips sets whose restriction is a cone.
pub fn hochster_entries(h: &Hypergraph, b: VertexSet) -> Result<Vec<(usize, u64)>> {
    if is_cone(h, b) {
        if !b.is_subset(h.vertex_set()) {
            return Err(Error::UnknownVertex(b.0));
        }
        return Ok(Vec::new());
    }
    betti_at_subset(h, b, Pivot::default())
}

/// Full multigraded Betti table over all `B` in `2^V`.
pub fn hochster_betti(h: &Hypergraph, limits: &Limits) -> Result<BettiTable> {
    limits.check_homology(h.n())?;
    let mut entries = Vec::new();
    for bits in 0..(1u64 << h.n()) {
        let b = VertexSet(bits);
        for (i, v) in hochster_entries(h, b)? {
            entries.push(((i, b), v));
        }
    }
    Ok(BettiTable::from_multigraded(h.n(), entries))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomologicalInvariants {
    pub projective_dimension: usize,
    /// Regularity of `R = A / I_H`; the ideal has regularity one more when nonzero.
    pub regularity: usize,
    /// `n - pd` (Auslander-Buchsbaum).
    pub depth: usize,
}

impl HomologicalInvariants {
    /// `reg(I_H) = reg(R) + 1`, undefined for the zero ideal.
    pub fn ideal_regularity(&self) -> Option<usize> {
        (self.projective_dimension > 0).then_some(self.regularity + 1)
    }
}

pub fn pd_reg_depth(table: &BettiTable, n: usize) -> HomologicalInvariants {
    let pd = table.graded.keys().map(|&(i, _)| i).max().unwrap_or(0);
    let reg = table.graded.keys().map(|&(i, j)| j.saturating_sub(i)).max().unwrap_or(0);
    HomologicalInvariants { projective_dimension: pd, regularity: reg, depth: n - pd }
}

/// `S_H(t, -1) = sum_{i,j} (-1)^i b_ij t^j`, coefficientwise.
pub fn alternating_sum_matches(table: &BettiTable, k_poly: &UniPoly) -> bool {
    table.alternating_sum() == *k_poly
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AntidiagonalRecovery {
    /// Every total degree `j >= 1` carries at most one nonzero `b_ij`; each is
    /// `|c_j|`, the absolute t^j coefficient of the K-polynomial.
    Applicable { entries: Vec<(usize, usize, BigInt)> },
    /// Column `j` has nonzero entries in several homological degrees.
    NotApplicable { column: usize, degrees: Vec<usize> },
}

/// Recovers the Betti table from the K-polynomial when every fixed total
/// degree holds at most one nonzero entry, and checks it against `table`.
pub fn antidiagonal_recovery(table: &BettiTable, k_poly: &UniPoly) -> Result<AntidiagonalRecovery> {
    let columns: BTreeSet<usize> = table.graded.keys().map(|&(_, j)| j).filter(|&j| j > 0).collect();
    for &j in &columns {
        let degrees = table.column(j);
        if degrees.len() > 1 {
            return Ok(AntidiagonalRecovery::NotApplicable { column: j, degrees });
        }
    }
    let mut entries = Vec::new();
    for &j in &columns {
        let i = table.column(j)[0];
        let recovered = k_poly.coeff(j).abs();
        if recovered != BigInt::from(table.graded_at(i, j)) {
            return Err(Error::InternalMismatch("recovered Betti number differs from the table"));
        }
        entries.push((i, j, recovered));
    }
    Ok(AntidiagonalRecovery::Applicable { entries })
}
