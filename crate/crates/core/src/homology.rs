//! Simplicial complexes on at most 64 vertices and their reduced homology
//! over the rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::Limits;

/// A downward-closed family of faces over the ground set `0..n`.
///
/// Faces are stored in colex order (numeric order of their bitmasks). The
/// void complex has no faces; every other complex contains the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: usize,
    faces: Vec<VertexSet>,
}

impl SimplicialComplex {
    pub fn void(ground: usize) -> Self {
        SimplicialComplex { ground, faces: Vec::new() }
    }

    /// Closes the given faces downward.
    pub fn generated_by(ground: usize, facets: &[VertexSet]) -> Result<Self> {
        let full = VertexSet::full(ground);
        let mut faces = Vec::new();
        for &f in facets {
            if !f.is_subset(full) {
                return Err(Error::UnknownVertex(f.0));
            }
            // all submasks of f
            let mut s = f.0;
            loop {
                faces.push(VertexSet(s));
                if s == 0 {
                    break;
                }
                s = (s - 1) & f.0;
            }
        }
        faces.sort_unstable();
        faces.dedup();
        Ok(SimplicialComplex { ground, faces })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn faces(&self) -> &[VertexSet] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, f: VertexSet) -> bool {
        self.faces.binary_search(&f).is_ok()
    }

    /// Largest face size minus one; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.faces.iter().map(|f| f.len() as isize - 1).max()
    }

    /// `Delta(B)`: the faces contained in `b`.
    pub fn restrict(&self, b: VertexSet) -> Result<Self> {
        if !b.is_subset(VertexSet::full(self.ground)) {
            return Err(Error::UnknownVertex(b.0));
        }
        Ok(SimplicialComplex {
            ground: self.ground,
            faces: self.faces.iter().copied().filter(|f| f.is_subset(b)).collect(),
        })
    }

    /// Face counts by size, index 0 being the empty face.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for f in &self.faces {
            let s = f.len();
            if counts.len() <= s {
                counts.resize(s + 1, 0);
            }
            counts[s] += 1;
        }
        counts
    }

    /// Reduced Euler characteristic `sum_faces (-1)^(|F| - 1)`, counting the empty face as `-1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces.iter().map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum()
    }
}

/// All independent sets of `h`.
pub fn independence_complex(h: &Hypergraph, limits: &Limits) -> Result<SimplicialComplex> {
    limits.check_enumerate("vertices", h.n())?;
    let mut faces = Vec::new();
    collect_independent(h, VertexSet::full(h.n()), &mut faces);
    faces.sort_unstable();
    Ok(SimplicialComplex { ground: h.n(), faces })
}

/// Independent subsets of `within`, by depth-first extension.
pub(crate) fn collect_independent(h: &Hypergraph, within: VertexSet, out: &mut Vec<VertexSet>) {
    fn go(h: &Hypergraph, w: VertexSet, rest: u64, out: &mut Vec<VertexSet>) {
        out.push(w);
        let mut r = rest;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            let next = w.with(v);
            if h.edges().iter().any(|e| e.contains(v) && e.is_subset(next)) {
                continue;
            }
            go(h, next, r, out);
        }
    }
    go(h, VertexSet::EMPTY, within.0, out);
}

/// Pivot selection for fraction-free elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Pivot {
    /// First row with a nonzero entry in the column.
    #[default]
    FirstNonzero,
    /// Row whose entry has the smallest absolute value (ties: last such row).
    SmallestMagnitude,
}

/// Exact rank of an integer matrix by Bareiss fraction-free elimination.
pub fn rank(mut a: Vec<Vec<BigInt>>, pivot: Pivot) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let candidates = (r..rows).filter(|&i| !a[i][c].is_zero());
        let p = match pivot {
            Pivot::FirstNonzero => candidates.min(),
            Pivot::SmallestMagnitude => candidates.fold(None, |best: Option<usize>, i| match best {
                Some(b) if a[b][c].abs() < a[i][c].abs() => Some(b),
                _ => Some(i),
            }),
        };
        let Some(p) = p else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Boundary matrix from faces of size `s` to faces of size `s - 1`
/// (rows indexed by the smaller faces).
fn boundary_matrix(lower: &[VertexSet], upper: &[VertexSet]) -> Vec<Vec<BigInt>> {
    let mut m = vec![vec![BigInt::zero(); upper.len()]; lower.len()];
    for (col, &f) in upper.iter().enumerate() {
        for (pos, v) in f.iter().enumerate() {
            let g = f.without(v);
            let row = lower.binary_search(&g).expect("complex is closed under subsets");
            m[row][col] = BigInt::from(if pos % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// `(dim H~_{-1}, dim H~_0, ..., dim H~_{dim Delta})` over the rationals.
///
/// The empty face spans the chain group in degree `-1`, so `{}` (only the
/// empty face) has `H~_{-1}` of dimension one. The void complex returns `[0]`.
pub fn reduced_homology_dims(delta: &SimplicialComplex) -> Vec<usize> {
    reduced_homology_dims_with(delta, Pivot::default())
}

pub fn reduced_homology_dims_with(delta: &SimplicialComplex, pivot: Pivot) -> Vec<usize> {
    if delta.is_void() {
        return vec![0];
    }
    let top = delta.faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
    for &f in &delta.faces {
        by_size[f.len()].push(f);
    }
    // ranks[s] = rank of the boundary out of faces of size s; ranks[0] = 0
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        if by_size[s].is_empty() || by_size[s - 1].is_empty() {
            continue;
        }
        ranks[s] = rank(boundary_matrix(&by_size[s - 1], &by_size[s]), pivot);
    }
    (0..=top).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect()
}

/// `dim H~_k(Delta)` for any integer `k`.
pub fn reduced_homology_at(dims: &[usize], k: isize) -> usize {
    if k < -1 {
        return 0;
    }
    dims.get((k + 1) as usize).copied().unwrap_or(0)
}
