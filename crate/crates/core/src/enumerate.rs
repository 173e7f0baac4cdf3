//! Exhaustive enumeration of the vertex-induced polynomial `P_H`, the
//! edge-induced polynomial `S_H` and the independence polynomial.
//!
//! Subsets are visited in binary reflected Gray code order, so each step adds
//! or removes a single vertex (or edge) and the per-subset statistic is
//! updated in place. A sweep can be cut into contiguous blocks of Gray-code
//! ranks; block tallies merge by addition, which lets callers run blocks in
//! parallel and still get the sequential result exactly.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigInt;

use crate::error::Result;
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::poly::{BiPoly, UniPoly};
use crate::Limits;

#[inline]
fn gray(k: u64) -> u64 {
    k ^ (k >> 1)
}

/// Dense `(rows x cols)` table of subset counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tally {
    rows: usize,
    cols: usize,
    counts: Vec<u64>,
}

impl Tally {
    pub fn new(rows: usize, cols: usize) -> Self {
        Tally { rows, cols, counts: vec![0; rows * cols] }
    }

    #[inline]
    fn bump(&mut self, i: usize, j: usize) {
        self.counts[i * self.cols + j] += 1;
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.counts[i * self.cols + j]
    }

    pub fn merge(mut self, other: &Tally) -> Tally {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "tally shapes differ");
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self
    }

    pub fn into_poly(self) -> BiPoly {
        let cols = self.cols;
        BiPoly::from_terms(
            self.counts
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c != 0)
                .map(|(k, c)| (k / cols, k % cols, BigInt::from(c))),
        )
    }
}

/// Number of subsets swept for `P_H` (`2^n`).
pub fn vertex_sweep_len(h: &Hypergraph) -> u64 {
    1u64 << h.n()
}

/// Number of subsets swept for `S_H` (`2^m`).
pub fn edge_sweep_len(h: &Hypergraph) -> u64 {
    1u64 << h.m()
}

/// Tallies `(|W|, #edges inside W)` over the vertex subsets `W` whose
/// Gray-code rank lies in `ranks`.
pub fn vertex_tally(h: &Hypergraph, ranks: Range<u64>) -> Tally {
    let (n, m) = (h.n(), h.m());
    let mut tally = Tally::new(n + 1, m + 1);
    if ranks.start >= ranks.end {
        return tally;
    }
    let inc = h.incidence();
    let edges = h.edges();
    let mut w = gray(ranks.start);
    // missing[e] = |e \ W|
    let mut missing: Vec<u32> = edges.iter().map(|e| (e.0 & !w).count_ones()).collect();
    let mut inside = missing.iter().filter(|&&c| c == 0).count();
    let mut size = w.count_ones() as usize;
    let mut k = ranks.start;
    loop {
        tally.bump(size, inside);
        k += 1;
        if k == ranks.end {
            break;
        }
        let v = k.trailing_zeros() as usize;
        let bit = 1u64 << v;
        if w & bit == 0 {
            w |= bit;
            size += 1;
            for &e in &inc[v] {
                missing[e] -= 1;
                if missing[e] == 0 {
                    inside += 1;
                }
            }
        } else {
            w &= !bit;
            size -= 1;
            for &e in &inc[v] {
                if missing[e] == 0 {
                    inside -= 1;
                }
                missing[e] += 1;
            }
        }
    }
    tally
}

/// Tallies `(|union of L|, |L|)` over the edge subsets `L` whose Gray-code
/// rank lies in `ranks`.
pub fn edge_tally(h: &Hypergraph, ranks: Range<u64>) -> Tally {
    let (n, m) = (h.n(), h.m());
    let mut tally = Tally::new(n + 1, m + 1);
    if ranks.start >= ranks.end {
        return tally;
    }
    let edge_vertices: Vec<Vec<usize>> = h.edges().iter().map(|e| e.iter().collect()).collect();
    let mut chosen = gray(ranks.start);
    // cover[v] = number of chosen edges through v
    let mut cover = vec![0u32; n];
    for (e, vs) in edge_vertices.iter().enumerate() {
        if chosen & (1 << e) != 0 {
            for &v in vs {
                cover[v] += 1;
            }
        }
    }
    let mut covered = cover.iter().filter(|&&c| c > 0).count();
    let mut count = chosen.count_ones() as usize;
    let mut k = ranks.start;
    loop {
        tally.bump(covered, count);
        k += 1;
        if k == ranks.end {
            break;
        }
        let e = k.trailing_zeros() as usize;
        let bit = 1u64 << e;
        if chosen & bit == 0 {
            chosen |= bit;
            count += 1;
            for &v in &edge_vertices[e] {
                if cover[v] == 0 {
                    covered += 1;
                }
                cover[v] += 1;
            }
        } else {
            chosen &= !bit;
            count -= 1;
            for &v in &edge_vertices[e] {
                cover[v] -= 1;
                if cover[v] == 0 {
                    covered -= 1;
                }
            }
        }
    }
    tally
}

/// `P_H(x, y) = sum b_ij x^i y^j`, `b_ij` = number of `i`-subsets of vertices
/// containing exactly `j` edges.
pub fn vertex_induced_poly(h: &Hypergraph, limits: &Limits) -> Result<BiPoly> {
    limits.check_enumerate("vertices", h.n())?;
    Ok(vertex_tally(h, 0..vertex_sweep_len(h)).into_poly())
}

/// `S_H(x, y) = sum t_ij x^i y^j`, `t_ij` = number of `j`-subsets of edges
/// whose union has exactly `i` vertices.
pub fn edge_induced_poly(h: &Hypergraph, limits: &Limits) -> Result<BiPoly> {
    limits.check_enumerate("edges", h.m())?;
    Ok(edge_tally(h, 0..edge_sweep_len(h)).into_poly())
}

/// Which of the two subhypergraph polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolyKind {
    /// `S_H`, counting edge-induced subhypergraphs.
    EdgeInduced,
    /// `P_H`, counting vertex-induced subhypergraphs.
    VertexInduced,
}

impl PolyKind {
    pub fn compute(self, h: &Hypergraph, limits: &Limits) -> Result<BiPoly> {
        match self {
            PolyKind::EdgeInduced => edge_induced_poly(h, limits),
            PolyKind::VertexInduced => vertex_induced_poly(h, limits),
        }
    }
}

/// Independent sets counted by size, found by depth-first search that only
/// ever extends independent sets.
pub fn independence_poly(h: &Hypergraph, limits: &Limits) -> Result<UniPoly> {
    limits.check_enumerate("vertices", h.n())?;
    let n = h.n();
    let inc = h.incidence();
    let edges = h.edges();
    let mut counts = vec![0u64; n + 1];

    fn extend(
        w: VertexSet,
        size: usize,
        from: usize,
        n: usize,
        inc: &[Vec<usize>],
        edges: &[VertexSet],
        counts: &mut [u64],
    ) {
        counts[size] += 1;
        for v in from..n {
            let next = w.with(v);
            // any new edge inside `next` must pass through v
            if inc[v].iter().any(|&e| edges[e].is_subset(next)) {
                continue;
            }
            extend(next, size + 1, v + 1, n, inc, edges, counts);
        }
    }
    extend(VertexSet::EMPTY, 0, 0, n, &inc, edges, &mut counts);
    Ok(UniPoly::from_coeffs(counts))
}
