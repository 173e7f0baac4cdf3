//! Rayon drivers that split the exponential sweeps into contiguous blocks
//! and merge them in block order, so results match the sequential code.

use hgpoly_core::betti::{hochster_entries, BettiTable};
use hgpoly_core::enumerate::{edge_sweep_len, edge_tally, vertex_sweep_len, vertex_tally, PolyKind, Tally};
use hgpoly_core::{BiPoly, Deck, Hypergraph, Limits, Result, VertexSet};
use rayon::prelude::*;

/// Sweeps shorter than this run as a single block.
const MIN_BLOCK: u64 = 1 << 12;

fn blocks(len: u64) -> Vec<std::ops::Range<u64>> {
    let parts = (rayon::current_num_threads() as u64 * 4).max(1);
    let size = (len / parts).max(MIN_BLOCK);
    (0..len).step_by(size as usize).map(|start| start..(start + size).min(len)).collect()
}

fn merged(
    ranges: Vec<std::ops::Range<u64>>,
    empty: Tally,
    sweep: impl Fn(std::ops::Range<u64>) -> Tally + Sync + Send,
) -> Tally {
    let parts: Vec<Tally> = ranges.into_par_iter().map(sweep).collect();
    parts.iter().fold(empty, |acc, t| acc.merge(t))
}

pub fn vertex_induced_poly(h: &Hypergraph, limits: &Limits) -> Result<BiPoly> {
    limits.check_enumerate("vertices", h.n())?;
    let empty = Tally::new(h.n() + 1, h.m() + 1);
    Ok(merged(blocks(vertex_sweep_len(h)), empty, |r| vertex_tally(h, r)).into_poly())
}

pub fn edge_induced_poly(h: &Hypergraph, limits: &Limits) -> Result<BiPoly> {
    limits.check_enumerate("edges", h.m())?;
    let empty = Tally::new(h.n() + 1, h.m() + 1);
    Ok(merged(blocks(edge_sweep_len(h)), empty, |r| edge_tally(h, r)).into_poly())
}

pub fn compute(kind: PolyKind, h: &Hypergraph, limits: &Limits) -> Result<BiPoly> {
    match kind {
        PolyKind::EdgeInduced => edge_induced_poly(h, limits),
        PolyKind::VertexInduced => vertex_induced_poly(h, limits),
    }
}

/// Hochster's formula with one task per vertex set.
pub fn hochster_betti(h: &Hypergraph, limits: &Limits) -> Result<BettiTable> {
    limits.check_homology(h.n())?;
    let per_set: Vec<Vec<((usize, VertexSet), u64)>> = (0..1u64 << h.n())
        .into_par_iter()
        .map(|bits| {
            let b = VertexSet(bits);
            Ok(hochster_entries(h, b)?.into_iter().map(|(i, v)| ((i, b), v)).collect())
        })
        .collect::<Result<_>>()?;
    Ok(BettiTable::from_multigraded(h.n(), per_set.into_iter().flatten()))
}

/// One polynomial per card, computed concurrently.
pub fn deck_polys(deck: &Deck, kind: PolyKind, limits: &Limits) -> Result<Vec<BiPoly>> {
    deck.cards().par_iter().map(|c| kind.compute(c, limits)).collect()
}
