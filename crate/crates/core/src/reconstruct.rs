//! Rebuilding invariants of a hypergraph from its labeled deck.
//!
//! A sub-object on `i` vertices survives on exactly the `n - i` cards that
//! do not delete one of its vertices, so most coefficients are card sums
//! divided by `n - i`. The rows with `i = n` need separate arguments.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::betti::{hochster_entries, pd_reg_depth, BettiTable, HomologicalInvariants};
use crate::enumerate::PolyKind;
use crate::error::{Error, Result};
use crate::hypergraph::{Deck, Hypergraph, VertexSet};
use crate::poly::{binomial, expand_series, p_to_s, s_to_p, BiPoly, UniPoly};
use crate::stanley_reisner::{f_vector, hilbert_from_k_polynomial, k_polynomial_of};
use crate::Limits;

/// Rejects hypergraphs whose deck cannot determine them: fewer than three
/// vertices, no edges, or one edge spanning every vertex.
pub fn check_reconstructible(h: &Hypergraph) -> Result<()> {
    if h.n() < 3 {
        return Err(Error::TooFewVertices(h.n()));
    }
    if h.m() == 0 {
        return Err(Error::NoEdges);
    }
    if h.m() == 1 && h.edges()[0] == h.vertex_set() {
        return Err(Error::SingleSpanningEdge(h.n()));
    }
    Ok(())
}

/// Deck-side counterpart of [`check_reconstructible`]. An edgeless parent
/// and a single spanning edge both produce all-edgeless cards, so such a
/// deck is rejected without naming which one it came from.
pub fn check_deck(deck: &Deck) -> Result<()> {
    let n = deck.origin_n();
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    deck.parent_labels()?;
    if deck.cards().iter().all(|c| c.m() == 0) {
        return Err(Error::EdgelessDeck);
    }
    Ok(())
}

/// `n F_H = x dF_H/dx + sum_l F_{H_l}` for `F = S` or `F = P`.
pub fn deck_identity_holds(h: &Hypergraph, kind: PolyKind, limits: &Limits) -> Result<bool> {
    check_reconstructible(h)?;
    let f = kind.compute(h, limits)?;
    let cards = deck_polys(&h.deck(), kind, limits)?;
    Ok(deck_identity_holds_for(&f, &cards, h.n()))
}

/// The identity with precomputed polynomials.
pub fn deck_identity_holds_for(f: &BiPoly, cards: &[BiPoly], n: usize) -> bool {
    let lhs = f.scale(&BigInt::from(n));
    let rhs = cards.iter().fold(f.euler_x(), |acc, c| &acc + c);
    lhs == rhs
}

pub fn deck_polys(deck: &Deck, kind: PolyKind, limits: &Limits) -> Result<Vec<BiPoly>> {
    deck.cards().iter().map(|c| kind.compute(c, limits)).collect()
}

fn check_card_polys(cards: &[BiPoly], n: usize, edgeless_card: &BiPoly) -> Result<()> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    if cards.len() != n {
        return Err(Error::DeckSizeMismatch { cards: cards.len(), n });
    }
    for (l, c) in cards.iter().enumerate() {
        if let Some(d) = c.x_degree() {
            if d > n - 1 {
                return Err(Error::InvalidDeck(alloc::format!("card {l} has x-degree {d} > {}", n - 1)));
            }
        }
    }
    if cards.iter().all(|c| c == edgeless_card) {
        return Err(Error::EdgelessDeck);
    }
    Ok(())
}

/// Divides the card sums by `n - i` for every row `i < n`.
fn divide_card_sums(cards: &[BiPoly], n: usize) -> Result<BiPoly> {
    let sum: BiPoly = cards.iter().cloned().sum();
    let mut out = BiPoly::zero();
    for (i, j, c) in sum.terms() {
        let divisor = n - i;
        let (q, r) = c.div_rem(&BigInt::from(divisor));
        if !r.is_zero() {
            return Err(Error::NonIntegerCoefficient { i, j, sum: alloc::format!("{c}"), divisor });
        }
        out.add_term(i, j, q);
    }
    if out.coeff(0, 0) != BigInt::one() || out.terms().any(|(i, j, _)| i == 0 && j > 0) {
        return Err(Error::InvalidDeck("constant terms of the cards do not sum to n".into()));
    }
    Ok(out)
}

/// Rebuilds `S_H` from the edge-induced polynomials of the `n` cards,
/// returning it with the edge count `m`.
fn reconstruct_s_with_m(cards: &[BiPoly], n: usize) -> Result<(BiPoly, usize)> {
    check_card_polys(cards, n, &BiPoly::one())?;
    let mut s = divide_card_sums(cards, n)?;
    // every edge has fewer than n vertices, so single edges all sit in rows i < n
    let m_big: BigInt = s.terms().filter(|&(_, j, _)| j == 1).map(|(_, _, c)| c.clone()).sum();
    let m = usize::try_from(&m_big).map_err(|_| Error::InvalidDeck("edge count out of range".into()))?;
    if m > 63 {
        return Err(Error::InvalidDeck(alloc::format!("implied edge count {m} is too large")));
    }
    let mut column_sums = vec![BigInt::zero(); m + 1];
    for (_, j, c) in s.terms() {
        if j > m {
            return Err(Error::InvalidDeck(alloc::format!("card term with {j} edges exceeds m = {m}")));
        }
        column_sums[j] += c;
    }
    for (j, below) in column_sums.iter().enumerate().skip(1) {
        let top = binomial(m, j) - below;
        if top.is_negative() {
            return Err(Error::NegativeTopCoefficient { i: n, j, value: alloc::format!("{top}") });
        }
        s.add_term(n, j, top);
    }
    Ok((s, m))
}

/// Rebuilds `S_H` from the edge-induced polynomials of its `n` cards.
pub fn reconstruct_s(cards: &[BiPoly], n: usize) -> Result<BiPoly> {
    reconstruct_s_with_m(cards, n).map(|(s, _)| s)
}

/// Rebuilds `P_H` from the vertex-induced polynomials of its `n` cards.
///
/// Rows `i < n` come from card sums; the single term of row `n` is `x^n y^m`
/// with `m` taken from the reconstructed `S_H`. The result must equal the
/// transform of that `S_H`.
pub fn reconstruct_p(cards: &[BiPoly], n: usize) -> Result<BiPoly> {
    check_card_polys(cards, n, &BiPoly::from_x_poly(&UniPoly::one_plus_t_pow(n - 1)))?;
    let mut p = divide_card_sums(cards, n)?;
    let card_s: Vec<BiPoly> = cards.iter().map(|c| p_to_s(c, n - 1)).collect::<Result<_>>()?;
    let (s, m) = reconstruct_s_with_m(&card_s, n)?;
    p.add_term(n, m, BigInt::one());
    if p != s_to_p(&s, n)? {
        return Err(Error::PathsDisagree("vertex-induced polynomial"));
    }
    Ok(p)
}

/// Rebuilds the f-vector `(f_{-1}, ..., f_{d-1})` from the cards' f-vectors.
pub fn reconstruct_f_vector(deck: &Deck, limits: &Limits) -> Result<Vec<BigInt>> {
    check_deck(deck)?;
    let n = deck.origin_n();
    let mut sums = vec![BigInt::zero(); n];
    for card in deck.cards() {
        for (k, c) in f_vector(card, limits)?.into_iter().enumerate() {
            sums[k] += c;
        }
    }
    let mut f = Vec::with_capacity(n);
    for (k, sum) in sums.into_iter().enumerate() {
        let divisor = n - k;
        let (q, r) = sum.div_rem(&BigInt::from(divisor));
        if !r.is_zero() {
            return Err(Error::NonIntegerCoefficient { i: k, j: 0, sum: alloc::format!("{sum}"), divisor });
        }
        f.push(q);
    }
    // the parent has an edge, so no independent set has n vertices
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    Ok(f)
}

/// Hilbert function `dim R_k`, `k = 0..=k_max`, from the deck.
///
/// Computed from the reconstructed `S_H`, then checked against
/// `n H(t) = t (1 - t) H'(t) + sum_l H_l(t)` built from the cards' own
/// Hilbert functions.
pub fn reconstruct_hilbert(deck: &Deck, k_max: usize, limits: &Limits) -> Result<Vec<BigInt>> {
    check_deck(deck)?;
    let n = deck.origin_n();
    let card_s = deck_polys(deck, PolyKind::EdgeInduced, limits)?;
    let s = reconstruct_s(&card_s, n)?;
    let hilbert = expand_series(&k_polynomial_of(&s), n, k_max);

    let mut card_sum = vec![BigInt::zero(); k_max + 1];
    for cs in &card_s {
        for (k, v) in hilbert_from_k_polynomial(&k_polynomial_of(cs), n - 1, k_max).into_iter().enumerate() {
            card_sum[k] += v;
        }
    }
    for k in 0..=k_max {
        let lhs = &hilbert[k] * BigInt::from(n);
        let mut rhs = &hilbert[k] * BigInt::from(k) + &card_sum[k];
        if k >= 1 {
            rhs -= &hilbert[k - 1] * BigInt::from(k - 1);
        }
        if lhs != rhs {
            return Err(Error::PathsDisagree("Hilbert function"));
        }
    }
    Ok(hilbert)
}

/// Multigraded Betti numbers `b_{i,B}` for every `|B| < n`, read off a card
/// that keeps all of `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialBettiTable {
    /// Known entries, keyed by parent vertex sets; its graded part covers `j < n`.
    pub table: BettiTable,
    /// Vertex sets whose entries the deck does not determine.
    pub unknown: Vec<VertexSet>,
}

pub fn reconstruct_multigraded_betti(deck: &Deck, limits: &Limits) -> Result<PartialBettiTable> {
    check_deck(deck)?;
    let n = deck.origin_n();
    limits.check_homology(n)?;
    let labels = deck.parent_labels()?;
    let full = VertexSet::full(n);
    let mut entries = Vec::new();
    for bits in 0..(1u64 << n) {
        let b = VertexSet(bits);
        if b == full {
            continue;
        }
        let l = (!bits).trailing_zeros() as usize;
        let on_card = deck.to_card_set(l, &labels, b)?;
        for (i, v) in hochster_entries(&deck.cards()[l], on_card)? {
            entries.push(((i, b), v));
        }
    }
    Ok(PartialBettiTable { table: BettiTable::from_multigraded(n, entries), unknown: vec![full] })
}

/// Whether the top-degree column `b_{i,n}` of the Betti table follows from
/// the `t^n` coefficient of the K-polynomial alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopBettiReport {
    pub n: usize,
    /// Coefficient of `t^n` in `S_H(t, -1)`, i.e. `sum_i (-1)^i b_{i,n}`.
    pub top_coefficient: BigInt,
    /// `(i, b_{i,n})` for the nonzero entries.
    pub nonzero: Vec<(usize, u64)>,
    /// At most one nonzero entry, so it equals `|top_coefficient|`.
    pub determined: bool,
    /// Projective dimension, regularity and depth, which are deck-determined
    /// when the top column is.
    pub homological: HomologicalInvariants,
}

pub fn top_betti_report(table: &BettiTable, k_poly: &UniPoly) -> Result<TopBettiReport> {
    let n = table.n;
    let top_coefficient = k_poly.coeff(n);
    let nonzero: Vec<(usize, u64)> =
        table.graded.iter().filter(|(&(_, j), _)| j == n).map(|(&(i, _), &b)| (i, b)).collect();
    let determined = nonzero.len() <= 1;
    if nonzero.len() == 1 && BigInt::from(nonzero[0].1) != top_coefficient.abs() {
        return Err(Error::InternalMismatch("single top Betti number differs from |c_n|"));
    }
    if nonzero.is_empty() && !top_coefficient.is_zero() {
        return Err(Error::InternalMismatch("empty top column but nonzero c_n"));
    }
    Ok(TopBettiReport { n, top_coefficient, nonzero, determined, homological: pd_reg_depth(table, n) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::hochster_betti;
    use crate::enumerate::{edge_induced_poly, vertex_induced_poly};
    use crate::stanley_reisner::{hilbert_function, k_polynomial};

    fn k3() -> Hypergraph {
        Hypergraph::validate(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]]).unwrap()
    }

    fn path3() -> Hypergraph {
        Hypergraph::validate(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"]]).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn reconstructibility_checks() {
        assert_eq!(check_reconstructible(&k3()), Ok(()));
        assert_eq!(check_reconstructible(&Hypergraph::edgeless(5)), Err(Error::NoEdges));
        let spanning = Hypergraph::validate(&["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap();
        assert_eq!(check_reconstructible(&spanning), Err(Error::SingleSpanningEdge(3)));
        let edge = Hypergraph::validate(&["a", "b"], &[vec!["a", "b"]]).unwrap();
        assert_eq!(check_reconstructible(&edge), Err(Error::TooFewVertices(2)));
        assert_eq!(check_deck(&spanning.deck()), Err(Error::EdgelessDeck));
        assert_eq!(check_deck(&edge.deck()), Err(Error::TooFewVertices(2)));
    }

    #[test]
    fn deck_identity_examples() {
        let lim = Limits::default();
        let s = edge_induced_poly(&k3(), &lim).unwrap();
        let card = BiPoly::from_terms([(0, 0, 1), (2, 1, 1)]);
        assert!(deck_identity_holds_for(&s, &[card.clone(), card.clone(), card], 3));
        let p = vertex_induced_poly(&k3(), &lim).unwrap();
        let card = BiPoly::from_terms([(0, 0, 1), (1, 0, 2), (2, 1, 1)]);
        assert!(deck_identity_holds_for(&p, &[card.clone(), card.clone(), card], 3));
        for h in [k3(), path3()] {
            assert!(deck_identity_holds(&h, PolyKind::EdgeInduced, &lim).unwrap());
            assert!(deck_identity_holds(&h, PolyKind::VertexInduced, &lim).unwrap());
        }
    }

    #[test]
    fn reconstruct_s_examples() {
        let card = BiPoly::from_terms([(0, 0, 1), (2, 1, 1)]);
        assert_eq!(
            reconstruct_s(&[card.clone(), card.clone(), card.clone()], 3).unwrap(),
            BiPoly::from_terms([(0, 0, 1), (2, 1, 3), (3, 2, 3), (3, 3, 1)])
        );
        assert_eq!(
            reconstruct_s(&[card.clone(), BiPoly::one(), card], 3).unwrap(),
            BiPoly::from_terms([(0, 0, 1), (2, 1, 2), (3, 2, 1)])
        );
    }

    #[test]
    fn reconstruct_p_examples() {
        let lim = Limits::default();
        for h in [k3(), path3()] {
            let cards = deck_polys(&h.deck(), PolyKind::VertexInduced, &lim).unwrap();
            assert_eq!(reconstruct_p(&cards, 3).unwrap(), vertex_induced_poly(&h, &lim).unwrap());
        }
    }

    #[test]
    fn corrupted_decks_are_rejected() {
        let lim = Limits::default();
        let k4 = Hypergraph::with_numbered_vertices(
            4,
            (0..4).flat_map(|a| (a + 1..4).map(move |b| VertexSet::from_indices([a, b]))).collect(),
        )
        .unwrap();
        let mut cards = deck_polys(&k4.deck(), PolyKind::EdgeInduced, &lim).unwrap();
        cards[0].add_term(2, 1, BigInt::one());
        assert_eq!(
            reconstruct_s(&cards, 4),
            Err(Error::NonIntegerCoefficient { i: 2, j: 1, sum: "13".into(), divisor: 2 })
        );
        assert_eq!(reconstruct_s(&cards[..3], 4), Err(Error::DeckSizeMismatch { cards: 3, n: 4 }));
        assert_eq!(reconstruct_s(&[BiPoly::one(), BiPoly::one(), BiPoly::one()], 3), Err(Error::EdgelessDeck));
        // a card claiming more 1-edge sets than the whole parent can carry
        let card = BiPoly::from_terms([(0, 0, 1), (2, 1, 2), (2, 2, 6)]);
        assert!(matches!(
            reconstruct_s(&[card.clone(), card.clone(), card], 3),
            Err(Error::NegativeTopCoefficient { .. })
        ));
    }

    #[test]
    fn f_vector_examples() {
        let lim = Limits::default();
        assert_eq!(reconstruct_f_vector(&k3().deck(), &lim).unwrap(), ints(&[1, 3]));
        assert_eq!(reconstruct_f_vector(&path3().deck(), &lim).unwrap(), ints(&[1, 3, 1]));
    }

    #[test]
    fn hilbert_examples() {
        let lim = Limits::default();
        assert_eq!(reconstruct_hilbert(&k3().deck(), 4, &lim).unwrap(), ints(&[1, 3, 3, 3, 3]));
        assert_eq!(
            reconstruct_hilbert(&path3().deck(), 6, &lim).unwrap(),
            hilbert_function(&path3(), 6, &lim).unwrap()
        );
        let edge = Hypergraph::validate(&["a", "b"], &[vec!["a", "b"]]).unwrap();
        assert_eq!(reconstruct_hilbert(&edge.deck(), 3, &lim), Err(Error::TooFewVertices(2)));
    }

    #[test]
    fn multigraded_betti_examples() {
        let lim = Limits::default();
        let partial = reconstruct_multigraded_betti(&k3().deck(), &lim).unwrap();
        let graded: Vec<_> = partial.table.graded.iter().map(|(&(i, j), &b)| (i, j, b)).collect();
        assert_eq!(graded, vec![(0, 0, 1), (1, 2, 3)]);
        assert_eq!(partial.unknown, vec![VertexSet::full(3)]);
        assert!(reconstruct_multigraded_betti(&Hypergraph::edgeless(4).deck(), &lim).is_err());
    }

    #[test]
    fn top_betti_examples() {
        let lim = Limits::default();
        let r = top_betti_report(&hochster_betti(&k3(), &lim).unwrap(), &k_polynomial(&k3(), &lim).unwrap()).unwrap();
        assert_eq!((r.top_coefficient.clone(), r.nonzero.clone(), r.determined), (BigInt::from(2), vec![(2, 2)], true));
        let e = Hypergraph::edgeless(3);
        let r = top_betti_report(&hochster_betti(&e, &lim).unwrap(), &UniPoly::one()).unwrap();
        assert_eq!((r.top_coefficient.clone(), r.nonzero.is_empty(), r.determined), (BigInt::zero(), true, true));
        let h = Hypergraph::validate(
            &["a", "b", "c", "d"],
            &[vec!["a", "b", "c"], vec!["d", "a"], vec!["d", "b"], vec!["d", "c"]],
        )
        .unwrap();
        let r = top_betti_report(&hochster_betti(&h, &lim).unwrap(), &k_polynomial(&h, &lim).unwrap()).unwrap();
        assert_eq!(
            (r.top_coefficient.clone(), r.nonzero.clone(), r.determined),
            (BigInt::zero(), vec![(2, 1), (3, 1)], false)
        );
    }
}
