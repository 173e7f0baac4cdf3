use hgpoly_core::betti::{alternating_sum_matches, betti_at_subset, hochster_betti, restricted_independence_complex};
use hgpoly_core::enumerate::{edge_induced_poly, independence_poly, vertex_induced_poly, PolyKind};
use hgpoly_core::homology::{reduced_homology_dims, Pivot};
use hgpoly_core::poly::{binomial, binomial_relation_holds, expand_series, p_to_s, s_to_p};
use hgpoly_core::reconstruct::{
    check_reconstructible, deck_identity_holds, deck_polys, reconstruct_f_vector, reconstruct_hilbert,
    reconstruct_multigraded_betti, reconstruct_p, reconstruct_s,
};
use hgpoly_core::stanley_reisner::{
    f_vector, h_vector, hilbert_from_f_vector, hilbert_from_k_polynomial, k_polynomial_matches_f_vector,
    k_polynomial_of, SrInvariants,
};
use hgpoly_core::{BiPoly, Hypergraph, Limits, UniPoly, VertexSet};
use num_bigint::BigInt;
use proptest::prelude::*;

fn antichain(n: usize, raw: Vec<u64>) -> Hypergraph {
    let full = VertexSet::full(n).0;
    let mut kept: Vec<VertexSet> = Vec::new();
    for r in raw {
        let e = VertexSet(r & full);
        if e.is_empty() || kept.iter().any(|&k| k.is_subset(e) || e.is_subset(k)) {
            continue;
        }
        kept.push(e);
    }
    Hypergraph::with_numbered_vertices(n, kept).unwrap()
}

fn hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (0..=max_n)
        .prop_flat_map(move |n| prop::collection::vec(any::<u64>(), 0..=max_m).prop_map(move |raw| antichain(n, raw)))
}

fn bipoly(max_x: usize, max_y: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=max_x, 0..=max_y, -50i64..50), 0..8).prop_map(BiPoly::from_terms)
}

fn lim() -> Limits {
    Limits::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn transform_round_trip(n in 0usize..=8, seed in bipoly(8, 6)) {
        let p = BiPoly::from_terms(seed.terms().filter(|&(i, _, _)| i <= n).map(|(i, j, c)| (i, j, c.clone())));
        prop_assert_eq!(s_to_p(&p_to_s(&p, n).unwrap(), n).unwrap(), p.clone());
        prop_assert_eq!(p_to_s(&s_to_p(&p, n).unwrap(), n).unwrap(), p);
    }

    #[test]
    fn ring_laws(p in bipoly(5, 5), q in bipoly(5, 5), c in -3i64..4) {
        let c = BigInt::from(c);
        prop_assert_eq!((&p + &q).eval_y(&c), &p.eval_y(&c) + &q.eval_y(&c));
        prop_assert_eq!((&p * &q).eval_y(&c), &p.eval_y(&c) * &q.eval_y(&c));
        prop_assert_eq!((&p * &q).partial_x(), &(&p.partial_x() * &q) + &(&p * &q.partial_x()));
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn transform_maps_p_to_s(h in hypergraph(8, 10)) {
        let p = vertex_induced_poly(&h, &lim()).unwrap();
        let s = edge_induced_poly(&h, &lim()).unwrap();
        prop_assert_eq!(p_to_s(&p, h.n()).unwrap(), s.clone());
        prop_assert_eq!(s_to_p(&s, h.n()).unwrap(), p.clone());
        prop_assert_eq!(binomial_relation_holds(&p, &s, h.n()), Ok(()));
    }

    #[test]
    fn row_and_column_sums(h in hypergraph(8, 10)) {
        let p = vertex_induced_poly(&h, &lim()).unwrap();
        let s = edge_induced_poly(&h, &lim()).unwrap();
        for i in 0..=h.n() {
            let row: BigInt = p.terms().filter(|&(ii, _, _)| ii == i).map(|(_, _, c)| c.clone()).sum();
            prop_assert_eq!(row, binomial(h.n(), i));
        }
        for j in 0..=h.m() {
            let col: BigInt = s.terms().filter(|&(_, jj, _)| jj == j).map(|(_, _, c)| c.clone()).sum();
            prop_assert_eq!(col, binomial(h.m(), j));
        }
        let zero = BigInt::from(0);
        prop_assert_eq!(p.eval_x(&zero), UniPoly::one());
        prop_assert_eq!(s.eval_x(&zero), UniPoly::one());
        prop_assert_eq!(independence_poly(&h, &lim()).unwrap(), p.eval_y(&zero));
    }

    #[test]
    fn polynomials_multiply_over_components(h in hypergraph(7, 8)) {
        let comps = h.connected_components();
        let p: BiPoly = comps.iter().map(|c| vertex_induced_poly(c, &lim()).unwrap()).product();
        let s: BiPoly = comps.iter().map(|c| edge_induced_poly(c, &lim()).unwrap()).product();
        prop_assert_eq!(p, vertex_induced_poly(&h, &lim()).unwrap());
        prop_assert_eq!(s, edge_induced_poly(&h, &lim()).unwrap());
    }

    #[test]
    fn card_restrictions_agree(h in hypergraph(7, 8), w in any::<u64>()) {
        for l in 0..h.n() {
            let card = h.card(l).unwrap();
            let w = VertexSet(w & h.vertex_set().0).without(l);
            let from_parent = h.vertex_induced(w).unwrap();
            let on_card = card.vertex_set_of(&h.labels_of(w)).unwrap();
            prop_assert_eq!(card.vertex_induced(on_card).unwrap(), from_parent);
            for e in card.edges() {
                let labels = card.labels_of(*e);
                prop_assert!(h.edges().contains(&h.vertex_set_of(&labels).unwrap()));
            }
        }
    }

    #[test]
    fn hilbert_series_identities(h in hypergraph(8, 10)) {
        let f = f_vector(&h, &lim()).unwrap();
        let k = k_polynomial_of(&edge_induced_poly(&h, &lim()).unwrap());
        prop_assert!(k_polynomial_matches_f_vector(&k, &f, h.n()));
        let kmax = 2 * h.n();
        prop_assert_eq!(hilbert_from_k_polynomial(&k, h.n(), kmax), hilbert_from_f_vector(&f, kmax));
        // also runs the (1 - t)^(n - d) division checks
        let inv = SrInvariants::from_parts(h.n(), f.clone(), k).unwrap();
        // expanding h(t) / (1 - t)^d reproduces sum f_{i-1} t^i / (1 - t)^i
        let hv = h_vector(&f, inv.krull_dim).unwrap();
        prop_assert_eq!(expand_series(&UniPoly::from_coeffs(hv), inv.krull_dim, kmax), hilbert_from_f_vector(&f, kmax));
    }

    #[test]
    fn hochster_table_properties(h in hypergraph(6, 8)) {
        let t = hochster_betti(&h, &lim()).unwrap();
        prop_assert_eq!(t.multigraded_at(0, VertexSet::EMPTY), 1);
        for &(i, b) in t.multigraded.keys() {
            prop_assert!(i <= b.len());
            prop_assert!(i > 0 || b.is_empty());
            prop_assert!(b.is_empty() || !h.is_independent(b).unwrap());
        }
        for (&(i, j), &v) in &t.graded {
            let collapsed: u64 = t.multigraded.iter().filter(|(&(ii, b), _)| ii == i && b.len() == j).map(|(_, &x)| x).sum();
            prop_assert_eq!(collapsed, v);
        }
        let k = k_polynomial_of(&edge_induced_poly(&h, &lim()).unwrap());
        prop_assert!(alternating_sum_matches(&t, &k));
    }

    #[test]
    fn homology_euler_and_pivots(h in hypergraph(6, 8), b in any::<u64>()) {
        let b = VertexSet(b & h.vertex_set().0);
        let delta = restricted_independence_complex(&h, b).unwrap();
        let dims = reduced_homology_dims(&delta);
        let chi: i64 = dims.iter().enumerate().map(|(k, &d)| if k % 2 == 1 { d as i64 } else { -(d as i64) }).sum();
        prop_assert_eq!(chi, delta.reduced_euler_characteristic());
        prop_assert_eq!(
            betti_at_subset(&h, b, Pivot::FirstNonzero).unwrap(),
            betti_at_subset(&h, b, Pivot::SmallestMagnitude).unwrap()
        );
    }

    #[test]
    fn deck_round_trips(h in hypergraph(7, 9)) {
        prop_assume!(check_reconstructible(&h).is_ok());
        let n = h.n();
        let deck = h.deck();
        prop_assert!(deck_identity_holds(&h, PolyKind::EdgeInduced, &lim()).unwrap());
        prop_assert!(deck_identity_holds(&h, PolyKind::VertexInduced, &lim()).unwrap());
        let card_s = deck_polys(&deck, PolyKind::EdgeInduced, &lim()).unwrap();
        let constant: BigInt = card_s.iter().map(|c| c.coeff(0, 0)).sum();
        prop_assert_eq!(constant, BigInt::from(n));
        prop_assert_eq!(reconstruct_s(&card_s, n).unwrap(), edge_induced_poly(&h, &lim()).unwrap());
        let card_p = deck_polys(&deck, PolyKind::VertexInduced, &lim()).unwrap();
        prop_assert_eq!(reconstruct_p(&card_p, n).unwrap(), vertex_induced_poly(&h, &lim()).unwrap());
        let f = reconstruct_f_vector(&deck, &lim()).unwrap();
        prop_assert_eq!(&f, &f_vector(&h, &lim()).unwrap());
        let direct = SrInvariants::compute(&h, &lim()).unwrap();
        let d = f.len() - 1;
        prop_assert_eq!((d, &f[d]), (direct.krull_dim, &direct.multiplicity));
        prop_assert_eq!(h_vector(&f, d).unwrap(), direct.h.clone());
        prop_assert_eq!(reconstruct_hilbert(&deck, 2 * n, &lim()).unwrap(), direct.hilbert_function(2 * n));
        let partial = reconstruct_multigraded_betti(&deck, &lim()).unwrap();
        let table = hochster_betti(&h, &lim()).unwrap();
        let expected: Vec<_> = table.multigraded.iter().filter(|(&(_, b), _)| b.len() < n).collect();
        prop_assert_eq!(partial.table.multigraded.iter().collect::<Vec<_>>(), expected);
    }
}
