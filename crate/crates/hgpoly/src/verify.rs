//! The identity suite run by `hgpoly verify`.

use std::fmt;
use std::str::FromStr;

use hgpoly_core::betti::alternating_sum_matches;
use hgpoly_core::enumerate::PolyKind;
use hgpoly_core::poly::{binomial_relation_holds, p_to_s};
use hgpoly_core::reconstruct::{check_reconstructible, deck_identity_holds_for};
use hgpoly_core::stanley_reisner::{
    f_vector, hilbert_from_f_vector, hilbert_from_k_polynomial, k_polynomial_matches_f_vector, k_polynomial_of,
};
use hgpoly_core::{Hypergraph, Result};

use crate::engine::Engine;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    /// `p_to_s(P_H, n) = S_H`.
    Transform,
    /// `sum_{r >= j} b_{i,r} C(r, j) = sum_l t_{i-l, j} C(n - i + l, l)`.
    BinomialRelation,
    /// `K(t) = sum_i f_{i-1} t^i (1 - t)^(n - i)`, and both Hilbert function routes agree to `k = 2n`.
    KPolynomialFaces,
    /// `n F_H = x dF_H/dx + sum_l F_{H_l}` for `F = S` and `F = P`.
    DeckDerivative,
    /// `K(t) = sum_{i,j} (-1)^i b_ij t^j`.
    BettiAlternatingSum,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::Transform,
        Identity::BinomialRelation,
        Identity::KPolynomialFaces,
        Identity::DeckDerivative,
        Identity::BettiAlternatingSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Transform => "transform",
            Identity::BinomialRelation => "binomial-relation",
            Identity::KPolynomialFaces => "k-polynomial-faces",
            Identity::DeckDerivative => "deck-derivative",
            Identity::BettiAlternatingSum => "betti-alternating-sum",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Identities selected on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection(pub Vec<Identity>);

impl FromStr for Selection {
    type Err = String;

    /// Accepts the descriptive names, `all`, and the numeric aliases
    /// `4.2`, `2.3`, `3.2`, `4.3`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let one = match s {
            "all" => return Ok(Selection(Identity::ALL.to_vec())),
            "4.2" => Identity::DeckDerivative,
            "2.3" => Identity::BinomialRelation,
            "3.2" => Identity::KPolynomialFaces,
            "4.3" => Identity::BettiAlternatingSum,
            other => *Identity::ALL
                .iter()
                .find(|i| i.name() == other)
                .ok_or_else(|| format!("unknown identity {other:?}; expected 4.2, 2.3, 3.2, 4.3, all or a name"))?,
        };
        Ok(Selection(vec![one]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Passed,
    Failed(String),
    /// The identity does not apply to this input.
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub identity: Identity,
    pub status: Status,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Passed => write!(f, "PASS {}", self.identity),
            Status::Failed(why) => write!(f, "FAIL {}: {why}", self.identity),
            Status::Skipped(why) => write!(f, "SKIP {}: {why}", self.identity),
        }
    }
}

fn check(ok: bool, why: impl FnOnce() -> String) -> Status {
    if ok {
        Status::Passed
    } else {
        Status::Failed(why())
    }
}

pub fn verify_one(engine: &Engine, h: &Hypergraph, identity: Identity) -> Result<Outcome> {
    let n = h.n();
    let status = match identity {
        Identity::Transform => {
            let p = engine.poly(PolyKind::VertexInduced, h)?;
            let s = engine.poly(PolyKind::EdgeInduced, h)?;
            let mapped = p_to_s(&p, n)?;
            check(mapped == s, || format!("p_to_s(P) = {mapped}, S = {s}"))
        }
        Identity::BinomialRelation => {
            let p = engine.poly(PolyKind::VertexInduced, h)?;
            let s = engine.poly(PolyKind::EdgeInduced, h)?;
            match binomial_relation_holds(&p, &s, n) {
                Ok(()) => Status::Passed,
                Err((i, j)) => Status::Failed(format!("sides differ at (i, j) = ({i}, {j})")),
            }
        }
        Identity::KPolynomialFaces => {
            let k = k_polynomial_of(&engine.poly(PolyKind::EdgeInduced, h)?);
            let f = f_vector(h, &engine.limits)?;
            if !k_polynomial_matches_f_vector(&k, &f, n) {
                Status::Failed(format!("K(t) = {k} does not match the face-count expansion"))
            } else {
                let a = hilbert_from_k_polynomial(&k, n, 2 * n);
                let b = hilbert_from_f_vector(&f, 2 * n);
                check(a == b, || {
                    let k = a.iter().zip(&b).position(|(x, y)| x != y).unwrap_or(0);
                    format!("Hilbert function routes differ at k = {k}")
                })
            }
        }
        Identity::DeckDerivative => match check_reconstructible(h) {
            Err(e) => Status::Skipped(e.to_string()),
            Ok(()) => {
                let deck = h.deck();
                let mut failed = Vec::new();
                for (kind, label) in [(PolyKind::EdgeInduced, "S"), (PolyKind::VertexInduced, "P")] {
                    let f = engine.poly(kind, h)?;
                    if !deck_identity_holds_for(&f, &engine.deck_polys(&deck, kind)?, n) {
                        failed.push(label);
                    }
                }
                check(failed.is_empty(), || format!("fails for {}", failed.join(" and ")))
            }
        },
        Identity::BettiAlternatingSum => {
            let table = engine.betti(h)?;
            let k = k_polynomial_of(&engine.poly(PolyKind::EdgeInduced, h)?);
            check(alternating_sum_matches(&table, &k), || {
                format!("alternating Betti sum {} differs from K(t) = {k}", table.alternating_sum())
            })
        }
    };
    Ok(Outcome { identity, status })
}

pub fn verify(engine: &Engine, h: &Hypergraph, identities: &[Identity]) -> Result<Vec<Outcome>> {
    identities.iter().map(|&i| verify_one(engine, h, i)).collect()
}
