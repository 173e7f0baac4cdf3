//! One JSON document holding every invariant of a hypergraph.

use hgpoly_core::betti::{antidiagonal_recovery, pd_reg_depth, AntidiagonalRecovery, BettiTable};
use hgpoly_core::enumerate::{independence_poly, PolyKind};
use hgpoly_core::reconstruct::{
    check_reconstructible, deck_identity_holds_for, reconstruct_f_vector, reconstruct_hilbert,
    reconstruct_multigraded_betti, reconstruct_p, reconstruct_s, top_betti_report,
};
use hgpoly_core::stanley_reisner::{k_polynomial_of, SrInvariants};
use hgpoly_core::{Hypergraph, Result};
use serde::Serialize;
use serde_json::{json, Value};

use crate::engine::Engine;
use crate::io::HypergraphDoc;
use crate::json::{betti_to_json, bigints_to_json, bipoly_to_json, unipoly_to_json};
use crate::verify::{verify, Identity, Status};

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub hypergraph: HypergraphDoc,
    pub n: usize,
    pub m: usize,
    pub edge_induced_poly: Value,
    pub vertex_induced_poly: Value,
    pub independence_poly: Value,
    pub stanley_reisner: StanleyReisner,
    /// Absent when `n` exceeds the homology limit.
    pub betti: Option<Betti>,
    /// Absent for inputs the deck cannot determine.
    pub reconstruction: Option<Reconstruction>,
    pub identities: Vec<IdentityLine>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StanleyReisner {
    pub f_vector: Value,
    pub h_vector: Value,
    pub krull_dim: usize,
    pub multiplicity: String,
    pub k_polynomial: Value,
    /// `numerator / (1 - t)^denominator_power` in lowest terms.
    pub reduced_numerator: Value,
    pub reduced_denominator_power: usize,
    pub hilbert_function: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Betti {
    pub table: Value,
    pub projective_dimension: usize,
    pub regularity: usize,
    pub ideal_regularity: Option<usize>,
    pub depth: usize,
    pub top_coefficient: String,
    pub top_column: Vec<(usize, u64)>,
    pub top_column_determined: bool,
    pub antidiagonal: Value,
}

/// Whether each invariant rebuilt from the deck equals the direct value.
#[derive(Debug, Clone, Serialize)]
pub struct Reconstruction {
    pub deck_identity_s: bool,
    pub deck_identity_p: bool,
    pub edge_induced_poly: bool,
    pub vertex_induced_poly: bool,
    pub f_vector: bool,
    pub hilbert_function: bool,
    pub multigraded_betti: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityLine {
    pub identity: String,
    pub status: String,
    pub detail: Option<String>,
}

fn restricted_below_top(table: &BettiTable) -> BettiTable {
    let n = table.n;
    BettiTable::from_multigraded(n, table.multigraded.iter().filter(|(&(_, b), _)| b.len() < n).map(|(&k, &v)| (k, v)))
}

pub fn build(engine: &Engine, h: &Hypergraph, k_max: usize) -> Result<Report> {
    let (n, lim) = (h.n(), &engine.limits);
    let s = engine.poly(PolyKind::EdgeInduced, h)?;
    let p = engine.poly(PolyKind::VertexInduced, h)?;
    let k_poly = k_polynomial_of(&s);
    let sr = SrInvariants::compute(h, lim)?;
    let hilbert = sr.hilbert_function(k_max);
    let mut notes = Vec::new();

    let table = if lim.check_homology(n).is_ok() {
        Some(engine.betti(h)?)
    } else {
        notes.push(format!("Betti numbers skipped: {n} vertices exceed the homology limit {}", lim.homology_max));
        None
    };
    let betti = match &table {
        None => None,
        Some(t) => {
            let inv = pd_reg_depth(t, n);
            let top = top_betti_report(t, &k_poly)?;
            let antidiagonal = match antidiagonal_recovery(t, &k_poly)? {
                AntidiagonalRecovery::Applicable { entries } => json!({
                    "applicable": true,
                    "entries": entries.iter().map(|(i, j, b)| json!([i, j, b.to_string()])).collect::<Vec<_>>(),
                }),
                AntidiagonalRecovery::NotApplicable { column, degrees } => {
                    json!({ "applicable": false, "column": column, "degrees": degrees })
                }
            };
            Some(Betti {
                table: betti_to_json(t, h.vertices()),
                projective_dimension: inv.projective_dimension,
                regularity: inv.regularity,
                ideal_regularity: inv.ideal_regularity(),
                depth: inv.depth,
                top_coefficient: top.top_coefficient.to_string(),
                top_column: top.nonzero,
                top_column_determined: top.determined,
                antidiagonal,
            })
        }
    };

    let reconstruction = match check_reconstructible(h) {
        Err(e) => {
            notes.push(format!("reconstruction skipped: {e}"));
            None
        }
        Ok(()) => {
            let deck = h.deck();
            let card_s = engine.deck_polys(&deck, PolyKind::EdgeInduced)?;
            let card_p = engine.deck_polys(&deck, PolyKind::VertexInduced)?;
            let multigraded_betti = match &table {
                Some(t) => Some(reconstruct_multigraded_betti(&deck, lim)?.table == restricted_below_top(t)),
                None => None,
            };
            Some(Reconstruction {
                deck_identity_s: deck_identity_holds_for(&s, &card_s, n),
                deck_identity_p: deck_identity_holds_for(&p, &card_p, n),
                edge_induced_poly: reconstruct_s(&card_s, n)? == s,
                vertex_induced_poly: reconstruct_p(&card_p, n)? == p,
                f_vector: reconstruct_f_vector(&deck, lim)? == sr.f,
                hilbert_function: reconstruct_hilbert(&deck, k_max, lim)? == hilbert,
                multigraded_betti,
            })
        }
    };

    let selected: Vec<Identity> =
        Identity::ALL.into_iter().filter(|&i| i != Identity::BettiAlternatingSum || table.is_some()).collect();
    let identities = verify(engine, h, &selected)?
        .into_iter()
        .map(|o| {
            let (status, detail) = match o.status {
                Status::Passed => ("pass", None),
                Status::Failed(d) => ("fail", Some(d)),
                Status::Skipped(d) => ("skip", Some(d)),
            };
            IdentityLine { identity: o.identity.name().to_string(), status: status.to_string(), detail }
        })
        .collect();

    Ok(Report {
        hypergraph: HypergraphDoc::of(h),
        n,
        m: h.m(),
        edge_induced_poly: bipoly_to_json(&s),
        vertex_induced_poly: bipoly_to_json(&p),
        independence_poly: unipoly_to_json(&independence_poly(h, lim)?),
        stanley_reisner: StanleyReisner {
            f_vector: bigints_to_json(&sr.f),
            h_vector: bigints_to_json(&sr.h),
            krull_dim: sr.krull_dim,
            multiplicity: sr.multiplicity.to_string(),
            k_polynomial: unipoly_to_json(&sr.k_polynomial),
            reduced_numerator: unipoly_to_json(&sr.reduced.numerator),
            reduced_denominator_power: sr.reduced.denominator_power,
            hilbert_function: bigints_to_json(&hilbert),
        },
        betti,
        reconstruction,
        identities,
        notes,
    })
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// False if any identity failed or any reconstructed invariant differs.
    pub fn all_consistent(&self) -> bool {
        let identities = self.identities.iter().all(|l| l.status != "fail");
        let rebuilt = self.reconstruction.as_ref().is_none_or(|r| {
            r.deck_identity_s
                && r.deck_identity_p
                && r.edge_induced_poly
                && r.vertex_induced_poly
                && r.f_vector
                && r.hilbert_function
                && r.multigraded_betti != Some(false)
        });
        identities && rebuilt
    }
}
