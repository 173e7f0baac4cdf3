use hgpoly_core::betti::{self, BettiTable};
use hgpoly_core::enumerate::PolyKind;
use hgpoly_core::reconstruct;
use hgpoly_core::{BiPoly, Deck, Hypergraph, Limits, Result};

use crate::parallel;

/// Size limits plus the choice between the sequential and rayon drivers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Engine {
    pub limits: Limits,
    pub parallel: bool,
}

impl Engine {
    pub fn new(limits: Limits, parallel: bool) -> Self {
        Engine { limits, parallel }
    }

    pub fn poly(&self, kind: PolyKind, h: &Hypergraph) -> Result<BiPoly> {
        if self.parallel {
            parallel::compute(kind, h, &self.limits)
        } else {
            kind.compute(h, &self.limits)
        }
    }

    pub fn betti(&self, h: &Hypergraph) -> Result<BettiTable> {
        if self.parallel {
            parallel::hochster_betti(h, &self.limits)
        } else {
            betti::hochster_betti(h, &self.limits)
        }
    }

    pub fn deck_polys(&self, deck: &Deck, kind: PolyKind) -> Result<Vec<BiPoly>> {
        if self.parallel {
            parallel::deck_polys(deck, kind, &self.limits)
        } else {
            reconstruct::deck_polys(deck, kind, &self.limits)
        }
    }
}
