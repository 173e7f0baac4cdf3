//! Finite hypergraphs (clutters) over labeled vertices.
//!
//! The public model is label based; internally every vertex set is a bitmask
//! over the vertex order, so at most 64 vertices are supported.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0, |acc, v| acc | (1u64 << v)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1 << v) != 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << v))
    }

    /// Vertex indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Position of `v` among the members of this set (number of smaller members).
    pub fn rank_of(self, v: usize) -> usize {
        (self.0 & ((1u64 << v) - 1)).count_ones() as usize
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite hypergraph whose edges form an antichain of nonempty sets.
///
/// Edges are kept sorted by (size, bitmask), so two hypergraphs over the same
/// vertex list compare equal exactly when they have the same edge set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vertices: Vec<String>,
    edges: Vec<VertexSet>,
}

fn edge_order(a: &VertexSet, b: &VertexSet) -> core::cmp::Ordering {
    (a.len(), a.0).cmp(&(b.len(), b.0))
}

impl Hypergraph {
    /// Validates labeled input and builds the canonical hypergraph.
    pub fn validate<S, E, T>(raw_vertices: &[S], raw_edges: &[E]) -> Result<Self>
    where
        S: AsRef<str>,
        E: AsRef<[T]>,
        T: AsRef<str>,
    {
        if raw_vertices.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(raw_vertices.len()));
        }
        let mut index = BTreeMap::new();
        for (i, v) in raw_vertices.iter().enumerate() {
            if index.insert(v.as_ref(), i).is_some() {
                return Err(Error::DuplicateVertexLabel(v.as_ref().to_string()));
            }
        }
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (pos, raw) in raw_edges.iter().enumerate() {
            let raw = raw.as_ref();
            if raw.is_empty() {
                return Err(Error::EmptyEdge(pos));
            }
            let mut set = VertexSet::EMPTY;
            for label in raw {
                match index.get(label.as_ref()) {
                    Some(&i) => set = set.with(i),
                    None => {
                        return Err(Error::UnknownVertexLabel {
                            edge: raw.iter().map(|s| s.as_ref().to_string()).collect(),
                            label: label.as_ref().to_string(),
                        })
                    }
                }
            }
            edges.push(set);
        }
        let vertices: Vec<String> = raw_vertices.iter().map(|s| s.as_ref().to_string()).collect();
        Self::from_parts(vertices, edges)
    }

    /// Builds a hypergraph from vertex labels and index-based edges.
    pub fn from_parts(vertices: Vec<String>, mut edges: Vec<VertexSet>) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(vertices.len()));
        }
        let full = VertexSet::full(vertices.len());
        for (pos, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge(pos));
            }
            if !e.is_subset(full) {
                return Err(Error::UnknownVertex(e.0));
            }
        }
        edges.sort_by(edge_order);
        let labels = |e: VertexSet| -> Vec<String> { e.iter().map(|v| vertices[v].clone()).collect() };
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(labels(w[0])));
            }
        }
        // sorted by size, so only a smaller-or-equal edge can sit inside a later one
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                if a.is_subset(b) {
                    return Err(Error::AntichainViolation { smaller: labels(a), larger: labels(b) });
                }
            }
        }
        let mut seen = BTreeMap::new();
        for v in &vertices {
            if seen.insert(v.as_str(), ()).is_some() {
                return Err(Error::DuplicateVertexLabel(v.clone()));
            }
        }
        Ok(Hypergraph { vertices, edges })
    }

    /// Hypergraph on vertices labeled `0..n`.
    pub fn with_numbered_vertices(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        Self::from_parts((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn edgeless(n: usize) -> Self {
        Self::with_numbered_vertices(n, Vec::new()).expect("edgeless hypergraph is valid")
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    /// Resolves labels to a vertex set.
    pub fn vertex_set_of<T: AsRef<str>>(&self, labels: &[T]) -> Result<VertexSet> {
        let mut set = VertexSet::EMPTY;
        for l in labels {
            match self.vertex_index(l.as_ref()) {
                Some(i) => set = set.with(i),
                None => {
                    return Err(Error::UnknownVertexLabel {
                        edge: labels.iter().map(|s| s.as_ref().to_string()).collect(),
                        label: l.as_ref().to_string(),
                    })
                }
            }
        }
        Ok(set)
    }

    pub fn labels_of(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.vertices[v].clone()).collect()
    }

    fn check_subset(&self, w: VertexSet) -> Result<()> {
        if w.is_subset(self.vertex_set()) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(w.0))
        }
    }

    /// The subhypergraph on `w` carrying every edge contained in `w`.
    ///
    /// Vertices are renumbered in increasing order; labels are kept.
    pub fn vertex_induced(&self, w: VertexSet) -> Result<Hypergraph> {
        self.check_subset(w)?;
        let kept: Vec<usize> = w.iter().collect();
        let remap = |e: VertexSet| VertexSet::from_indices(e.iter().map(|v| w.rank_of(v)));
        let mut edges: Vec<VertexSet> = self.edges.iter().filter(|e| e.is_subset(w)).map(|&e| remap(e)).collect();
        edges.sort_by(edge_order);
        Ok(Hypergraph { vertices: kept.iter().map(|&v| self.vertices[v].clone()).collect(), edges })
    }

    /// Union of the edges with the given indices.
    pub fn edge_union(&self, edge_indices: &[usize]) -> Result<VertexSet> {
        edge_indices
            .iter()
            .try_fold(VertexSet::EMPTY, |acc, &i| self.edges.get(i).map(|&e| acc.union(e)).ok_or(Error::UnknownEdge(i)))
    }

    /// True iff no edge is contained in `w`.
    pub fn is_independent(&self, w: VertexSet) -> Result<bool> {
        self.check_subset(w)?;
        Ok(self.is_independent_unchecked(w))
    }

    pub(crate) fn is_independent_unchecked(&self, w: VertexSet) -> bool {
        !self.edges.iter().any(|e| e.is_subset(w))
    }

    /// Card `l`: delete vertex `l` together with every edge through it.
    pub fn card(&self, l: usize) -> Result<Hypergraph> {
        if l >= self.n() {
            return Err(Error::IndexOutOfRange { index: l, len: self.n() });
        }
        self.vertex_induced(self.vertex_set().without(l))
    }

    pub fn deck(&self) -> Deck {
        let cards = (0..self.n()).map(|l| self.card(l).expect("index in range")).collect();
        Deck { cards, origin_n: self.n() }
    }

    /// Connected components (isolated vertices are singleton components),
    /// ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Hypergraph> {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let mut it = e.iter();
            if let Some(first) = it.next() {
                for v in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, v));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, VertexSet> = BTreeMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            let g = groups.entry(r).or_default();
            *g = g.with(v);
        }
        groups.into_values().map(|w| self.vertex_induced(w).expect("component within vertex range")).collect()
    }

    /// Minimal squarefree generators of the edge ideal, one vertex set per monomial.
    pub fn edge_ideal_generators(&self) -> Vec<VertexSet> {
        self.edges.clone()
    }

    /// Disjoint union; labels of `other` are kept and must not clash.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        let shift = self.n();
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| VertexSet(e.0 << shift)));
        Self::from_parts(vertices, edges)
    }

    /// Incidence lists: for each vertex, the indices of edges containing it.
    pub(crate) fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = alloc::vec![Vec::new(); self.n()];
        for (i, e) in self.edges.iter().enumerate() {
            for v in e.iter() {
                inc[v].push(i);
            }
        }
        inc
    }
}

/// The labeled deck of a hypergraph: card `l` is the parent minus vertex `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deck {
    cards: Vec<Hypergraph>,
    origin_n: usize,
}

impl Deck {
    /// Assembles a deck from cards in parent vertex order.
    ///
    /// Every card must have `n - 1` vertices, and card `l` must contain every
    /// parent label except the `l`-th one.
    pub fn from_cards(cards: Vec<Hypergraph>) -> Result<Self> {
        let deck = Deck { origin_n: cards.len(), cards };
        deck.parent_labels()?;
        Ok(deck)
    }

    pub fn cards(&self) -> &[Hypergraph] {
        &self.cards
    }

    pub fn origin_n(&self) -> usize {
        self.origin_n
    }

    /// Recovers the parent's vertex labels: label `l` is the one missing from card `l`.
    pub fn parent_labels(&self) -> Result<Vec<String>> {
        let n = self.origin_n;
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut all: BTreeMap<&str, ()> = BTreeMap::new();
        for (l, c) in self.cards.iter().enumerate() {
            if c.n() + 1 != n {
                return Err(Error::InvalidDeck(alloc::format!("card {l} has {} vertices, expected {}", c.n(), n - 1)));
            }
            for v in c.vertices() {
                all.insert(v.as_str(), ());
            }
        }
        if n == 1 {
            return Err(Error::InvalidDeck("a single empty card does not determine its label".into()));
        }
        if all.len() != n {
            return Err(Error::InvalidDeck(alloc::format!(
                "cards mention {} distinct labels, expected {n}",
                all.len()
            )));
        }
        let mut labels = Vec::with_capacity(n);
        for (l, c) in self.cards.iter().enumerate() {
            let missing: Vec<&str> = all.keys().copied().filter(|k| !c.vertices().iter().any(|v| v == k)).collect();
            if missing.len() != 1 {
                return Err(Error::InvalidDeck(alloc::format!("card {l} does not omit exactly one label")));
            }
            labels.push(missing[0].to_string());
        }
        // each label must be omitted by exactly one card
        let mut omitted = labels.clone();
        omitted.sort();
        omitted.dedup();
        if omitted.len() != n {
            return Err(Error::InvalidDeck("two cards omit the same label".into()));
        }
        Ok(labels)
    }

    /// Maps a parent vertex set avoiding vertex `l` into card `l`'s indices.
    pub fn to_card_set(&self, l: usize, parent_labels: &[String], b: VertexSet) -> Result<VertexSet> {
        let card = &self.cards[l];
        let mut set = VertexSet::EMPTY;
        for v in b.iter() {
            let idx = card
                .vertex_index(&parent_labels[v])
                .ok_or_else(|| Error::InvalidDeck(alloc::format!("card {l} lacks label {}", parent_labels[v])))?;
            set = set.with(idx);
        }
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn k3() -> Hypergraph {
        Hypergraph::validate(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]]).unwrap()
    }

    fn path3() -> Hypergraph {
        Hypergraph::validate(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"]]).unwrap()
    }

    #[test]
    fn validate_examples() {
        let h = k3();
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 3);
        let err = Hypergraph::validate(&["a", "b", "c"], &[vec!["a", "b"], vec!["a", "b", "c"]]).unwrap_err();
        assert_eq!(
            err,
            Error::AntichainViolation {
                smaller: vec!["a".into(), "b".into()],
                larger: vec!["a".into(), "b".into(), "c".into()]
            }
        );
        let single = Hypergraph::validate(&["a"], &[vec!["a"]]).unwrap();
        assert_eq!(single.m(), 1);
    }

    #[test]
    fn validate_errors() {
        assert!(matches!(
            Hypergraph::validate(&["a", "b"], &[vec!["a", "b"], vec!["b", "a"]]),
            Err(Error::DuplicateEdge(_))
        ));
        assert!(matches!(
            Hypergraph::validate(&["a", "b"], &[vec!["a", "z"]]),
            Err(Error::UnknownVertexLabel { label, .. }) if label == "z"
        ));
        let empty: Vec<&str> = vec![];
        assert_eq!(Hypergraph::validate(&["a"], &[empty]), Err(Error::EmptyEdge(0)));
        let none: [Vec<&str>; 0] = [];
        assert!(matches!(Hypergraph::validate(&["a", "a"], &none), Err(Error::DuplicateVertexLabel(_))));
    }

    #[test]
    fn edge_order_is_canonical() {
        let a = Hypergraph::validate(&["a", "b", "c"], &[vec!["b", "c"], vec!["a", "b"]]).unwrap();
        let b = Hypergraph::validate(&["a", "b", "c"], &[vec!["a", "b"], vec!["c", "b"]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn vertex_induced_examples() {
        let h = k3();
        let ab = h.vertex_induced(VertexSet::from_indices([0, 1])).unwrap();
        assert_eq!((ab.n(), ab.m()), (2, 1));
        let empty = h.vertex_induced(VertexSet::EMPTY).unwrap();
        assert_eq!((empty.n(), empty.m()), (0, 0));
        let ac = path3().vertex_induced(VertexSet::from_indices([0, 2])).unwrap();
        assert_eq!((ac.n(), ac.m()), (2, 0));
        assert_eq!(ac.vertices(), &["a".to_string(), "c".to_string()]);
        assert!(matches!(h.vertex_induced(VertexSet(0b1000)), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn edge_union_examples() {
        let h = k3();
        let ab = h.edge_index_of(&["a", "b"]);
        let bc = h.edge_index_of(&["b", "c"]);
        assert_eq!(h.edge_union(&[ab, bc]).unwrap(), VertexSet::full(3));
        assert_eq!(h.edge_union(&[]).unwrap(), VertexSet::EMPTY);
        assert_eq!(h.edge_union(&[7]), Err(Error::UnknownEdge(7)));
        let star = Hypergraph::validate(&["c", "l1", "l2", "l3"], &[vec!["c", "l1"], vec!["c", "l2"], vec!["c", "l3"]])
            .unwrap();
        let e = star.edge_index_of(&["c", "l1"]);
        assert_eq!(star.edge_union(&[e]).unwrap(), VertexSet::from_indices([0, 1]));
    }

    impl Hypergraph {
        fn edge_index_of(&self, labels: &[&str]) -> usize {
            let s = self.vertex_set_of(labels).unwrap();
            self.edges.iter().position(|&e| e == s).unwrap()
        }
    }

    #[test]
    fn independence_examples() {
        let h = k3();
        assert!(!h.is_independent(VertexSet::from_indices([0, 1])).unwrap());
        assert!(h.is_independent(VertexSet::from_indices([0])).unwrap());
        let single = Hypergraph::validate(&["a"], &[vec!["a"]]).unwrap();
        assert!(!single.is_independent(VertexSet::from_indices([0])).unwrap());
        assert!(h.is_independent(VertexSet(1 << 5)).is_err());
    }

    #[test]
    fn card_examples() {
        let h = k3();
        for l in 0..3 {
            let c = h.card(l).unwrap();
            assert_eq!((c.n(), c.m()), (2, 1));
            assert!(!c.vertices().contains(&h.vertices()[l]));
        }
        assert_eq!(h.card(3), Err(Error::IndexOutOfRange { index: 3, len: 3 }));
        let d = Hypergraph::edgeless(4).deck();
        assert_eq!(d.cards().len(), 4);
        assert!(d.cards().iter().all(|c| c.n() == 3 && c.m() == 0));
        let star = Hypergraph::with_numbered_vertices(
            4,
            vec![VertexSet::from_indices([0, 1]), VertexSet::from_indices([0, 2]), VertexSet::from_indices([0, 3])],
        )
        .unwrap();
        let c0 = star.card(0).unwrap();
        assert_eq!((c0.n(), c0.m()), (3, 0));
    }

    #[test]
    fn deck_labels_round_trip() {
        let h = path3();
        let d = Deck::from_cards(h.deck().cards().to_vec()).unwrap();
        assert_eq!(d.parent_labels().unwrap(), h.vertices());
        let mut bad = h.deck().cards().to_vec();
        bad.swap(0, 0);
        bad[1] = bad[0].clone();
        assert!(matches!(Deck::from_cards(bad), Err(Error::InvalidDeck(_))));
    }

    #[test]
    fn components_examples() {
        assert_eq!(k3().connected_components().len(), 1);
        let k3_iso = k3().disjoint_union(&Hypergraph::validate(&["d"], &[] as &[Vec<&str>]).unwrap()).unwrap();
        assert_eq!(k3_iso.connected_components().len(), 2);
        let two = Hypergraph::validate(&["a", "b", "c", "d"], &[vec!["a", "b"], vec!["c", "d"]]).unwrap();
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.n() == 2 && c.m() == 1));
    }

    #[test]
    fn edge_ideal_generator_examples() {
        assert_eq!(k3().edge_ideal_generators().len(), 3);
        assert!(Hypergraph::edgeless(3).edge_ideal_generators().is_empty());
        let single = Hypergraph::validate(&["a"], &[vec!["a"]]).unwrap();
        assert_eq!(single.edge_ideal_generators(), vec![VertexSet::singleton(0)]);
    }
}
