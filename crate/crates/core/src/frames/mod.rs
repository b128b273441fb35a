//! Accessibility relations, information structures and blindspots.
//!
//! A [`Relation`] and an [`InfoStructure`] carry the same data: row `ω` of
//! the relation is the information set `I(ω)`. The two types exist because
//! the properties checked on them (serial/transitive/Euclidean versus
//! viable/inclusive/mutual) are stated differently, and the correspondence
//! between them is itself something we verify.

mod properties;
mod theorems;

pub use properties::{
    check_relation_properties, check_structure_properties, PropertyReport, RelationProperties,
    StructureProperties,
};
pub use theorems::verify_frame_theorems;
pub(crate) use theorems::cross_membership;

use crate::error::{Error, Result};
use crate::space::{Event, StateSpace};

/// A binary accessibility relation over a state space.
#[derive(Clone, PartialEq, Eq)]
pub struct Relation {
    space: StateSpace,
    rows: Vec<Event>,
}

impl Relation {
    pub fn empty(space: &StateSpace) -> Self {
        Relation { space: space.clone(), rows: vec![space.empty_event(); space.len()] }
    }

    pub fn full(space: &StateSpace) -> Self {
        Relation { space: space.clone(), rows: vec![space.full_event(); space.len()] }
    }

    pub fn identity(space: &StateSpace) -> Self {
        let n = space.len();
        Relation { space: space.clone(), rows: (0..n).map(|i| Event::singleton(n, i)).collect() }
    }

    pub fn from_pairs<I>(space: &StateSpace, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rel = Relation::empty(space);
        for (a, b) in pairs {
            space.check_index(a)?;
            space.check_index(b)?;
            rel.rows[a].insert(b);
        }
        Ok(rel)
    }

    pub fn from_labeled_pairs<S: AsRef<str>>(space: &StateSpace, pairs: &[(S, S)]) -> Result<Self> {
        let indexed = pairs
            .iter()
            .map(|(a, b)| Ok((space.index_of(a.as_ref())?, space.index_of(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Relation::from_pairs(space, indexed)
    }

    /// Row `i` is the set of states accessible from state `i`.
    pub fn from_rows(space: &StateSpace, rows: Vec<Event>) -> Result<Self> {
        if rows.len() != space.len() {
            return Err(Error::LengthMismatch { expected: space.len(), found: rows.len() });
        }
        if rows.iter().any(|r| r.universe() != space.len()) {
            return Err(Error::SpaceMismatch);
        }
        Ok(Relation { space: space.clone(), rows })
    }

    /// Decodes `bits`, where bit `i * n + j` is the pair `(i, j)` (`n * n <= 64`).
    pub fn from_matrix_bits(space: &StateSpace, bits: u64) -> Self {
        let n = space.len();
        assert!(n * n <= 64, "matrix encoding needs n * n <= 64");
        let row_mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let rows = (0..n).map(|i| Event::from_mask(n, (bits >> (i * n)) & row_mask)).collect();
        Relation { space: space.clone(), rows }
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn contains(&self, from: usize, to: usize) -> bool {
        self.rows[from].contains(to)
    }

    pub fn successors(&self, from: usize) -> &Event {
        &self.rows[from]
    }

    pub fn rows(&self) -> &[Event] {
        &self.rows
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |j| (i, j)))
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(Event::count).sum()
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a | b).collect();
        Ok(Relation { space: self.space.clone(), rows })
    }

    /// Relational composition: `(a, c)` whenever `(a, b)` in `self` and `(b, c)` in `other`.
    pub fn compose(&self, other: &Relation) -> Relation {
        let n = self.space.len();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out = Event::empty(n);
                for mid in row.iter() {
                    out.union_with(&other.rows[mid]);
                }
                out
            })
            .collect();
        Relation { space: self.space.clone(), rows }
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }
}

impl std::fmt::Debug for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let labels = self.space.labels();
        f.debug_set()
            .entries(self.pairs().map(|(a, b)| (labels[a].as_str(), labels[b].as_str())))
            .finish()
    }
}

/// A distinct information set together with the states that hold it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub set: Event,
    pub holders: Event,
}

/// The total map `ω ↦ I(ω)`.
#[derive(Clone)]
pub struct InfoStructure {
    space: StateSpace,
    sets: Vec<Event>,
    cells: Vec<Cell>,
}

impl PartialEq for InfoStructure {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.sets == other.sets
    }
}

impl Eq for InfoStructure {}

impl InfoStructure {
    pub fn new(space: &StateSpace, sets: Vec<Event>) -> Result<Self> {
        if sets.len() != space.len() {
            return Err(Error::LengthMismatch { expected: space.len(), found: sets.len() });
        }
        if sets.iter().any(|s| s.universe() != space.len()) {
            return Err(Error::SpaceMismatch);
        }
        let mut cells: Vec<Cell> = Vec::new();
        for (state, set) in sets.iter().enumerate() {
            match cells.iter_mut().find(|c| &c.set == set) {
                Some(cell) => cell.holders.insert(state),
                None => cells.push(Cell {
                    set: set.clone(),
                    holders: Event::singleton(space.len(), state),
                }),
            }
        }
        Ok(InfoStructure { space: space.clone(), sets, cells })
    }

    /// Builds from labels: `sets[k]` lists the information set of state `k`.
    pub fn from_labels<S: AsRef<str>>(space: &StateSpace, sets: &[Vec<S>]) -> Result<Self> {
        let events = sets.iter().map(|s| space.event(s)).collect::<Result<Vec<_>>>()?;
        InfoStructure::new(space, events)
    }

    pub fn identity(space: &StateSpace) -> Self {
        info_from_relation(&Relation::identity(space))
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    /// The information set `I(ω)`.
    pub fn set(&self, state: usize) -> &Event {
        &self.sets[state]
    }

    pub fn sets(&self) -> &[Event] {
        &self.sets
    }

    /// Distinct information sets in order of first appearance.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// `I(E)`: the union of `I(ω)` over `ω ∈ E`.
    pub fn image(&self, event: &Event) -> Event {
        let mut out = self.space.empty_event();
        for cell in &self.cells {
            if !cell.holders.is_disjoint(event) {
                out.union_with(&cell.set);
            }
        }
        out
    }

    /// `I(Ω)`.
    pub fn full_image(&self) -> Event {
        self.image(&self.space.full_event())
    }
}

impl std::fmt::Debug for InfoStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut map = f.debug_map();
        for (i, set) in self.sets.iter().enumerate() {
            map.entry(&self.space.label(i), &self.space.event_labels(set));
        }
        map.finish()
    }
}

/// `I(ω) = { ω′ | ω ⤳ ω′ }`.
pub fn info_from_relation(rel: &Relation) -> InfoStructure {
    InfoStructure::new(&rel.space, rel.rows.clone()).expect("relation rows match their space")
}

/// `⤳ = { (ω, ω′) | ω′ ∈ I(ω) }`.
pub fn relation_from_info(info: &InfoStructure) -> Relation {
    Relation { space: info.space.clone(), rows: info.sets.clone() }
}

/// `I(E)`; see [`InfoStructure::image`].
pub fn image(info: &InfoStructure, event: &Event) -> Event {
    info.image(event)
}

/// States that lie in no information set.
pub fn blindspots(info: &InfoStructure) -> Event {
    info.full_image().complement()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn forward() -> InfoStructure {
        let space = StateSpace::numbered(2).unwrap();
        InfoStructure::from_labels(&space, &[vec!["w2"], vec!["w2"]]).unwrap()
    }

    #[test]
    fn info_from_relation_examples() {
        let space = StateSpace::numbered(2).unwrap();
        let rel = Relation::from_labeled_pairs(&space, &[("w1", "w2"), ("w2", "w2")]).unwrap();
        let info = info_from_relation(&rel);
        assert_eq!(info.set(0), &space.event(&["w2"]).unwrap());
        assert_eq!(info.set(1), &space.event(&["w2"]).unwrap());
        assert_eq!(info, forward());

        let ab = StateSpace::new(["a", "b"]).unwrap();
        let id = info_from_relation(&Relation::identity(&ab));
        assert_eq!(id.set(0), &ab.event(&["a"]).unwrap());
        assert_eq!(id.set(1), &ab.event(&["b"]).unwrap());
        let empty = info_from_relation(&Relation::empty(&ab));
        assert!(empty.sets().iter().all(Event::is_empty));
    }

    #[test]
    fn relation_from_info_examples() {
        let rel = relation_from_info(&forward());
        assert_eq!(rel.pairs().collect::<Vec<_>>(), [(0, 1), (1, 1)]);
        let space = StateSpace::numbered(3).unwrap();
        let empty = InfoStructure::new(&space, vec![space.empty_event(); 3]).unwrap();
        assert_eq!(relation_from_info(&empty), Relation::empty(&space));
    }

    #[test]
    fn image_examples() {
        let info = forward();
        let space = info.space().clone();
        assert_eq!(image(&info, &space.full_event()), space.event(&["w2"]).unwrap());
        assert!(image(&info, &space.empty_event()).is_empty());
        let id = InfoStructure::identity(&space);
        for mask in 0..4 {
            let e = Event::from_mask(2, mask);
            assert_eq!(image(&id, &e), e);
        }
    }

    #[test]
    fn blindspot_examples() {
        let info = forward();
        assert_eq!(blindspots(&info), info.space().event(&["w1"]).unwrap());
        let space = StateSpace::new(["s1", "s2", "s3"]).unwrap();
        assert!(blindspots(&InfoStructure::identity(&space)).is_empty());
        let info = InfoStructure::from_labels(
            &space,
            &[vec!["s2", "s3"], vec!["s2", "s3"], vec!["s2", "s3"]],
        )
        .unwrap();
        assert_eq!(blindspots(&info), space.event(&["s1"]).unwrap());
    }

    #[test]
    fn matrix_bits_order() {
        let space = StateSpace::numbered(2).unwrap();
        // bit 1 = (0, 1), bit 3 = (1, 1)
        let rel = Relation::from_matrix_bits(&space, 0b1010);
        assert_eq!(rel.pairs().collect::<Vec<_>>(), [(0, 1), (1, 1)]);
    }

    #[test]
    fn rejects_bad_input() {
        let space = StateSpace::numbered(2).unwrap();
        assert!(Relation::from_pairs(&space, [(0, 2)]).is_err());
        assert!(Relation::from_labeled_pairs(&space, &[("w1", "zz")]).is_err());
        assert!(InfoStructure::new(&space, vec![space.empty_event()]).is_err());
    }
}
