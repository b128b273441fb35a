//! State spaces and events.
//!
//! States are named by text labels externally and by dense indices `0..n`
//! internally. An [`Event`] is a fixed-width membership mask over those
//! indices, so set algebra is a handful of word operations.

use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A subset of a state space of fixed size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Event {
    len: usize,
    words: SmallVec<[u64; 1]>,
}

impl Event {
    pub fn empty(len: usize) -> Self {
        Event { len, words: SmallVec::from_elem(0, word_count(len)) }
    }

    pub fn full(len: usize) -> Self {
        let mut e = Event::empty(len);
        for w in e.words.iter_mut() {
            *w = u64::MAX;
        }
        e.trim();
        e
    }

    pub fn singleton(len: usize, index: usize) -> Self {
        let mut e = Event::empty(len);
        e.insert(index);
        e
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut e = Event::empty(len);
        for i in indices {
            e.insert(i);
        }
        e
    }

    /// Builds an event from the low `len` bits of `mask` (`len <= 64`).
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "mask events need at most 64 states");
        let mut e = Event::empty(len);
        if len > 0 {
            e.words[0] = mask;
            e.trim();
        }
        e
    }

    /// The event as a bit mask, when the space has at most 64 states.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Size of the underlying state space.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.len && self.words[index / WORD] >> (index % WORD) & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.len, "state index {index} out of range {}", self.len);
        self.words[index / WORD] |= 1 << (index % WORD);
    }

    pub fn remove(&mut self, index: usize) {
        if index < self.len {
            self.words[index / WORD] &= !(1 << (index % WORD));
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Event::full(self.len)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Event) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Event) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &Event) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Event) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn complement(&self) -> Event {
        let mut e = self.clone();
        for w in e.words.iter_mut() {
            *w = !*w;
        }
        e.trim();
        e
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + bit)
            })
        })
    }
}

impl fmt::Debug for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for &Event {
    type Output = Event;
    fn bitor(self, rhs: &Event) -> Event {
        let mut e = self.clone();
        e.union_with(rhs);
        e
    }
}

impl BitAnd for &Event {
    type Output = Event;
    fn bitand(self, rhs: &Event) -> Event {
        let mut e = self.clone();
        e.intersect_with(rhs);
        e
    }
}

impl Sub for &Event {
    type Output = Event;
    fn sub(self, rhs: &Event) -> Event {
        let mut e = self.clone();
        for (a, b) in e.words.iter_mut().zip(&rhs.words) {
            *a &= !b;
        }
        e
    }
}

struct SpaceInner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// A finite, ordered set of labeled states. Cheap to clone.
#[derive(Clone)]
pub struct StateSpace(Arc<SpaceInner>);

impl StateSpace {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptySpace);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(StateSpace(Arc::new(SpaceInner { labels, index })))
    }

    /// States labeled `w1..wn`.
    pub fn numbered(n: usize) -> Result<Self> {
        StateSpace::new((1..=n).map(|i| format!("w{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.0.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.0.index.get(label).copied().ok_or_else(|| Error::UnknownState(label.to_string()))
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::StateOutOfRange { index, size: self.len() })
        }
    }

    pub fn empty_event(&self) -> Event {
        Event::empty(self.len())
    }

    pub fn full_event(&self) -> Event {
        Event::full(self.len())
    }

    /// Event from state labels.
    pub fn event<S: AsRef<str>>(&self, labels: &[S]) -> Result<Event> {
        let mut e = self.empty_event();
        for l in labels {
            e.insert(self.index_of(l.as_ref())?);
        }
        Ok(e)
    }

    pub fn event_labels(&self, event: &Event) -> Vec<&str> {
        event.iter().map(|i| self.label(i)).collect()
    }

    /// `{a, b}` rendering used in reports.
    pub fn render(&self, event: &Event) -> String {
        format!("{{{}}}", self.event_labels(event).join(", "))
    }

    pub fn same(&self, other: &StateSpace) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl PartialEq for StateSpace {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for StateSpace {}

impl std::hash::Hash for StateSpace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.labels().hash(state);
    }
}

impl fmt::Debug for StateSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("StateSpace").field(&self.0.labels).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn space_validation() {
        assert_eq!(StateSpace::new(Vec::<String>::new()).unwrap_err(), Error::EmptySpace);
        assert_eq!(StateSpace::new(["a", "a"]).unwrap_err(), Error::DuplicateLabel("a".into()));
        assert_eq!(StateSpace::new(["a", ""]).unwrap_err(), Error::EmptyLabel);
        let s = StateSpace::numbered(3).unwrap();
        assert_eq!(s.labels(), ["w1", "w2", "w3"]);
        assert_eq!(s.index_of("w2").unwrap(), 1);
        assert!(s.index_of("w9").is_err());
    }

    #[test]
    fn event_algebra_wide() {
        let n = 130;
        let a = Event::from_indices(n, [0, 64, 129]);
        let b = Event::from_indices(n, [64, 100]);
        assert_eq!((&a | &b).iter().collect::<Vec<_>>(), [0, 64, 100, 129]);
        assert_eq!((&a & &b).iter().collect::<Vec<_>>(), [64]);
        assert_eq!((&a - &b).iter().collect::<Vec<_>>(), [0, 129]);
        assert_eq!(a.complement().count(), n - 3);
        assert!(Event::full(n).is_full());
        assert_eq!(Event::full(n).count(), n);
        assert!(Event::from_indices(n, [64]).is_subset(&a));
        assert_eq!(a.as_mask(), None);
    }

    #[test]
    fn order_independent_equality() {
        assert_eq!(Event::from_indices(5, [3, 1, 3]), Event::from_indices(5, [1, 3]));
        assert_eq!(Event::from_mask(3, 0b1111), Event::full(3));
    }
}
