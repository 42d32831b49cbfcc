use std::borrow::Borrow;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

/// An event label. Equality and ordering are by name; events with the same
/// name synchronize in parallel composition no matter where they came from.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EventId(Arc<str>);

impl EventId {
    pub fn new(name: impl AsRef<str>) -> Self {
        EventId(Arc::from(name.as_ref()))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for EventId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for EventId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl From<&str> for EventId {
    fn from(s: &str) -> Self {
        EventId::new(s)
    }
}

impl From<String> for EventId {
    fn from(s: String) -> Self {
        EventId::new(s)
    }
}

impl Borrow<str> for EventId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// An ordered alphabet. Events are kept sorted by name so that event indices,
/// serialized output, and witness tie-breaking are reproducible across runs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    events: Vec<EventId>,
    index: HashMap<EventId, u32>,
}

impl Alphabet {
    pub fn new(events: impl IntoIterator<Item = EventId>) -> Self {
        let set: BTreeSet<EventId> = events.into_iter().collect();
        let events: Vec<EventId> = set.into_iter().collect();
        let index = events
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        Alphabet { events, index }
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn contains(&self, event: &EventId) -> bool {
        self.index.contains_key(event)
    }

    pub fn index_of(&self, event: &EventId) -> Option<u32> {
        self.index.get(event).copied()
    }

    pub fn event(&self, idx: u32) -> &EventId {
        &self.events[idx as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = &EventId> {
        self.events.iter()
    }

    pub fn as_set(&self) -> BTreeSet<EventId> {
        self.events.iter().cloned().collect()
    }

    /// Union of two alphabets, sorted.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        Alphabet::new(self.iter().chain(other.iter()).cloned())
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.events.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
