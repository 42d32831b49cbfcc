use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Result, SctError};
use crate::event::{Alphabet, EventId};

/// Structured state identifier. Composite operations build tuple or set
/// identifiers from their factors, so the provenance of every product or
/// observer state stays auditable without string surgery.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StateName {
    Atom(Arc<str>),
    /// Pair produced by binary composition (left factor, right factor).
    Pair(Arc<StateName>, Arc<StateName>),
    /// Canonically sorted subset, as produced by observer/determinization.
    Set(Arc<[Arc<StateName>]>),
}

impl StateName {
    pub fn atom(name: impl AsRef<str>) -> Self {
        StateName::Atom(Arc::from(name.as_ref()))
    }

    pub fn pair(left: StateName, right: StateName) -> Self {
        StateName::Pair(Arc::new(left), Arc::new(right))
    }

    pub fn set(mut members: Vec<Arc<StateName>>) -> Self {
        members.sort();
        members.dedup();
        StateName::Set(members.into())
    }
}

impl fmt::Display for StateName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateName::Atom(s) => f.write_str(s),
            StateName::Pair(a, b) => write!(f, "({a},{b})"),
            StateName::Set(m) => {
                write!(f, "{{")?;
                for (i, s) in m.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

impl fmt::Debug for StateName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<&str> for StateName {
    fn from(s: &str) -> Self {
        StateName::atom(s)
    }
}

/// A finite-state transition system with marked states. Possibly
/// nondeterministic; determinism is a checkable predicate, not a structural
/// requirement. The empty automaton (no states, no initial state) is a valid
/// value and all operations are total on it.
#[derive(Clone, PartialEq, Eq)]
pub struct Automaton {
    name: String,
    alphabet: Alphabet,
    state_names: Vec<StateName>,
    marked: Vec<bool>,
    /// Outgoing transitions per state, sorted by (event index, target).
    transitions: Vec<Vec<(u32, u32)>>,
    initial: Option<u32>,
}

impl Automaton {
    pub fn builder(name: impl Into<String>) -> Builder {
        Builder::new(name)
    }

    /// The empty automaton over the given alphabet: zero states, no initial
    /// designation, empty generated and marked languages.
    pub fn empty(name: impl Into<String>, alphabet: Alphabet) -> Self {
        Automaton {
            name: name.into(),
            alphabet,
            state_names: Vec::new(),
            marked: Vec::new(),
            transitions: Vec::new(),
            initial: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_names.len()
    }

    pub fn marked_count(&self) -> usize {
        self.marked.iter().filter(|&&m| m).count()
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.state_names.is_empty()
    }

    pub fn initial(&self) -> Option<u32> {
        self.initial
    }

    pub fn state_name(&self, idx: u32) -> &StateName {
        &self.state_names[idx as usize]
    }

    pub fn state_names(&self) -> &[StateName] {
        &self.state_names
    }

    pub fn is_marked(&self, idx: u32) -> bool {
        self.marked[idx as usize]
    }

    pub fn marked_states(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.state_count() as u32).filter(|&s| self.marked[s as usize])
    }

    pub fn transitions_from(&self, idx: u32) -> &[(u32, u32)] {
        &self.transitions[idx as usize]
    }

    /// All transitions as (source, event index, target) triples.
    pub fn transitions(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        self.transitions
            .iter()
            .enumerate()
            .flat_map(|(s, outs)| outs.iter().map(move |&(e, t)| (s as u32, e, t)))
    }

    /// Successors of `state` on `event`, in sorted order.
    pub fn successors(&self, state: u32, event: u32) -> impl Iterator<Item = u32> + '_ {
        self.transitions[state as usize]
            .iter()
            .filter(move |&&(e, _)| e == event)
            .map(|&(_, t)| t)
    }

    pub fn has_transition(&self, state: u32, event: u32) -> bool {
        self.transitions[state as usize static_assert_dummy()]
            .iter()
            .any(|&(e, _)| e == event)
    }

    /// Deterministic iff no state has two transitions on the same event to
    /// different targets.
    pub fn is_deterministic(&self) -> bool {
        self.transitions.iter().all(|outs| {
            outs.windows(2)
                .all(|w| w[0].0 != w[1].0 || w[0].1 == w[1].1)
        })
    }

    pub fn find_state(&self, name: &StateName) -> Option<u32> {
        self.state_names
            .iter()
            .position(|n| n == name)
            .map(|i| i as u32)
    }

    pub(crate) fn parts(&self) -> AutomatonParts<'_> {
        AutomatonParts {
            alphabet: &self.alphabet,
            state_names: &self.state_names,
            marked: &self.marked,
            transitions: &self.transitions,
            initial: self.initial,
        }
    }

    /// Internal constructor used by operations; assumes indices are in range
    /// and transition lists will be normalized here.
    pub(crate) fn from_raw(
        name: String,
        alphabet: Alphabet,
        state_names: Vec<StateName>,
        marked: Vec<bool>,
        mut transitions: Vec<Vec<(u32, u32)>>,
        initial: Option<u32>,
    ) -> Self {
        for outs in &mut transitions {
            outs.sort_unstable();
            outs.dedup();
        }
        debug_assert_eq!(state_names.len(), marked.len());
        debug_assert_eq!(state_names.len(), transitions.len());
        Automaton {
            name,
            alphabet,
            state_names,
            marked,
            transitions,
            initial,
        }
    }
}

pub(crate) struct AutomatonParts<'a> {
    pub alphabet: &'a Alphabet,
    pub state_names: &'a [StateName],
    pub marked: &'a [bool],
    pub transitions: &'a [Vec<(u32, u32)>],
    pub initial: Option<u32>,
}

impl fmt::Debug for Automaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Automaton({}: {} states, {} marked, {} transitions)",
            self.name,
            self.state_count(),
            self.marked_count(),
            self.transition_count()
        )
    }
}

/// Incremental construction with invariant checking on `build`.
pub struct Builder {
    name: String,
    events: Vec<EventId>,
    states: Vec<(StateName, bool)>,
    index: HashMap<StateName, u32>,
    transitions: Vec<(StateName, EventId, StateName)>,
    initial: Option<StateName>,
}

impl Builder {
    pub fn new(name: impl Into<String>) -> Self {
        Builder {
            name: name.into(),
            events: Vec::new(),
            states: Vec::new(),
            index: HashMap::new(),
            transitions: Vec::new(),
            initial: None,
        }
    }

    /// Declare alphabet members. Events referenced by transitions are added
    /// automatically; explicit declaration matters for events that label no
    /// transition but must still synchronize in composition.
    pub fn events<I, E>(mut self, events: I) -> Self
    where
        I: IntoIterator<Item = E>,
        E: Into<EventId>,
    {
        self.events.extend(events.into_iter().map(Into::into));
        self
    }

    pub fn state(mut self, name: impl Into<StateName>, marked: bool) -> Self {
        let name = name.into();
        if !self.index.contains_key(&name) {
            self.index.insert(name.clone(), self.states.len() as u32);
            self.states.push((name, marked));
        }
        self
    }

    pub fn states<I, S>(self, names: I, marked: bool) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<StateName>,
    {
        names.into_iter().fold(self, |b, n| b.state(n, marked))
    }

    pub fn initial(mut self, name: impl Into<StateName>) -> Self {
        self.initial = Some(name.into());
        self
    }

    /// Add one transition. Source/target states must be declared beforehand
    /// (keeps marking explicit for every state in the literal tables).
    pub fn t(
        mut self,
        from: impl Into<StateName>,
        event: impl Into<EventId>,
        to: impl Into<StateName>,
    ) -> Self {
        self.transitions
            .push((from.into(), event.into(), to.into()));
        self
    }

    pub fn build(self) -> Result<Automaton> {
        let mut events = self.events;
        events.extend(self.transitions.iter().map(|(_, e, _)| e.clone()));
        let alphabet = Alphabet::new(events);

        let state_names: Vec<StateName> = self.states.iter().map(|(n, _)| n.clone()).collect();
        let marked: Vec<bool> = self.states.iter().map(|&(_, m)| m).collect();

        let mut transitions: Vec<Vec<(u32, u32)>> = vec![Vec::new(); state_names.len()];
        for (from, event, to) in &self.transitions {
            let &src = self
                .index
                .get(from)
                .ok_or_else(|| SctError::UnknownState(from.to_string()))?;
            let &dst = self
                .index
                .get(to)
                .ok_or_else(|| SctError::UnknownState(to.to_string()))?;
            let ev = alphabet.index_of(event).expect("event added above");
            transitions[src as usize].push((ev, dst));
        }

        let initial = match self.initial {
            Some(name) => Some(
                *self
                    .index
                    .get(&name)
                    .ok_or_else(|| SctError::UnknownState(name.to_string()))?,
            ),
            None if state_names.is_empty() => None,
            None => return Err(SctError::MissingInitial(self.name)),
        };

        Ok(Automaton::from_raw(
            self.name,
            alphabet,
            state_names,
            marked,
            transitions,
            initial,
        ))
    }
}

/// Convenience for tests and literal tables: look up states by display name.
impl Automaton {
    pub fn state_by_display(&self, display: &str) -> Option<u32> {
        self.state_names
            .iter()
            .position(|n| n.to_string() == display)
            .map(|i| i as u32)
    }

    pub fn event(&self, name: &str) -> Option<EventId> {
        let ev = EventId::new(name);
        if self.alphabet.contains(&ev) {
            Some(ev)
        } else {
            None
        }
    }

    /// Marked-state names as a sorted set of display strings.
    pub fn marked_state_displays(&self) -> BTreeSet<String> {
        self.marked_states()
            .map(|s| self.state_name(s).to_string())
            .collect()
    }
}
