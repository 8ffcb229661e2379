//! ω-automata with the all-walks acceptance condition.
//!
//! An automaton is a tuple (alphabet, states, initial set, transitions);
//! an infinite word is accepted when it labels some infinite walk starting
//! at an initial state — there is no Büchi or parity condition. Transitions
//! are stored as one boolean relation per letter, so the relation of a word
//! is a product of per-letter relations.

use std::collections::HashSet;
use std::sync::Arc;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};
use crate::relation::{Relation, StateSet};

/// A finite ω-automaton. Immutable after construction; equality compares
/// alphabet, state count, initial set and the exact transition relations.
/// State names are display metadata and do not take part in equality.
#[derive(Clone)]
pub struct OmegaAutomaton {
    alphabet: Arc<Alphabet>,
    state_names: Arc<Vec<String>>,
    initial: StateSet,
    relations: Vec<Relation>,
}

impl OmegaAutomaton {
    /// Builds an automaton from explicit transitions `(src, letter, dst)`.
    pub fn new(
        alphabet: Alphabet,
        state_names: Vec<String>,
        initial: &[usize],
        edges: &[(usize, Letter, usize)],
    ) -> Result<OmegaAutomaton> {
        let n = state_names.len();
        {
            let mut seen = HashSet::new();
            for name in &state_names {
                if !seen.insert(name) {
                    return Err(Error::Precondition(format!("duplicate state `{name}`")));
                }
            }
        }
        let mut init = StateSet::empty(n);
        for &q in initial {
            if q >= n {
                return Err(Error::Precondition(format!(
                    "initial state {q} out of range"
                )));
            }
            init.insert(q);
        }
        let mut relations = vec![Relation::empty(n); alphabet.len()];
        for &(src, letter, dst) in edges {
            if src >= n || dst >= n {
                return Err(Error::Precondition(format!(
                    "transition ({src}, {letter}, {dst}) out of range"
                )));
            }
            if letter >= alphabet.len() {
                return Err(Error::UnknownSymbol {
                    symbol: format!("#{letter}"),
                });
            }
            relations[letter].set(src, dst);
        }
        Ok(OmegaAutomaton {
            alphabet: Arc::new(alphabet),
            state_names: Arc::new(state_names),
            initial: init,
            relations,
        })
    }

    /// Like [`OmegaAutomaton::new`] with autogenerated state names `q0..`.
    pub fn with_default_names(
        alphabet: Alphabet,
        state_count: usize,
        initial: &[usize],
        edges: &[(usize, Letter, usize)],
    ) -> Result<OmegaAutomaton> {
        let names = (0..state_count).map(|i| format!("q{i}")).collect();
        OmegaAutomaton::new(alphabet, names, initial, edges)
    }

    pub(crate) fn from_relations(
        alphabet: Arc<Alphabet>,
        state_names: Arc<Vec<String>>,
        initial: StateSet,
        relations: Vec<Relation>,
    ) -> OmegaAutomaton {
        OmegaAutomaton {
            alphabet,
            state_names,
            initial,
            relations,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub(crate) fn alphabet_arc(&self) -> Arc<Alphabet> {
        Arc::clone(&self.alphabet)
    }

    pub(crate) fn state_names_arc(&self) -> Arc<Vec<String>> {
        Arc::clone(&self.state_names)
    }

    pub fn state_count(&self) -> usize {
        self.state_names.len()
    }

    pub fn state_name(&self, q: usize) -> &str {
        &self.state_names[q]
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    pub fn initial(&self) -> &StateSet {
        &self.initial
    }

    pub fn relation(&self, letter: Letter) -> &Relation {
        &self.relations[letter]
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Deterministic list of transitions `(src, letter, dst)`.
    pub fn transitions(&self) -> Vec<(usize, Letter, usize)> {
        let mut out = Vec::new();
        for src in 0..self.state_count() {
            for (a, rel) in self.relations.iter().enumerate() {
                for dst in 0..self.state_count() {
                    if rel.contains(src, dst) {
                        out.push((src, a, dst));
                    }
                }
            }
        }
        out
    }

    /// Union of the per-letter relations: the edge relation of the
    /// underlying directed graph.
    pub fn union_relation(&self) -> Relation {
        let n = self.state_count();
        let mut out = Relation::empty(n);
        for rel in &self.relations {
            for (q, r) in rel.edges() {
                out.set(q, r);
            }
        }
        out
    }

    /// Relation of a finite word: `result(q, q')` iff some computation
    /// labeled `w` goes from `q` to `q'`. The empty word yields the
    /// identity relation.
    pub fn path_relation(&self, word: &[Letter]) -> Result<Relation> {
        self.alphabet.check_word(word)?;
        let mut rel = Relation::identity(self.state_count());
        for &a in word {
            rel = rel.compose(&self.relations[a]);
        }
        Ok(rel)
    }

    /// Subset reached from `from` by reading `word`.
    pub fn subset_after(&self, from: &StateSet, word: &[Letter]) -> Result<StateSet> {
        self.alphabet.check_word(word)?;
        let mut cur = from.clone();
        for &a in word {
            cur = self.relations[a].image(&cur);
            if cur.is_empty() {
                break;
            }
        }
        Ok(cur)
    }

    /// States from which some infinite walk exists: the greatest set in
    /// which every state keeps a successor.
    pub fn live_states(&self) -> StateSet {
        self.union_relation().live_core()
    }

    /// Is the infinite-word language empty? Equivalent to: no initial
    /// state is live.
    pub fn is_empty_infinite(&self) -> bool {
        !self.initial.intersects(&self.live_states())
    }

    /// Does some computation labeled `word` start at an initial state?
    pub fn accepts_finite_word(&self, word: &[Letter]) -> Result<bool> {
        Ok(!self.subset_after(&self.initial, word)?.is_empty())
    }

    /// Is `word` a prefix of some accepted infinite word? True iff a
    /// computation labeled `word` leads from an initial state to a live
    /// state.
    pub fn accepts_prefix(&self, word: &[Letter]) -> Result<bool> {
        let live = self.live_states();
        Ok(self.subset_after(&self.initial, word)?.intersects(&live))
    }

    /// Exact membership of the ultimately periodic word `stem·cycle^ω` in
    /// the infinite-word language.
    pub fn accepts_lasso(&self, stem: &[Letter], cycle: &[Letter]) -> Result<bool> {
        if cycle.is_empty() {
            return Err(Error::Precondition("lasso cycle must be nonempty".into()));
        }
        let reached = self.subset_after(&self.initial, stem)?;
        if reached.is_empty() {
            return Ok(false);
        }
        // A state accepts cycle^ω iff it starts an infinite chain of
        // cycle-relation steps.
        let cycle_rel = self.path_relation(cycle)?;
        Ok(reached.intersects(&cycle_rel.live_core()))
    }

    /// Is every infinite word over the alphabet accepted?
    ///
    /// Restricting to live states makes every finite computation extend to
    /// an infinite one, so totality reduces to finite-word universality of
    /// the pruned automaton, decided on the powerset: the language misses a
    /// word iff the empty subset is reachable from the pruned initial set.
    pub fn is_total(&self) -> bool {
        let live = self.live_states();
        let start = self.initial.intersect(&live);
        if start.is_empty() {
            return false;
        }
        let mut visited: HashSet<StateSet> = HashSet::new();
        let mut queue = vec![start.clone()];
        visited.insert(start);
        while let Some(subset) = queue.pop() {
            for rel in &self.relations {
                let next = rel.image(&subset).intersect(&live);
                if next.is_empty() {
                    return false;
                }
                if visited.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        true
    }

    /// Same automaton with every state initial. The resulting language is
    /// a sofic shift containing the original language.
    pub fn forget(&self) -> OmegaAutomaton {
        OmegaAutomaton {
            alphabet: Arc::clone(&self.alphabet),
            state_names: Arc::clone(&self.state_names),
            initial: StateSet::full(self.state_count()),
            relations: self.relations.clone(),
        }
    }

    /// Same automaton with a replaced initial set.
    pub fn with_initial(&self, initial: StateSet) -> OmegaAutomaton {
        debug_assert_eq!(initial.universe(), self.state_count());
        OmegaAutomaton {
            alphabet: Arc::clone(&self.alphabet),
            state_names: Arc::clone(&self.state_names),
            initial,
            relations: self.relations.clone(),
        }
    }

    /// Keeps only the transitions labeled by `kept` letters (alphabet and
    /// state space unchanged).
    pub fn restrict_letters(&self, kept: &[Letter]) -> OmegaAutomaton {
        let n = self.state_count();
        let relations = (0..self.alphabet.len())
            .map(|a| {
                if kept.contains(&a) {
                    self.relations[a].clone()
                } else {
                    Relation::empty(n)
                }
            })
            .collect();
        OmegaAutomaton {
            alphabet: Arc::clone(&self.alphabet),
            state_names: Arc::clone(&self.state_names),
            initial: self.initial.clone(),
            relations,
        }
    }

    /// Projects the automaton onto a sub-alphabet: the new alphabet is the
    /// `kept` letters in order, and only their transitions survive.
    pub fn project_alphabet(&self, kept: &[Letter]) -> Result<OmegaAutomaton> {
        let symbols: Vec<&str> = kept
            .iter()
            .map(|&a| {
                self.alphabet
                    .symbols()
                    .get(a)
                    .map(|s| s.as_str())
                    .ok_or(Error::UnknownSymbol {
                        symbol: format!("#{a}"),
                    })
            })
            .collect::<Result<_>>()?;
        let alphabet = Alphabet::new(symbols)?;
        let relations = kept.iter().map(|&a| self.relations[a].clone()).collect();
        Ok(OmegaAutomaton {
            alphabet: Arc::new(alphabet),
            state_names: Arc::clone(&self.state_names),
            initial: self.initial.clone(),
            relations,
        })
    }

    /// All transition bits, for hashing and deduplication. Two automata in
    /// the same desubstitution space are equal iff these words are equal.
    pub(crate) fn transition_key(&self) -> Vec<u64> {
        let mut key = Vec::new();
        for rel in &self.relations {
            key.extend_from_slice(rel.bit_words());
        }
        key
    }

    /// A word of the infinite language in lasso form, when nonempty.
    /// Deterministic: smallest live initial state, then smallest
    /// `(letter, target)` step into live states until a state repeats.
    pub fn some_accepted_lasso(&self) -> Option<(Word, Word)> {
        let live = self.live_states();
        let start = self.initial.intersect(&live).min()?;
        let mut path_states = vec![start];
        let mut labels: Word = Vec::new();
        loop {
            let q = *path_states.last().expect("path is nonempty");
            let (letter, target) = (0..self.alphabet.len())
                .flat_map(|a| {
                    let rel = &self.relations[a];
                    live.iter()
                        .filter(move |&r| rel.contains(q, r))
                        .map(move |r| (a, r))
                })
                .min_by_key(|&(a, r)| (a, r))
                .expect("live state has a live successor");
            labels.push(letter);
            if let Some(pos) = path_states.iter().position(|&p| p == target) {
                let stem = labels[..pos].to_vec();
                let cycle = labels[pos..].to_vec();
                return Some((stem, cycle));
            }
            path_states.push(target);
        }
    }
}

impl PartialEq for OmegaAutomaton {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.state_count() == other.state_count()
            && self.initial == other.initial
            && self.relations == other.relations
    }
}

impl Eq for OmegaAutomaton {}

impl std::hash::Hash for OmegaAutomaton {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.alphabet.hash(state);
        self.initial.hash(state);
        self.relations.hash(state);
    }
}

impl std::fmt::Debug for OmegaAutomaton {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("OmegaAutomaton")
            .field("alphabet", &self.alphabet.symbols())
            .field("states", &self.state_count())
            .field("initial", &self.initial)
            .field("transitions", &self.transitions())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> OmegaAutomaton {
        // 0-loop on each state, 1-edges a -> b -> c -> a, initial {a}.
        let alpha = Alphabet::new(["0", "1", "2"]).unwrap();
        OmegaAutomaton::new(
            alpha,
            vec!["a".into(), "b".into(), "c".into()],
            &[0],
            &[
                (0, 0, 0),
                (1, 0, 1),
                (2, 0, 2),
                (0, 1, 1),
                (1, 1, 2),
                (2, 1, 0),
            ],
        )
        .unwrap()
    }

    fn full1() -> OmegaAutomaton {
        OmegaAutomaton::with_default_names(Alphabet::binary(), 1, &[0], &[(0, 0, 0), (0, 1, 0)])
            .unwrap()
    }

    fn loop0() -> OmegaAutomaton {
        OmegaAutomaton::with_default_names(Alphabet::binary(), 1, &[0], &[(0, 0, 0)]).unwrap()
    }

    #[test]
    fn path_relation_single_letter() {
        let t = triangle();
        let rel = t.path_relation(&[1]).unwrap();
        assert_eq!(rel.edges(), vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn path_relation_empty_word_is_identity() {
        let t = triangle();
        assert_eq!(t.path_relation(&[]).unwrap(), Relation::identity(3));
    }

    #[test]
    fn path_relation_composes() {
        let t = triangle();
        // 0-loop then 1-edge: same as the 1-relation.
        let rel = t.path_relation(&[0, 1]).unwrap();
        assert_eq!(rel.edges(), vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn path_relation_rejects_unknown_letter() {
        let t = triangle();
        assert!(t.path_relation(&[7]).is_err());
    }

    #[test]
    fn live_states_of_triangle_is_everything() {
        let t = triangle();
        assert_eq!(t.live_states().len(), 3);
    }

    #[test]
    fn no_transitions_means_dead_and_empty() {
        let a = OmegaAutomaton::with_default_names(Alphabet::binary(), 2, &[0], &[]).unwrap();
        assert!(a.live_states().is_empty());
        assert!(a.is_empty_infinite());
    }

    #[test]
    fn chain_without_loops_is_dead() {
        let a =
            OmegaAutomaton::with_default_names(Alphabet::binary(), 2, &[0], &[(0, 0, 1)]).unwrap();
        assert!(a.live_states().is_empty());
    }

    #[test]
    fn emptiness_examples() {
        assert!(!triangle().is_empty_infinite());
        assert!(!full1().is_empty_infinite());
    }

    #[test]
    fn accepts_finite_words() {
        let t = triangle();
        assert!(t.accepts_finite_word(&[0, 0, 1]).unwrap());
        assert!(t.accepts_finite_word(&[]).unwrap());
        assert!(!loop0().accepts_finite_word(&[1]).unwrap());
        let no_initial =
            OmegaAutomaton::with_default_names(Alphabet::binary(), 1, &[], &[(0, 0, 0)]).unwrap();
        assert!(!no_initial.accepts_finite_word(&[]).unwrap());
    }

    #[test]
    fn totality_examples() {
        assert!(full1().is_total());
        assert!(!loop0().is_total());
        assert!(!triangle().is_total());
    }

    #[test]
    fn forget_makes_all_initial_and_is_idempotent() {
        let t = triangle();
        let f = t.forget();
        assert_eq!(f.initial().len(), 3);
        assert_eq!(f.forget(), f);
        assert_eq!(f.relations(), t.relations());
    }

    #[test]
    fn lasso_membership() {
        let t = triangle();
        assert!(t.accepts_lasso(&[], &[0]).unwrap()); // 0^ω
        assert!(t.accepts_lasso(&[0, 0], &[1]).unwrap()); // 001^ω
        assert!(!loop0().accepts_lasso(&[], &[1]).unwrap());
        assert!(loop0().accepts_lasso(&[], &[0]).unwrap());
        // (01)^ω automaton accepts exactly that lasso
        let p = OmegaAutomaton::with_default_names(
            Alphabet::binary(),
            2,
            &[0],
            &[(0, 0, 1), (1, 1, 0)],
        )
        .unwrap();
        assert!(p.accepts_lasso(&[], &[0, 1]).unwrap());
        assert!(!p.accepts_lasso(&[], &[0]).unwrap());
        assert!(!p.accepts_lasso(&[1], &[0, 1]).unwrap());
    }

    #[test]
    fn some_accepted_lasso_is_accepted() {
        let t = triangle();
        let (stem, cycle) = t.some_accepted_lasso().unwrap();
        assert!(t.accepts_lasso(&stem, &cycle).unwrap());
        let dead = OmegaAutomaton::with_default_names(Alphabet::binary(), 1, &[0], &[]).unwrap();
        assert!(dead.some_accepted_lasso().is_none());
    }

    #[test]
    fn equality_ignores_names() {
        let a =
            OmegaAutomaton::new(Alphabet::binary(), vec!["x".into()], &[0], &[(0, 0, 0)]).unwrap();
        let b =
            OmegaAutomaton::new(Alphabet::binary(), vec!["y".into()], &[0], &[(0, 0, 0)]).unwrap();
        assert_eq!(a, b);
        let c = b.with_initial(StateSet::empty(1));
        assert_ne!(a, c);
    }
}
