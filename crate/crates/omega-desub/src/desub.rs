//! Desubstitution of ω-automata and its orbit under iteration.
//!
//! The desubstituted automaton `σ⁻¹(A)` keeps the states and initial set
//! of `A` and draws an `a`-edge wherever `σ(a)` labels a computation of
//! `A`; its infinite language is exactly the σ-preimage of the language of
//! `A`. Iterating lives in the finite space of automata sharing `A`'s
//! states and initials, so the orbit is eventually periodic.

use std::collections::HashMap;

use crate::automaton::OmegaAutomaton;
use crate::error::{Error, Result};
use crate::substitution::Homomorphism;

/// The desubstitution `σ⁻¹(A)`: per-letter relation of `a` is the path
/// relation of `σ(a)` in `A`. An erasing letter yields the identity
/// relation (the empty word labels the stay-put computation).
pub fn desubstitute(a: &OmegaAutomaton, sigma: &Homomorphism) -> Result<OmegaAutomaton> {
    if a.alphabet() != sigma.alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: a.alphabet().to_string(),
            got: sigma.alphabet().to_string(),
        });
    }
    let relations = (0..a.alphabet().len())
        .map(|letter| a.path_relation(sigma.image(letter)))
        .collect::<Result<Vec<_>>>()?;
    Ok(OmegaAutomaton::from_relations(
        a.alphabet_arc(),
        a.state_names_arc(),
        a.initial().clone(),
        relations,
    ))
}

/// The orbit of an automaton under repeated desubstitution, up to and
/// including the first repeat.
#[derive(Clone, Debug)]
pub struct Orbit {
    /// `automata[k] = σ⁻ᵏ(A)`; the last entry (index `first_repeat`)
    /// equals `automata[cycle_start]` bit-exactly, all earlier entries are
    /// pairwise distinct.
    pub automata: Vec<OmegaAutomaton>,
    /// Index `n` where the cycle starts.
    pub cycle_start: usize,
    /// Index `m > n` of the first repeated automaton.
    pub first_repeat: usize,
}

impl Orbit {
    /// The canonical automaton `σ⁻ⁿ(A)` at the cycle start.
    pub fn at_cycle_start(&self) -> &OmegaAutomaton {
        &self.automata[self.cycle_start]
    }
}

/// Iterates desubstitution from `a`, fingerprinting each automaton, and
/// stops at the first bit-exact repeat. Termination is guaranteed: the
/// orbit lives in the finite set of automata over `a`'s states.
pub fn orbit(a: &OmegaAutomaton, sigma: &Homomorphism) -> Result<Orbit> {
    if a.alphabet() != sigma.alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: a.alphabet().to_string(),
            got: sigma.alphabet().to_string(),
        });
    }
    let mut automata = vec![a.clone()];
    let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
    seen.insert(a.transition_key(), 0);
    loop {
        let next = desubstitute(automata.last().expect("orbit is nonempty"), sigma)?;
        let key = next.transition_key();
        let index = automata.len();
        automata.push(next);
        if let Some(&start) = seen.get(&key) {
            return Ok(Orbit {
                automata,
                cycle_start: start,
                first_repeat: index,
            });
        }
        seen.insert(key, index);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn triangle() -> OmegaAutomaton {
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

    fn swap3() -> Homomorphism {
        let alpha = Alphabet::new(["0", "1", "2"]).unwrap();
        Homomorphism::from_strs(alpha, &[("0", "0"), ("1", "2"), ("2", "1")]).unwrap()
    }

    fn fib() -> Homomorphism {
        Homomorphism::from_strs(Alphabet::binary(), &[("0", "01"), ("1", "0")]).unwrap()
    }

    fn loop0() -> OmegaAutomaton {
        OmegaAutomaton::with_default_names(Alphabet::binary(), 1, &[0], &[(0, 0, 0)]).unwrap()
    }

    #[test]
    fn swap_relabels_the_triangle() {
        let t = triangle();
        let d = desubstitute(&t, &swap3()).unwrap();
        // 0-loops unchanged, former 1-cycle now labeled 2, no 1-edges.
        assert_eq!(d.relation(0), t.relation(0));
        assert!(d.relation(1).is_empty());
        assert_eq!(d.relation(2), t.relation(1));
        assert_eq!(desubstitute(&d, &swap3()).unwrap(), t);
    }

    #[test]
    fn identity_desubstitution_is_identity() {
        let t = triangle();
        let id = Homomorphism::identity(t.alphabet().clone());
        assert_eq!(desubstitute(&t, &id).unwrap(), t);
    }

    #[test]
    fn erasing_letter_gives_identity_relation() {
        let h = Homomorphism::from_strs(Alphabet::binary(), &[("0", "0"), ("1", "")]).unwrap();
        let d = desubstitute(&loop0(), &h).unwrap();
        assert!(d.relation(1).contains(0, 0));
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        assert!(desubstitute(&loop0(), &swap3()).is_err());
    }

    #[test]
    fn orbit_of_triangle_under_swap() {
        let o = orbit(&triangle(), &swap3()).unwrap();
        assert_eq!((o.cycle_start, o.first_repeat), (0, 2));
        assert_eq!(o.automata[0], o.automata[2]);
        assert_eq!(o.automata.len(), 3);
    }

    #[test]
    fn orbit_of_loop0_under_fib_dies() {
        let o = orbit(&loop0(), &fib()).unwrap();
        assert_eq!((o.cycle_start, o.first_repeat), (2, 3));
        // σ⁻¹ swaps the loop to letter 1, σ⁻² has no transitions at all.
        assert!(o.automata[1].relation(1).contains(0, 0));
        assert!(o.automata[1].relation(0).is_empty());
        assert!(o.automata[2].relation(0).is_empty());
        assert!(o.automata[2].relation(1).is_empty());
    }
}
