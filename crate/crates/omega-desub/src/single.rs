//! Decision procedures driven by a single generator substitution: fixed
//! point of some power, purely substitutive word, exact fixed point, and
//! morphic word. Every positive answer carries a witness.
//!
//! All of them work on the orbit of the input automaton under repeated
//! desubstitution: once the orbit cycles at index `n`, the automaton
//! `σ⁻ⁿ(A)` answers questions about arbitrarily deep σ-preimages.

use std::collections::VecDeque;

use crate::alphabet::{Letter, Word};
use crate::automaton::OmegaAutomaton;
use crate::desub::orbit;
use crate::error::{Error, Result};
use crate::relation::StateSet;
use crate::substitution::{
    generate_prefix, nonerasing_reduction, Homomorphism, NamedSubstitution, Reduction,
};

/// Default prefix length used when selecting and checking word witnesses.
pub const DEFAULT_WITNESS_LEN: usize = 64;

/// Witness attached to a positive single-substitution decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingleWitness {
    /// A fixed point of some power σᵏ exists; the procedure proves
    /// existence without computing an exponent.
    Power,
    /// The purely substitutive word generated from `letter` is accepted;
    /// `orbit_index` is the orbit position where the check succeeded.
    Generating { letter: Letter, orbit_index: usize },
    /// A fixed point that is the ultimately periodic word
    /// `stem·cycle^ω` over the fixed letters.
    FixedLasso { stem: Word, cycle: Word },
    /// A fixed point of the form `prefix · (word generated from letter)`,
    /// with `prefix` a word over the fixed letters.
    FixedPrefixed {
        prefix: Word,
        letter: Letter,
        orbit_index: usize,
    },
    /// A morphic word: the image under the outer substitution of the
    /// purely substitutive word generated from `letter`.
    Morphic {
        letter: Letter,
        orbit_index: usize,
        outer: String,
    },
}

/// Answer of a single-substitution decision.
#[derive(Clone, Debug)]
pub struct SingleDecision {
    pub answer: bool,
    pub witness: Option<SingleWitness>,
    /// `(cycle_start, first_repeat)` of the orbit, when one was computed.
    pub orbit_window: Option<(usize, usize)>,
}

impl SingleDecision {
    fn no(orbit_window: Option<(usize, usize)>) -> SingleDecision {
        SingleDecision {
            answer: false,
            witness: None,
            orbit_window,
        }
    }
}

fn require_same_alphabet(a: &OmegaAutomaton, sigma: &Homomorphism) -> Result<()> {
    if a.alphabet() != sigma.alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: a.alphabet().to_string(),
            got: sigma.alphabet().to_string(),
        });
    }
    Ok(())
}

fn require_nonerasing(sigma: &Homomorphism, what: &str) -> Result<()> {
    if !sigma.is_nonerasing() {
        return Err(Error::Precondition(format!(
            "{what} must be nonerasing; apply the nonerasing reduction first"
        )));
    }
    Ok(())
}

/// Does `a` accept a fixed point of σᵏ for some k ≥ 1? True iff the
/// automaton at the orbit's cycle start has a nonempty infinite language.
pub fn decide_fixed_point_power(
    a: &OmegaAutomaton,
    sigma: &Homomorphism,
) -> Result<SingleDecision> {
    require_same_alphabet(a, sigma)?;
    require_nonerasing(sigma, "the substitution")?;
    let orb = orbit(a, sigma)?;
    let window = Some((orb.cycle_start, orb.first_repeat));
    if orb.at_cycle_start().is_empty_infinite() {
        Ok(SingleDecision::no(window))
    } else {
        Ok(SingleDecision {
            answer: true,
            witness: Some(SingleWitness::Power),
            orbit_window: window,
        })
    }
}

/// Does `a` accept a purely substitutive word generated by `sigma`?
///
/// Erasing homomorphisms are first routed through the nonerasing
/// reduction; inputs the reduction refuses are rejected. The reported
/// witness letter always refers to `a`'s alphabet.
pub fn decide_pure_substitutive(
    a: &OmegaAutomaton,
    sigma: &Homomorphism,
) -> Result<SingleDecision> {
    require_same_alphabet(a, sigma)?;
    if sigma.is_nonerasing() {
        return pure_substitutive_nonerasing(a, sigma);
    }
    match nonerasing_reduction(sigma) {
        Reduction::Unsupported { reason } => Err(Error::Unsupported(reason)),
        Reduction::Nonerasing { substitution, kept } => {
            // Generated words avoid the deleted letters, so acceptance by
            // `a` is acceptance by its projection onto the survivors.
            let projected = a.project_alphabet(&kept)?;
            let mut decision = pure_substitutive_nonerasing(&projected, &substitution)?;
            if let Some(SingleWitness::Generating { letter, .. }) = &mut decision.witness {
                *letter = kept[*letter];
            }
            Ok(decision)
        }
    }
}

fn pure_substitutive_nonerasing(
    a: &OmegaAutomaton,
    sigma: &Homomorphism,
) -> Result<SingleDecision> {
    let orb = orbit(a, sigma)?;
    let window = Some((orb.cycle_start, orb.first_repeat));
    let deep = orb.at_cycle_start();
    let live = deep.live_states();
    for b in sigma.right_prolongable_letters() {
        let reaches_live = deep
            .initial()
            .iter()
            .any(|q| live.iter().any(|r| deep.relation(b).contains(q, r)));
        if reaches_live {
            return Ok(SingleDecision {
                answer: true,
                witness: Some(SingleWitness::Generating {
                    letter: b,
                    orbit_index: orb.cycle_start,
                }),
                orbit_window: window,
            });
        }
    }
    Ok(SingleDecision::no(window))
}

/// Does `a` accept a fixed point of `sigma` itself?
///
/// Case 1: a word over the fixed letters, found by restricting the
/// transitions to those letters. Case 2: a fixed-letter prefix followed by
/// a purely substitutive word, found by re-rooting the automaton at every
/// state reachable by fixed-letter words. `witness_len` bounds the prefix
/// used to pin the case-2 witness to a concrete initial state.
pub fn decide_fixed_point(
    a: &OmegaAutomaton,
    sigma: &Homomorphism,
    witness_len: usize,
) -> Result<SingleDecision> {
    require_same_alphabet(a, sigma)?;
    require_nonerasing(sigma, "the substitution")?;
    let fixed = sigma.fixed_letters();

    // Case 1: an infinite word over the fixed letters.
    let fixed_only = a.restrict_letters(&fixed);
    if !fixed_only.is_empty_infinite() {
        let (stem, cycle) = fixed_only
            .some_accepted_lasso()
            .expect("nonempty automaton yields a lasso");
        return Ok(SingleDecision {
            answer: true,
            witness: Some(SingleWitness::FixedLasso { stem, cycle }),
            orbit_window: None,
        });
    }

    // Case 2: re-root at the fixed-letter reachability closure and look
    // for a purely substitutive tail.
    let (closure, parents) = fixed_letter_closure(a, &fixed);
    let rerooted = a.with_initial(closure.clone());
    let decision = pure_substitutive_nonerasing(&rerooted, sigma)?;
    let window = decision.orbit_window;
    if let Some(SingleWitness::Generating {
        letter,
        orbit_index,
    }) = decision.witness
    {
        let tail = generate_prefix(sigma, letter, witness_len)?;
        let live = a.live_states();
        let anchor = closure
            .iter()
            .find(|&q| {
                let from = StateSet::from_iter(a.state_count(), [q]);
                a.subset_after(&from, &tail)
                    .map(|s| s.intersects(&live))
                    .unwrap_or(false)
            })
            .expect("some fixed-letter-reachable state accepts the generated word");
        let prefix = path_to(&parents, anchor);
        return Ok(SingleDecision {
            answer: true,
            witness: Some(SingleWitness::FixedPrefixed {
                prefix,
                letter,
                orbit_index,
            }),
            orbit_window: window,
        });
    }
    Ok(SingleDecision::no(window))
}

/// BFS over transitions labeled by `fixed` letters, from the initial set.
/// Returns the reachable set and, per state, the `(previous state,
/// letter)` pair of a shortest path.
fn fixed_letter_closure(
    a: &OmegaAutomaton,
    fixed: &[Letter],
) -> (StateSet, Vec<Option<(usize, Letter)>>) {
    let n = a.state_count();
    let mut reached = a.initial().clone();
    let mut parents: Vec<Option<(usize, Letter)>> = vec![None; n];
    let mut queue: VecDeque<usize> = a.initial().iter().collect();
    while let Some(q) = queue.pop_front() {
        for &letter in fixed {
            for r in a.relation(letter).successors(q).iter() {
                if !reached.contains(r) {
                    reached.insert(r);
                    parents[r] = Some((q, letter));
                    queue.push_back(r);
                }
            }
        }
    }
    (reached, parents)
}

fn path_to(parents: &[Option<(usize, Letter)>], target: usize) -> Word {
    let mut labels = Vec::new();
    let mut cur = target;
    while let Some((prev, letter)) = parents[cur] {
        labels.push(letter);
        cur = prev;
    }
    labels.reverse();
    labels
}

/// Does `a` accept a morphic word generated by `sigma` and the outer
/// substitution `tau`? Reduces to the purely substitutive question on
/// `tau⁻¹(a)`.
///
/// An erasing `tau` is refused: it can map an infinite generated word to a
/// finite one, and no answer would be reliable.
pub fn decide_morphic(
    a: &OmegaAutomaton,
    sigma: &Homomorphism,
    tau: &NamedSubstitution,
) -> Result<SingleDecision> {
    require_same_alphabet(a, sigma)?;
    require_same_alphabet(a, &tau.substitution)?;
    if !tau.substitution.is_nonerasing() {
        return Err(Error::Unsupported(format!(
            "outer homomorphism `{}` is erasing: it may map infinite words to finite ones",
            tau.name
        )));
    }
    let preimage = crate::desub::desubstitute(a, &tau.substitution)?;
    let decision = decide_pure_substitutive(&preimage, sigma)?;
    let witness = match decision.witness {
        Some(SingleWitness::Generating {
            letter,
            orbit_index,
        }) => Some(SingleWitness::Morphic {
            letter,
            orbit_index,
            outer: tau.name.clone(),
        }),
        other => other,
    };
    Ok(SingleDecision {
        answer: decision.answer,
        witness,
        orbit_window: decision.orbit_window,
    })
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

    fn swap2() -> Homomorphism {
        Homomorphism::from_strs(Alphabet::binary(), &[("0", "11"), ("1", "00")]).unwrap()
    }

    fn full1() -> OmegaAutomaton {
        OmegaAutomaton::with_default_names(Alphabet::binary(), 1, &[0], &[(0, 0, 0), (0, 1, 0)])
            .unwrap()
    }

    fn loop0() -> OmegaAutomaton {
        OmegaAutomaton::with_default_names(Alphabet::binary(), 1, &[0], &[(0, 0, 0)]).unwrap()
    }

    #[test]
    fn power_on_triangle_and_swap() {
        let d = decide_fixed_point_power(&triangle(), &swap3()).unwrap();
        assert!(d.answer);
        assert_eq!(d.witness, Some(SingleWitness::Power));
        assert_eq!(d.orbit_window, Some((0, 2)));
    }

    #[test]
    fn power_sees_through_odd_swaps() {
        // No fixed point of swap2 itself, but 0^ω is fixed by its square.
        let d = decide_fixed_point_power(&full1(), &swap2()).unwrap();
        assert!(d.answer);
        assert_eq!(d.orbit_window, Some((0, 1)));
    }

    #[test]
    fn power_false_on_empty_language() {
        let dead = OmegaAutomaton::with_default_names(Alphabet::binary(), 1, &[0], &[]).unwrap();
        assert!(!decide_fixed_point_power(&dead, &fib()).unwrap().answer);
    }

    #[test]
    fn power_rejects_erasing() {
        let erasing =
            Homomorphism::from_strs(Alphabet::binary(), &[("0", "01"), ("1", "")]).unwrap();
        assert!(decide_fixed_point_power(&full1(), &erasing).is_err());
    }

    #[test]
    fn pure_substitutive_fibonacci_over_full_shift() {
        let d = decide_pure_substitutive(&full1(), &fib()).unwrap();
        assert!(d.answer);
        assert_eq!(
            d.witness,
            Some(SingleWitness::Generating {
                letter: 0,
                orbit_index: 0
            })
        );
    }

    #[test]
    fn pure_substitutive_needs_a_prolongable_seed() {
        assert!(
            !decide_pure_substitutive(&triangle(), &swap3())
                .unwrap()
                .answer
        );
    }

    #[test]
    fn pure_substitutive_false_when_orbit_dies() {
        assert!(!decide_pure_substitutive(&loop0(), &fib()).unwrap().answer);
    }

    #[test]
    fn pure_substitutive_reduces_erasing_input() {
        // {0 -> 01, 1 -> eps} reduces to {0 -> 0}: no prolongable letter.
        let erasing =
            Homomorphism::from_strs(Alphabet::binary(), &[("0", "01"), ("1", "")]).unwrap();
        assert!(!decide_pure_substitutive(&full1(), &erasing).unwrap().answer);
        // A genuinely generating erasing input after reduction.
        let alpha = Alphabet::new(["0", "1", "a"]).unwrap();
        let h =
            Homomorphism::from_strs(alpha.clone(), &[("0", "01"), ("1", "0"), ("a", "")]).unwrap();
        let full3 =
            OmegaAutomaton::with_default_names(alpha, 1, &[0], &[(0, 0, 0), (0, 1, 0), (0, 2, 0)])
                .unwrap();
        let d = decide_pure_substitutive(&full3, &h).unwrap();
        assert!(d.answer);
        assert_eq!(
            d.witness,
            Some(SingleWitness::Generating {
                letter: 0,
                orbit_index: 0
            })
        );
    }

    #[test]
    fn pure_substitutive_rejects_unsupported_reduction() {
        let alpha = Alphabet::new(["0", "a", "1"]).unwrap();
        let h =
            Homomorphism::from_strs(alpha.clone(), &[("0", "0a1"), ("a", ""), ("1", "1")]).unwrap();
        let full3 =
            OmegaAutomaton::with_default_names(alpha, 1, &[0], &[(0, 0, 0), (0, 1, 0), (0, 2, 0)])
                .unwrap();
        assert!(matches!(
            decide_pure_substitutive(&full3, &h),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn fixed_point_of_swap_on_triangle_is_zero_lasso() {
        let d = decide_fixed_point(&triangle(), &swap3(), DEFAULT_WITNESS_LEN).unwrap();
        assert!(d.answer);
        match d.witness {
            Some(SingleWitness::FixedLasso { stem, cycle }) => {
                assert!(stem.is_empty());
                assert_eq!(cycle, vec![0]);
            }
            w => panic!("expected a fixed-letter lasso, got {w:?}"),
        }
    }

    #[test]
    fn swap2_has_no_fixed_point_at_all() {
        let d = decide_fixed_point(&full1(), &swap2(), DEFAULT_WITNESS_LEN).unwrap();
        assert!(!d.answer);
    }

    #[test]
    fn fibonacci_word_is_a_fixed_point_case2() {
        let d = decide_fixed_point(&full1(), &fib(), DEFAULT_WITNESS_LEN).unwrap();
        assert!(d.answer);
        assert_eq!(
            d.witness,
            Some(SingleWitness::FixedPrefixed {
                prefix: vec![],
                letter: 0,
                orbit_index: 0
            })
        );
    }

    #[test]
    fn fixed_point_case2_with_nonempty_prefix() {
        // The only accepted fixed point of {0 -> 0, 1 -> 10} here is
        // 0·10^ω: pure 0-words die at q1, so case 2 must prepend the
        // fixed-letter step to q1 before the generated tail 10^ω.
        let a = OmegaAutomaton::with_default_names(
            Alphabet::binary(),
            3,
            &[0],
            &[(0, 0, 1), (1, 1, 2), (2, 0, 2)],
        )
        .unwrap();
        let h = Homomorphism::from_strs(Alphabet::binary(), &[("0", "0"), ("1", "10")]).unwrap();
        let d = decide_fixed_point(&a, &h, DEFAULT_WITNESS_LEN).unwrap();
        assert!(d.answer);
        match d.witness {
            Some(SingleWitness::FixedPrefixed { prefix, letter, .. }) => {
                assert_eq!(prefix, vec![0]);
                assert_eq!(letter, 1);
            }
            w => panic!("expected a prefixed fixed point, got {w:?}"),
        }
    }

    #[test]
    fn morphic_with_identity_is_pure_substitutive() {
        let id = NamedSubstitution::new("id", Homomorphism::identity(Alphabet::binary()));
        let d = decide_morphic(&full1(), &fib(), &id).unwrap();
        assert!(d.answer);
    }

    #[test]
    fn morphic_through_swap2() {
        let tau = NamedSubstitution::new("swap2", swap2());
        let d = decide_morphic(&full1(), &fib(), &tau).unwrap();
        assert!(d.answer);
        assert_eq!(
            d.witness,
            Some(SingleWitness::Morphic {
                letter: 0,
                orbit_index: 0,
                outer: "swap2".into()
            })
        );
    }

    #[test]
    fn morphic_collapse_to_zeros() {
        let tau = NamedSubstitution::new(
            "zeros",
            Homomorphism::from_strs(Alphabet::binary(), &[("0", "0"), ("1", "0")]).unwrap(),
        );
        let d = decide_morphic(&loop0(), &fib(), &tau).unwrap();
        assert!(d.answer);
    }

    #[test]
    fn morphic_refuses_erasing_outer() {
        let tau = NamedSubstitution::new(
            "erase1",
            Homomorphism::from_strs(Alphabet::binary(), &[("0", "0"), ("1", "")]).unwrap(),
        );
        assert!(matches!(
            decide_morphic(&full1(), &fib(), &tau),
            Err(Error::Unsupported(_))
        ));
    }
}
