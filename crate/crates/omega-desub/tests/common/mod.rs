//! Shared helpers for the integration suites: fixture loading, seeded
//! corpus generation, and a few word-level oracles that stay independent
//! of the library's relation machinery.

#![allow(dead_code)]

use omega_desub::{text, Alphabet, Homomorphism, OmegaAutomaton, Word};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn fixture_text(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("cannot read {path}: {e}"))
}

pub fn fixture_automaton(name: &str) -> OmegaAutomaton {
    text::parse_automaton(&fixture_text(name), name).expect("fixture parses")
}

pub fn fixture_substitution(name: &str) -> omega_desub::NamedSubstitution {
    text::parse_substitution(&fixture_text(name), name).expect("fixture parses")
}

/// Seeded generator for one suite. `OMEGA_DESUB_TEST_SEED` perturbs every
/// suite at once for exploratory runs; the default is fixed.
pub fn rng(salt: u64) -> ChaCha8Rng {
    let base: u64 = std::env::var("OMEGA_DESUB_TEST_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    ChaCha8Rng::seed_from_u64(base ^ salt)
}

/// Random automaton with up to `max_states` states; edge density is drawn
/// per automaton so the corpus mixes sparse (often empty) and dense
/// (often total) instances.
pub fn random_automaton(
    rng: &mut ChaCha8Rng,
    alphabet: &Alphabet,
    max_states: usize,
) -> OmegaAutomaton {
    let n = rng.gen_range(1..=max_states);
    let density = *[0.15, 0.3, 0.5, 0.7].choose(rng).unwrap();
    let mut edges = Vec::new();
    for q in 0..n {
        for a in 0..alphabet.len() {
            for r in 0..n {
                if rng.gen_bool(density) {
                    edges.push((q, a, r));
                }
            }
        }
    }
    let initial: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    OmegaAutomaton::with_default_names(alphabet.clone(), n, &initial, &edges)
        .expect("generated automaton is valid")
}

/// Random homomorphism with images of length `0..=max_image_len` (length
/// 0 only when `allow_erasing`).
pub fn random_homomorphism(
    rng: &mut ChaCha8Rng,
    alphabet: &Alphabet,
    max_image_len: usize,
    allow_erasing: bool,
) -> Homomorphism {
    let min_len = usize::from(!allow_erasing);
    let images = (0..alphabet.len())
        .map(|_| {
            let len = rng.gen_range(min_len..=max_image_len);
            (0..len).map(|_| rng.gen_range(0..alphabet.len())).collect()
        })
        .collect();
    Homomorphism::new(alphabet.clone(), images).expect("generated homomorphism is valid")
}

pub fn random_word(rng: &mut ChaCha8Rng, alphabet: &Alphabet, len: usize) -> Word {
    (0..len).map(|_| rng.gen_range(0..alphabet.len())).collect()
}

/// The binary corpus used by the Sturmian-facing suites: the fixtures
/// first, then seeded random automata.
pub fn binary_corpus(seed: u64, count: usize, max_states: usize) -> Vec<OmegaAutomaton> {
    let mut corpus = vec![
        fixture_automaton("full.aut"),
        fixture_automaton("loop0.aut"),
        fixture_automaton("l0-image.aut"),
        fixture_automaton("periodic01.aut"),
    ];
    let alphabet = Alphabet::binary();
    let mut r = rng(seed);
    while corpus.len() < count {
        corpus.push(random_automaton(&mut r, &alphabet, max_states));
    }
    corpus
}

/// Word acceptance by direct transition chasing (no relation products):
/// the set of states reachable from the initial set while reading `word`.
pub fn naive_reached(a: &OmegaAutomaton, word: &[usize]) -> Vec<bool> {
    let n = a.state_count();
    let mut cur: Vec<bool> = (0..n).map(|q| a.initial().contains(q)).collect();
    for &letter in word {
        let mut next = vec![false; n];
        for q in 0..n {
            if cur[q] {
                for r in 0..n {
                    if a.relation(letter).contains(q, r) {
                        next[r] = true;
                    }
                }
            }
        }
        cur = next;
    }
    cur
}

pub fn naive_accepts(a: &OmegaAutomaton, word: &[usize]) -> bool {
    naive_reached(a, word).iter().any(|&b| b)
}

/// Shortest word of length ≤ `max_len` that is not accepted, by
/// breadth-first search over reached subsets (memoized: a repeated subset
/// cannot reach the empty subset through new words).
pub fn shortest_unaccepted_word(a: &OmegaAutomaton, max_len: usize) -> Option<Word> {
    use std::collections::{HashSet, VecDeque};
    let n = a.state_count();
    let start: Vec<bool> = (0..n).map(|q| a.initial().contains(q)).collect();
    if !start.iter().any(|&b| b) {
        return Some(Vec::new());
    }
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    seen.insert(start.clone());
    let mut queue: VecDeque<(Vec<bool>, Word)> = VecDeque::from([(start, Vec::new())]);
    while let Some((subset, word)) = queue.pop_front() {
        if word.len() >= max_len {
            continue;
        }
        for letter in 0..a.alphabet().len() {
            let mut next = vec![false; n];
            for q in 0..n {
                if subset[q] {
                    for r in 0..n {
                        if a.relation(letter).contains(q, r) {
                            next[r] = true;
                        }
                    }
                }
            }
            let mut extended = word.clone();
            extended.push(letter);
            if !next.iter().any(|&b| b) {
                return Some(extended);
            }
            if seen.insert(next.clone()) {
                queue.push_back((next, extended));
            }
        }
    }
    None
}

/// Literal enumeration of every word up to `max_len`; returns a word that
/// is not accepted, if any. Exponential: callers keep `max_len` small.
pub fn literal_unaccepted_word(a: &OmegaAutomaton, max_len: usize) -> Option<Word> {
    fn walk(a: &OmegaAutomaton, word: &mut Word, max_len: usize) -> Option<Word> {
        if !naive_accepts(a, word) {
            return Some(word.clone());
        }
        if word.len() == max_len {
            return None;
        }
        for letter in 0..a.alphabet().len() {
            word.push(letter);
            if let Some(found) = walk(a, word, max_len) {
                return Some(found);
            }
            word.pop();
        }
        None
    }
    walk(a, &mut Vec::new(), max_len)
}
