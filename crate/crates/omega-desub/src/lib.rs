//! Desubstitution of ω-automata.
//!
//! Given an ω-automaton (acceptance: every infinite walk from an initial
//! state accepts) and substitutions on its alphabet, this crate decides
//! whether the automaton accepts
//!
//! - a fixed point of a substitution, or of some power of it,
//! - a purely substitutive or morphic word,
//! - a word infinitely desubstitutable by a set of substitutions,
//!   optionally with a Büchi constraint on the directive sequence,
//! - a Sturmian word, also inside the infinite concatenations `W^ω` of a
//!   finite word set,
//!
//! and always returns a machine-checkable witness: a generating letter, a
//! directive-sequence lasso, or a path to a total automaton.
//!
//! The workhorse is the desubstitution `σ⁻¹(A)` ([`desub::desubstitute`]),
//! whose language is the σ-preimage of the language of `A`, and the
//! meta-automaton ([`meta::MetaAutomaton`]) whose vertices are automata
//! and whose edges are desubstitutions.
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability, and the `omega-desub` binary for the file-based CLI.

pub mod alphabet;
pub mod automaton;
pub mod cli;
pub mod desub;
pub mod error;
pub mod graph;
pub mod meta;
pub mod relation;
pub mod single;
pub mod sturmian;
pub mod substitution;
pub mod text;

pub use alphabet::{Alphabet, Letter, Word};
pub use automaton::OmegaAutomaton;
pub use desub::{desubstitute, orbit, Orbit};
pub use error::{Error, Result};
pub use graph::{scc_decomposition, SccDecomposition};
pub use meta::{
    decide_constrained, decide_inf_desub, directive_language, BuchiAutomaton, LassoDecision,
    MetaAutomaton, DEFAULT_VERTEX_BUDGET,
};
pub use relation::{Relation, StateSet};
pub use single::{
    decide_fixed_point, decide_fixed_point_power, decide_morphic, decide_pure_substitutive,
    SingleDecision, SingleWitness, DEFAULT_WITNESS_LEN,
};
pub use sturmian::{
    alternation_buchi, coding_automaton, decide_coding, decide_sturmian, fibonacci_substitution,
    fibonacci_totality, find_total_reachable, property_h, SturmianKit, SturmianType, TotalityPath,
};
pub use substitution::{
    generate_prefix, generated_word_prefix, nonerasing_reduction, DirectiveLasso, Homomorphism,
    NamedSubstitution, Reduction,
};
