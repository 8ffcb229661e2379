//! Purely substitutive and morphic words: does the automaton accept the
//! limit of σⁿ(b) for some right-prolongable letter b, or the image of
//! such a limit under an outer substitution?
//!
//! ```bash
//! cargo run --example pure_substitutive
//! ```

use omega_desub::{
    decide_morphic, decide_pure_substitutive, generate_prefix, Alphabet, Homomorphism,
    NamedSubstitution, OmegaAutomaton, SingleWitness,
};

fn main() -> omega_desub::Result<()> {
    let binary = Alphabet::binary();
    let fib = Homomorphism::from_strs(binary.clone(), &[("0", "01"), ("1", "0")])?;

    // The full shift accepts everything, in particular the Fibonacci
    // word generated from 0.
    let full =
        OmegaAutomaton::with_default_names(binary.clone(), 1, &[0], &[(0, 0, 0), (0, 1, 0)])?;
    let d = decide_pure_substitutive(&full, &fib)?;
    if let Some(SingleWitness::Generating {
        letter,
        orbit_index,
    }) = d.witness
    {
        let prefix = generate_prefix(&fib, letter, 21)?;
        println!(
            "full shift accepts the word generated from {} (found at orbit index {orbit_index})",
            binary.symbol(letter)
        );
        println!("its prefix: {}", binary.format_word(&prefix));
    }

    // The 0-loop automaton accepts only 0^ω, which is not substitutive
    // for the Fibonacci substitution.
    let loop0 = OmegaAutomaton::with_default_names(binary.clone(), 1, &[0], &[(0, 0, 0)])?;
    println!(
        "0-loop accepts a Fibonacci-substitutive word: {}",
        decide_pure_substitutive(&loop0, &fib)?.answer
    );

    // Morphic words: collapse every letter to 0 and the Fibonacci word
    // lands inside the 0-loop after all.
    let zeros = NamedSubstitution::new(
        "zeros",
        Homomorphism::from_strs(binary, &[("0", "0"), ("1", "0")])?,
    );
    let d = decide_morphic(&loop0, &fib, &zeros)?;
    println!(
        "0-loop accepts a morphic word (generator fib, outer zeros): {}",
        d.answer
    );
    Ok(())
}
