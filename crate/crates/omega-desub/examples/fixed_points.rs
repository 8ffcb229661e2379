//! Deciding whether an automaton accepts a fixed point of a substitution
//! — of σ itself, or of some power σᵏ. The two questions genuinely
//! differ: a substitution without any fixed point can still have one for
//! its square.
//!
//! ```bash
//! cargo run --example fixed_points
//! ```

use omega_desub::{
    decide_fixed_point, decide_fixed_point_power, Alphabet, Homomorphism, OmegaAutomaton,
    SingleWitness, DEFAULT_WITNESS_LEN,
};

fn show(decision: &omega_desub::SingleDecision, a: &OmegaAutomaton) {
    if !decision.answer {
        println!("  no");
        return;
    }
    match decision.witness.as_ref().unwrap() {
        SingleWitness::Power => println!("  yes (for some power; no exponent computed)"),
        SingleWitness::FixedLasso { stem, cycle } => println!(
            "  yes: {}({})^ω",
            a.alphabet().format_word(stem),
            a.alphabet().format_word(cycle)
        ),
        SingleWitness::FixedPrefixed { prefix, letter, .. } => println!(
            "  yes: {}·(word generated from {})",
            a.alphabet().format_word(prefix),
            a.alphabet().symbol(*letter)
        ),
        other => println!("  yes: {other:?}"),
    }
}

fn main() -> omega_desub::Result<()> {
    let binary = Alphabet::binary();
    let full =
        OmegaAutomaton::with_default_names(binary.clone(), 1, &[0], &[(0, 0, 0), (0, 1, 0)])?;

    // swap2 exchanges the letters blockwise; it has no fixed point, but
    // its square fixes 0^ω.
    let swap2 = Homomorphism::from_strs(binary.clone(), &[("0", "11"), ("1", "00")])?;
    println!("full shift, sigma = 0->11, 1->00:");
    println!(" fixed point of sigma itself?");
    show(
        &decide_fixed_point(&full, &swap2, DEFAULT_WITNESS_LEN)?,
        &full,
    );
    println!(" fixed point of some power?");
    show(&decide_fixed_point_power(&full, &swap2)?, &full);

    // The Fibonacci word is a genuine fixed point accepted by the full
    // shift: case 2 of the decision, with an empty fixed-letter prefix.
    let fib = Homomorphism::from_strs(binary.clone(), &[("0", "01"), ("1", "0")])?;
    println!("\nfull shift, sigma = 0->01, 1->0:");
    println!(" fixed point of sigma itself?");
    show(
        &decide_fixed_point(&full, &fib, DEFAULT_WITNESS_LEN)?,
        &full,
    );

    // A fixed point that needs a fixed-letter prefix: the only accepted
    // fixed point of 0->0, 1->10 below is 0·(10…)= 010^ω.
    let a = OmegaAutomaton::with_default_names(
        binary.clone(),
        3,
        &[0],
        &[(0, 0, 1), (1, 1, 2), (2, 0, 2)],
    )?;
    let h = Homomorphism::from_strs(binary, &[("0", "0"), ("1", "10")])?;
    println!("\nchain automaton, sigma = 0->0, 1->10:");
    println!(" fixed point of sigma itself?");
    show(&decide_fixed_point(&a, &h, DEFAULT_WITNESS_LEN)?, &a);
    Ok(())
}
