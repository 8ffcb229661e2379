//! Desubstituting an ω-automaton: `σ⁻¹(A)` draws an `a`-edge wherever
//! `σ(a)` labels a computation of `A`, so its language is exactly the
//! σ-preimage of the language of `A`.
//!
//! ```bash
//! cargo run --example desubstitute
//! ```

use omega_desub::{desubstitute, text, Alphabet, Homomorphism, OmegaAutomaton};

fn main() -> omega_desub::Result<()> {
    // Three states on a 1-labeled cycle with a 0-loop on each state.
    let alphabet = Alphabet::new(["0", "1", "2"])?;
    let triangle = OmegaAutomaton::new(
        alphabet.clone(),
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
    )?;
    let swap = Homomorphism::from_strs(alphabet, &[("0", "0"), ("1", "2"), ("2", "1")])?;

    println!("A:\n{}", text::print_automaton(&triangle));
    println!("sigma: 0 -> 0, 1 -> 2, 2 -> 1\n");

    let once = desubstitute(&triangle, &swap)?;
    println!(
        "sigma^-1(A) — the 1-cycle moved to letter 2:\n{}",
        text::print_automaton(&once)
    );

    let twice = desubstitute(&once, &swap)?;
    println!(
        "sigma^-2(A) equals A again: {}",
        if twice == triangle { "yes" } else { "no" }
    );

    // The language contract on a concrete ultimately periodic word:
    // (02)^ω is accepted by sigma^-1(A) iff sigma((02)^ω) = (01)^ω is
    // accepted by A.
    let lhs = once.accepts_lasso(&[], &[0, 2])?;
    let rhs = triangle.accepts_lasso(&[], &[0, 1])?;
    println!("(02)^ω in L(sigma^-1(A)): {lhs}; sigma-image (01)^ω in L(A): {rhs}");
    Ok(())
}
