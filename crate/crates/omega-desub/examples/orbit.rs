//! Iterated desubstitution lives in the finite set of automata sharing
//! the states and initial set of the start automaton, so every orbit is
//! eventually periodic: there are n < m with `σ⁻ⁿ(A) = σ⁻ᵐ(A)`.
//!
//! ```bash
//! cargo run --example orbit
//! ```

use omega_desub::{orbit, Alphabet, Homomorphism, OmegaAutomaton};

fn main() -> omega_desub::Result<()> {
    // The 0-loop automaton dies under the Fibonacci substitution: its
    // preimage is the 1-loop, whose preimage has no transitions at all.
    let binary = Alphabet::binary();
    let loop0 = OmegaAutomaton::with_default_names(binary.clone(), 1, &[0], &[(0, 0, 0)])?;
    let fib = Homomorphism::from_strs(binary, &[("0", "01"), ("1", "0")])?;

    let orb = orbit(&loop0, &fib)?;
    println!("orbit of the 0-loop under 0->01, 1->0:");
    for (k, a) in orb.automata.iter().enumerate() {
        let edges: Vec<String> = a
            .transitions()
            .iter()
            .map(|&(q, l, r)| format!("q{q} -{}-> q{r}", a.alphabet().symbol(l)))
            .collect();
        println!(
            "  sigma^-{k}: {}",
            if edges.is_empty() {
                "(no transitions)".to_string()
            } else {
                edges.join(", ")
            }
        );
    }
    println!("cycle: n={} m={}\n", orb.cycle_start, orb.first_repeat);

    // A pure relabeling cycles without losing anything: swapping letters
    // 1 and 2 on a three-letter alphabet has period two.
    let ternary = Alphabet::new(["0", "1", "2"])?;
    let triangle = OmegaAutomaton::new(
        ternary.clone(),
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
    let swap = Homomorphism::from_strs(ternary, &[("0", "0"), ("1", "2"), ("2", "1")])?;
    let orb = orbit(&triangle, &swap)?;
    println!(
        "orbit of the triangle under the 1<->2 swap: n={} m={}",
        orb.cycle_start, orb.first_repeat
    );
    Ok(())
}
