//! Constraining the directive sequence with a Büchi automaton: the
//! decision intersects the pruned meta-automaton with the constraint and
//! checks Büchi emptiness of the product. The Sturmian alternation
//! condition is one such constraint; any ω-regular condition over the
//! substitution names works.
//!
//! ```bash
//! cargo run --example constrained
//! ```

use omega_desub::{
    alternation_buchi, decide_constrained, property_h, Alphabet, BuchiAutomaton, Homomorphism,
    NamedSubstitution, OmegaAutomaton, SturmianKit, DEFAULT_VERTEX_BUDGET,
};

fn main() -> omega_desub::Result<()> {
    let binary = Alphabet::binary();
    let kit = SturmianKit::new(&binary)?;
    let full =
        OmegaAutomaton::with_default_names(binary.clone(), 1, &[0], &[(0, 0, 0), (0, 1, 0)])?;

    // The built-in alternation gadget: infinitely many type-0 and
    // infinitely many type-1 morphisms. Over the full shift this is the
    // Sturmian question.
    let d = decide_constrained(
        &full,
        kit.substitutions(),
        &alternation_buchi(),
        DEFAULT_VERTEX_BUDGET,
    )?;
    println!("full shift, alternation constraint: {}", d.answer);
    if let Some(lasso) = &d.lasso {
        println!("  directive sequence: {lasso}");
    }

    // A custom constraint: use L0 infinitely often, forbid everything
    // else eventually — here simply "only L0 and R1, with L0 recurring".
    let names = Alphabet::new(["L0", "R1"])?;
    let constraint = BuchiAutomaton::new(
        names,
        vec!["idle".into(), "sawL0".into()],
        &[0],
        &[1],
        &[(0, 0, 1), (0, 1, 0), (1, 0, 1), (1, 1, 0)],
    )?;
    let subset = vec![
        kit.substitutions()[0].clone(), // L0
        kit.substitutions()[3].clone(), // R1
    ];
    let d = decide_constrained(&full, &subset, &constraint, DEFAULT_VERTEX_BUDGET)?;
    println!("full shift, 'L0 recurs among {{L0, R1}}': {}", d.answer);
    if let Some(lasso) = &d.lasso {
        println!("  directive sequence: {lasso}");
    }

    // Property (H) is the structural reason total vertices appear: a
    // state that can continue on one letter into a live state can
    // continue on the other as well.
    let swap_stable = OmegaAutomaton::with_default_names(binary.clone(), 1, &[0], &[(0, 0, 0)])?;
    println!(
        "\nproperty (H) at the 0-loop state: {}",
        property_h(&swap_stable, 0)?
    );
    println!(
        "property (H) at the full-shift state: {}",
        property_h(&full, 0)?
    );

    // An erasing homomorphism is rejected up front by the meta builder.
    let erasing = NamedSubstitution::new(
        "erase1",
        Homomorphism::from_strs(binary, &[("0", "0"), ("1", "")])?,
    );
    let err = decide_constrained(
        &full,
        &[erasing],
        &BuchiAutomaton::total(Alphabet::new(["erase1"])?),
        DEFAULT_VERTEX_BUDGET,
    )
    .unwrap_err();
    println!("\nerasing member of S is refused: {err}");
    Ok(())
}
