//! Infinitely desubstitutable words: build the meta-automaton whose
//! vertices are automata and whose σ-edges point to σ-desubstitutions,
//! prune the vertices with empty language, and look for an infinite walk.
//! The witness is an eventually periodic directive sequence.
//!
//! ```bash
//! cargo run --example inf_desub
//! ```

use omega_desub::{
    decide_inf_desub, text, Alphabet, Homomorphism, MetaAutomaton, NamedSubstitution,
    OmegaAutomaton, DEFAULT_VERTEX_BUDGET,
};

fn main() -> omega_desub::Result<()> {
    let binary = Alphabet::binary();
    let loop0 = OmegaAutomaton::with_default_names(binary.clone(), 1, &[0], &[(0, 0, 0)])?;

    let subs = vec![
        NamedSubstitution::new(
            "double",
            Homomorphism::from_strs(binary.clone(), &[("0", "00"), ("1", "11")])?,
        ),
        NamedSubstitution::new(
            "swap01",
            Homomorphism::from_strs(binary.clone(), &[("0", "1"), ("1", "0")])?,
        ),
        NamedSubstitution::new(
            "fib",
            Homomorphism::from_strs(binary, &[("0", "01"), ("1", "0")])?,
        ),
    ];

    let meta = MetaAutomaton::build(&loop0, &subs, DEFAULT_VERTEX_BUDGET)?;
    println!(
        "meta-automaton of the 0-loop under {{double, swap01, fib}}: {} vertices",
        meta.vertex_count()
    );
    for v in 0..meta.vertex_count() {
        println!(
            "  v{v}: {} transitions, empty language: {}",
            meta.vertex(v).transitions().len(),
            meta.is_empty_vertex(v)
        );
    }
    println!("\nDOT rendering:\n{}", text::meta_to_dot(&meta));

    let d = decide_inf_desub(&loop0, &subs, DEFAULT_VERTEX_BUDGET)?;
    println!(
        "0^ω infinitely desubstitutable: {} ({} vertices, {} live)",
        d.answer, d.vertices, d.live_vertices
    );
    if let Some(lasso) = d.lasso {
        println!("directive sequence: {lasso}");
    }
    Ok(())
}
