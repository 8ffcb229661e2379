//! If an ω-automaton accepts a Sturmian word, some composition of
//! elementary Sturmian morphisms maps the whole binary shift into its
//! language — equivalently, the meta-automaton reaches a total vertex.
//! For the Fibonacci substitution alone the same holds along its orbit.
//!
//! ```bash
//! cargo run --example totality
//! ```

use omega_desub::{
    decide_sturmian, desubstitute, fibonacci_totality, find_total_reachable, Alphabet,
    OmegaAutomaton, SturmianKit, DEFAULT_VERTEX_BUDGET,
};

fn main() -> omega_desub::Result<()> {
    let binary = Alphabet::binary();
    let kit = SturmianKit::new(&binary)?;

    // Accepts exactly the words in which every 1 is preceded by a 0.
    let l0_image = OmegaAutomaton::new(
        binary.clone(),
        vec!["u".into(), "v".into()],
        &[0],
        &[(0, 0, 0), (0, 1, 1), (1, 0, 0)],
    )?;

    println!(
        "accepts a Sturmian word: {}",
        decide_sturmian(&l0_image, DEFAULT_VERTEX_BUDGET)?.answer
    );

    let path = find_total_reachable(&l0_image, DEFAULT_VERTEX_BUDGET)?
        .expect("a Sturmian acceptor reaches a total vertex");
    println!(
        "shortest path to a total vertex: {}",
        if path.labels.is_empty() {
            "(already total)".to_string()
        } else {
            path.labels.join(" ")
        }
    );

    let composed = path.composed(&kit)?;
    let preimage = desubstitute(&l0_image, &composed)?;
    println!("composed desubstitution total: {}", preimage.is_total());

    // Hence every image under the composed morphism is accepted.
    for word in [vec![1, 1, 1, 0], vec![0, 1, 0, 1], vec![1, 0, 0, 1]] {
        let image = composed.apply(&word)?;
        println!(
            "  {} -> {} accepted as a prefix: {}",
            binary.format_word(&word),
            binary.format_word(&image),
            l0_image.accepts_prefix(&image)?
        );
    }

    // The Fibonacci-specific variant searches the orbit instead.
    let full =
        OmegaAutomaton::with_default_names(binary.clone(), 1, &[0], &[(0, 0, 0), (0, 1, 0)])?;
    println!(
        "\nfull shift: least n with the n-fold Fibonacci preimage total: {:?}",
        fibonacci_totality(&full)?
    );
    let loop0 = OmegaAutomaton::with_default_names(binary, 1, &[0], &[(0, 0, 0)])?;
    println!(
        "0-loop: least such n: {:?} (it never accepts the Fibonacci word)",
        fibonacci_totality(&loop0)?
    );
    Ok(())
}
