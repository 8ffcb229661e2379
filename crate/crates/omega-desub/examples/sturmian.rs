//! Deciding whether an ω-automaton accepts a Sturmian word.
//!
//! Sturmian words are exactly the words infinitely desubstitutable by the
//! elementary morphisms L0, L1, R0, R1 along a sequence that alternates
//! infinitely between type 0 and type 1. The decision looks for a
//! strongly connected component of the pruned meta-automaton containing
//! both edge types.
//!
//! ```bash
//! cargo run --example sturmian
//! ```

use omega_desub::{decide_sturmian, Alphabet, OmegaAutomaton, DEFAULT_VERTEX_BUDGET};

fn report(name: &str, a: &OmegaAutomaton) -> omega_desub::Result<()> {
    let d = decide_sturmian(a, DEFAULT_VERTEX_BUDGET)?;
    print!("{name}: {}", if d.answer { "yes" } else { "no" });
    if let Some(lasso) = d.lasso {
        print!("  — directive sequence {lasso}");
    }
    println!("  [{} meta vertices, {} live]", d.vertices, d.live_vertices);
    Ok(())
}

fn main() -> omega_desub::Result<()> {
    let binary = Alphabet::binary();

    // The full shift contains every binary word, Sturmian ones included.
    let full =
        OmegaAutomaton::with_default_names(binary.clone(), 1, &[0], &[(0, 0, 0), (0, 1, 0)])?;
    report("full shift", &full)?;

    // 0^ω alone is periodic, hence not Sturmian.
    let loop0 = OmegaAutomaton::with_default_names(binary.clone(), 1, &[0], &[(0, 0, 0)])?;
    report("0-loop", &loop0)?;

    // (01)^ω alone: periodic again.
    let periodic =
        OmegaAutomaton::with_default_names(binary.clone(), 2, &[0], &[(0, 0, 1), (1, 1, 0)])?;
    report("(01)^ω only", &periodic)?;

    // The L0-image of the full shift: words where every 1 is preceded by
    // a 0. It contains the L0-image of every Sturmian word.
    let l0_image = OmegaAutomaton::new(
        binary,
        vec!["u".into(), "v".into()],
        &[0],
        &[(0, 0, 0), (0, 1, 1), (1, 0, 0)],
    )?;
    report("L0-image of the full shift", &l0_image)?;
    Ok(())
}
