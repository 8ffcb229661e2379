//! The text formats behind the CLI: parse an automaton and a
//! substitution from strings, desubstitute, print the result, and export
//! deterministic DOT.
//!
//! ```bash
//! cargo run --example file_formats
//! ```

use omega_desub::{desubstitute, text};

const AUTOMATON: &str = "
# accepts the words where every 1 is preceded by a 0
alphabet: 0 1
states: u v
initial: u
u 0 u
u 1 v
v 0 u
";

const SUBSTITUTION: &str = "
name: L0
alphabet: 0 1
0 -> 0
1 -> 01
";

fn main() -> omega_desub::Result<()> {
    let a = text::parse_automaton(AUTOMATON, "<inline>")?;
    let l0 = text::parse_substitution(SUBSTITUTION, "<inline>")?;

    println!("parsed automaton:\n{}", text::print_automaton(&a));
    println!("parsed substitution:\n{}", text::print_substitution(&l0));

    let preimage = desubstitute(&a, &l0.substitution)?;
    println!("L0-desubstitution:\n{}", text::print_automaton(&preimage));

    println!(
        "DOT of the preimage:\n{}",
        text::automaton_to_dot(&preimage)
    );

    // Round trips are bit-exact, which the CLI relies on.
    let reparsed = text::parse_automaton(&text::print_automaton(&a), "<round-trip>")?;
    println!("round trip preserved the automaton: {}", reparsed == a);
    Ok(())
}
