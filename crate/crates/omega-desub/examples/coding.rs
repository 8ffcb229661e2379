//! Which finite word sets code a Sturmian word? `W^ω` is the set of
//! infinite concatenations of members of `W`; it is the language of a
//! flower automaton (one root, one petal cycle per word), so the Sturmian
//! decision applies directly.
//!
//! ```bash
//! cargo run --example coding
//! ```

use omega_desub::{coding_automaton, decide_coding, text, Word, DEFAULT_VERTEX_BUDGET};

fn pieces(words: &[Word]) -> String {
    let alpha = omega_desub::Alphabet::binary();
    words
        .iter()
        .map(|w| alpha.format_word(w))
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() -> omega_desub::Result<()> {
    let sets: Vec<Vec<Word>> = vec![
        vec![vec![0], vec![0, 1]],       // {0, 01}: factors the Fibonacci word
        vec![vec![0, 0], vec![1, 1]],    // {00, 11}: every concatenation has both squares
        vec![vec![0]],                   // {0}: only 0^ω
        vec![vec![0, 1], vec![0, 1, 1]], // {01, 011}: mechanical-word pieces
    ];
    for words in &sets {
        let d = decide_coding(words, DEFAULT_VERTEX_BUDGET)?;
        print!("W = {{{}}}: ", pieces(words));
        if d.answer {
            println!("W^ω contains a Sturmian word — {}", d.lasso.unwrap());
        } else {
            println!("no Sturmian word in W^ω");
        }
    }

    println!("\nflower automaton of {{0, 01}}:");
    print!(
        "{}",
        text::print_automaton(&coding_automaton(&[vec![0], vec![0, 1]])?)
    );
    Ok(())
}
