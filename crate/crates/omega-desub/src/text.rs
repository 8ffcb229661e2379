//! Line-based text formats for automata, Büchi automata, substitutions
//! and word sets. `#` starts a comment, blank lines are skipped, and
//! every parse error carries its source line.
//!
//! Automaton:
//! ```text
//! alphabet: 0 1
//! states: a b
//! initial: a
//! a 0 b
//! b 1 a
//! ```
//!
//! A Büchi automaton adds `accepting: <name> ...` after the initial line.
//! A substitution is one `<letter> -> <word>` line per letter (`eps` for
//! the empty word), with optional `name:` and `alphabet:` headers.

use std::path::Path;

use crate::alphabet::{Alphabet, Word};
use crate::automaton::OmegaAutomaton;
use crate::error::{Error, Result};
use crate::meta::{BuchiAutomaton, MetaAutomaton};
use crate::substitution::{Homomorphism, NamedSubstitution};

struct Lines<'a> {
    path: &'a str,
    items: Vec<(usize, Vec<&'a str>)>,
    next: usize,
}

impl<'a> Lines<'a> {
    fn new(path: &'a str, text: &'a str) -> Lines<'a> {
        let items = text
            .lines()
            .enumerate()
            .filter_map(|(i, line)| {
                let content = line.split('#').next().unwrap_or("");
                let tokens: Vec<&str> = content.split_whitespace().collect();
                if tokens.is_empty() {
                    None
                } else {
                    Some((i + 1, tokens))
                }
            })
            .collect();
        Lines {
            path,
            items,
            next: 0,
        }
    }

    fn error(&self, line: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            path: self.path.to_string(),
            line,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&(usize, Vec<&'a str>)> {
        self.items.get(self.next)
    }

    fn take(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let item = self.items.get(self.next).cloned();
        if item.is_some() {
            self.next += 1;
        }
        item
    }

    /// Consumes a `keyword: tokens...` line, returning the tokens.
    fn header(&mut self, keyword: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.take() {
            Some((line, tokens)) if tokens[0] == format!("{keyword}:") => {
                Ok((line, tokens[1..].to_vec()))
            }
            Some((line, tokens)) => Err(self.error(
                line,
                format!("expected `{keyword}:`, found `{}`", tokens[0]),
            )),
            None => Err(self.error(
                self.items.last().map_or(0, |(l, _)| *l),
                format!("missing `{keyword}:` line"),
            )),
        }
    }
}

fn state_index(lines: &Lines<'_>, line: usize, names: &[String], token: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == token)
        .ok_or_else(|| lines.error(line, format!("unknown state `{token}`")))
}

struct AutomatonParts {
    alphabet: Alphabet,
    names: Vec<String>,
    initial: Vec<usize>,
}

fn parse_header(lines: &mut Lines<'_>) -> Result<AutomatonParts> {
    let (line, symbols) = lines.header("alphabet")?;
    if symbols.is_empty() {
        return Err(lines.error(line, "alphabet must be nonempty"));
    }
    let alphabet = Alphabet::new(symbols).map_err(|e| lines.error(line, e.to_string()))?;
    let (line, states) = lines.header("states")?;
    if states.is_empty() {
        return Err(lines.error(line, "at least one state is required"));
    }
    let names: Vec<String> = states.iter().map(|s| s.to_string()).collect();
    let (line, init_tokens) = lines.header("initial")?;
    let initial = init_tokens
        .iter()
        .map(|t| state_index(lines, line, &names, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(AutomatonParts {
        alphabet,
        names,
        initial,
    })
}

fn parse_transitions(
    lines: &mut Lines<'_>,
    alphabet: &Alphabet,
    names: &[String],
) -> Result<Vec<(usize, usize, usize)>> {
    let mut edges = Vec::new();
    while let Some((line, tokens)) = lines.take() {
        if tokens.len() != 3 {
            return Err(lines.error(
                line,
                format!(
                    "expected `<src> <symbol> <dst>`, found {} tokens",
                    tokens.len()
                ),
            ));
        }
        let src = state_index(lines, line, names, tokens[0])?;
        let letter = alphabet
            .index_of(tokens[1])
            .ok_or_else(|| lines.error(line, format!("unknown symbol `{}`", tokens[1])))?;
        let dst = state_index(lines, line, names, tokens[2])?;
        edges.push((src, letter, dst));
    }
    Ok(edges)
}

/// Parses an ω-automaton; `path` only labels error messages.
pub fn parse_automaton(text: &str, path: &str) -> Result<OmegaAutomaton> {
    let mut lines = Lines::new(path, text);
    let parts = parse_header(&mut lines)?;
    let edges = parse_transitions(&mut lines, &parts.alphabet, &parts.names)?;
    OmegaAutomaton::new(parts.alphabet, parts.names, &parts.initial, &edges).map_err(|e| {
        Error::Parse {
            path: path.to_string(),
            line: 0,
            message: e.to_string(),
        }
    })
}

/// Parses a Büchi automaton: automaton format plus an `accepting:` line.
pub fn parse_buchi(text: &str, path: &str) -> Result<BuchiAutomaton> {
    let mut lines = Lines::new(path, text);
    let parts = parse_header(&mut lines)?;
    let (line, acc_tokens) = lines.header("accepting")?;
    let accepting = acc_tokens
        .iter()
        .map(|t| state_index(&lines, line, &parts.names, t))
        .collect::<Result<Vec<_>>>()?;
    let edges = parse_transitions(&mut lines, &parts.alphabet, &parts.names)?;
    BuchiAutomaton::new(
        parts.alphabet,
        parts.names,
        &parts.initial,
        &accepting,
        &edges,
    )
    .map_err(|e| Error::Parse {
        path: path.to_string(),
        line: 0,
        message: e.to_string(),
    })
}

/// Parses a substitution file. The name falls back to the file stem of
/// `path` when no `name:` header is present.
pub fn parse_substitution(text: &str, path: &str) -> Result<NamedSubstitution> {
    let mut lines = Lines::new(path, text);
    let mut name: Option<String> = None;
    let mut declared: Option<(usize, Vec<String>)> = None;
    while let Some(first) = lines.peek().map(|(_, tokens)| tokens[0]) {
        match first {
            "name:" => {
                let (line, rest) = lines.header("name")?;
                if rest.len() != 1 {
                    return Err(lines.error(line, "expected exactly one name"));
                }
                name = Some(rest[0].to_string());
            }
            "alphabet:" => {
                let (line, rest) = lines.header("alphabet")?;
                declared = Some((line, rest.iter().map(|s| s.to_string()).collect()));
            }
            _ => break,
        }
    }

    let mut entries: Vec<(usize, String, String)> = Vec::new();
    while let Some((line, tokens)) = lines.take() {
        if tokens.len() != 3 || tokens[1] != "->" {
            return Err(lines.error(line, "expected `<letter> -> <word>`"));
        }
        if tokens[0] == "eps" {
            return Err(lines.error(line, "`eps` is reserved for the empty word"));
        }
        entries.push((line, tokens[0].to_string(), tokens[2].to_string()));
    }
    if entries.is_empty() {
        return Err(lines.error(0, "substitution has no image lines"));
    }

    let symbols: Vec<String> = match &declared {
        Some((line, symbols)) => {
            for (entry_line, lhs, _) in &entries {
                if !symbols.contains(lhs) {
                    return Err(lines.error(
                        *entry_line,
                        format!("letter `{lhs}` not in the declared alphabet (line {line})"),
                    ));
                }
            }
            symbols.clone()
        }
        None => entries.iter().map(|(_, lhs, _)| lhs.clone()).collect(),
    };
    if symbols.iter().any(|s| s == "eps") {
        return Err(lines.error(0, "`eps` is reserved and cannot be a symbol"));
    }
    let alphabet = Alphabet::new(symbols).map_err(|e| lines.error(0, e.to_string()))?;

    let mut images: Vec<Option<Word>> = vec![None; alphabet.len()];
    for (line, lhs, rhs) in &entries {
        let letter = alphabet
            .index_of(lhs)
            .ok_or_else(|| lines.error(*line, format!("unknown letter `{lhs}`")))?;
        let image = if rhs == "eps" {
            Vec::new()
        } else {
            alphabet
                .segment(rhs)
                .map_err(|e| lines.error(*line, e.to_string()))?
        };
        if images[letter].replace(image).is_some() {
            return Err(lines.error(*line, format!("duplicate image for `{lhs}`")));
        }
    }
    for (a, image) in images.iter().enumerate() {
        if image.is_none() {
            return Err(Error::Parse {
                path: path.to_string(),
                line: 0,
                message: format!("letter `{}` has no image", alphabet.symbol(a)),
            });
        }
    }
    let images = images.into_iter().map(Option::unwrap).collect();
    let substitution =
        Homomorphism::new(alphabet, images).map_err(|e| lines.error(0, e.to_string()))?;

    let fallback = || {
        Path::new(path)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .filter(|s| !s.is_empty())
            .unwrap_or_else(|| "sub".to_string())
    };
    Ok(NamedSubstitution::new(
        name.unwrap_or_else(fallback),
        substitution,
    ))
}

/// Parses a word-set file: one binary word per line.
pub fn parse_words(text: &str, path: &str) -> Result<Vec<Word>> {
    let lines = Lines::new(path, text);
    let alphabet = Alphabet::binary();
    let mut words = Vec::new();
    for (line, tokens) in &lines.items {
        if tokens.len() != 1 {
            return Err(lines.error(*line, "expected one word per line"));
        }
        let word = alphabet
            .segment(tokens[0])
            .map_err(|e| lines.error(*line, e.to_string()))?;
        words.push(word);
    }
    Ok(words)
}

/// Prints an automaton in the parseable text format, deterministically.
pub fn print_automaton(a: &OmegaAutomaton) -> String {
    let mut out = String::new();
    out.push_str(&format!("alphabet: {}\n", a.alphabet()));
    out.push_str(&format!("states: {}\n", a.state_names().join(" ")));
    let initials: Vec<&str> = a.initial().iter().map(|q| a.state_name(q)).collect();
    if initials.is_empty() {
        out.push_str("initial:\n");
    } else {
        out.push_str(&format!("initial: {}\n", initials.join(" ")));
    }
    for (src, letter, dst) in a.transitions() {
        out.push_str(&format!(
            "{} {} {}\n",
            a.state_name(src),
            a.alphabet().symbol(letter),
            a.state_name(dst)
        ));
    }
    out
}

/// Prints a Büchi automaton in the parseable text format.
pub fn print_buchi(b: &BuchiAutomaton) -> String {
    let mut out = String::new();
    out.push_str(&format!("alphabet: {}\n", b.alphabet()));
    let names: Vec<&str> = (0..b.state_count()).map(|q| b.state_name(q)).collect();
    out.push_str(&format!("states: {}\n", names.join(" ")));
    let initials: Vec<&str> = b.initial().iter().map(|q| b.state_name(q)).collect();
    if initials.is_empty() {
        out.push_str("initial:\n");
    } else {
        out.push_str(&format!("initial: {}\n", initials.join(" ")));
    }
    let accepting: Vec<&str> = b.accepting().iter().map(|q| b.state_name(q)).collect();
    if accepting.is_empty() {
        out.push_str("accepting:\n");
    } else {
        out.push_str(&format!("accepting: {}\n", accepting.join(" ")));
    }
    for (src, letter, dst) in b.transitions() {
        out.push_str(&format!(
            "{} {} {}\n",
            b.state_name(src),
            b.alphabet().symbol(letter),
            b.state_name(dst)
        ));
    }
    out
}

/// Prints a substitution in the parseable text format.
pub fn print_substitution(s: &NamedSubstitution) -> String {
    let alphabet = s.substitution.alphabet();
    let mut out = String::new();
    out.push_str(&format!("name: {}\n", s.name));
    out.push_str(&format!("alphabet: {alphabet}\n"));
    for a in 0..alphabet.len() {
        let image = s.substitution.image(a);
        out.push_str(&format!(
            "{} -> {}\n",
            alphabet.symbol(a),
            alphabet.format_word(image)
        ));
    }
    out
}

/// Escapes a token for use inside a quoted DOT string.
fn dot_escape(token: &str) -> String {
    token.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Deterministic DOT rendering of an automaton: states in index order
/// (initials doubly circled), one edge per transition, ordered by state,
/// letter and target index.
pub fn automaton_to_dot(a: &OmegaAutomaton) -> String {
    let mut out = String::from("digraph omega_automaton {\n  rankdir=LR;\n");
    for q in 0..a.state_count() {
        let shape = if a.initial().contains(q) {
            "doublecircle"
        } else {
            "circle"
        };
        out.push_str(&format!(
            "  \"{}\" [shape={shape}];\n",
            dot_escape(a.state_name(q))
        ));
    }
    for (src, letter, dst) in a.transitions() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            dot_escape(a.state_name(src)),
            dot_escape(a.state_name(dst)),
            dot_escape(a.alphabet().symbol(letter))
        ));
    }
    out.push_str("}\n");
    out
}

/// Deterministic DOT rendering of a meta-automaton: vertices in index
/// order (empty-language vertices dashed), edges labeled by substitution
/// names in substitution order.
pub fn meta_to_dot(meta: &MetaAutomaton) -> String {
    let mut out = String::from("digraph meta_automaton {\n  rankdir=LR;\n");
    for v in 0..meta.vertex_count() {
        let mut attrs = vec![format!("label=\"v{v}\"")];
        if v == meta.initial_vertex() {
            attrs.push("shape=doublecircle".to_string());
        } else {
            attrs.push("shape=circle".to_string());
        }
        if meta.is_empty_vertex(v) {
            attrs.push("style=dashed".to_string());
        }
        out.push_str(&format!("  v{v} [{}];\n", attrs.join(", ")));
    }
    for v in 0..meta.vertex_count() {
        for (s, sub) in meta.substitutions().iter().enumerate() {
            out.push_str(&format!(
                "  v{v} -> v{} [label=\"{}\"];\n",
                meta.edge(v, s),
                dot_escape(&sub.name)
            ));
        }
    }
    out.push_str("}\n");
    out
}
