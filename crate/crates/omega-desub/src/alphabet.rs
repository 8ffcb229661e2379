//! Alphabets, letters and finite words.
//!
//! Letters are dense indices into an [`Alphabet`]; every word-level
//! structure in the crate (transition relations, homomorphism images,
//! witnesses) stores indices and goes through the alphabet only for I/O.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a letter within its alphabet.
pub type Letter = usize;

/// A finite word, as a sequence of letter indices.
pub type Word = Vec<Letter>;

/// An ordered finite set of distinct symbols. The position of a symbol is
/// its letter id, fixed at construction.
#[derive(Clone, Debug)]
pub struct Alphabet {
    symbols: Vec<String>,
    lookup: HashMap<String, Letter>,
}

impl Alphabet {
    /// Builds an alphabet from symbol names, in order.
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(symbols: I) -> Result<Alphabet> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::Precondition("alphabet must be nonempty".into()));
        }
        let mut lookup = HashMap::new();
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(char::is_whitespace) {
                return Err(Error::Precondition(format!(
                    "invalid symbol `{s}`: symbols are nonempty and whitespace-free"
                )));
            }
            if lookup.insert(s.clone(), i).is_some() {
                return Err(Error::Precondition(format!("duplicate symbol `{s}`")));
            }
        }
        Ok(Alphabet { symbols, lookup })
    }

    /// The standard binary alphabet `0 1`.
    pub fn binary() -> Alphabet {
        Alphabet::new(["0", "1"]).expect("binary alphabet is valid")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, a: Letter) -> &str {
        &self.symbols[a]
    }

    pub fn index_of(&self, symbol: &str) -> Option<Letter> {
        self.lookup.get(symbol).copied()
    }

    /// Looks a symbol up, failing with `UnknownSymbol`.
    pub fn letter(&self, symbol: &str) -> Result<Letter> {
        self.index_of(symbol).ok_or_else(|| Error::UnknownSymbol {
            symbol: symbol.to_string(),
        })
    }

    /// True when every symbol is a single character, so words can be
    /// printed without separators.
    pub fn is_char_alphabet(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Splits a separator-free token into letters.
    ///
    /// At every position the longest symbol that still lets the rest of the
    /// token be segmented wins, which makes the result deterministic even
    /// for overlapping multi-character symbols.
    pub fn segment(&self, token: &str) -> Result<Word> {
        let bytes = token.as_bytes();
        let n = bytes.len();
        // completable[i] = token[i..] can be segmented
        let mut completable = vec![false; n + 1];
        completable[n] = true;
        for i in (0..n).rev() {
            completable[i] = self
                .symbols
                .iter()
                .any(|s| token[i..].starts_with(s.as_str()) && completable[i + s.len()]);
        }
        if !completable[0] {
            return Err(Error::UnknownSymbol {
                symbol: token.to_string(),
            });
        }
        let mut word = Vec::new();
        let mut i = 0;
        while i < n {
            let (letter, len) = self
                .symbols
                .iter()
                .enumerate()
                .filter(|(_, s)| token[i..].starts_with(s.as_str()) && completable[i + s.len()])
                .max_by_key(|(_, s)| s.len())
                .map(|(a, s)| (a, s.len()))
                .expect("completable position has a matching symbol");
            word.push(letter);
            i += len;
        }
        Ok(word)
    }

    /// Renders a word: concatenated for single-character alphabets,
    /// space-separated otherwise. The empty word renders as `eps`.
    pub fn format_word(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            return "eps".to_string();
        }
        let sep = if self.is_char_alphabet() { "" } else { " " };
        word.iter()
            .map(|&a| self.symbol(a))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Validates that every letter of `word` is in range.
    pub fn check_word(&self, word: &[Letter]) -> Result<()> {
        for &a in word {
            if a >= self.len() {
                return Err(Error::UnknownSymbol {
                    symbol: format!("#{a}"),
                });
            }
        }
        Ok(())
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl std::hash::Hash for Alphabet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbols.join(" "))
    }
}
