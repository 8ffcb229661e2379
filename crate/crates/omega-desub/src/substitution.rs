//! Word homomorphisms and substitutions.
//!
//! A homomorphism maps each letter to a finite word over the same
//! alphabet and extends to words by concatenation; a substitution is a
//! nonerasing homomorphism. The letter analyses here (right-prolongable
//! letters, fixed letters, the nonerasing reduction) are exactly what the
//! decision procedures consume.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};

/// A homomorphism on words over a fixed alphabet, given by letter images.
#[derive(Clone, PartialEq, Eq)]
pub struct Homomorphism {
    alphabet: Arc<Alphabet>,
    images: Vec<Word>,
}

impl Homomorphism {
    /// Builds a homomorphism from one image per letter, in letter order.
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Homomorphism> {
        if images.len() != alphabet.len() {
            return Err(Error::Precondition(format!(
                "expected {} images, got {}",
                alphabet.len(),
                images.len()
            )));
        }
        for img in &images {
            alphabet.check_word(img)?;
        }
        Ok(Homomorphism {
            alphabet: Arc::new(alphabet),
            images,
        })
    }

    /// Convenience constructor from symbol strings; an empty image string
    /// denotes the empty word.
    pub fn from_strs(alphabet: Alphabet, pairs: &[(&str, &str)]) -> Result<Homomorphism> {
        if pairs.len() != alphabet.len() {
            return Err(Error::Precondition(format!(
                "expected {} image entries, got {}",
                alphabet.len(),
                pairs.len()
            )));
        }
        let mut images = vec![None; alphabet.len()];
        for &(sym, img) in pairs {
            let a = alphabet.letter(sym)?;
            let word = if img.is_empty() {
                Vec::new()
            } else {
                alphabet.segment(img)?
            };
            if images[a].replace(word).is_some() {
                return Err(Error::Precondition(format!("duplicate image for `{sym}`")));
            }
        }
        let images = images
            .into_iter()
            .map(|i| i.expect("every letter has exactly one image"))
            .collect();
        Ok(Homomorphism {
            alphabet: Arc::new(alphabet),
            images,
        })
    }

    /// The identity homomorphism on `alphabet`.
    pub fn identity(alphabet: Alphabet) -> Homomorphism {
        let images = (0..alphabet.len()).map(|a| vec![a]).collect();
        Homomorphism {
            alphabet: Arc::new(alphabet),
            images,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn image(&self, a: Letter) -> &[Letter] {
        &self.images[a]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Applies the homomorphism to a finite word.
    pub fn apply(&self, word: &[Letter]) -> Result<Word> {
        self.alphabet.check_word(word)?;
        let mut out = Vec::new();
        for &a in word {
            out.extend_from_slice(&self.images[a]);
        }
        Ok(out)
    }

    /// Composition `self ∘ other`: `(self ∘ other)(a) = self(other(a))`,
    /// so `other` acts first.
    pub fn compose(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet.to_string(),
                got: other.alphabet.to_string(),
            });
        }
        let images = other
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<_>>()?;
        Ok(Homomorphism {
            alphabet: Arc::clone(&self.alphabet),
            images,
        })
    }

    /// True iff no letter image is the empty word.
    pub fn is_nonerasing(&self) -> bool {
        self.images.iter().all(|img| !img.is_empty())
    }

    /// Letters `b` with `b` a proper prefix of its image: the possible
    /// seeds of purely substitutive words.
    pub fn right_prolongable_letters(&self) -> Vec<Letter> {
        (0..self.alphabet.len())
            .filter(|&b| self.images[b].len() >= 2 && self.images[b][0] == b)
            .collect()
    }

    /// Letters whose image is exactly themselves.
    pub fn fixed_letters(&self) -> Vec<Letter> {
        (0..self.alphabet.len())
            .filter(|&b| self.images[b] == [b])
            .collect()
    }

    /// Letter dependency edges: `a` points to every letter occurring in
    /// its image.
    fn reachable_letters(&self, from: Letter) -> Vec<bool> {
        let mut seen = vec![false; self.alphabet.len()];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(a) = queue.pop_front() {
            for &b in &self.images[a] {
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        seen
    }
}

impl std::fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut map = f.debug_map();
        for (a, img) in self.images.iter().enumerate() {
            map.entry(&self.alphabet.symbol(a), &self.alphabet.format_word(img));
        }
        map.finish()
    }
}

/// A homomorphism together with the identifier used in directive
/// sequences and witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSubstitution {
    pub name: String,
    pub substitution: Homomorphism,
}

impl NamedSubstitution {
    pub fn new(name: impl Into<String>, substitution: Homomorphism) -> NamedSubstitution {
        NamedSubstitution {
            name: name.into(),
            substitution,
        }
    }
}

/// An eventually periodic directive sequence `stem · cycle^ω`, the
/// canonical witness shape for ω-regular nonemptiness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectiveLasso {
    pub stem: Vec<String>,
    pub cycle: Vec<String>,
}

impl DirectiveLasso {
    pub fn new(stem: Vec<String>, cycle: Vec<String>) -> DirectiveLasso {
        assert!(!cycle.is_empty(), "directive lasso cycle must be nonempty");
        DirectiveLasso { stem, cycle }
    }

    /// First `len` identifiers of `stem · cycle^ω`.
    pub fn prefix(&self, len: usize) -> Vec<&str> {
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            if i < self.stem.len() {
                out.push(self.stem[i].as_str());
            } else {
                out.push(self.cycle[(i - self.stem.len()) % self.cycle.len()].as_str());
            }
        }
        out
    }
}

impl std::fmt::Display for DirectiveLasso {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} ({})^ω",
            if self.stem.is_empty() {
                "ε".to_string()
            } else {
                self.stem.join(" ")
            },
            self.cycle.join(" ")
        )
    }
}

/// Result of [`nonerasing_reduction`].
#[derive(Clone, Debug)]
pub enum Reduction {
    /// An equivalent substitution on the surviving sub-alphabet. `kept`
    /// lists the surviving letters as indices into the original alphabet,
    /// in order; for an already-nonerasing input it is the whole alphabet.
    Nonerasing {
        substitution: Homomorphism,
        kept: Vec<Letter>,
    },
    /// The reduction would change the generated words; the input is
    /// refused rather than answered wrongly.
    Unsupported { reason: String },
}

/// Eliminates letters that erase in the limit: repeatedly delete every
/// letter whose image becomes empty, then restrict the surviving images to
/// the surviving alphabet.
///
/// The reduction is refused when a deleted letter is reachable, in the
/// letter dependency graph of the original homomorphism, from a letter
/// that is right-prolongable for the reduced substitution: such a letter
/// occurs in a generated word, and deleting it would change that word.
pub fn nonerasing_reduction(h: &Homomorphism) -> Reduction {
    let n = h.alphabet().len();
    if h.is_nonerasing() {
        return Reduction::Nonerasing {
            substitution: h.clone(),
            kept: (0..n).collect(),
        };
    }

    let mut deleted = vec![false; n];
    loop {
        let mut changed = false;
        for a in 0..n {
            if !deleted[a] && h.images[a].iter().all(|&b| deleted[b]) {
                deleted[a] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let kept: Vec<Letter> = (0..n).filter(|&a| !deleted[a]).collect();
    if kept.is_empty() {
        return Reduction::Unsupported {
            reason: "every letter erases in the limit".to_string(),
        };
    }

    let new_index: Vec<Option<usize>> = {
        let mut idx = vec![None; n];
        for (i, &a) in kept.iter().enumerate() {
            idx[a] = Some(i);
        }
        idx
    };
    let symbols: Vec<&str> = kept.iter().map(|&a| h.alphabet().symbol(a)).collect();
    let alphabet = Alphabet::new(symbols).expect("surviving alphabet is valid");
    let images: Vec<Word> = kept
        .iter()
        .map(|&a| h.images[a].iter().filter_map(|&b| new_index[b]).collect())
        .collect();
    let reduced = Homomorphism {
        alphabet: Arc::new(alphabet),
        images,
    };

    for (i, &old) in kept.iter().enumerate() {
        let prolongable = reduced.images[i].len() >= 2 && reduced.images[i][0] == i;
        if !prolongable {
            continue;
        }
        let reach = h.reachable_letters(old);
        for d in 0..n {
            if deleted[d] && reach[d] {
                return Reduction::Unsupported {
                    reason: format!(
                        "erased letter `{}` occurs in the word generated from `{}`",
                        h.alphabet().symbol(d),
                        h.alphabet().symbol(old)
                    ),
                };
            }
        }
    }

    Reduction::Nonerasing {
        substitution: reduced,
        kept,
    }
}

/// Length-`len` prefix of the purely substitutive word generated by
/// iterating `h` on the right-prolongable letter `seed`.
pub fn generate_prefix(h: &Homomorphism, seed: Letter, len: usize) -> Result<Word> {
    if len == 0 {
        return Err(Error::Precondition("prefix length must be positive".into()));
    }
    if !h.is_nonerasing() {
        return Err(Error::Precondition(
            "generator must be nonerasing; apply the nonerasing reduction first".into(),
        ));
    }
    if !h.right_prolongable_letters().contains(&seed) {
        return Err(Error::Precondition(format!(
            "letter `{}` is not right-prolongable",
            h.alphabet().symbol(seed)
        )));
    }
    let mut word = vec![seed];
    while word.len() < len {
        word = h.apply(&word)?;
    }
    word.truncate(len);
    Ok(word)
}

/// Like [`generate_prefix`], but routes erasing inputs through the
/// nonerasing reduction first; `seed` and the result are letters of the
/// original alphabet.
pub fn generated_word_prefix(h: &Homomorphism, seed: Letter, len: usize) -> Result<Word> {
    if h.is_nonerasing() {
        return generate_prefix(h, seed, len);
    }
    match nonerasing_reduction(h) {
        Reduction::Unsupported { reason } => Err(Error::Unsupported(reason)),
        Reduction::Nonerasing { substitution, kept } => {
            let reduced_seed = kept.iter().position(|&a| a == seed).ok_or_else(|| {
                Error::Precondition(format!(
                    "letter `{}` erases in the limit",
                    h.alphabet().symbol(seed)
                ))
            })?;
            let word = generate_prefix(&substitution, reduced_seed, len)?;
            Ok(word.into_iter().map(|a| kept[a]).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> Homomorphism {
        Homomorphism::from_strs(Alphabet::binary(), &[("0", "01"), ("1", "0")]).unwrap()
    }

    fn swap3() -> Homomorphism {
        let alpha = Alphabet::new(["0", "1", "2"]).unwrap();
        Homomorphism::from_strs(alpha, &[("0", "0"), ("1", "2"), ("2", "1")]).unwrap()
    }

    #[test]
    fn apply_concatenates_images() {
        let f = fib();
        let w = f.apply(&f.alphabet().segment("010").unwrap()).unwrap();
        assert_eq!(f.alphabet().format_word(&w), "01001");
        assert_eq!(f.apply(&[]).unwrap(), Vec::<Letter>::new());
        let s = swap3();
        let w = s.apply(&s.alphabet().segment("012").unwrap()).unwrap();
        assert_eq!(s.alphabet().format_word(&w), "021");
    }

    #[test]
    fn compose_examples() {
        let f = fib();
        let ff = f.compose(&f).unwrap();
        assert_eq!(f.alphabet().format_word(ff.image(0)), "010");
        let id = Homomorphism::identity(Alphabet::binary());
        assert_eq!(id.compose(&f).unwrap(), f);
        let s = swap3();
        let ss = s.compose(&s).unwrap();
        assert_eq!(ss, Homomorphism::identity(s.alphabet().clone()));
    }

    #[test]
    fn compose_requires_same_alphabet() {
        assert!(fib().compose(&swap3()).is_err());
    }

    #[test]
    fn nonerasing_checks() {
        assert!(fib().is_nonerasing());
        assert!(Homomorphism::identity(Alphabet::binary()).is_nonerasing());
        let erasing =
            Homomorphism::from_strs(Alphabet::binary(), &[("0", "01"), ("1", "")]).unwrap();
        assert!(!erasing.is_nonerasing());
    }

    #[test]
    fn right_prolongable_letters_examples() {
        assert_eq!(fib().right_prolongable_letters(), vec![0]);
        assert!(swap3().right_prolongable_letters().is_empty());
        let l0 = Homomorphism::from_strs(Alphabet::binary(), &[("0", "0"), ("1", "01")]).unwrap();
        assert!(l0.right_prolongable_letters().is_empty());
    }

    #[test]
    fn fixed_letters_examples() {
        assert_eq!(swap3().fixed_letters(), vec![0]);
        let tau = Homomorphism::from_strs(Alphabet::binary(), &[("0", "11"), ("1", "00")]).unwrap();
        assert!(tau.fixed_letters().is_empty());
        let id = Homomorphism::identity(Alphabet::binary());
        assert_eq!(id.fixed_letters(), vec![0, 1]);
    }

    #[test]
    fn generate_prefix_fibonacci() {
        let f = fib();
        let w = generate_prefix(&f, 0, 8).unwrap();
        assert_eq!(f.alphabet().format_word(&w), "01001010");
        assert_eq!(generate_prefix(&f, 0, 1).unwrap(), vec![0]);
        assert!(generate_prefix(&f, 1, 4).is_err());
    }

    #[test]
    fn generate_prefix_is_monotone() {
        let f = fib();
        let short = generate_prefix(&f, 0, 13).unwrap();
        let long = generate_prefix(&f, 0, 14).unwrap();
        assert_eq!(&long[..13], &short[..]);
    }

    #[test]
    fn reduction_keeps_nonerasing_unchanged() {
        match nonerasing_reduction(&fib()) {
            Reduction::Nonerasing { substitution, kept } => {
                assert_eq!(substitution, fib());
                assert_eq!(kept, vec![0, 1]);
            }
            Reduction::Unsupported { .. } => panic!("fib is nonerasing"),
        }
    }

    #[test]
    fn reduction_deletes_mortal_letter() {
        let h = Homomorphism::from_strs(Alphabet::binary(), &[("0", "01"), ("1", "")]).unwrap();
        match nonerasing_reduction(&h) {
            Reduction::Nonerasing { substitution, kept } => {
                assert_eq!(kept, vec![0]);
                assert_eq!(substitution.alphabet().symbols(), &["0".to_string()]);
                assert_eq!(substitution.image(0), &[0]);
            }
            Reduction::Unsupported { reason } => panic!("unexpected refusal: {reason}"),
        }
    }

    #[test]
    fn reduction_refuses_erased_letter_in_limit() {
        let alpha = Alphabet::new(["0", "a", "1"]).unwrap();
        let h = Homomorphism::from_strs(alpha, &[("0", "0a1"), ("a", ""), ("1", "1")]).unwrap();
        assert!(matches!(
            nonerasing_reduction(&h),
            Reduction::Unsupported { .. }
        ));
    }

    #[test]
    fn reduction_refuses_fully_mortal_alphabet() {
        let h = Homomorphism::from_strs(Alphabet::binary(), &[("0", ""), ("1", "0")]).unwrap();
        assert!(matches!(
            nonerasing_reduction(&h),
            Reduction::Unsupported { .. }
        ));
    }

    #[test]
    fn directive_lasso_prefix() {
        let l = DirectiveLasso::new(vec!["a".into()], vec!["b".into(), "c".into()]);
        assert_eq!(l.prefix(5), vec!["a", "b", "c", "b", "c"]);
    }
}
