//! Bitset state sets and boolean transition relations.
//!
//! A `Relation` is a |Q|x|Q| boolean matrix stored row-wise in 64-bit
//! words. Relation composition is the boolean matrix product, which is the
//! workhorse of desubstitution: the relation of a word is the product of
//! the relations of its letters.

use std::fmt;

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A subset of the states `0..n`, as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    n: usize,
    words: Vec<u64>,
}

impl StateSet {
    pub fn empty(n: usize) -> StateSet {
        StateSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> StateSet {
        let mut s = StateSet::empty(n);
        for q in 0..n {
            s.insert(q);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, iter: I) -> StateSet {
        let mut s = StateSet::empty(n);
        for q in iter {
            s.insert(q);
        }
        s
    }

    /// Number of states of the underlying automaton (not the cardinality).
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, q: usize) {
        debug_assert!(q < self.n);
        self.words[q / WORD_BITS] |= 1 << (q % WORD_BITS);
    }

    pub fn remove(&mut self, q: usize) {
        debug_assert!(q < self.n);
        self.words[q / WORD_BITS] &= !(1 << (q % WORD_BITS));
    }

    pub fn contains(&self, q: usize) -> bool {
        q < self.n && self.words[q / WORD_BITS] & (1 << (q % WORD_BITS)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersect(&self, other: &StateSet) -> StateSet {
        debug_assert_eq!(self.n, other.n);
        StateSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn union_with(&mut self, other: &StateSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&q| self.contains(q))
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A boolean relation on the states `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    row_words: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn empty(n: usize) -> Relation {
        let row_words = words_for(n);
        Relation {
            n,
            row_words,
            bits: vec![0; n * row_words],
        }
    }

    pub fn identity(n: usize) -> Relation {
        let mut r = Relation::empty(n);
        for q in 0..n {
            r.set(q, q);
        }
        r
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, from: usize, to: usize) {
        debug_assert!(from < self.n && to < self.n);
        self.bits[from * self.row_words + to / WORD_BITS] |= 1 << (to % WORD_BITS);
    }

    pub fn contains(&self, from: usize, to: usize) -> bool {
        from < self.n
            && to < self.n
            && self.bits[from * self.row_words + to / WORD_BITS] & (1 << (to % WORD_BITS)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    fn row(&self, q: usize) -> &[u64] {
        &self.bits[q * self.row_words..(q + 1) * self.row_words]
    }

    /// Successors of `q` as a state set.
    pub fn successors(&self, q: usize) -> StateSet {
        StateSet {
            n: self.n,
            words: self.row(q).to_vec(),
        }
    }

    /// Image of a state set: every state reachable in one step from `from`.
    pub fn image(&self, from: &StateSet) -> StateSet {
        debug_assert_eq!(self.n, from.n);
        let mut out = StateSet::empty(self.n);
        for q in from.iter() {
            for (w, r) in out.words.iter_mut().zip(self.row(q)) {
                *w |= r;
            }
        }
        out
    }

    /// Boolean matrix product: `(self * other)(p, r)` iff there is `q`
    /// with `self(p, q)` and `other(q, r)`.
    pub fn compose(&self, other: &Relation) -> Relation {
        debug_assert_eq!(self.n, other.n);
        let mut out = Relation::empty(self.n);
        for p in 0..self.n {
            let out_row = &mut out.bits[p * out.row_words..(p + 1) * out.row_words];
            for (word_idx, &w) in self.row(p).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let q = word_idx * WORD_BITS + w.trailing_zeros() as usize;
                    w &= w - 1;
                    for (o, r) in out_row.iter_mut().zip(other.row(q)) {
                        *o |= r;
                    }
                }
            }
        }
        out
    }

    /// True iff some pair of `from x to` is related.
    pub fn connects(&self, from: &StateSet, to: &StateSet) -> bool {
        from.iter().any(|q| {
            self.row(q)
                .iter()
                .zip(to.words.iter())
                .any(|(r, t)| r & t != 0)
        })
    }

    /// Edge list in deterministic `(from, to)` order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for q in 0..self.n {
            for r in 0..self.n {
                if self.contains(q, r) {
                    out.push((q, r));
                }
            }
        }
        out
    }

    /// States from which an infinite chain of `self`-steps exists:
    /// the greatest set closed under "has a successor in the set".
    pub fn live_core(&self) -> StateSet {
        let mut alive = StateSet::full(self.n);
        loop {
            let mut changed = false;
            for q in 0..self.n {
                if alive.contains(q) {
                    let has_succ = self
                        .row(q)
                        .iter()
                        .zip(alive.words.iter())
                        .any(|(r, a)| r & a != 0);
                    if !has_succ {
                        alive.remove(q);
                        changed = true;
                    }
                }
            }
            if !changed {
                return alive;
            }
        }
    }

    pub(crate) fn bit_words(&self) -> &[u64] {
        &self.bits
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.edges()).finish()
    }
}
