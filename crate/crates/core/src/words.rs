//! Braid words: finite sequences of signed Artin generators.
//!
//! Everything in this module is purely syntactic. Two words that represent
//! the same braid are still different values here; group equality lives in
//! [`crate::engine`].
//!
//! The text format is a whitespace separated list of nonzero integers, `+i`
//! (or `i`) for `σ_i` and `-i` for `σ_i⁻¹`. The empty string is the unit
//! braid.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A signed Artin generator `σ_i^{±1}`, stored as `±i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    /// `σ_i` if `positive`, `σ_i⁻¹` otherwise.
    pub fn new(index: u32, positive: bool) -> Self {
        assert!(index >= 1, "generator index must be at least 1");
        let i = i32::try_from(index).expect("generator index out of range");
        Letter(if positive { i } else { -i })
    }

    pub fn sigma(index: u32) -> Self {
        Letter::new(index, true)
    }

    pub fn sigma_inv(index: u32) -> Self {
        Letter::new(index, false)
    }

    /// Builds a letter from its signed encoding. Returns `None` for zero.
    pub fn from_signed(value: i32) -> Option<Self> {
        (value != 0).then_some(Letter(value))
    }

    pub fn signed(self) -> i32 {
        self.0
    }

    pub fn index(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i32 {
        self.0.signum()
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    pub fn shifted(self, k: u32) -> Self {
        Letter::new(self.index() + k, self.is_positive())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word over the signed Artin generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    /// The empty word, i.e. the unit braid.
    pub fn empty() -> Self {
        BraidWord::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        BraidWord { letters }
    }

    /// Builds a word from signed generator indices.
    ///
    /// Panics on a zero entry; use [`parse`] for untrusted input.
    pub fn from_signed(values: &[i32]) -> Self {
        BraidWord {
            letters: values
                .iter()
                .map(|&v| Letter::from_signed(v).expect("zero is not a generator"))
                .collect(),
        }
    }

    /// The single-letter word `σ_i`.
    pub fn sigma(index: u32) -> Self {
        BraidWord { letters: vec![Letter::sigma(index)] }
    }

    /// `σ_{hi} σ_{hi-1} ⋯ σ_{lo}` (empty when `hi < lo`).
    pub fn descending(hi: u32, lo: u32) -> Self {
        BraidWord { letters: (lo..=hi).rev().map(Letter::sigma).collect() }
    }

    /// `σ_{lo} σ_{lo+1} ⋯ σ_{hi}` (empty when `hi < lo`).
    pub fn ascending(lo: u32, hi: u32) -> Self {
        BraidWord { letters: (lo..=hi).map(Letter::sigma).collect() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    /// Largest generator index occurring, 0 for the empty word.
    pub fn max_index(&self) -> u32 {
        self.letters.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    /// Lowest generator index occurring, `None` for the empty word.
    pub fn min_index(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.index()).min()
    }

    /// Number of strands the word needs: `1 + max index`.
    pub fn width(&self) -> u32 {
        self.max_index() + 1
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        self.letters.iter().all(|l| !l.is_positive())
    }

    /// Sum of the letter signs; a braid invariant.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.sign())).sum()
    }

    /// Letter sequence of `self` followed by `other`, without cancellation.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    /// Concatenation of several words.
    pub fn product<'a>(words: impl IntoIterator<Item = &'a BraidWord>) -> BraidWord {
        let mut letters = Vec::new();
        for w in words {
            letters.extend_from_slice(&w.letters);
        }
        BraidWord { letters }
    }

    /// Formal inverse: letters reversed, signs flipped.
    pub fn invert(&self) -> BraidWord {
        BraidWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Letters in reverse order with unchanged signs.
    ///
    /// The braid relations are palindromic, so this induces an
    /// anti-automorphism of the braid group.
    pub fn reversed(&self) -> BraidWord {
        BraidWord { letters: self.letters.iter().rev().copied().collect() }
    }

    /// Deletes adjacent pairs `σ_i^e σ_i^{-e}` until none remain.
    pub fn free_cancel(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { letters: out }
    }

    /// Every index increased by `k`: the word for `sh^k(β)`.
    pub fn shift(&self, k: u32) -> BraidWord {
        if k == 0 {
            return self.clone();
        }
        BraidWord { letters: self.letters.iter().map(|l| l.shifted(k)).collect() }
    }

    /// Every index decreased by one; fails if `σ_1^{±1}` occurs.
    pub fn unshift(&self) -> Result<BraidWord, Error> {
        if let Some(pos) = self.letters.iter().position(|l| l.index() == 1) {
            return Err(Error::NotShifted { position: pos + 1 });
        }
        Ok(BraidWord {
            letters: self
                .letters
                .iter()
                .map(|l| Letter::new(l.index() - 1, l.is_positive()))
                .collect(),
        })
    }

    /// The positive braid where `n` strands cross over `p` strands:
    /// `∏_{k=1..n} σ_{p+k-1} σ_{p+k-2} ⋯ σ_k`.
    pub fn tau(p: u32, n: u32) -> BraidWord {
        let mut letters = Vec::with_capacity((p * n) as usize);
        if p > 0 {
            for k in 1..=n {
                letters.extend((k..=p + k - 1).rev().map(Letter::sigma));
            }
        }
        BraidWord { letters }
    }
}

impl FromIterator<Letter> for BraidWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        BraidWord { letters: iter.into_iter().collect() }
    }
}

/// Parses the signed-integer text format.
pub fn parse(text: &str) -> Result<BraidWord, Error> {
    text.split_whitespace()
        .map(|token| {
            token
                .parse::<i32>()
                .ok()
                .and_then(Letter::from_signed)
                .ok_or_else(|| Error::Parse { token: token.to_string() })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(BraidWord::from_letters)
}

/// Renders a word with single spaces; the inverse of [`parse`].
pub fn render(word: &BraidWord) -> String {
    word.to_string()
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
