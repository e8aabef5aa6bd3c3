//! The Artin representation of `B_∞` in `Aut(F_∞)`.
//!
//! `σ_i` acts by `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`, and fixes every
//! other generator; `σ_i⁻¹` acts by `x_i ↦ x_{i+1}`,
//! `x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}`. The representation is faithful, which
//! makes it the equality oracle of the crate.

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{BraidWord, Letter};

/// Longest free group element the engine is willing to build.
pub const MAX_ELEMENT_LEN: usize = 1_000_000;

/// A freely reduced word over `x_i^{±1}`, stored as signed indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn generator(i: u32) -> Self {
        FreeWord(vec![i as i32])
    }

    /// Builds a reduced word from arbitrary signed letters.
    pub fn from_letters(letters: &[i32]) -> Self {
        let mut out = FreeWord::default();
        for &x in letters {
            assert!(x != 0, "x_0 is not a free generator");
            out.push(x);
        }
        out
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_generator(&self, i: u32) -> bool {
        self.0.len() == 1 && self.0[0] == i as i32
    }

    pub fn last(&self) -> Option<i32> {
        self.0.last().copied()
    }

    fn push(&mut self, x: i32) {
        if self.0.last() == Some(&-x) {
            self.0.pop();
        } else {
            self.0.push(x);
        }
    }

    fn push_word(&mut self, w: &FreeWord) {
        for &x in &w.0 {
            self.push(x);
        }
    }

    fn push_inverse(&mut self, w: &FreeWord) {
        for &x in w.0.iter().rev() {
            self.push(-x);
        }
    }

    /// `a · b · a⁻¹`, reduced.
    fn conjugate(a: &FreeWord, b: &FreeWord) -> FreeWord {
        let mut out = FreeWord(Vec::with_capacity(2 * a.len() + b.len()));
        out.push_word(a);
        out.push_word(b);
        out.push_inverse(a);
        out
    }

    /// `b⁻¹ · a · b`, reduced.
    fn conjugate_inverse(a: &FreeWord, b: &FreeWord) -> FreeWord {
        let mut out = FreeWord(Vec::with_capacity(a.len() + 2 * b.len()));
        out.push_inverse(b);
        out.push_word(a);
        out.push_word(b);
        out
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, &x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if x > 0 {
                write!(f, "x{x}")?;
            } else {
                write!(f, "x{}^-1", -x)?;
            }
        }
        Ok(())
    }
}

/// The images `ρ(β)(x_1), …, ρ(β)(x_n)` of a braid `β ∈ B_n`, updated letter
/// by letter: after reading `w`, entry `k` holds `ρ(w)(x_{k+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ArtinImages {
    images: Vec<FreeWord>,
    total: usize,
}

impl ArtinImages {
    pub fn identity(n: u32) -> Self {
        ArtinImages {
            images: (1..=n).map(FreeWord::generator).collect(),
            total: n as usize,
        }
    }

    pub fn total_len(&self) -> usize {
        self.total
    }

    pub fn into_images(self) -> Vec<FreeWord> {
        self.images
    }

    /// Replaces `ρ(w)` by `ρ(w · letter)`.
    pub fn apply(&mut self, letter: Letter) -> Result<()> {
        let i = letter.index() as usize;
        if i >= self.images.len() {
            self.grow(i + 1);
        }
        let (a, b) = (&self.images[i - 1], &self.images[i]);
        let (new_a, new_b) = if letter.is_positive() {
            (FreeWord::conjugate(a, b), a.clone())
        } else {
            (b.clone(), FreeWord::conjugate_inverse(a, b))
        };
        if new_a.len() > MAX_ELEMENT_LEN {
            return Err(Error::ElementTooLong { len: new_a.len(), cap: MAX_ELEMENT_LEN });
        }
        self.total = self.total + new_a.len() + new_b.len() - a.len() - b.len();
        self.images[i - 1] = new_a;
        self.images[i] = new_b;
        Ok(())
    }

    fn grow(&mut self, n: usize) {
        while self.images.len() < n {
            let next = self.images.len() as u32 + 1;
            self.images.push(FreeWord::generator(next));
            self.total += 1;
        }
    }
}

/// `ρ(w)(x_i)` as a reduced word.
pub fn artin_apply(w: &BraidWord, i: u32) -> Result<FreeWord> {
    assert!(i >= 1, "free generators are indexed from 1");
    if i > w.width() {
        return Ok(FreeWord::generator(i));
    }
    let mut state = ArtinImages::identity(w.width());
    for &l in w.free_cancel().letters() {
        state.apply(l)?;
    }
    Ok(state.images[(i - 1) as usize].clone())
}

/// All images `ρ(w)(x_1), …, ρ(w)(x_n)` with `n = width(w)`.
pub fn artin_images(w: &BraidWord) -> Result<Vec<FreeWord>> {
    let mut state = ArtinImages::identity(w.width());
    for &l in w.free_cancel().letters() {
        state.apply(l)?;
    }
    Ok(state.into_images())
}

fn permutation_is_identity(w: &BraidWord) -> bool {
    let mut perm: Vec<u32> = (0..=w.width()).collect();
    for l in w.letters() {
        perm.swap(l.index() as usize - 1, l.index() as usize);
    }
    perm.iter().enumerate().all(|(k, &v)| k as u32 == v)
}

/// Whether `w` represents the unit braid.
///
/// Two image tables are grown towards each other, one for a prefix `u` and
/// one for the inverse of the matching suffix `v`; `w = u v` is trivial iff
/// `ρ(u) = ρ(v⁻¹)`. The side with the shorter images is extended first.
pub fn is_trivial(w: &BraidWord) -> Result<bool> {
    let w = w.free_cancel();
    if w.is_empty() {
        return Ok(true);
    }
    if w.exponent_sum() != 0 || !permutation_is_identity(&w) {
        return Ok(false);
    }
    let n = w.width();
    let letters = w.letters();
    let mut left = ArtinImages::identity(n);
    let mut right = ArtinImages::identity(n);
    let (mut lo, mut hi) = (0, letters.len());
    while lo < hi {
        if left.total_len() <= right.total_len() {
            left.apply(letters[lo])?;
            lo += 1;
        } else {
            hi -= 1;
            right.apply(letters[hi].inverse())?;
        }
    }
    Ok(left.images == right.images)
}

/// Whether `w1` and `w2` represent the same braid.
pub fn equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    is_trivial(&w1.concat(&w2.invert()))
}

/// Canonical key of a braid: the Artin images of `x_1, …, x_n` with
/// trailing fixed generators dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(Vec<FreeWord>);

impl Fingerprint {
    pub fn images(&self) -> &[FreeWord] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, img) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{} -> {img}", k + 1)?;
        }
        Ok(())
    }
}

pub fn fingerprint(w: &BraidWord) -> Result<Fingerprint> {
    let mut images = artin_images(w)?;
    while let Some(last) = images.last() {
        if last.is_generator(images.len() as u32) {
            images.pop();
        } else {
            break;
        }
    }
    Ok(Fingerprint(images))
}
