//! Braid semantics: equality, canonical fingerprints, σ-classification and
//! the braid order.
//!
//! Equality is decided by the Artin representation (see [`artin`]). Handle
//! reduction is used for σ-classification and is checked against the Artin
//! oracle in the test suites, never the other way round.

pub mod artin;
pub mod handle;
pub mod reversing;

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

pub use artin::{artin_apply, equal, fingerprint, is_trivial, Fingerprint, FreeWord};
pub use handle::{handle_reduce, DEFAULT_STEP_CAP};
pub use reversing::{reverse_to_neg_pos, reverse_to_pos_neg};

use crate::error::Result;
use crate::words::{BraidWord, Letter};

/// Outcome of σ-classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SigmaClass {
    /// `σ_i`-positive: some word has `σ_i` and no `σ_i⁻¹` and no lower index.
    Positive(u32),
    Negative(u32),
    Trivial,
}

impl fmt::Display for SigmaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaClass::Positive(i) => write!(f, "sigma-positive at index {i}"),
            SigmaClass::Negative(i) => write!(f, "sigma-negative at index {i}"),
            SigmaClass::Trivial => f.write_str("trivial"),
        }
    }
}

/// Classifies `w` by handle reduction.
pub fn sigma_classify(w: &BraidWord, step_cap: usize) -> Result<SigmaClass> {
    let reduced = handle_reduce(w, step_cap)?;
    let Some(lo) = reduced.min_index() else {
        return Ok(SigmaClass::Trivial);
    };
    let first = reduced.letters().iter().find(|l| l.index() == lo).expect("lowest index occurs");
    Ok(if first.is_positive() { SigmaClass::Positive(lo) } else { SigmaClass::Negative(lo) })
}

/// The braid order: `w1 < w2` iff `w1⁻¹ w2` is σ-positive.
pub fn compare(w1: &BraidWord, w2: &BraidWord, step_cap: usize) -> Result<Ordering> {
    Ok(match sigma_classify(&w1.invert().concat(w2), step_cap)? {
        SigmaClass::Positive(_) => Ordering::Less,
        SigmaClass::Trivial => Ordering::Equal,
        SigmaClass::Negative(_) => Ordering::Greater,
    })
}

/// Whether `sh(β)` commutes with `σ_1`, i.e. whether `β ∈ Im(sh)`.
fn commutes_after_shift(w: &BraidWord) -> Result<bool> {
    let sh = w.shift(1);
    let commutator = BraidWord::product([&sh, &BraidWord::sigma(1), &sh.invert(), &BraidWord::sigma(1).invert()]);
    is_trivial(&commutator)
}

/// Preimage word under `sh` for `w`, assuming `w ∈ Im(sh)`:
/// `β = σ_n⁻¹ ⋯ σ_2⁻¹ · sh(β) · σ_2 ⋯ σ_n` with `n = width(w)`.
fn shift_preimage(w: &BraidWord) -> BraidWord {
    let n = w.width();
    let up = BraidWord::ascending(2, n);
    let conj = BraidWord::product([&up.invert(), &w.shift(1), &up]).free_cancel();
    conj.unshift().expect("handle trick word only uses indices ≥ 2")
}

/// Decides `w ∈ Im(sh^p)`; on success returns a word `x` with `sh^p(x) = w`.
pub fn is_shift_image(w: &BraidWord, p: u32) -> Result<Option<BraidWord>> {
    let mut current = w.free_cancel();
    for _ in 0..p {
        if !commutes_after_shift(&current)? {
            return Ok(None);
        }
        current = shift_preimage(&current);
    }
    Ok(Some(current))
}

/// A braid: a representative word with group-equality semantics.
///
/// `==` decides equality in `B_∞` through the Artin representation and panics
/// if a free group image outgrows [`artin::MAX_ELEMENT_LEN`]; use
/// [`Braid::try_eq`] to get the error instead.
#[derive(Clone, Default)]
pub struct Braid {
    word: BraidWord,
    fingerprint: OnceLock<Fingerprint>,
}

impl Braid {
    pub fn new(word: BraidWord) -> Self {
        Braid { word, fingerprint: OnceLock::new() }
    }

    pub fn one() -> Self {
        Braid::default()
    }

    pub fn sigma(i: u32) -> Self {
        Braid::new(BraidWord::sigma(i))
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn into_word(self) -> BraidWord {
        self.word
    }

    /// Cached canonical fingerprint.
    pub fn fingerprint(&self) -> Result<&Fingerprint> {
        if let Some(fp) = self.fingerprint.get() {
            return Ok(fp);
        }
        let fp = fingerprint(&self.word)?;
        // a concurrent writer can only have stored the same value
        let _ = self.fingerprint.set(fp);
        Ok(self.fingerprint.get().expect("just set"))
    }

    pub fn try_eq(&self, other: &Braid) -> Result<bool> {
        if let (Some(a), Some(b)) = (self.fingerprint.get(), other.fingerprint.get()) {
            return Ok(a == b);
        }
        equal(&self.word, &other.word)
    }

    pub fn is_trivial(&self) -> Result<bool> {
        if let Some(fp) = self.fingerprint.get() {
            return Ok(fp.is_identity());
        }
        is_trivial(&self.word)
    }

    /// Group product, free-cancelled.
    pub fn mul(&self, other: &Braid) -> Braid {
        Braid::new(self.word.concat(&other.word).free_cancel())
    }

    pub fn inverse(&self) -> Braid {
        Braid::new(self.word.invert())
    }

    pub fn shift(&self, k: u32) -> Braid {
        Braid::new(self.word.shift(k))
    }

    pub fn classify(&self) -> Result<SigmaClass> {
        sigma_classify(&self.word, DEFAULT_STEP_CAP)
    }

    /// Position in the braid order.
    pub fn cmp_order(&self, other: &Braid) -> Result<Ordering> {
        compare(&self.word, &other.word, DEFAULT_STEP_CAP)
    }
}

impl From<BraidWord> for Braid {
    fn from(word: BraidWord) -> Self {
        Braid::new(word)
    }
}

impl From<Letter> for Braid {
    fn from(letter: Letter) -> Self {
        Braid::new(BraidWord::from_letters(vec![letter]))
    }
}

impl PartialEq for Braid {
    fn eq(&self, other: &Self) -> bool {
        self.try_eq(other).expect("braid equality check failed")
    }
}

impl Eq for Braid {}

impl fmt::Debug for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Braid[{}]", self.word)
    }
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i32]) -> BraidWord {
        BraidWord::from_signed(v)
    }

    fn classify(v: &[i32]) -> SigmaClass {
        sigma_classify(&w(v), DEFAULT_STEP_CAP).unwrap()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&[1]), SigmaClass::Positive(1));
        assert_eq!(classify(&[-2, 3]), SigmaClass::Negative(2));
        assert_eq!(classify(&[1, 2, 1, -2, -1, -2]), SigmaClass::Trivial);
        assert_eq!(classify(&[-1, 2, 1]), SigmaClass::Positive(1));
    }

    #[test]
    fn comparison_examples() {
        let cap = DEFAULT_STEP_CAP;
        assert_eq!(compare(&BraidWord::empty(), &w(&[1]), cap).unwrap(), Ordering::Less);
        // σ₁⁻¹σ₂σ₁ = σ₂σ₁σ₂⁻¹ is σ₁-positive
        assert_eq!(compare(&w(&[1]), &w(&[2, 1]), cap).unwrap(), Ordering::Less);
        assert_eq!(compare(&w(&[1, -2]), &w(&[1, -2]), cap).unwrap(), Ordering::Equal);
        assert_eq!(compare(&w(&[2]), &w(&[1]), cap).unwrap(), Ordering::Less);
    }

    #[test]
    fn shift_images() {
        let x = is_shift_image(&w(&[2]), 1).unwrap().expect("σ₂ is a shift");
        assert!(equal(&x, &w(&[1])).unwrap());
        assert!(is_shift_image(&w(&[1]), 1).unwrap().is_none());
        assert!(is_shift_image(&w(&[-2, 3]), 1).unwrap().is_some());
        assert!(is_shift_image(&w(&[-2, 3]), 2).unwrap().is_none());
        // a shift image written with σ₁ letters
        let x = is_shift_image(&w(&[1, 2, 1, -2, -1]), 1).unwrap().expect("σ₁σ₂σ₁σ₂⁻¹σ₁⁻¹ = σ₂");
        assert!(equal(&x, &w(&[1])).unwrap());
        let x = is_shift_image(&w(&[3, -4, 3]), 2).unwrap().unwrap();
        assert!(equal(&x.shift(2), &w(&[3, -4, 3])).unwrap());
    }

    #[test]
    fn braid_equality_uses_the_group() {
        assert_eq!(Braid::new(w(&[1, 2, 1])), Braid::new(w(&[2, 1, 2])));
        assert_ne!(Braid::sigma(1), Braid::sigma(2));
        let a = Braid::new(w(&[1, 3]));
        let b = Braid::new(w(&[3, 1]));
        a.fingerprint().unwrap();
        b.fingerprint().unwrap();
        assert!(a.try_eq(&b).unwrap());
    }
}
