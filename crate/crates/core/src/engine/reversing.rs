//! Subword reversing.
//!
//! Right reversing pushes negative letters to the right:
//!
//! ```text
//! σ_i⁻¹ σ_i → ε
//! σ_i⁻¹ σ_j → σ_j σ_i⁻¹              |i - j| ≥ 2
//! σ_i⁻¹ σ_j → σ_j σ_i σ_j⁻¹ σ_i⁻¹    |i - j| = 1
//! ```
//!
//! until the word reads `u v⁻¹` with `u`, `v` positive. Left reversing is
//! obtained through the letter-order anti-automorphism.

use crate::error::{Error, Result};
use crate::words::{BraidWord, Letter};

/// Bound on elementary reversing steps. Reversing always terminates on braid
/// words; the cap only reports runaway behaviour.
pub const REVERSING_STEP_CAP: usize = 10_000_000;

/// Returns `(u, v)` positive with `w = u · v⁻¹`.
pub fn reverse_to_pos_neg(w: &BraidWord) -> Result<(BraidWord, BraidWord)> {
    let mut word: Vec<Letter> = w.free_cancel().into_letters();
    let mut steps = 0usize;
    let mut k = 0usize;
    while k + 1 < word.len() {
        let (a, b) = (word[k], word[k + 1]);
        if a.is_positive() || !b.is_positive() {
            k += 1;
            continue;
        }
        steps += 1;
        if steps > REVERSING_STEP_CAP {
            return Err(Error::CapExceeded { what: "subword reversing", cap: REVERSING_STEP_CAP });
        }
        let (i, j) = (a.index(), b.index());
        let replacement: Vec<Letter> = if i == j {
            Vec::new()
        } else if i.abs_diff(j) >= 2 {
            vec![b, a]
        } else {
            vec![Letter::sigma(j), Letter::sigma(i), Letter::sigma_inv(j), Letter::sigma_inv(i)]
        };
        word.splice(k..k + 2, replacement);
        k = k.saturating_sub(1);
    }
    let split = word.iter().position(|l| !l.is_positive()).unwrap_or(word.len());
    let u = BraidWord::from_letters(word[..split].to_vec());
    let v = BraidWord::from_letters(word[split..].to_vec()).invert();
    Ok((u, v))
}

/// Returns `(n, p)` positive with `w = n⁻¹ · p`.
pub fn reverse_to_neg_pos(w: &BraidWord) -> Result<(BraidWord, BraidWord)> {
    let (u, v) = reverse_to_pos_neg(&w.reversed())?;
    Ok((v.reversed(), u.reversed()))
}
