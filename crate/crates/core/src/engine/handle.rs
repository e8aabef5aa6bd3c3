//! Handle reduction.
//!
//! A `σ_i`-handle is a subword `σ_i^e v σ_i^{-e}` where every letter of `v`
//! has index greater than `i`. Reducing it deletes the two outer letters and
//! replaces each `σ_{i+1}^d` of `v` by `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`.
//!
//! The engine always reduces the handle whose right end comes first. Such a
//! handle contains no other handle, so in particular no `σ_{i+1}`-handle.

use crate::error::{Error, Result};
use crate::words::{BraidWord, Letter};

/// Default bound on the number of elementary reductions.
pub const DEFAULT_STEP_CAP: usize = 1_000_000;

/// Finds the handle with the leftmost right end among those ending at or
/// after `from`. Returns `(start, end)` positions, both inclusive.
fn first_handle(word: &[Letter], from: usize, max_index: usize) -> Option<(usize, usize)> {
    // last[k] = last position < q holding a letter of index k
    let mut last: Vec<Option<usize>> = vec![None; max_index + 2];
    for (pos, l) in word[..from].iter().enumerate() {
        last[l.index() as usize] = Some(pos);
    }
    for q in from..word.len() {
        let l = word[q];
        let i = l.index() as usize;
        let nearest = (1..=i).filter_map(|k| last[k].map(|p| (p, k))).max_by_key(|&(p, _)| p);
        if let Some((p, k)) = nearest {
            if k == i && word[p] == l.inverse() {
                return Some((p, q));
            }
        }
        last[i] = Some(q);
    }
    None
}

/// Reduces handles until none is left.
///
/// The output represents the same braid as `w`. In a handle-free nonempty
/// word, all letters of the lowest index share one sign.
pub fn handle_reduce(w: &BraidWord, step_cap: usize) -> Result<BraidWord> {
    let mut word: Vec<Letter> = w.free_cancel().into_letters();
    let max_index = word.iter().map(|l| l.index() as usize).max().unwrap_or(0);
    let mut from = 0;
    let mut steps = 0usize;
    while let Some((p, q)) = first_handle(&word, from, max_index) {
        steps += 1;
        if steps > step_cap {
            return Err(Error::CapExceeded { what: "handle reduction", cap: step_cap });
        }
        let outer = word[p];
        let i = outer.index();
        let e = outer.is_positive();
        let mut replacement = Vec::with_capacity(3 * (q - p));
        for &l in &word[p + 1..q] {
            if l.index() == i + 1 {
                replacement.push(Letter::new(i + 1, !e));
                replacement.push(Letter::new(i, l.is_positive()));
                replacement.push(Letter::new(i + 1, e));
            } else {
                replacement.push(l);
            }
        }
        word.splice(p..=q, replacement);
        // nothing before p changed, so no handle can end before p
        from = p;
    }
    Ok(BraidWord::from_letters(word))
}
