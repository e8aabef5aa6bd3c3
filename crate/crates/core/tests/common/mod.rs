#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shelfbraid::{Braid, BraidWord, Letter};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform word of length `0..=max_len` on `σ_1^{±1}, …, σ_{max_index}^{±1}`.
pub fn random_word(rng: &mut impl Rng, max_len: usize, max_index: u32) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    random_word_of_len(rng, len, max_index)
}

pub fn random_word_of_len(rng: &mut impl Rng, len: usize, max_index: u32) -> BraidWord {
    (0..len).map(|_| Letter::new(rng.gen_range(1..=max_index), rng.gen_bool(0.5))).collect()
}

pub fn random_positive_word(rng: &mut impl Rng, max_len: usize, max_index: u32) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Letter::sigma(rng.gen_range(1..=max_index))).collect()
}

/// Word on indices `lo..=hi` only.
pub fn random_word_between(rng: &mut impl Rng, max_len: usize, lo: u32, hi: u32) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Letter::new(rng.gen_range(lo..=hi), rng.gen_bool(0.5))).collect()
}

pub fn random_braid(rng: &mut impl Rng, max_len: usize, max_index: u32) -> Braid {
    Braid::new(random_word(rng, max_len, max_index))
}

/// Inserts a conjugated relator at a random position; the braid is unchanged.
pub fn scramble(rng: &mut impl Rng, w: &BraidWord, max_index: u32) -> BraidWord {
    let i = rng.gen_range(1..max_index.max(2));
    let relator = if rng.gen_bool(0.5) {
        BraidWord::from_signed(&[i as i32, i as i32 + 1, i as i32, -(i as i32 + 1), -(i as i32), -(i as i32 + 1)])
    } else {
        let j = i + 2;
        BraidWord::from_signed(&[i as i32, j as i32, -(i as i32), -(j as i32)])
    };
    let c = random_word(rng, 3, max_index);
    let inserted = BraidWord::product([&c, &relator, &c.invert()]);
    let letters = w.letters();
    let at = rng.gen_range(0..=letters.len());
    BraidWord::product([
        &BraidWord::from_letters(letters[..at].to_vec()),
        &inserted,
        &BraidWord::from_letters(letters[at..].to_vec()),
    ])
}

pub fn w(v: &[i32]) -> BraidWord {
    BraidWord::from_signed(v)
}

pub fn b(v: &[i32]) -> Braid {
    Braid::new(BraidWord::from_signed(v))
}
