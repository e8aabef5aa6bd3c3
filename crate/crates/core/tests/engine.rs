mod common;

use std::cmp::Ordering;

use common::{random_word, rng, scramble, w};
use rand::Rng;
use shelfbraid::engine::{
    artin_apply, compare, equal, fingerprint, handle_reduce, is_shift_image, reverse_to_neg_pos, reverse_to_pos_neg,
    sigma_classify, FreeWord, DEFAULT_STEP_CAP,
};
use shelfbraid::{BraidWord, SigmaClass};

#[test]
fn soundness_triangle() {
    let mut r = rng(21);
    for _ in 0..500 {
        let w1 = random_word(&mut r, 12, 4);
        let w2 = if r.gen_bool(0.5) { scramble(&mut r, &w1, 4) } else { random_word(&mut r, 12, 4) };
        let eq = equal(&w1, &w2).unwrap();
        assert_eq!(eq, fingerprint(&w1).unwrap() == fingerprint(&w2).unwrap(), "`{w1}` vs `{w2}`");
        assert_eq!(eq, compare(&w1, &w2, DEFAULT_STEP_CAP).unwrap() == Ordering::Equal, "`{w1}` vs `{w2}`");
    }
}

#[test]
fn reductions_preserve_the_braid() {
    let mut r = rng(22);
    for _ in 0..300 {
        let word = random_word(&mut r, 14, 5);
        let reduced = handle_reduce(&word, DEFAULT_STEP_CAP).unwrap();
        assert!(equal(&word, &reduced).unwrap());
        let (u, v) = reverse_to_pos_neg(&word).unwrap();
        assert!(u.is_positive() && v.is_positive());
        assert!(equal(&word, &u.concat(&v.invert())).unwrap());
        let (n, p) = reverse_to_neg_pos(&word).unwrap();
        assert!(n.is_positive() && p.is_positive());
        assert!(equal(&word, &n.invert().concat(&p)).unwrap());
    }
}

#[test]
fn artin_action_respects_relations() {
    let images = |v: &[i32], n: u32| -> Vec<FreeWord> { (1..=n).map(|i| artin_apply(&w(v), i).unwrap()).collect() };
    assert_eq!(images(&[1, 2, 1], 3), images(&[2, 1, 2], 3));
    assert_eq!(images(&[1, 3], 4), images(&[3, 1], 4));
    assert_ne!(images(&[1, 2], 3), images(&[2, 1], 3));
    assert_eq!(images(&[2, -2], 3), images(&[], 3));
}

#[test]
fn order_is_linear_and_left_invariant() {
    let mut r = rng(23);
    let sample: Vec<BraidWord> = (0..30).map(|_| random_word(&mut r, 8, 3)).collect();
    let cmp = |x: &BraidWord, y: &BraidWord| compare(x, y, DEFAULT_STEP_CAP).unwrap();
    for x in &sample {
        for y in &sample {
            assert_eq!(cmp(x, y), cmp(y, x).reverse());
            for z in &sample {
                if cmp(x, y) == Ordering::Less && cmp(y, z) == Ordering::Less {
                    assert_eq!(cmp(x, z), Ordering::Less, "`{x}` < `{y}` < `{z}`");
                }
            }
        }
    }
    for _ in 0..200 {
        let (a, x, y) = (random_word(&mut r, 6, 4), random_word(&mut r, 8, 4), random_word(&mut r, 8, 4));
        assert_eq!(cmp(&x, &y), cmp(&a.concat(&x), &a.concat(&y)));
    }
}

#[test]
fn sigma_one_free_words_are_shift_images() {
    let mut r = rng(24);
    for k in 0..200 {
        let word = if k % 2 == 0 {
            let base = random_word(&mut r, 8, 4).shift(1);
            scramble(&mut r, &base, 5)
        } else {
            random_word(&mut r, 8, 4)
        };
        let class = sigma_classify(&word, DEFAULT_STEP_CAP).unwrap();
        let free = !matches!(class, SigmaClass::Positive(1) | SigmaClass::Negative(1));
        let image = is_shift_image(&word, 1).unwrap();
        assert_eq!(free, image.is_some() || class == SigmaClass::Trivial, "`{word}`: {class}");
        if let Some(x) = image {
            assert!(equal(&x.shift(1), &word).unwrap());
        }
    }
}

#[test]
fn larue_ending() {
    let mut r = rng(25);
    let mut seen = 0;
    for _ in 0..300 {
        let word = random_word(&mut r, 10, 4);
        if sigma_classify(&word, DEFAULT_STEP_CAP).unwrap() == SigmaClass::Positive(1) {
            let image = artin_apply(&word, 1).unwrap();
            assert_eq!(image.last(), Some(-1), "`{word}`");
            seen += 1;
        }
    }
    assert!(seen > 20);
}
