mod common;

use common::{random_word, rng};
use rand::Rng;
use shelfbraid::quotient::{
    burau_of, burau_shelf_op, inj_embed, inj_shelf_op, perm_of, perm_shelf_op, BurauMatrix, Injection, LaurentPoly,
    Perm,
};
use shelfbraid::shelf::shelf_op;
use shelfbraid::special::eval_term;
use shelfbraid::{Braid, BraidWord, Shelf, Term};

fn random_perm(r: &mut impl Rng, n: u32) -> Perm {
    let mut images: Vec<u32> = (1..=n).collect();
    for k in (1..images.len()).rev() {
        images.swap(k, r.gen_range(0..=k));
    }
    Perm::from_images(images).unwrap()
}

fn random_injection(r: &mut impl Rng) -> Injection {
    let mut f = Injection::identity();
    for _ in 0..r.gen_range(0..4) {
        let g = match r.gen_range(0..3) {
            0 => Injection::shift_map(),
            1 => inj_embed(&random_perm(r, 5)),
            _ => {
                let n = r.gen_range(0..5u32);
                let mut values: Vec<u32> = (1..=n + 2).collect();
                for k in (1..values.len()).rev() {
                    values.swap(k, r.gen_range(0..=k));
                }
                values.truncate(n as usize);
                Injection::new(values, 2).unwrap()
            }
        };
        f = &f * &g;
    }
    f
}

fn random_matrix(r: &mut impl Rng) -> BurauMatrix {
    burau_of(&random_word(r, 6, 4))
}

fn check_ld<S: Shelf + PartialEq + std::fmt::Debug>(x: &S, y: &S, z: &S) {
    assert_eq!(x.op(&y.op(z)), x.op(y).op(&x.op(z)), "{x:?}, {y:?}, {z:?}");
}

#[test]
fn all_three_quotients_are_shelves() {
    let mut r = rng(51);
    for _ in 0..300 {
        check_ld(&random_perm(&mut r, 6), &random_perm(&mut r, 6), &random_perm(&mut r, 6));
        check_ld(&random_injection(&mut r), &random_injection(&mut r), &random_injection(&mut r));
    }
    for _ in 0..100 {
        check_ld(&random_matrix(&mut r), &random_matrix(&mut r), &random_matrix(&mut r));
    }
}

#[test]
fn morphism_squares() {
    let mut r = rng(52);
    for _ in 0..200 {
        let (x, y) = (random_word(&mut r, 8, 4), random_word(&mut r, 8, 4));
        let braid = shelf_op(&Braid::new(x.clone()), &Braid::new(y.clone()));
        assert_eq!(perm_of(braid.word()), perm_shelf_op(&perm_of(&x), &perm_of(&y)));
        assert_eq!(burau_of(braid.word()), burau_shelf_op(&burau_of(&x), &burau_of(&y)));
        let (f, g) = (random_perm(&mut r, 6), random_perm(&mut r, 6));
        assert_eq!(inj_embed(&perm_shelf_op(&f, &g)), inj_shelf_op(&inj_embed(&f), &inj_embed(&g)));
    }
}

#[test]
fn representations_are_homomorphisms() {
    let mut r = rng(53);
    for _ in 0..200 {
        let (x, y) = (random_word(&mut r, 8, 4), random_word(&mut r, 8, 4));
        assert_eq!(perm_of(&x.concat(&y)), &perm_of(&x) * &perm_of(&y));
        assert_eq!(burau_of(&x.concat(&y)), &burau_of(&x) * &burau_of(&y));
        assert_eq!(burau_of(&x.shift(1)), burau_of(&x).shift());
        assert_eq!(perm_of(&x.shift(1)), perm_of(&x).shift());
        assert!((&burau_of(&x) * &burau_of(&x).inverse()).is_identity());
    }
    assert_eq!(burau_of(&BraidWord::from_signed(&[1, 2, 1])), burau_of(&BraidWord::from_signed(&[2, 1, 2])));
}

#[test]
fn unit_powers_of_permutations() {
    let id = Perm::identity();
    for n in 1..=6u32 {
        let cycle: Vec<u32> = (1..n).rev().collect();
        assert_eq!(id.right_power(n as usize), Perm::from_transpositions(&cycle));
    }
    let s = Perm::from_transpositions;
    assert_eq!(id.left_power(4), s(&[2, 3, 1]));
    assert_eq!(id.left_power(5), s(&[3, 4, 2, 3, 4]));
}

#[test]
fn special_permutations_have_small_class() {
    for size in 1..=6 {
        for t in Term::all_of_size(size) {
            let f = t.eval_in(&Perm::identity());
            assert!(f.class() <= 2, "{t}");
            if size <= 5 {
                assert_eq!(f, perm_of(eval_term(&t).word()), "{t}");
            }
        }
    }
}

#[test]
fn shifted_trace_and_determinant() {
    let mut r = rng(54);
    let t = LaurentPoly::t_pow(1);
    for _ in 0..100 {
        let (a, b) = (random_matrix(&mut r), random_matrix(&mut r));
        let c = burau_shelf_op(&a, &b);
        assert_eq!(c.determinant(), &LaurentPoly::monomial(-1, 1) * &b.determinant());
        assert_eq!(c.shtr(), &b.shtr() + &t);
    }
}

#[test]
fn text_forms_round_trip() {
    let mut r = rng(55);
    for _ in 0..50 {
        let f = random_perm(&mut r, 6);
        assert_eq!(f.to_string().parse::<Perm>().unwrap(), f);
        let m = random_matrix(&mut r);
        for row in m.rows(m.size()) {
            for p in row {
                assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
            }
        }
    }
}
