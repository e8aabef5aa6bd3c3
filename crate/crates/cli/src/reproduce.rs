//! The worked examples, each checked against the library.

use serde_json::{json, Value};
use shelfbraid::engine::{artin_apply, equal, fingerprint, is_shift_image, reverse_to_pos_neg, FreeWord};
use shelfbraid::extended::{eb_equal, eb_mul, eb_shelf, tau_word};
use shelfbraid::laver::{build_cyclic, LaverTable};
use shelfbraid::quotient::{
    burau_shelf_op, inj_embed, perm_shelf_op, small_class_quotient, BurauMatrix, Injection, LaurentPoly, Perm,
};
use shelfbraid::shelf::{act_partial, act_positive, in_bn, left_divide, shelf_op, shifted_product, Action};
use shelfbraid::special::{
    complexity, decompose, decompose_positive, eval_term, is_special, laver_conjecture_probe,
    positive_special_length, simple_decomposition, synthesize_term,
};
use shelfbraid::{Braid, BraidWord, ColorSeq, ExtBraid, Result, Shelf, Term};

use crate::report::Report;
use crate::{Caps, Outcome};

type Check = fn() -> Result<bool>;

fn w(v: &[i32]) -> BraidWord {
    BraidWord::from_signed(v)
}

fn b(v: &[i32]) -> Braid {
    Braid::new(w(v))
}

fn one() -> Braid {
    Braid::one()
}

fn term(s: &str) -> Result<Term> {
    s.parse()
}

fn s(v: &[u32]) -> Perm {
    Perm::from_transpositions(v)
}

fn poly(s: &str) -> LaurentPoly {
    s.parse().expect("literal polynomial")
}

const EXAMPLES: &[(&str, Check)] = &[
    ("tau with no crossing strands is trivial", || Ok(tau_word(3, 0).is_empty() && tau_word(0, 3).is_empty())),
    ("s1 sends x1 to x1 x2 x1^-1", || Ok(artin_apply(&w(&[1]), 1)? == FreeWord::from_letters(&[1, 2, -1]))),
    ("s1 acts as (x1 x2 x1^-1, x1)", || {
        let fp = fingerprint(&w(&[1]))?;
        Ok(fp.images() == [FreeWord::from_letters(&[1, 2, -1]), FreeWord::generator(1)])
    }),
    ("s1 s2 s1 = s2 s1 s2", || equal(&w(&[1, 2, 1]), &w(&[2, 1, 2]))),
    ("s1 s3 = s3 s1", || equal(&w(&[1, 3]), &w(&[3, 1]))),
    ("reversing -2 -1 2 2 1 gives 1 1 | 2", || Ok(reverse_to_pos_neg(&w(&[-2, -1, 2, 2, 1]))? == (w(&[1, 1]), w(&[2])))),
    ("s1 is not a shift image", || Ok(is_shift_image(&w(&[1]), 1)?.is_none())),
    ("1 > 1 = s1", || shelf_op(&one(), &one()).try_eq(&b(&[1]))),
    ("1 > s1 = s2 s1", || shelf_op(&one(), &b(&[1])).try_eq(&b(&[2, 1]))),
    ("s1 > 1 = s1 s1 s2^-1", || shelf_op(&b(&[1]), &one()).try_eq(&b(&[1, 1, -2]))),
    ("1^[m] = s_(m-1) ... s1 for m = 2..6", || {
        for m in 2..=6u32 {
            if !one().right_power(m as usize).try_eq(&Braid::new(BraidWord::descending(m - 1, 1)))? {
                return Ok(false);
            }
        }
        Ok(true)
    }),
    ("1_[3] = s1 s1 s2^-1", || one().left_power(3).try_eq(&b(&[1, 1, -2]))),
    ("s2 s1 divided by 1 is s1", || Ok(left_divide(&one(), &b(&[2, 1]))?.map_or(false, |x| x == b(&[1])))),
    ("1 is not divisible by 1", || Ok(left_divide(&one(), &one())?.is_none())),
    ("s1 lies in B2", || in_bn(&b(&[1]), 2)),
    ("s2 lies in B3 but not in B2", || Ok(in_bn(&b(&[2]), 3)? && !in_bn(&b(&[2]), 2)?)),
    ("(1, 1, 1) . s1 s1 = (s1 s1 s2^-1, s1, 1)", || {
        Ok(act_positive(&ColorSeq::ones(3), &w(&[1, 1]))? == ColorSeq::new(vec![b(&[1, 1, -2]), b(&[1]), one()]))
    }),
    ("(1, 1, 1) . s2 s1 = (s2 s1, 1, 1)", || {
        Ok(act_positive(&ColorSeq::ones(3), &w(&[2, 1]))? == ColorSeq::new(vec![b(&[2, 1]), one(), one()]))
    }),
    ("(1, 1) . s1^-1 is undefined", || Ok(act_partial(&ColorSeq::ones(2), &w(&[-1]))? == Action::Undefined(1))),
    ("shifted product of (s1 s1 s2^-1, s1, 1) is s1 s1", || {
        shifted_product(&ColorSeq::new(vec![b(&[1, 1, -2]), b(&[1]), one()])).try_eq(&b(&[1, 1]))
    }),
    ("(1 > 1) = s1", || eval_term(&term("(1 > 1)")?).try_eq(&b(&[1]))),
    ("(1 > (1 > 1)) = s2 s1", || eval_term(&term("(1 > (1 > 1))")?).try_eq(&b(&[2, 1]))),
    ("((1 > 1) > 1) = s1 s1 s2^-1", || eval_term(&term("((1 > 1) > 1)")?).try_eq(&b(&[1, 1, -2]))),
    ("-2 -1 2 2 1 is special with value 1_[3]", || {
        Ok(is_special(&w(&[-2, -1, 2, 2, 1]))?.map_or(false, |v| v == one().left_power(3)))
    }),
    ("s2 is not special", || Ok(is_special(&w(&[2]))?.is_none())),
    ("decomposition of -1 -1 2 1", || {
        let dec = decompose(&w(&[-1, -1, 2, 1]), 3)?;
        Ok(dec.negative == vec![b(&[1, 1, -2]), b(&[1]), one()]
            && dec.positive == vec![b(&[2, 1]), one(), one()]
            && dec.reassemble() == b(&[-1, -1, 2, 1]))
    }),
    ("-1 -1 2 1 = sh(1^[2])^-1 (1_[3])^-1 1^[3]", || {
        let formula = BraidWord::product([
            &one().right_power(2).word().shift(1).invert(),
            &one().left_power(3).word().invert(),
            one().right_power(3).word(),
        ]);
        equal(&formula, &w(&[-1, -1, 2, 1]))
    }),
    ("positive part of s1 s1 is (s1 s1 s2^-1, s1, 1)", || {
        Ok(decompose_positive(&w(&[1, 1]), 3)? == vec![b(&[1, 1, -2]), b(&[1]), one()])
    }),
    ("s1 s1 s2^-1 is not in B2", || Ok(!in_bn(&b(&[1, 1, -2]), 2)?)),
    ("term for s1 is (1 > 1)", || Ok(synthesize_term(&b(&[1]), 4)? == Term::node(Term::Leaf, Term::Leaf))),
    ("term for s3 s2 s1 is the right comb of size 4", || Ok(synthesize_term(&b(&[3, 2, 1]), 4)? == Term::right_comb(4))),
    ("complexity of 1 is 0", || Ok(complexity(&one(), 1)? == 0)),
    ("s3 s2 s1 is the positive special braid of length 3", || Ok(positive_special_length(&w(&[3, 2, 1]))? == Some(3))),
    ("s2 s1 s2 is simple as (s2 s1) sh(s1)", || Ok(simple_decomposition(&w(&[2, 1, 2]))? == Some(vec![2, 1, 0]))),
    ("s1 s1 is not simple", || Ok(simple_decomposition(&w(&[1, 1]))?.is_none())),
    ("(1, 1, 1, 1) acts by every positive word", || {
        Ok(laver_conjecture_probe(&ColorSeq::ones(4), 3)?.all_positive_defined)
    }),
    ("id > id = s1, s1 > id = s2, s2 > id = s2 s3 s1", || {
        let id = Perm::identity();
        Ok(perm_shelf_op(&id, &id) == s(&[1])
            && perm_shelf_op(&s(&[1]), &id) == s(&[2])
            && perm_shelf_op(&s(&[2]), &id) == s(&[2, 3, 1]))
    }),
    ("permutation shelf table on id, s1, s2, s2 s3 s1", || {
        let heads = [Perm::identity(), s(&[1]), s(&[2]), s(&[2, 3, 1])];
        let table: [[&[u32]; 4]; 4] = [
            [&[1], &[2, 1], &[3, 1], &[3, 4, 2, 1]],
            [&[2], &[2, 1], &[3, 2], &[3, 4, 2, 1]],
            [&[2, 3, 1], &[3, 1], &[2, 1], &[3, 4, 2, 3, 4, 1]],
            [&[3, 4, 2, 3, 4], &[3, 4, 2, 3, 4, 1], &[4, 3], &[3, 1]],
        ];
        Ok(heads.iter().zip(&table).all(|(f, row)| heads.iter().zip(row).all(|(g, v)| perm_shelf_op(f, g) == s(v))))
    }),
    ("s2 s1 = ((s2 s1) > s1) > s2 s3 s1", || {
        Ok(perm_shelf_op(&perm_shelf_op(&s(&[2, 1]), &s(&[1])), &s(&[2, 3, 1])) == s(&[2, 1]))
    }),
    ("id > id_[3] = s3 s1 = id_[3] > id_[2]", || {
        let id = Perm::identity();
        let (l2, l3) = (id.left_power(2), id.left_power(3));
        Ok(perm_shelf_op(&id, &l3) == s(&[3, 1]) && perm_shelf_op(&l3, &l2) == s(&[3, 1]))
    }),
    ("class quotient reproduces A1", || {
        let a1 = LaverTable::laver(1);
        Ok((1..=2).all(|x| (1..=2).all(|y| small_class_quotient(x, y) == a1.get(x, y))))
    }),
    ("the embedding sends id to the shift", || Ok(inj_embed(&Perm::identity()) == Injection::shift_map())),
    ("Burau matrix of s1 has block (1-t, t; 1, 0)", || {
        let rows = BurauMatrix::sigma(1).rows(2);
        Ok(rows == vec![vec![poly("1 - t"), poly("t")], vec![poly("1"), poly("0")]])
    }),
    ("I > I_[3] differs from I_[3] > I_[2]", || {
        let id = BurauMatrix::identity();
        let (l2, l3) = (id.left_power(2), id.left_power(3));
        Ok(burau_shelf_op(&id, &l3) != burau_shelf_op(&l3, &l2))
    }),
    ("A2 table", || {
        let rows: Vec<Vec<u32>> = (1..=4).map(|x| LaverTable::laver(2).row(x)).collect();
        Ok(rows == vec![vec![2, 4, 2, 4], vec![3, 4, 3, 4], vec![4, 4, 4, 4], vec![1, 2, 3, 4]])
    }),
    ("row 3 of A3 is 4 8 4 8 4 8 4 8", || Ok(LaverTable::laver(3).row(3) == [4, 8, 4, 8, 4, 8, 4, 8])),
    ("A0 is 1 > 1 = 1", || Ok(LaverTable::laver(0).get(1, 1) == 1)),
    ("the cyclic table on 8 elements is a shelf, on 3 it is not", || {
        Ok(build_cyclic(8).is_left_shelf() && !build_cyclic(3).is_left_shelf())
    }),
    ("row periods: A2 row 1 is 2, A3 row 7 is 1", || {
        Ok(LaverTable::laver(2).row_period(1) == 2 && LaverTable::laver(3).row_period(7) == 1)
    }),
    ("A3 projects onto A2 and A1 onto A0", || {
        Ok(LaverTable::laver(3).project() == Some(LaverTable::laver(2))
            && LaverTable::laver(1).project() == Some(LaverTable::laver(0)))
    }),
    ("in A2, 1 > 1_[3] = 2 and 1_[3] > 1_[2] = 4", || {
        let a2 = LaverTable::laver(2);
        let (l2, l3) = (a2.powers(1, 2).1, a2.powers(1, 3).1);
        Ok(l2 == 2 && l3 == 3 && a2.get(1, l3) == 2 && a2.get(l3, l2) == 4)
    }),
    ("in A1, 1 > 1 = 2 and 2 > 2 = 2", || {
        let a1 = LaverTable::laver(1);
        Ok(a1.powers(1, 2).0 == 2 && a1.powers(2, 2).0 == 2)
    }),
    ("s1 tau^2 = tau^2", || {
        let tau2 = eb_mul(&ExtBraid::tau(), &ExtBraid::tau());
        eb_equal(&eb_mul(&ExtBraid::sigma(1), &tau2), &tau2)
    }),
    ("s_i tau = tau s_(i-1)", || {
        for i in 2..=5 {
            let lhs = eb_mul(&ExtBraid::sigma(i), &ExtBraid::tau());
            if !eb_equal(&lhs, &eb_mul(&ExtBraid::tau(), &ExtBraid::sigma(i - 1)))? {
                return Ok(false);
            }
        }
        Ok(true)
    }),
    ("on layer 0 the operation is conjugation", || {
        let (x, y) = (w(&[1, -2]), w(&[2, 2]));
        let conj = BraidWord::product([&x, &y, &x.invert()]);
        eb_equal(&eb_shelf(&ExtBraid::new(x, 0), &ExtBraid::new(y, 0)), &ExtBraid::new(conj, 0))
    }),
    ("on layer 1 the operation is the braid shelf", || {
        let (x, y) = (b(&[1, -2]), b(&[2, 2]));
        let expected = ExtBraid::new(shelf_op(&x, &y), 1);
        eb_equal(&eb_shelf(&ExtBraid::new(x, 1), &ExtBraid::new(y, 1)), &expected)
    }),
];

pub fn run(_caps: Caps) -> Outcome {
    let mut lines = Vec::new();
    let mut results = Vec::new();
    let mut failed = 0;
    for (name, check) in EXAMPLES {
        let (pass, note) = match check() {
            Ok(true) => (true, String::new()),
            Ok(false) => (false, String::new()),
            Err(e) => (false, format!(" ({e})")),
        };
        failed += usize::from(!pass);
        lines.push(format!("{} {name}{note}", if pass { "ok  " } else { "FAIL" }));
        results.push(json!({"example": name, "pass": pass}));
    }
    lines.push(format!("{} of {} examples reproduced", EXAMPLES.len() - failed, EXAMPLES.len()));
    let report = Report::new("paper-examples", &[], Value::Array(results), lines.join("\n"));
    Ok(if failed == 0 { report } else { report.negative() })
}
