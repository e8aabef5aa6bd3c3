//! The braid shelf `(B_∞, ▷)` with `β₁ ▷ β₂ = β₁ · sh(β₂) · σ₁ · sh(β₁)⁻¹`,
//! left division, the membership test for `B_n`, and the coloring action of
//! braid words on sequences of braids.

use std::fmt;
use std::str::FromStr;

use crate::engine::{handle_reduce, is_shift_image, Braid, DEFAULT_STEP_CAP};
use crate::error::{Error, Result};
use crate::words::BraidWord;

/// A set with a binary operation, meant to satisfy left self-distributivity.
pub trait Shelf: Sized + Clone {
    fn op(&self, rhs: &Self) -> Self;

    /// `a^{[1]} = a`, `a^{[m+1]} = a ▷ a^{[m]}`.
    fn right_power(&self, m: usize) -> Self {
        assert!(m >= 1, "powers start at 1");
        let mut acc = self.clone();
        for _ in 1..m {
            acc = self.op(&acc);
        }
        acc
    }

    /// `a_{[1]} = a`, `a_{[m+1]} = a_{[m]} ▷ a`.
    fn left_power(&self, m: usize) -> Self {
        assert!(m >= 1, "powers start at 1");
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.op(self);
        }
        acc
    }
}

impl Shelf for Braid {
    fn op(&self, rhs: &Self) -> Self {
        shelf_op(self, rhs)
    }
}

pub fn shelf_op(b1: &Braid, b2: &Braid) -> Braid {
    let word = BraidWord::product([
        b1.word(),
        &b2.word().shift(1),
        &BraidWord::sigma(1),
        &b1.word().shift(1).invert(),
    ]);
    Braid::new(word.free_cancel())
}

/// The right self-distributive counterpart `sh(β₂)⁻¹ · σ₁ · sh(β₁) · β₂`.
pub fn opposite_op(b1: &Braid, b2: &Braid) -> Braid {
    let word = BraidWord::product([
        &b2.word().shift(1).invert(),
        &BraidWord::sigma(1),
        &b1.word().shift(1),
        b2.word(),
    ]);
    Braid::new(word.free_cancel())
}

/// `1^{[m]} = σ_{m-1} ⋯ σ_1` as a word.
pub fn unit_right_power_word(m: u32) -> BraidWord {
    BraidWord::descending(m.saturating_sub(1), 1)
}

/// The unique `x` with `b ▷ x = c`, or `None` when `c ∉ Im(L_b)`.
pub fn left_divide(b: &Braid, c: &Braid) -> Result<Option<Braid>> {
    let lhs = shelf_op(b, c);
    let rhs = shelf_op(&b.right_power(2), c);
    if !lhs.try_eq(&rhs)? {
        return Ok(None);
    }
    let delta = BraidWord::product([
        &b.word().invert(),
        c.word(),
        &b.word().shift(1),
        &BraidWord::sigma(1).invert(),
    ]);
    match is_shift_image(&delta, 1)? {
        Some(x) => Ok(Some(Braid::new(x))),
        None => Err(Error::Inconsistent(format!(
            "division test passed for ({b}, {c}) but the quotient is not a shift image"
        ))),
    }
}

/// Whether `b ∈ B_n`, decided by `b ▷ 1^{[n]} = 1^{[n+1]}`.
pub fn in_bn(b: &Braid, n: u32) -> Result<bool> {
    if n <= 1 {
        return b.is_trivial();
    }
    let lhs = shelf_op(b, &Braid::new(unit_right_power_word(n)));
    lhs.try_eq(&Braid::new(unit_right_power_word(n + 1)))
}

/// Replaces the word of `b` by its handle reduction when that is shorter.
/// Colors are compared through the Artin action, so only their length
/// matters here.
fn shorten(b: Braid) -> Braid {
    match handle_reduce(b.word(), DEFAULT_STEP_CAP) {
        Ok(r) if r.len() < b.word().len() => Braid::new(r),
        _ => b,
    }
}

/// A finite sequence of braids acted on by braid words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColorSeq(Vec<Braid>);

/// Result of the partial action of a braid word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    Defined(ColorSeq),
    /// The 1-based position of the first letter whose division failed.
    Undefined(usize),
}

impl Action {
    pub fn defined(self) -> Option<ColorSeq> {
        match self {
            Action::Defined(seq) => Some(seq),
            Action::Undefined(_) => None,
        }
    }
}

impl ColorSeq {
    pub fn new(colors: Vec<Braid>) -> Self {
        ColorSeq(colors)
    }

    /// `(1, …, 1)` of length `n`.
    pub fn ones(n: usize) -> Self {
        ColorSeq(vec![Braid::one(); n])
    }

    pub fn colors(&self) -> &[Braid] {
        &self.0
    }

    pub fn into_colors(self) -> Vec<Braid> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn check_width(&self, w: &BraidWord) -> Result<()> {
        if !w.is_empty() && w.width() as usize > self.0.len() {
            return Err(Error::SequenceTooShort { len: self.0.len(), width: w.width() });
        }
        Ok(())
    }

    fn apply_positive(&mut self, i: usize) {
        let (a, b) = (&self.0[i - 1], &self.0[i]);
        let new_left = shorten(shelf_op(a, b));
        let new_right = a.clone();
        self.0[i - 1] = new_left;
        self.0[i] = new_right;
    }
}

impl fmt::Display for ColorSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, b) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            if b.word().is_empty() {
                f.write_str("1")?;
            } else {
                write!(f, "[{b}]")?;
            }
        }
        f.write_str(")")
    }
}

impl FromStr for ColorSeq {
    type Err = Error;

    /// The display form: `(1, [1 1 -2], 1)`, where `1` is the unit and a
    /// bracketed entry is a braid word.
    fn from_str(s: &str) -> Result<ColorSeq> {
        let s = s.trim();
        let body = s
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::Syntax(format!("expected `(…)`, got `{s}`")))?;
        if body.trim().is_empty() {
            return Ok(ColorSeq::default());
        }
        body.split(',')
            .map(|entry| {
                let entry = entry.trim();
                if entry == "1" {
                    return Ok(Braid::one());
                }
                let word = entry
                    .strip_prefix('[')
                    .and_then(|e| e.strip_suffix(']'))
                    .ok_or_else(|| Error::Syntax(format!("color `{entry}` is neither `1` nor `[word]`")))?;
                Ok(Braid::new(word.parse()?))
            })
            .collect::<Result<Vec<_>>>()
            .map(ColorSeq)
    }
}

/// The action of a positive word: `(…, a_i, a_{i+1}, …) • σ_i = (…, a_i ▷ a_{i+1}, a_i, …)`.
pub fn act_positive(a: &ColorSeq, w: &BraidWord) -> Result<ColorSeq> {
    a.check_width(w)?;
    if let Some(pos) = w.letters().iter().position(|l| !l.is_positive()) {
        return Err(Error::Syntax(format!("letter {} of `{w}` is negative", pos + 1)));
    }
    let mut seq = a.clone();
    for l in w.letters() {
        seq.apply_positive(l.index() as usize);
    }
    Ok(seq)
}

/// The partial action of an arbitrary word; `σ_i⁻¹` maps
/// `(…, a_i, a_{i+1}, …)` to `(…, a_{i+1}, x, …)` where `a_{i+1} ▷ x = a_i`.
pub fn act_partial(a: &ColorSeq, w: &BraidWord) -> Result<Action> {
    a.check_width(w)?;
    let mut seq = a.clone();
    for (pos, l) in w.letters().iter().enumerate() {
        let i = l.index() as usize;
        if l.is_positive() {
            seq.apply_positive(i);
            continue;
        }
        let Some(x) = left_divide(&seq.0[i], &seq.0[i - 1])? else {
            return Ok(Action::Undefined(pos + 1));
        };
        let moved = std::mem::take(&mut seq.0[i]);
        seq.0[i - 1] = moved;
        seq.0[i] = shorten(x);
    }
    Ok(Action::Defined(seq))
}

/// `β₁ · sh(β₂) ⋯ sh^{n-1}(β_n)`.
pub fn shifted_product(a: &ColorSeq) -> Braid {
    let mut word = BraidWord::empty();
    for (k, b) in a.0.iter().enumerate() {
        word = word.concat(&b.word().shift(k as u32));
    }
    Braid::new(word.free_cancel())
}
