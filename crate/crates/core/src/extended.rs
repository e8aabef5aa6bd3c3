//! Extended braids `[β, p]`: limits of `β · τ_{p,n}` as `n → ∞`, where
//! `τ_{p,n}` has `n` strands crossing over `p` strands.
//!
//! `[β, p] = [γ, q]` iff `p = q` and `β⁻¹γ ∈ B_p`. Values are kept as
//! arbitrary representatives; every comparison goes through [`eb_equal`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::engine::{is_shift_image, Braid};
use crate::error::{Error, Result};
use crate::shelf::{in_bn, Shelf};
use crate::words::BraidWord;

/// `τ_{p,n} = ∏_{k=1..n} σ_{p+k-1} ⋯ σ_k`.
pub fn tau_word(p: u32, n: u32) -> BraidWord {
    BraidWord::tau(p, n)
}

/// A value of the ultrametric: `0` or `2^{-p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Distance {
    Zero,
    /// `2^{-p}`
    Pow(u32),
}

impl Distance {
    pub fn to_f64(self) -> f64 {
        match self {
            Distance::Zero => 0.0,
            Distance::Pow(p) => 0.5f64.powi(p as i32),
        }
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Distance::Zero, Distance::Zero) => Ordering::Equal,
            (Distance::Zero, _) => Ordering::Less,
            (_, Distance::Zero) => Ordering::Greater,
            (Distance::Pow(a), Distance::Pow(b)) => b.cmp(a),
        }
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Zero => f.write_str("0"),
            Distance::Pow(0) => f.write_str("1"),
            Distance::Pow(p) => write!(f, "2^-{p}"),
        }
    }
}

/// `d(β₁, β₂) = 2^{-p}` for the largest `p` with `β₁⁻¹β₂ ∈ Im(sh^p)`.
pub fn braid_distance(w1: &BraidWord, w2: &BraidWord) -> Result<Distance> {
    let mut current = w1.invert().concat(w2).free_cancel();
    if Braid::new(current.clone()).is_trivial()? {
        return Ok(Distance::Zero);
    }
    let mut p = 0;
    // a nontrivial braid of width n is not in Im(sh^n)
    while let Some(x) = is_shift_image(&current, 1)? {
        p += 1;
        current = x;
        if p > w1.width() + w2.width() {
            return Err(Error::Inconsistent(format!("`{w1}` and `{w2}` differ but look arbitrarily close")));
        }
    }
    Ok(Distance::Pow(p))
}

/// The class `[β, p]`.
#[derive(Clone, Debug)]
pub struct ExtBraid {
    pub beta: Braid,
    pub p: u32,
}

impl ExtBraid {
    pub fn new(beta: impl Into<Braid>, p: u32) -> Self {
        ExtBraid { beta: beta.into(), p }
    }

    /// `[1, 0]`, the unit of the monoid.
    pub fn one() -> Self {
        ExtBraid::new(Braid::one(), 0)
    }

    /// `τ = [1, 1]`.
    pub fn tau() -> Self {
        ExtBraid::new(Braid::one(), 1)
    }

    pub fn sigma(i: u32) -> Self {
        ExtBraid::new(Braid::sigma(i), 0)
    }

    pub fn try_eq(&self, other: &ExtBraid) -> Result<bool> {
        eb_equal(self, other)
    }
}

/// `p = q` and `β⁻¹γ ∈ B_p`.
pub fn eb_equal(x: &ExtBraid, y: &ExtBraid) -> Result<bool> {
    if x.p != y.p {
        return Ok(false);
    }
    in_bn(&x.beta.inverse().mul(&y.beta), x.p)
}

/// `[β, p] · [γ, q] = [β · sh^p(γ), p + q]`.
pub fn eb_mul(x: &ExtBraid, y: &ExtBraid) -> ExtBraid {
    ExtBraid::new(x.beta.mul(&y.beta.shift(x.p)), x.p + y.p)
}

/// `[β, p] ▷ [γ, q] = [β · sh^p(γ) · τ_{p,q} · sh^q(β)⁻¹, q]`.
pub fn eb_shelf(x: &ExtBraid, y: &ExtBraid) -> ExtBraid {
    let word = BraidWord::product([
        x.beta.word(),
        &y.beta.word().shift(x.p),
        &tau_word(x.p, y.p),
        &x.beta.word().shift(y.p).invert(),
    ]);
    ExtBraid::new(word.free_cancel(), y.p)
}

/// `lim_n d(β τ_{p,n}, γ τ_{q,n})`. For equal classes the terms tend to 0;
/// otherwise the limit is read off at two consecutive `n` past the point
/// where the sequence is constant.
pub fn eb_distance(x: &ExtBraid, y: &ExtBraid) -> Result<Distance> {
    if eb_equal(x, y)? {
        return Ok(Distance::Zero);
    }
    let n0 = x.beta.word().width() + y.beta.word().width() + x.p + y.p + 2;
    let at = |n: u32| {
        braid_distance(
            &x.beta.word().concat(&tau_word(x.p, n)),
            &y.beta.word().concat(&tau_word(y.p, n)),
        )
    };
    let (d0, d1) = (at(n0)?, at(n0 + 1)?);
    if d0 != d1 {
        return Err(Error::Inconsistent(format!("distance between {x} and {y} has not settled: {d0} vs {d1}")));
    }
    Ok(d0)
}

impl Shelf for ExtBraid {
    fn op(&self, rhs: &Self) -> Self {
        eb_shelf(self, rhs)
    }
}

impl PartialEq for ExtBraid {
    fn eq(&self, other: &Self) -> bool {
        eb_equal(self, other).expect("extended braid equality check failed")
    }
}

impl Eq for ExtBraid {}

impl fmt::Display for ExtBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.beta.word().is_empty() {
            write!(f, "[ | {}]", self.p)
        } else {
            write!(f, "[{} | {}]", self.beta, self.p)
        }
    }
}

impl FromStr for ExtBraid {
    type Err = Error;

    /// `[<word> | p]`; a bare word means layer 0.
    fn from_str(s: &str) -> Result<ExtBraid> {
        let s = s.trim();
        let Some(body) = s.strip_prefix('[') else {
            return Ok(ExtBraid::new(s.parse::<BraidWord>()?, 0));
        };
        let body = body.strip_suffix(']').ok_or_else(|| Error::Syntax(format!("missing `]` in `{s}`")))?;
        let (word, p) = body.split_once('|').ok_or_else(|| Error::Syntax(format!("missing `|` in `{s}`")))?;
        let p = p.trim().parse::<u32>().map_err(|_| Error::Parse { token: p.trim().to_string() })?;
        Ok(ExtBraid::new(word.parse::<BraidWord>()?, p))
    }
}
