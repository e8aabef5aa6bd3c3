//! Injections of the positive integers that are eventually a translation.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::quotient::perm::Perm;
use crate::shelf::Shelf;

/// An injection `f` with `f(n) = prefix[n-1]` for `n ≤ N` and
/// `f(n) = n + offset` for `n > N`, `N` minimal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Injection {
    prefix: Vec<u32>,
    offset: u32,
}

impl Injection {
    pub fn identity() -> Self {
        Injection { prefix: Vec::new(), offset: 0 }
    }

    /// `SH : n ↦ n + 1`.
    pub fn shift_map() -> Self {
        Injection { prefix: Vec::new(), offset: 1 }
    }

    pub fn new(prefix: Vec<u32>, offset: u32) -> Result<Self> {
        let n = prefix.len() as u32;
        let mut seen = std::collections::HashSet::new();
        for &v in &prefix {
            if v == 0 || !seen.insert(v) || v > n + offset {
                return Err(Error::Syntax(format!("{prefix:?} with offset {offset} is not injective")));
            }
        }
        Ok(Injection { prefix, offset }.canonical())
    }

    fn canonical(mut self) -> Self {
        while let Some(&v) = self.prefix.last() {
            if v != self.prefix.len() as u32 + self.offset {
                break;
            }
            self.prefix.pop();
        }
        self
    }

    /// Tabulates `f` on `1..=bound`, with `f(n) = n + offset` beyond.
    fn from_fn(bound: u32, offset: u32, f: impl Fn(u32) -> u32) -> Self {
        Injection { prefix: (1..=bound).map(f).collect(), offset }.canonical()
    }

    pub fn apply(&self, n: u32) -> u32 {
        assert!(n >= 1, "injections act on positive integers");
        match self.prefix.get(n as usize - 1) {
            Some(&v) => v,
            None => n + self.offset,
        }
    }

    pub fn prefix_len(&self) -> u32 {
        self.prefix.len() as u32
    }

    pub fn offset(&self) -> u32 {
        self.offset
    }

    /// `f⁻¹(n)` when `n ∈ Im(f)`.
    pub fn preimage(&self, n: u32) -> Option<u32> {
        if let Some(k) = self.prefix.iter().position(|&v| v == n) {
            return Some(k as u32 + 1);
        }
        let m = n.checked_sub(self.offset)?;
        (m > self.prefix_len()).then_some(m)
    }

    /// The finitely many integers outside the image.
    pub fn image_complement(&self) -> Vec<u32> {
        (1..=self.prefix_len() + self.offset).filter(|&n| self.preimage(n).is_none()).collect()
    }
}

impl Mul for &Injection {
    type Output = Injection;

    /// `(f · g)(n) = f(g(n))`.
    fn mul(self, rhs: &Injection) -> Injection {
        let bound = rhs.prefix_len().max(self.prefix_len());
        Injection::from_fn(bound, self.offset + rhs.offset, |n| self.apply(rhs.apply(n)))
    }
}

impl Shelf for Injection {
    fn op(&self, rhs: &Self) -> Self {
        inj_shelf_op(self, rhs)
    }
}

/// `(f ▷ g)(n) = f(g(f⁻¹(n)))` on `Im(f)`, `n` elsewhere.
pub fn inj_shelf_op(f: &Injection, g: &Injection) -> Injection {
    // beyond this bound n = m + d_f with m past both prefixes
    let bound = f.prefix_len().max(f.offset + f.prefix_len().max(g.prefix_len()));
    Injection::from_fn(bound, g.offset, |n| match f.preimage(n) {
        Some(m) => f.apply(g.apply(m)),
        None => n,
    })
}

/// `φ(f) = f · SH`, that is `n ↦ f(n + 1)`.
pub fn inj_embed(f: &Perm) -> Injection {
    Injection::from_fn(f.degree(), 1, |n| f.apply(n + 1))
}

impl fmt::Display for Injection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for v in &self.prefix {
            write!(f, "{v} ")?;
        }
        write!(f, "| +{}]", self.offset)
    }
}
