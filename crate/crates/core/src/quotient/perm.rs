//! Finitely supported permutations of the positive integers.
//!
//! Products compose right to left, `(f · g)(n) = f(g(n))`, which makes
//! [`perm_of`] a homomorphism for words read left to right: `perm(β)(i)` is
//! the starting position of the strand that finishes at position `i`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::shelf::Shelf;
use crate::words::BraidWord;

/// A permutation moving finitely many points, stored as the images of
/// `1..=N` with `N` the largest moved point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity() -> Self {
        Perm(Vec::new())
    }

    /// The transposition `s_i = (i i+1)`.
    pub fn transposition(i: u32) -> Self {
        assert!(i >= 1, "transpositions are indexed from 1");
        let mut images: Vec<u32> = (1..=i + 1).collect();
        images.swap(i as usize - 1, i as usize);
        Perm(images)
    }

    /// `s_{i_1} · s_{i_2} ⋯`.
    pub fn from_transpositions(indices: &[u32]) -> Self {
        indices.iter().fold(Perm::identity(), |acc, &i| &acc * &Perm::transposition(i))
    }

    /// Builds a permutation from the images of `1, 2, …, N`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut hit = vec![false; n];
        for &v in &images {
            if v == 0 || v as usize > n || hit[v as usize - 1] {
                return Err(Error::Syntax(format!("{images:?} is not a permutation of 1..{n}")));
            }
            hit[v as usize - 1] = true;
        }
        Ok(Perm(images).trimmed())
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|&v| v as usize == self.0.len()) {
            self.0.pop();
        }
        self
    }

    pub fn apply(&self, n: u32) -> u32 {
        assert!(n >= 1, "permutations act on positive integers");
        self.0.get(n as usize - 1).copied().unwrap_or(n)
    }

    /// Largest moved point, 0 for the identity.
    pub fn degree(&self) -> u32 {
        self.0.len() as u32
    }

    /// Images of `1..=max(N, n)`.
    pub fn images(&self, n: u32) -> Vec<u32> {
        (1..=n.max(self.degree())).map(|k| self.apply(k)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = k as u32 + 1;
        }
        Perm(inv)
    }

    /// `sh(f)(1) = 1`, `sh(f)(n) = f(n - 1) + 1`.
    pub fn shift(&self) -> Perm {
        if self.is_identity() {
            return Perm::identity();
        }
        let mut images = Vec::with_capacity(self.0.len() + 1);
        images.push(1);
        images.extend(self.0.iter().map(|&v| v + 1));
        Perm(images)
    }

    /// `cl(f) = f⁻¹(1)`.
    pub fn class(&self) -> u32 {
        self.0.iter().position(|&v| v == 1).map_or(1, |k| k as u32 + 1)
    }
}

impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        let n = self.degree().max(rhs.degree());
        Perm((1..=n).map(|k| self.apply(rhs.apply(k))).collect()).trimmed()
    }
}

impl Mul for Perm {
    type Output = Perm;

    fn mul(self, rhs: Perm) -> Perm {
        &self * &rhs
    }
}

impl Shelf for Perm {
    fn op(&self, rhs: &Self) -> Self {
        perm_shelf_op(self, rhs)
    }
}

/// `f ▷ g = f · sh(g) · s_1 · sh(f)⁻¹`.
pub fn perm_shelf_op(f: &Perm, g: &Perm) -> Perm {
    &(&(f * &g.shift()) * &Perm::transposition(1)) * &f.shift().inverse()
}

pub fn perm_of(w: &BraidWord) -> Perm {
    let n = w.width();
    let mut images: Vec<u32> = (1..=n).collect();
    // right multiplication by s_i swaps the entries at i and i+1
    for l in w.letters() {
        images.swap(l.index() as usize - 1, l.index() as usize);
    }
    Perm(images).trimmed()
}

pub fn braid_class(w: &BraidWord) -> u32 {
    perm_of(w).class()
}

/// The quotient of the small class permutations by class equality.
pub fn small_class_quotient(c1: u32, c2: u32) -> u32 {
    assert!((1..=2).contains(&c1) && (1..=2).contains(&c2), "small classes are 1 and 2");
    if c1 == 1 {
        2
    } else {
        c2
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, v) in self.images(1).iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// One-line notation, optionally bracketed: `[2 3 1]`, `2,3,1`.
    fn from_str(s: &str) -> Result<Perm> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let images = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| Error::Parse { token: t.to_string() }))
            .collect::<Result<Vec<u32>>>()?;
        Perm::from_images(images)
    }
}
