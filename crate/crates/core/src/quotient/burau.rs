//! Burau matrices: invertible matrices over `Z[t, t⁻¹]` that are the
//! identity outside a finite top-left block.
//!
//! Every matrix carries its inverse. Products of generators update both
//! sides by column and row operations, so inverses never require division.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::quotient::laurent::LaurentPoly;
use crate::shelf::Shelf;
use crate::words::{BraidWord, Letter};

#[derive(Clone, Debug)]
pub struct BurauMatrix {
    n: usize,
    /// row-major, `n × n`
    entries: Vec<LaurentPoly>,
    inverse: Vec<LaurentPoly>,
}

fn identity_entries(n: usize) -> Vec<LaurentPoly> {
    let mut m = vec![LaurentPoly::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = LaurentPoly::one();
    }
    m
}

fn pad(entries: &[LaurentPoly], n: usize, size: usize) -> Vec<LaurentPoly> {
    let mut out = identity_entries(size);
    for i in 0..n {
        for j in 0..n {
            out[i * size + j] = entries[i * n + j].clone();
        }
    }
    out
}

fn multiply(a: &[LaurentPoly], b: &[LaurentPoly], n: usize) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let x = &a[i * n + k];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = &b[k * n + j];
                if !y.is_zero() {
                    out[i * n + j] = &out[i * n + j] + &(x * y);
                }
            }
        }
    }
    out
}

impl BurauMatrix {
    pub fn identity() -> Self {
        BurauMatrix { n: 0, entries: Vec::new(), inverse: Vec::new() }
    }

    /// `Σ_i`: the identity with the block `(1-t, t; 1, 0)` at rows and
    /// columns `i, i+1`.
    pub fn sigma(i: u32) -> Self {
        let mut m = BurauMatrix::identity();
        m.apply(Letter::sigma(i));
        m
    }

    /// Builds a matrix from rows; its determinant must be a unit `±t^k`.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Syntax("matrix rows must form a square".into()));
        }
        let entries: Vec<LaurentPoly> = rows.into_iter().flatten().collect();
        let det = determinant(&entries, n);
        let det_inv = det.unit_inverse().ok_or(Error::NotInvertible)?;
        let mut inverse = vec![LaurentPoly::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                // inverse[j][i] = (-1)^{i+j} M_{ij} / det
                let minor = minor(&entries, n, i, j);
                let cof = if (i + j) % 2 == 0 { minor } else { -minor };
                inverse[j * n + i] = &cof * &det_inv;
            }
        }
        Ok(BurauMatrix { n, entries, inverse }.trimmed())
    }

    /// Size of the stored block.
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> LaurentPoly {
        assert!(i >= 1 && j >= 1, "matrix entries are indexed from 1");
        if i > self.n || j > self.n {
            return if i == j { LaurentPoly::one() } else { LaurentPoly::zero() };
        }
        self.entries[(i - 1) * self.n + (j - 1)].clone()
    }

    /// The stored block as rows, padded to at least `size`.
    pub fn rows(&self, size: usize) -> Vec<Vec<LaurentPoly>> {
        let m = size.max(self.n);
        let padded = pad(&self.entries, self.n, m);
        padded.chunks(m.max(1)).take(m).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.n == 0
    }

    pub fn inverse(&self) -> BurauMatrix {
        BurauMatrix { n: self.n, entries: self.inverse.clone(), inverse: self.entries.clone() }
    }

    fn grow(&mut self, size: usize) {
        if size > self.n {
            self.entries = pad(&self.entries, self.n, size);
            self.inverse = pad(&self.inverse, self.n, size);
            self.n = size;
        }
    }

    /// Drops trailing rows and columns that agree with the identity.
    fn trimmed(mut self) -> Self {
        let mut m = self.n;
        while m > 0 {
            let k = m - 1;
            let plain = (0..self.n).all(|j| {
                let want = |a: &LaurentPoly| if j == k { a.is_one() } else { a.is_zero() };
                want(&self.entries[k * self.n + j]) && want(&self.entries[j * self.n + k])
            });
            if !plain {
                break;
            }
            m -= 1;
        }
        if m < self.n {
            let shrink = |v: &[LaurentPoly]| {
                let mut out = Vec::with_capacity(m * m);
                for i in 0..m {
                    out.extend_from_slice(&v[i * self.n..i * self.n + m]);
                }
                out
            };
            let (e, inv) = (shrink(&self.entries), shrink(&self.inverse));
            self = BurauMatrix { n: m, entries: e, inverse: inv };
        }
        self
    }

    /// Right multiplication by `Σ_i^{±1}`.
    fn apply(&mut self, letter: Letter) {
        let i = letter.index() as usize;
        self.grow(i + 1);
        let n = self.n;
        let (c, d) = (i - 1, i);
        let t = LaurentPoly::t_pow(1);
        let tinv = LaurentPoly::t_pow(-1);
        let one_minus_t = &LaurentPoly::one() - &t;
        let one_minus_tinv = &LaurentPoly::one() - &tinv;
        for r in 0..n {
            let a = self.entries[r * n + c].clone();
            let b = self.entries[r * n + d].clone();
            let (na, nb) = if letter.is_positive() {
                (&(&a * &one_minus_t) + &b, &a * &t)
            } else {
                (&b * &tinv, &a + &(&b * &one_minus_tinv))
            };
            self.entries[r * n + c] = na;
            self.entries[r * n + d] = nb;
        }
        // the inverse is multiplied on the left by the inverse generator
        for col in 0..n {
            let a = self.inverse[c * n + col].clone();
            let b = self.inverse[d * n + col].clone();
            let (na, nb) = if letter.is_positive() {
                (b.clone(), &(&a * &tinv) + &(&b * &one_minus_tinv))
            } else {
                (&(&a * &one_minus_t) + &(&b * &t), a)
            };
            self.inverse[c * n + col] = na;
            self.inverse[d * n + col] = nb;
        }
    }

    /// `sh(A)`: a new first row and column with `1` on the diagonal.
    pub fn shift(&self) -> BurauMatrix {
        if self.is_identity() {
            return BurauMatrix::identity();
        }
        let shift_block = |v: &[LaurentPoly]| {
            let m = self.n + 1;
            let mut out = identity_entries(m);
            for i in 0..self.n {
                for j in 0..self.n {
                    out[(i + 1) * m + j + 1] = v[i * self.n + j].clone();
                }
            }
            out
        };
        BurauMatrix { n: self.n + 1, entries: shift_block(&self.entries), inverse: shift_block(&self.inverse) }
    }

    pub fn determinant(&self) -> LaurentPoly {
        determinant(&self.entries, self.n)
    }

    /// Sum of the overdiagonal entries `A_{i,i+1}`.
    pub fn shtr(&self) -> LaurentPoly {
        let mut sum = LaurentPoly::zero();
        for i in 0..self.n.saturating_sub(1) {
            sum = &sum + &self.entries[i * self.n + i + 1];
        }
        sum
    }
}

/// `ρ(w)`, the product of `Σ_i^{±1}` in reading order.
pub fn burau_of(w: &BraidWord) -> BurauMatrix {
    let mut m = BurauMatrix::identity();
    for &l in w.letters() {
        m.apply(l);
    }
    m.trimmed()
}

impl Mul for &BurauMatrix {
    type Output = BurauMatrix;

    fn mul(self, rhs: &BurauMatrix) -> BurauMatrix {
        let n = self.n.max(rhs.n);
        let (a, b) = (pad(&self.entries, self.n, n), pad(&rhs.entries, rhs.n, n));
        let (ai, bi) = (pad(&self.inverse, self.n, n), pad(&rhs.inverse, rhs.n, n));
        BurauMatrix { n, entries: multiply(&a, &b, n), inverse: multiply(&bi, &ai, n) }.trimmed()
    }
}

impl Mul for BurauMatrix {
    type Output = BurauMatrix;

    fn mul(self, rhs: BurauMatrix) -> BurauMatrix {
        &self * &rhs
    }
}

impl PartialEq for BurauMatrix {
    fn eq(&self, other: &Self) -> bool {
        let n = self.n.max(other.n);
        pad(&self.entries, self.n, n) == pad(&other.entries, other.n, n)
    }
}

impl Eq for BurauMatrix {}

impl Shelf for BurauMatrix {
    fn op(&self, rhs: &Self) -> Self {
        burau_shelf_op(self, rhs)
    }
}

/// `A ▷ B = A · sh(B) · Σ_1 · sh(A)⁻¹`.
pub fn burau_shelf_op(a: &BurauMatrix, b: &BurauMatrix) -> BurauMatrix {
    let mut left = a * &b.shift();
    left.apply(Letter::sigma(1));
    &left * &a.shift().inverse()
}

fn determinant(entries: &[LaurentPoly], n: usize) -> LaurentPoly {
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    sub_determinant(entries, n, &rows, &cols)
}

fn minor(entries: &[LaurentPoly], n: usize, skip_row: usize, skip_col: usize) -> LaurentPoly {
    let rows: Vec<usize> = (0..n).filter(|&r| r != skip_row).collect();
    let cols: Vec<usize> = (0..n).filter(|&c| c != skip_col).collect();
    sub_determinant(entries, n, &rows, &cols)
}

/// Laplace expansion along rows, memoized on the set of remaining columns.
fn sub_determinant(entries: &[LaurentPoly], n: usize, rows: &[usize], cols: &[usize]) -> LaurentPoly {
    assert!(cols.len() <= 24, "determinant size out of range");
    fn go(
        entries: &[LaurentPoly],
        n: usize,
        rows: &[usize],
        cols: &[usize],
        mask: u32,
        memo: &mut HashMap<u32, LaurentPoly>,
    ) -> LaurentPoly {
        let depth = rows.len() - mask.count_ones() as usize;
        if depth == rows.len() {
            return LaurentPoly::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let row = rows[depth];
        let mut acc = LaurentPoly::zero();
        let mut sign_positive = true;
        for (k, &col) in cols.iter().enumerate() {
            if mask & (1 << k) == 0 {
                continue;
            }
            let x = &entries[row * n + col];
            if !x.is_zero() {
                let rest = go(entries, n, rows, cols, mask & !(1 << k), memo);
                let term = x * &rest;
                acc = if sign_positive { &acc + &term } else { &acc - &term };
            }
            sign_positive = !sign_positive;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    let full = if cols.is_empty() { 0 } else { u32::MAX >> (32 - cols.len()) };
    go(entries, n, rows, cols, full, &mut HashMap::new())
}

impl fmt::Display for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("I");
        }
        for (k, row) in self.rows(0).iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn w(v: &[i32]) -> BraidWord {
        BraidWord::from_signed(v)
    }

    #[test]
    fn generator_block() {
        let s1 = BurauMatrix::sigma(1);
        assert_eq!(s1.rows(2), vec![vec![p("1 - t"), p("t")], vec![p("1"), p("0")]]);
        assert_eq!(s1.determinant(), p("-t"));
        let inv = s1.inverse();
        assert_eq!(inv.rows(2), vec![vec![p("0"), p("1")], vec![p("t^-1"), p("1 - t^-1")]]);
        assert!((&s1 * &inv).is_identity());
    }

    #[test]
    fn braid_relations() {
        assert_eq!(burau_of(&w(&[1, 2, 1])), burau_of(&w(&[2, 1, 2])));
        assert_eq!(burau_of(&w(&[1, 3])), burau_of(&w(&[3, 1])));
        assert!(burau_of(&w(&[1, -1])).is_identity());
        assert!(burau_of(&w(&[])).is_identity());
        assert_ne!(burau_of(&w(&[1])), burau_of(&w(&[2])));
    }

    #[test]
    fn tracked_inverse_is_correct() {
        let m = burau_of(&w(&[1, -2, 3, 1, -1, 2, 2]));
        assert!((&m * &m.inverse()).is_identity());
        assert!((&m.inverse() * &m).is_identity());
    }

    #[test]
    fn shelf_samples() {
        let id = BurauMatrix::identity();
        assert_eq!(burau_shelf_op(&id, &id), BurauMatrix::sigma(1));
        assert_eq!(id.shtr(), LaurentPoly::zero());
        assert_eq!(BurauMatrix::sigma(1).shtr(), p("t"));
        assert_eq!(BurauMatrix::sigma(2).shtr(), p("t"));
    }

    #[test]
    fn parsed_matrices() {
        let m = BurauMatrix::from_rows(vec![vec![p("1 - t"), p("t")], vec![p("1"), p("0")]]).unwrap();
        assert_eq!(m, BurauMatrix::sigma(1));
        assert_eq!(m.inverse(), BurauMatrix::sigma(1).inverse());
        assert!(matches!(
            BurauMatrix::from_rows(vec![vec![p("2"), p("0")], vec![p("0"), p("1")]]),
            Err(Error::NotInvertible)
        ));
        let id = BurauMatrix::from_rows(vec![vec![p("1"), p("0")], vec![p("0"), p("1")]]).unwrap();
        assert!(id.is_identity());
    }
}
