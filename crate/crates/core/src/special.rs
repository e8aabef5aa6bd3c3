//! Special braids: the values of `▷`-terms at the unit braid.
//!
//! Recognition goes through the coloring action: a braid `β` is special iff
//! `(1, 1, …) • β` is defined and equals `(β, 1, …)`. Term synthesis and
//! complexity are computed by breadth-first enumeration with values memoized
//! on their Artin fingerprints.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use log::warn;

use crate::engine::{
    equal, fingerprint, reverse_to_neg_pos, reverse_to_pos_neg, sigma_classify, Braid, Fingerprint, SigmaClass,
    DEFAULT_STEP_CAP,
};
use crate::error::{Error, Result};
use crate::shelf::{act_partial, act_positive, shelf_op, shifted_product, Action, ColorSeq, Shelf};
use crate::words::BraidWord;

/// A `▷`-term in one variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Leaf,
    Node(Box<Term>, Box<Term>),
}

impl Term {
    pub fn node(left: Term, right: Term) -> Term {
        Term::Node(Box::new(left), Box::new(right))
    }

    /// `x^{[m]} = x ▷ (x ▷ ⋯ x)`.
    pub fn right_comb(m: usize) -> Term {
        assert!(m >= 1);
        (1..m).fold(Term::Leaf, |acc, _| Term::node(Term::Leaf, acc))
    }

    /// `x_{[m]} = (⋯(x ▷ x) ▷ ⋯) ▷ x`.
    pub fn left_comb(m: usize) -> Term {
        assert!(m >= 1);
        (1..m).fold(Term::Leaf, |acc, _| Term::node(acc, Term::Leaf))
    }

    /// Number of leaves.
    pub fn size(&self) -> usize {
        match self {
            Term::Leaf => 1,
            Term::Node(l, r) => l.size() + r.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Leaf => 0,
            Term::Node(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Evaluates the term in any shelf, with the leaf sent to `generator`.
    pub fn eval_in<S: Shelf>(&self, generator: &S) -> S {
        match self {
            Term::Leaf => generator.clone(),
            Term::Node(l, r) => l.eval_in(generator).op(&r.eval_in(generator)),
        }
    }

    /// Every term with exactly `size` leaves.
    pub fn all_of_size(size: usize) -> Vec<Term> {
        let mut by_size: Vec<Vec<Term>> = vec![Vec::new(), vec![Term::Leaf]];
        for s in 2..=size {
            let mut level = Vec::new();
            for k in 1..s {
                for l in &by_size[k] {
                    for r in &by_size[s - k] {
                        level.push(Term::node(l.clone(), r.clone()));
                    }
                }
            }
            by_size.push(level);
        }
        by_size.into_iter().nth(size).unwrap_or_default()
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Leaf => f.write_str("1"),
            Term::Node(l, r) => write!(f, "({l} > {r})"),
        }
    }
}

impl FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Term> {
        let tokens: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let term = parse_term(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::Syntax(format!("trailing input at character {} of `{s}`", pos + 1)));
        }
        Ok(term)
    }
}

fn parse_term(tokens: &[char], pos: &mut usize) -> Result<Term> {
    let expect = |pos: &mut usize, c: char| -> Result<()> {
        if tokens.get(*pos) == Some(&c) {
            *pos += 1;
            Ok(())
        } else {
            Err(Error::Syntax(format!("expected `{c}` at token {}", *pos + 1)))
        }
    };
    match tokens.get(*pos) {
        Some('1') => {
            *pos += 1;
            Ok(Term::Leaf)
        }
        Some('(') => {
            *pos += 1;
            let left = parse_term(tokens, pos)?;
            expect(pos, '>')?;
            let right = parse_term(tokens, pos)?;
            expect(pos, ')')?;
            Ok(Term::node(left, right))
        }
        Some(c) => Err(Error::Syntax(format!("unexpected `{c}` at token {}", *pos + 1))),
        None => Err(Error::Syntax("unexpected end of term".into())),
    }
}

pub fn eval_term(t: &Term) -> Braid {
    match t {
        Term::Leaf => Braid::one(),
        Term::Node(l, r) => shelf_op(&eval_term(l), &eval_term(r)),
    }
}

/// Returns the braid represented by `w` if it is special, `None` otherwise.
pub fn is_special(w: &BraidWord) -> Result<Option<Braid>> {
    let (u, v) = reverse_to_pos_neg(w)?;
    let n = u.width().max(v.width()) as usize;
    let uv = u.concat(&v.invert());
    let seq = match act_partial(&ColorSeq::ones(n), &uv)? {
        Action::Defined(seq) => seq,
        Action::Undefined(_) => return Ok(None),
    };
    let colors = seq.into_colors();
    for c in colors.iter().skip(1) {
        if !c.is_trivial()? {
            return Ok(None);
        }
    }
    let value = colors.into_iter().next().unwrap_or_default();
    if !equal(value.word(), w)? {
        return Err(Error::Inconsistent(format!("special value of `{w}` differs from the input")));
    }
    Ok(Some(value))
}

/// `(1, …, 1) • w` for positive `w`, a sequence of `n` special braids.
pub fn decompose_positive(w: &BraidWord, n: usize) -> Result<Vec<Braid>> {
    let seq = act_positive(&ColorSeq::ones(n), w)?;
    Ok(seq.into_colors())
}

/// Special braids `β_1, …, β_n` (negative side) and `β'_1, …, β'_n`
/// (positive side) with
/// `β = sh^{n-1}(β_n)⁻¹ ⋯ β_1⁻¹ · β'_1 ⋯ sh^{n-1}(β'_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialDecomposition {
    pub negative: Vec<Braid>,
    pub positive: Vec<Braid>,
}

impl SpecialDecomposition {
    pub fn reassemble(&self) -> Braid {
        let neg = shifted_product(&ColorSeq::new(self.negative.clone()));
        let pos = shifted_product(&ColorSeq::new(self.positive.clone()));
        neg.inverse().mul(&pos)
    }
}

/// Splits `w` as `N⁻¹ P` by left reversing and decomposes both positive parts.
///
/// `n` is raised to the width of the reversed parts when it is too small.
pub fn decompose(w: &BraidWord, n: usize) -> Result<SpecialDecomposition> {
    let (neg, pos) = reverse_to_neg_pos(w)?;
    let needed = neg.width().max(pos.width()) as usize;
    let n = if n < needed {
        warn!("decomposition length raised from {n} to {needed}");
        needed
    } else {
        n
    };
    let dec = SpecialDecomposition { negative: decompose_positive(&neg, n)?, positive: decompose_positive(&pos, n)? };
    if !equal(dec.reassemble().word(), w)? {
        return Err(Error::Inconsistent(format!("special decomposition of `{w}` does not reassemble")));
    }
    Ok(dec)
}

/// Distinct values of terms, discovered level by level.
struct TermTable {
    seen: HashMap<Fingerprint, usize>,
    entries: Vec<(Term, Braid)>,
    levels: Vec<Vec<usize>>,
}

impl TermTable {
    fn new() -> Self {
        let one = Braid::one();
        let fp = one.fingerprint().expect("unit fingerprint").clone();
        TermTable { seen: HashMap::from([(fp, 0)]), entries: vec![(Term::Leaf, one)], levels: vec![vec![0]] }
    }

    /// Records `left ▷ right` if its value is new; returns its index.
    fn insert(&mut self, left: usize, right: usize) -> Result<Option<usize>> {
        let value = shelf_op(&self.entries[left].1, &self.entries[right].1);
        let fp = value.fingerprint()?.clone();
        if self.seen.contains_key(&fp) {
            return Ok(None);
        }
        let term = Term::node(self.entries[left].0.clone(), self.entries[right].0.clone());
        let idx = self.entries.len();
        self.seen.insert(fp, idx);
        self.entries.push((term, value));
        Ok(Some(idx))
    }

    fn find(&self, fp: &Fingerprint) -> Option<&Term> {
        self.seen.get(fp).map(|&i| &self.entries[i].0)
    }
}

/// A term evaluating to `b`, of minimal size.
///
/// Terms are enumerated by increasing size; a value of minimal size `s` is
/// `a ▷ c` with `a`, `c` themselves of minimal sizes adding up to `s`.
pub fn synthesize_term(b: &Braid, size_cap: usize) -> Result<Term> {
    let target = b.fingerprint()?.clone();
    let mut table = TermTable::new();
    if let Some(t) = table.find(&target) {
        return Ok(t.clone());
    }
    for size in 2..=size_cap {
        let mut level = Vec::new();
        for left_size in 1..size {
            let lefts = table.levels[left_size - 1].clone();
            let rights = table.levels[size - left_size - 1].clone();
            for &l in &lefts {
                for &r in &rights {
                    if let Some(idx) = table.insert(l, r)? {
                        level.push(idx);
                    }
                }
            }
        }
        table.levels.push(level);
        if let Some(t) = table.find(&target) {
            return Ok(t.clone());
        }
    }
    Err(Error::CapExceeded { what: "term size", cap: size_cap })
}

/// The least depth of a term evaluating to `b`.
pub fn complexity(b: &Braid, depth_cap: usize) -> Result<usize> {
    let target = b.fingerprint()?.clone();
    let mut table = TermTable::new();
    if table.find(&target).is_some() {
        return Ok(0);
    }
    for depth in 1..=depth_cap {
        // values of depth < depth, every pair involving the previous level
        let known = table.entries.len();
        let previous: Vec<usize> = table.levels[depth - 1].clone();
        let mut level = Vec::new();
        for l in 0..known {
            for r in 0..known {
                let fresh = previous.contains(&l) || previous.contains(&r);
                if fresh {
                    if let Some(idx) = table.insert(l, r)? {
                        level.push(idx);
                    }
                }
            }
        }
        table.levels.push(level);
        if table.find(&target).is_some() {
            return Ok(depth);
        }
    }
    Err(Error::CapExceeded { what: "term depth", cap: depth_cap })
}

/// All distinct special values of complexity at most `depth`, with a term each.
pub fn specials_up_to_depth(depth: usize) -> Result<Vec<(Term, Braid)>> {
    let mut table = TermTable::new();
    for d in 1..=depth {
        let known = table.entries.len();
        let previous: Vec<usize> = table.levels[d - 1].clone();
        let mut level = Vec::new();
        for l in 0..known {
            for r in 0..known {
                if previous.contains(&l) || previous.contains(&r) {
                    if let Some(idx) = table.insert(l, r)? {
                        level.push(idx);
                    }
                }
            }
        }
        table.levels.push(level);
    }
    Ok(table.entries)
}

/// Compares special braids in the division order `⊏*`:
/// `Less` means `b1 ⊏* b2`.
pub fn special_compare(b1: &Braid, b2: &Braid) -> Result<Ordering> {
    let quotient = b1.word().invert().concat(b2.word());
    match sigma_classify(&quotient, DEFAULT_STEP_CAP)? {
        SigmaClass::Positive(1) => Ok(Ordering::Less),
        SigmaClass::Negative(1) => Ok(Ordering::Greater),
        SigmaClass::Trivial => Ok(Ordering::Equal),
        other => Err(Error::Inconsistent(format!("quotient of special braids {b1} and {b2} is {other}"))),
    }
}

/// `Some(m)` when the positive word `w` represents `σ_m ⋯ σ_1`, the only
/// special positive braid of length `m`.
pub fn positive_special_length(w: &BraidWord) -> Result<Option<u32>> {
    if !w.is_positive() {
        return Err(Error::Syntax(format!("`{w}` is not a positive word")));
    }
    let m = w.len() as u32;
    Ok(equal(w, &BraidWord::descending(m, 1))?.then_some(m))
}

/// For a simple braid, the exponents `m_i` with
/// `β = 1^{[m_1+1]} · sh(1^{[m_2+1]}) ⋯`; `None` if `w` is not simple.
pub fn simple_decomposition(w: &BraidWord) -> Result<Option<Vec<u32>>> {
    let (u, v) = reverse_to_pos_neg(w)?;
    if !v.is_empty() {
        return Ok(None);
    }
    let entries = decompose_positive(&u, u.width() as usize)?;
    let mut exponents = Vec::with_capacity(entries.len());
    for entry in &entries {
        let sum = entry.word().exponent_sum();
        if sum < 0 || !equal(entry.word(), &BraidWord::descending(sum as u32, 1))? {
            return Ok(None);
        }
        exponents.push(sum as u32);
    }
    Ok(Some(exponents))
}

/// Whether `w` represents a divisor of some `Δ_n` in the positive monoid.
pub fn is_simple(w: &BraidWord) -> Result<bool> {
    Ok(simple_decomposition(w)?.is_some())
}

/// Outcome of [`laver_conjecture_probe`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub words_enumerated: usize,
    pub words_defined: usize,
    /// Braids with a defined action, one representative each, increasing.
    pub defined_braids: Vec<BraidWord>,
    pub all_positive_defined: bool,
}

impl ProbeReport {
    pub fn minimum(&self) -> Option<&BraidWord> {
        self.defined_braids.first()
    }
}

/// Enumerates words of length at most `max_len` on the letters acting on
/// `a`, and sorts the braids whose action on `a` is defined.
pub fn laver_conjecture_probe(a: &ColorSeq, max_len: usize) -> Result<ProbeReport> {
    let n = a.len() as i32;
    let alphabet: Vec<i32> = (1..n).flat_map(|i| [i, -i]).collect();
    let mut report = ProbeReport { words_enumerated: 1, words_defined: 1, defined_braids: Vec::new(), all_positive_defined: true };
    let mut found: HashMap<Fingerprint, BraidWord> = HashMap::new();
    found.insert(Fingerprint::default(), BraidWord::empty());
    // (word, action result so far)
    let mut frontier: Vec<(Vec<i32>, Option<ColorSeq>)> = vec![(Vec::new(), Some(a.clone()))];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * alphabet.len());
        for (word, state) in &frontier {
            for &x in &alphabet {
                let mut extended = word.clone();
                extended.push(x);
                let step = match state {
                    Some(seq) => act_partial(seq, &BraidWord::from_signed(&[x]))?.defined(),
                    None => None,
                };
                report.words_enumerated += 1;
                let positive = extended.iter().all(|&y| y > 0);
                match &step {
                    Some(_) => {
                        report.words_defined += 1;
                        let w = BraidWord::from_signed(&extended);
                        let fp = fingerprint(&w)?;
                        found.entry(fp).or_insert(w);
                    }
                    None if positive => report.all_positive_defined = false,
                    None => {}
                }
                next.push((extended, step));
            }
        }
        frontier = next;
    }
    let mut braids: Vec<BraidWord> = found.into_values().collect();
    let mut failure = None;
    braids.sort_by(|x, y| {
        crate::engine::compare(x, y, DEFAULT_STEP_CAP).unwrap_or_else(|e| {
            failure.get_or_insert(e);
            Ordering::Equal
        })
    });
    if let Some(e) = failure {
        return Err(e);
    }
    report.defined_braids = braids;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i32]) -> BraidWord {
        BraidWord::from_signed(v)
    }

    fn b(v: &[i32]) -> Braid {
        Braid::new(w(v))
    }

    #[test]
    fn term_text_round_trip() {
        let t: Term = "((1 > 1) > 1)".parse().unwrap();
        assert_eq!(t, Term::left_comb(3));
        assert_eq!(t.to_string(), "((1 > 1) > 1)");
        assert_eq!(Term::right_comb(3).to_string(), "(1 > (1 > 1))");
        assert!("(1 > 1".parse::<Term>().is_err());
        assert!("1 1".parse::<Term>().is_err());
        assert_eq!(t.size(), 3);
        assert_eq!(t.depth(), 2);
    }

    #[test]
    fn term_values() {
        assert_eq!(eval_term(&Term::right_comb(2)), b(&[1]));
        assert_eq!(eval_term(&Term::right_comb(3)), b(&[2, 1]));
        assert_eq!(eval_term(&Term::left_comb(3)), b(&[1, 1, -2]));
        assert_eq!(Term::left_comb(3).eval_in(&Braid::one()), b(&[1, 1, -2]));
        let counts: Vec<usize> = (1..=6).map(|n| Term::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn recognition_examples() {
        let value = is_special(&w(&[-2, -1, 2, 2, 1])).unwrap().unwrap();
        assert_eq!(value, b(&[1, 1, -2]));
        assert!(is_special(&w(&[2])).unwrap().is_none());
        assert!(is_special(&w(&[])).unwrap().unwrap().word().is_empty());
        assert!(is_special(&w(&[1, 1])).unwrap().is_none());
    }

    #[test]
    fn positive_decompositions() {
        assert_eq!(decompose_positive(&w(&[1, 1]), 3).unwrap(), vec![b(&[1, 1, -2]), b(&[1]), Braid::one()]);
        assert_eq!(decompose_positive(&w(&[2, 1]), 3).unwrap(), vec![b(&[2, 1]), Braid::one(), Braid::one()]);
    }

    #[test]
    fn full_decomposition() {
        let word = w(&[-1, -1, 2, 1]);
        let dec = decompose(&word, 3).unwrap();
        assert_eq!(dec.reassemble(), Braid::new(word));
        let dec = decompose(&w(&[2, 1, 3]), 1).unwrap();
        assert_eq!(dec.positive.len(), 4);
        assert!(dec.negative.iter().all(|x| x.is_trivial().unwrap()));
    }

    #[test]
    fn synthesis_and_complexity() {
        assert_eq!(synthesize_term(&Braid::one(), 4).unwrap(), Term::Leaf);
        assert_eq!(synthesize_term(&b(&[1]), 4).unwrap(), Term::right_comb(2));
        assert_eq!(synthesize_term(&b(&[3, 2, 1]), 6).unwrap(), Term::right_comb(4));
        assert!(matches!(synthesize_term(&b(&[2]), 4), Err(Error::CapExceeded { .. })));
        assert_eq!(complexity(&Braid::one(), 3).unwrap(), 0);
        assert_eq!(complexity(&b(&[1]), 3).unwrap(), 1);
        assert_eq!(complexity(&b(&[2, 1]), 3).unwrap(), 2);
    }

    #[test]
    fn order_on_specials() {
        assert_eq!(special_compare(&Braid::one(), &b(&[1])).unwrap(), Ordering::Less);
        assert_eq!(special_compare(&b(&[1]), &b(&[1])).unwrap(), Ordering::Equal);
        let up = b(&[2, 1]);
        let down = b(&[1, 1, -2]);
        let ord = special_compare(&up, &down).unwrap();
        assert_ne!(ord, Ordering::Equal);
        assert_eq!(ord, crate::engine::compare(up.word(), down.word(), DEFAULT_STEP_CAP).unwrap());
        assert_eq!(special_compare(&down, &up).unwrap(), ord.reverse());
    }

    #[test]
    fn positive_specials() {
        assert_eq!(positive_special_length(&w(&[3, 2, 1])).unwrap(), Some(3));
        assert_eq!(positive_special_length(&w(&[1, 2])).unwrap(), None);
        assert_eq!(positive_special_length(&w(&[])).unwrap(), Some(0));
    }

    #[test]
    fn simple_braids() {
        assert_eq!(simple_decomposition(&w(&[2, 1, 2])).unwrap(), Some(vec![2, 1, 0]));
        assert!(!is_simple(&w(&[1, 1])).unwrap());
        assert!(is_simple(&w(&[1])).unwrap());
        assert!(!is_simple(&w(&[-1])).unwrap());
    }

    #[test]
    fn probe_on_two_units() {
        let report = laver_conjecture_probe(&ColorSeq::ones(2), 2).unwrap();
        assert_eq!(report.words_enumerated, 7);
        assert!(report.all_positive_defined);
        assert_eq!(report.words_defined, 4);
        assert_eq!(report.minimum(), Some(&BraidWord::empty()));
        let empty = laver_conjecture_probe(&ColorSeq::ones(2), 0).unwrap();
        assert_eq!((empty.words_enumerated, empty.words_defined), (1, 1));
    }
}
