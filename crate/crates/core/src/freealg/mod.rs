//! The free associative algebra `Q<x_1, ..., x_n>`.
//!
//! Words are sequences of letters `1..=n`, compared lexicographically with a
//! proper prefix smaller than its extensions (`2 < 22`). [`NCPoly`] is a
//! sparse rational combination of words carrying both the concatenation and
//! the shuffle product, together with the two derivations that are adjoint to
//! them under the scalar product in which words are orthonormal.

pub mod bases;
pub mod lyndon;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

pub use bases::{expand_in_p, h_basis, p_basis, s_basis, verify_triangularity, PExpander, TriangularityReport};
pub use lyndon::{is_lyndon, lyndon_factorize, std_factorization, LyndonFactorization};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(x: u8) -> Self {
        Word(alloc::vec![x])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn suffix(&self, from: usize) -> Word {
        Word(self.0[from..].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    /// The letters sorted ascending; words with equal content have equal
    /// multidegree.
    pub fn content(&self) -> Word {
        let mut v = self.0.clone();
        v.sort_unstable();
        Word(v)
    }

    pub fn max_letter(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Applies `x_i -> x_{σ(i)}` where `perm[i-1] + 1 = σ(i)`.
    pub fn permute(&self, perm: &[usize]) -> Word {
        Word(self.0.iter().map(|&x| perm[x as usize - 1] as u8 + 1).collect())
    }

    /// All `n^r` words of length `r`, in lexicographic order.
    pub fn all(n: usize, r: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut cur = alloc::vec![1u8; r];
        if n == 0 {
            return if r == 0 { alloc::vec![Word::empty()] } else { out };
        }
        loop {
            out.push(Word(cur.clone()));
            let mut i = r;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if (cur[i] as usize) < n {
                    cur[i] += 1;
                    for c in cur.iter_mut().skip(i + 1) {
                        *c = 1;
                    }
                    break;
                }
            }
        }
    }

    /// Position of this word in [`Word::all`]`(n, len)`.
    pub fn rank(&self, n: usize) -> usize {
        self.0.iter().fold(0, |acc, &x| acc * n + (x as usize - 1))
    }

    /// Distinct rearrangements of `content` (which must be sorted), in lex order.
    pub fn rearrangements(content: &Word) -> Vec<Word> {
        let mut cur = content.0.clone();
        let mut out = Vec::new();
        loop {
            out.push(Word(cur.clone()));
            let len = cur.len();
            if len < 2 {
                return out;
            }
            let Some(i) = (0..len - 1).rev().find(|&i| cur[i] < cur[i + 1]) else {
                return out;
            };
            let j = (i + 1..len).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
    }

    /// Parses a digit string (`"211"`) or comma-separated letters (`"2,11,1"`).
    pub fn parse(s: &str) -> Option<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Some(Word::empty());
        }
        let letters: Option<Vec<u8>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<u8>().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect()
        };
        let letters = letters?;
        letters.iter().all(|&x| x >= 1).then_some(Word(letters))
    }
}

impl fmt::Display for Word {
    /// Digit strings when every letter is at most 9, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        if self.0.iter().all(|&x| x <= 9) {
            for x in &self.0 {
                write!(f, "{}", x)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|x| alloc::format!("{}", x)).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// A noncommutative polynomial: a finite rational combination of words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Rational>,
}

fn shuffle_words(u: &[u8], v: &[u8], prefix: &mut Vec<u8>, out: &mut BTreeMap<Word, Rational>) {
    if u.is_empty() || v.is_empty() {
        let mut w = prefix.clone();
        w.extend_from_slice(u);
        w.extend_from_slice(v);
        *out.entry(Word(w)).or_insert_with(Rational::zero) += Rational::one();
        return;
    }
    prefix.push(u[0]);
    shuffle_words(&u[1..], v, prefix, out);
    prefix.pop();
    prefix.push(v[0]);
    shuffle_words(u, &v[1..], prefix, out);
    prefix.pop();
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Rational::one())
    }

    pub fn letter(x: u8) -> Self {
        Self::word(Word::letter(x))
    }

    pub fn term(w: Word, c: Rational) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common length of all words, if there is one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(Word::len);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    pub fn max_letter(&self) -> u8 {
        self.terms.keys().map(Word::max_letter).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Concatenation product.
    pub fn concat(&self, other: &NCPoly) -> Self {
        let mut out = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// `[f, g] = fg - gf`.
    pub fn bracket(&self, other: &NCPoly) -> Self {
        &self.concat(other) - &other.concat(self)
    }

    /// Shuffle product: the sum over all interleavings, extended bilinearly.
    pub fn shuffle(&self, other: &NCPoly) -> Self {
        let mut out = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut words = BTreeMap::new();
                shuffle_words(&u.0, &v.0, &mut Vec::new(), &mut words);
                let ab = a * b;
                for (w, k) in words {
                    out.add_term(w, &ab * k);
                }
            }
        }
        out
    }

    /// `f ⧢ f ⧢ ... ⧢ f` (`k` factors; `1` for `k = 0`).
    pub fn shuffle_power(&self, k: usize) -> Self {
        (0..k).fold(NCPoly::one(), |acc, _| acc.shuffle(self))
    }

    /// Hausdorff derivative: each word goes to the sum of the words obtained
    /// by deleting one occurrence of `x`.
    pub fn hausdorff(&self, x: u8) -> Self {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            for (i, &y) in w.0.iter().enumerate() {
                if y == x {
                    let mut v = w.0.clone();
                    v.remove(i);
                    out.add_term(Word(v), c.clone());
                }
            }
        }
        out
    }

    /// Twisted derivative: `x w' -> w'`, every other word to zero.
    pub fn twisted(&self, x: u8) -> Self {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            if w.0.first() == Some(&x) {
                out.add_term(w.suffix(1), c.clone());
            }
        }
        out
    }

    /// `<f, g> = sum_w f_w g_w`.
    pub fn scalar(&self, other: &NCPoly) -> Rational {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small
            .terms
            .iter()
            .filter_map(|(w, a)| large.terms.get(w).map(|b| a * b))
            .sum()
    }

    /// Variable substitution `x_i -> x_{σ(i)}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.permute(perm), c.clone())))
    }

    /// Splits into pieces of fixed content (multidegree).
    pub fn by_content(&self) -> BTreeMap<Word, NCPoly> {
        let mut out: BTreeMap<Word, NCPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.content()).or_default().add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Mul<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.concat(rhs)
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for NCPoly {
    /// `x1*x2 - x2*x1` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            f.write_str(match (i, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            })?;
            let monomial: Vec<String> = w.0.iter().map(|x| alloc::format!("x{}", x)).collect();
            match (mag.is_one(), w.is_empty()) {
                (_, true) => write!(f, "{}", crate::rational::to_string(&mag))?,
                (true, false) => f.write_str(&monomial.join("*"))?,
                (false, false) => write!(f, "{}*{}", crate::rational::to_string(&mag), monomial.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Whether `f` lies in the joint kernel of all Hausdorff derivatives over
/// the alphabet `1..=n`.
pub fn in_aprime(f: &NCPoly, n: usize) -> bool {
    (1..=n as u8).all(|x| f.hausdorff(x).is_zero())
}
