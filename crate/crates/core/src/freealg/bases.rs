//! The bracket basis `P_w`, the shuffle basis `S_w` and the hybrid basis `H_w`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::inverse;
use crate::rational::{factorial, Rational};

use super::lyndon::{lyndon_factorize, std_factorization};
use super::{NCPoly, Word};

fn p_lyndon(l: &Word) -> NCPoly {
    if l.len() == 1 {
        return NCPoly::word(l.clone());
    }
    let (u, v) = std_factorization(l).expect("Lyndon factor of length >= 2");
    p_lyndon(&u).bracket(&p_lyndon(&v))
}

/// `P_w = P_{l_1} ... P_{l_k}` over the Lyndon factorization, with
/// `P_l = [P_u, P_v]` for the standard factorization `l = uv`.
pub fn p_basis(w: &Word) -> NCPoly {
    lyndon_factorize(w)
        .factors()
        .iter()
        .fold(NCPoly::one(), |acc, l| acc.concat(&p_lyndon(l)))
}

fn s_lyndon(l: &Word) -> NCPoly {
    let (&first, rest) = l.letters().split_first().expect("nonempty Lyndon word");
    if rest.is_empty() {
        return NCPoly::letter(first);
    }
    // S_{a v} = x_a S_v, with v read through its own Lyndon factorization.
    // Taking S_l to be the bare monomial breaks duality from length 5 on.
    NCPoly::letter(first).concat(&s_basis(&Word::new(rest.to_vec())))
}

/// `S_w = (1 / i_1! ... i_k!) S_{l_1}^{⧢ i_1} ⧢ ... ⧢ S_{l_k}^{⧢ i_k}`.
pub fn s_basis(w: &Word) -> NCPoly {
    let mut out = NCPoly::one();
    let mut denom = BigInt::from(1);
    for (l, i) in lyndon_factorize(w).grouped() {
        out = out.shuffle(&s_lyndon(&l).shuffle_power(i));
        denom *= factorial(i);
    }
    out.scale(&Rational::new(1.into(), denom))
}

/// `H_w = M(w) L(w)`: the shuffle of the single-letter Lyndon factors
/// (with multiplicity) times the bracket product of the longer ones.
pub fn h_basis(w: &Word) -> NCPoly {
    let fact = lyndon_factorize(w);
    let mut m = NCPoly::one();
    let mut long = Word::empty();
    for l in fact.factors() {
        if l.len() == 1 {
            m = m.shuffle(&NCPoly::word(l.clone()));
        } else {
            long = long.concat(l);
        }
    }
    m.concat(&p_basis(&long))
}

/// The `P` basis restricted to one content block, with the inverse of its
/// coefficient matrix.
#[derive(Clone, Debug)]
struct PBlock {
    words: Vec<Word>,
    index: BTreeMap<Word, usize>,
    // inverse[u][v]: coefficient of P_u in the word v.
    inverse: Vec<Vec<Rational>>,
}

impl PBlock {
    fn new(content: &Word) -> Result<Self> {
        let words = Word::rearrangements(content);
        let index: BTreeMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let n = words.len();
        // a[v][u] = coefficient of the word v in P_u.
        let mut a = alloc::vec![alloc::vec![Rational::zero(); n]; n];
        for (u, w) in words.iter().enumerate() {
            for (v, c) in p_basis(w).terms() {
                a[index[v]][u] = c.clone();
            }
        }
        let inverse = inverse(&a).ok_or_else(|| Error::SingularBlock(alloc::format!("{}", content)))?;
        Ok(PBlock { words, index, inverse })
    }

    fn expand(&self, f: &NCPoly, out: &mut BTreeMap<Word, Rational>) {
        for (u, row) in self.inverse.iter().enumerate() {
            let c: Rational = f
                .terms()
                .iter()
                .map(|(v, x)| &row[self.index[v]] * x)
                .sum();
            if !c.is_zero() {
                out.insert(self.words[u].clone(), c);
            }
        }
    }
}

/// Expands homogeneous polynomials in the `P` basis, caching the per-content
/// inverse matrices across calls.
#[derive(Clone, Debug, Default)]
pub struct PExpander {
    blocks: BTreeMap<Word, PBlock>,
}

impl PExpander {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn expand(&mut self, f: &NCPoly) -> Result<BTreeMap<Word, Rational>> {
        if f.is_zero() {
            return Ok(BTreeMap::new());
        }
        let expected = f.terms().keys().next().map(Word::len).unwrap_or(0);
        if f.homogeneous_degree().is_none() {
            return Err(Error::NotHomogeneous { expected });
        }
        let mut out = BTreeMap::new();
        for (content, piece) in f.by_content() {
            if !self.blocks.contains_key(&content) {
                let block = PBlock::new(&content)?;
                self.blocks.insert(content.clone(), block);
            }
            self.blocks[&content].expand(&piece, &mut out);
        }
        Ok(out)
    }
}

/// Coefficients `c_u` with `f = sum_u c_u P_u`.
pub fn expand_in_p(f: &NCPoly) -> Result<BTreeMap<Word, Rational>> {
    PExpander::new().expand(f)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Negative { word: Word, coeff: Rational },
    AboveLeading { word: Word },
    Leading { found: Rational, expected: BigInt },
}

/// The expansion of `H_w` in the `P` basis and the checks made on it.
#[derive(Clone, Debug)]
pub struct TriangularityReport {
    pub word: Word,
    pub expansion: BTreeMap<Word, Rational>,
    /// `m!` with `m` the number of single-letter Lyndon factors of `w`.
    pub expected_leading: BigInt,
    pub leading: Rational,
    pub violations: Vec<Violation>,
}

impl TriangularityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Whether `|w|!` would have been a different leading coefficient.
    pub fn length_factorial_differs(&self) -> bool {
        factorial(self.word.len()) != self.expected_leading
    }
}

pub fn verify_triangularity(w: &Word) -> TriangularityReport {
    verify_triangularity_with(&mut PExpander::new(), w)
}

pub fn verify_triangularity_with(ex: &mut PExpander, w: &Word) -> TriangularityReport {
    let expansion = ex.expand(&h_basis(w)).expect("H_w is homogeneous");
    let expected_leading = factorial(lyndon_factorize(w).letter_factors());
    let leading = expansion.get(w).cloned().unwrap_or_else(Rational::zero);
    let mut violations = Vec::new();
    for (u, c) in &expansion {
        if c.is_negative() {
            violations.push(Violation::Negative { word: u.clone(), coeff: c.clone() });
        }
        if u > w {
            violations.push(Violation::AboveLeading { word: u.clone() });
        }
    }
    if leading != Rational::from_integer(expected_leading.clone()) {
        violations.push(Violation::Leading { found: leading.clone(), expected: expected_leading.clone() });
    }
    TriangularityReport { word: w.clone(), expansion, expected_leading, leading, violations }
}
