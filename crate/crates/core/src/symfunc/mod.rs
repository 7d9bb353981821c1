//! Symmetric functions of bounded degree with q-series coefficients.
//!
//! A [`SymFunc`] is a sparse combination of basis elements `b_λ` with
//! [`QSeries`] coefficients, all sharing one truncation order. Arithmetic is
//! carried out in the power-sum basis, where the product, the Kronecker
//! product and the plethystic scalings `X(1-q)`, `X/(1-q)` are all simple;
//! other bases are reached through the per-degree tables in [`tables`].

pub mod tables;

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qseries::{one_minus, QSeries};
use crate::rational::{factorial, Rational};

pub const DEFAULT_DEGREE_BOUND: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    P = 0,
    H = 1,
    E = 2,
    M = 3,
    S = 4,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::P, Basis::H, Basis::E, Basis::M, Basis::S];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::H => "h",
            Basis::E => "e",
            Basis::M => "m",
            Basis::S => "s",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.tag() == tag)
    }
}

/// Which plethystic scaling to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pleth {
    /// `p_k -> (1 - q^k) p_k`
    TimesOneMinusQ,
    /// `p_k -> p_k / (1 - q^k)`
    OverOneMinusQ,
}

#[derive(Clone, Debug)]
pub struct SymFunc {
    basis: Basis,
    degree_bound: usize,
    trunc: usize,
    terms: BTreeMap<Partition, QSeries>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree_bound: usize, trunc: usize) -> Self {
        SymFunc {
            basis,
            degree_bound,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    /// Collects terms, truncating coefficients to `trunc` and summing repeats.
    pub fn from_terms(
        basis: Basis,
        degree_bound: usize,
        trunc: usize,
        terms: impl IntoIterator<Item = (Partition, QSeries)>,
    ) -> Result<Self> {
        let mut f = Self::zero(basis, degree_bound, trunc);
        for (lambda, c) in terms {
            if lambda.size() > degree_bound {
                return Err(Error::DegreeOverflow {
                    degree: lambda.size(),
                    bound: degree_bound,
                });
            }
            f.add_term(lambda, &c);
        }
        Ok(f)
    }

    /// The single basis element `b_λ` with coefficient one.
    pub fn basis_element(basis: Basis, lambda: Partition, trunc: usize) -> Self {
        Self::term(basis, lambda, QSeries::one(trunc))
    }

    /// `c * b_λ`, with truncation order taken from `c`.
    pub fn term(basis: Basis, lambda: Partition, c: QSeries) -> Self {
        let bound = DEFAULT_DEGREE_BOUND.max(lambda.size());
        let mut f = Self::zero(basis, bound, c.trunc_order());
        f.add_term(lambda, &c);
        f
    }

    /// The constant symmetric function `c` (degree zero).
    pub fn constant(basis: Basis, c: QSeries) -> Self {
        Self::term(basis, Partition::empty(), c)
    }

    fn add_term(&mut self, lambda: Partition, c: &QSeries) {
        let c = c.truncate(self.trunc);
        let entry = self
            .terms
            .entry(lambda.clone())
            .or_insert_with(|| QSeries::zero(self.trunc));
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn trunc_order(&self) -> usize {
        self.trunc
    }

    pub fn with_degree_bound(mut self, bound: usize) -> Result<Self> {
        if let Some(deg) = self.terms.keys().map(Partition::size).max() {
            if deg > bound {
                return Err(Error::DegreeOverflow { degree: deg, bound });
            }
        }
        self.degree_bound = bound;
        Ok(self)
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QSeries> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> QSeries {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(|| QSeries::zero(self.trunc))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of every term, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    fn is_homogeneous_of(&self, n: usize) -> bool {
        self.terms.keys().all(|l| l.size() == n)
    }

    /// Coefficient of `q^k` of every term, in the current basis.
    pub fn q_slice(&self, k: usize) -> BTreeMap<Partition, Rational> {
        self.terms
            .iter()
            .map(|(l, c)| (l.clone(), c.coeff(k)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        let mut out = Self::zero(self.basis, self.degree_bound, trunc.min(self.trunc));
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c);
        }
        out
    }

    fn map_coeffs(&self, f: impl Fn(&Partition, &QSeries) -> QSeries) -> Self {
        let mut out = Self::zero(self.basis, self.degree_bound, self.trunc);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &f(l, c));
        }
        out
    }

    pub fn scale(&self, s: &QSeries) -> Self {
        let trunc = self.trunc.min(s.trunc_order());
        let mut out = Self::zero(self.basis, self.degree_bound, trunc);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &(c * s));
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map_coeffs(|_, c| c.scale(r))
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|_, c| -c)
    }

    /// Sum, expressed in the basis of `self`.
    pub fn add(&self, other: &SymFunc) -> Self {
        let other = other.to_basis(self.basis);
        let trunc = self.trunc.min(other.trunc);
        let bound = self.degree_bound.max(other.degree_bound);
        let mut out = Self::zero(self.basis, bound, trunc);
        for (l, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(l.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> Self {
        self.add(&other.neg())
    }

    /// Re-expresses the same symmetric function in `target`.
    pub fn to_basis(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let p = self.to_p();
        if target == Basis::P {
            return p;
        }
        let mut out = Self::zero(target, self.degree_bound, self.trunc);
        for (mu, c) in &p.terms {
            let t = tables::tables(mu.size());
            let row = &t.from_p(target)[t.index[mu]];
            for (j, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    out.add_term(t.parts[j].clone(), &c.scale(r));
                }
            }
        }
        out
    }

    fn to_p(&self) -> Self {
        if self.basis == Basis::P {
            return self.clone();
        }
        let mut out = Self::zero(Basis::P, self.degree_bound, self.trunc);
        for (lambda, c) in &self.terms {
            let t = tables::tables(lambda.size());
            let row = &t.to_p(self.basis)[t.index[lambda]];
            for (j, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    out.add_term(t.parts[j].clone(), &c.scale(r));
                }
            }
        }
        out
    }

    /// Mathematical equality (independent of the bases used), comparing up to
    /// the smaller truncation order.
    pub fn equals(&self, other: &SymFunc) -> bool {
        let trunc = self.trunc.min(other.trunc);
        let a = self.to_p().truncate(trunc);
        let b = other.to_p().truncate(trunc);
        a.terms == b.terms
    }

    /// Product in the ring of symmetric functions, returned in the basis of `self`.
    pub fn multiply(&self, other: &SymFunc) -> Result<Self> {
        let bound = self.degree_bound.max(other.degree_bound);
        let a = self.to_p();
        let b = other.to_p();
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero(Basis::P, bound, trunc);
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                let degree = la.size() + lb.size();
                if degree > bound {
                    return Err(Error::DegreeOverflow { degree, bound });
                }
                out.add_term(la.union(lb), &(ca * cb));
            }
        }
        Ok(out.to_basis(self.basis))
    }

    /// Kronecker product: `p_λ ⊙ p_μ = δ_{λμ} z_λ p_λ`, extended bilinearly.
    /// Returned in the basis of `self`.
    pub fn kronecker(&self, other: &SymFunc) -> Self {
        let a = self.to_p();
        let b = other.to_p();
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero(Basis::P, self.degree_bound.max(other.degree_bound), trunc);
        for (l, ca) in &a.terms {
            if let Some(cb) = b.terms.get(l) {
                let z = Rational::from_integer(l.z());
                out.add_term(l.clone(), &(ca * cb).scale(&z));
            }
        }
        out.to_basis(self.basis)
    }

    /// Applies `f[X(1-q)]` or `f[X/(1-q)]`; returned in the basis of `self`.
    pub fn pleth_scale(&self, mode: Pleth) -> Self {
        let trunc = self.trunc;
        let mut factors: BTreeMap<usize, QSeries> = BTreeMap::new();
        let mut out = Self::zero(Basis::P, self.degree_bound, trunc);
        for (lambda, c) in &self.to_p().terms {
            let mut acc = c.clone();
            for &k in lambda.parts() {
                let f = factors.entry(k).or_insert_with(|| {
                    let base = QSeries::one(trunc) - QSeries::monomial(Rational::one(), k, trunc);
                    match mode {
                        Pleth::TimesOneMinusQ => base,
                        Pleth::OverOneMinusQ => base.invert().expect("1 - q^k is a unit"),
                    }
                });
                acc = &acc * &*f;
            }
            out.add_term(lambda.clone(), &acc);
        }
        out.to_basis(self.basis)
    }

    /// Hilbert series of a homogeneous degree-`n` Frobenius series:
    /// `n!` times the coefficient of `p_{1^n}`.
    pub fn hilbert(&self, n: usize) -> Result<QSeries> {
        if !self.is_homogeneous_of(n) {
            return Err(Error::NotHomogeneous { expected: n });
        }
        let c = self.to_p().coeff(&Partition::column(n));
        Ok(c.scale(&Rational::from_integer(factorial(n))))
    }

    /// Character value on the class of cycle type λ: `z_λ` times the
    /// coefficient of `p_λ`.
    pub fn char_value(&self, lambda: &Partition) -> Result<QSeries> {
        let n = lambda.size();
        if !self.is_homogeneous_of(n) {
            let found = self
                .terms
                .keys()
                .map(Partition::size)
                .find(|&s| s != n)
                .unwrap_or(n);
            return Err(Error::DegreeMismatch { expected: n, found });
        }
        let c = self.to_p().coeff(lambda);
        Ok(c.scale(&Rational::from_integer(lambda.z())))
    }

    /// Whether every q-coefficient of every Schur coefficient is nonnegative.
    pub fn is_schur_positive(&self) -> bool {
        self.to_basis(Basis::S)
            .terms
            .values()
            .all(|c| c.coeffs().iter().all(|x| !x.is_negative()))
    }

    /// Expansion of `q^k` slice as a symmetric polynomial evaluated at
    /// `x_1 = ... = x_n = 1`, via `p_μ(1^n) = n^{ℓ(μ)}`.
    pub fn principal_at_ones(&self, n: usize) -> QSeries {
        let p = self.to_p();
        let mut acc = QSeries::zero(self.trunc);
        for (mu, c) in &p.terms {
            let v = BigInt::from(n).pow(mu.len() as u32);
            acc = acc + c.scale(&Rational::from_integer(v));
        }
        acc
    }
}

impl PartialEq for SymFunc {
    /// Structural equality: same basis, truncation and terms.
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.trunc == other.trunc && self.terms == other.terms
    }
}

fn fmt_rational_coeff(c: &Rational) -> String {
    crate::rational::to_string(c)
}

impl fmt::Display for SymFunc {
    /// One line per power of `q`, e.g. `q^1: s[1,1] - 2*s[2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for k in 0..=self.trunc {
            let slice = self.q_slice(k);
            if slice.is_empty() {
                continue;
            }
            if any {
                writeln!(f)?;
            }
            any = true;
            write!(f, "q^{}:", k)?;
            for (i, (l, c)) in slice.iter().enumerate() {
                let neg = c.is_negative();
                let mag = c.abs();
                let sep = match (i, neg) {
                    (0, false) => " ",
                    (0, true) => " -",
                    (_, false) => " + ",
                    (_, true) => " - ",
                };
                f.write_str(sep)?;
                if !mag.is_one() {
                    write!(f, "{}*", fmt_rational_coeff(&mag))?;
                }
                write!(f, "{}{}", self.basis.tag(), l)?;
            }
        }
        if !any {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `1/(1 - a q)`.
pub fn geometric(a: i64, trunc: usize) -> QSeries {
    one_minus(a, trunc).invert().expect("constant term one")
}

#[cfg(test)]
mod oracle;
