//! Closed formulas for graded Frobenius characteristics.
//!
//! Every series is homogeneous of degree `n` in `X` with coefficients in
//! `Q[[q]]` truncated at `q^D`, and is stored in the Schur basis.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::partition::Partition;
use crate::qseries::{one_minus, qpoch, setpartition_gf, QSeries};
use crate::rational::{int, Rational};
use crate::symfunc::{Basis, Pleth, SymFunc, DEFAULT_DEGREE_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Module {
    /// Commutative polynomials `Q[X_n]`.
    Sym,
    /// Symmetric-group invariants of the free algebra.
    NCSym,
    /// The free algebra `Q<X_n>`.
    QXn,
    /// Harmonics for the Hausdorff derivatives.
    MHar,
    /// Harmonics for the twisted derivatives.
    NCHar,
    /// Classical harmonics (the coinvariant module).
    Coinv,
    /// Joint kernel of the Hausdorff derivatives.
    APrime,
}

impl Module {
    pub const ALL: [Module; 7] = [
        Module::Sym,
        Module::NCSym,
        Module::QXn,
        Module::MHar,
        Module::NCHar,
        Module::Coinv,
        Module::APrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Module::Sym => "sym",
            Module::NCSym => "ncsym",
            Module::QXn => "qxn",
            Module::MHar => "mhar",
            Module::NCHar => "nchar",
            Module::Coinv => "coinv",
            Module::APrime => "aprime",
        }
    }

    pub fn from_name(s: &str) -> Option<Module> {
        Module::ALL.into_iter().find(|m| m.name() == s)
    }

    /// Graded Frobenius characteristic for `n` variables up to `q^trunc`.
    pub fn frob(self, n: usize, trunc: usize) -> FrobSeries {
        let value = match self {
            Module::Sym => frob_sym(n, trunc),
            Module::NCSym => frob_ncsym(n, trunc),
            Module::QXn => frob_qxn(n, trunc),
            Module::MHar => frob_mhar(n, trunc),
            Module::NCHar => frob_nchar(n, trunc),
            Module::Coinv => frob_coinv(n, trunc),
            Module::APrime => frob_aprime(n, trunc),
        };
        FrobSeries { module: self, n, value }
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FrobSeries {
    pub module: Module,
    pub n: usize,
    pub value: SymFunc,
}

impl FrobSeries {
    /// `mhar_3` style.
    pub fn label(&self) -> String {
        alloc::format!("{}_{}", self.module.name(), self.n)
    }

    pub fn trunc_order(&self) -> usize {
        self.value.trunc_order()
    }

    pub fn hilbert(&self) -> QSeries {
        self.value.hilbert(self.n).expect("Frobenius series are homogeneous of degree n")
    }
}

fn bound(n: usize) -> usize {
    DEFAULT_DEGREE_BOUND.max(n)
}

fn h(lambda: Partition, c: QSeries) -> SymFunc {
    let n = lambda.size();
    SymFunc::term(Basis::H, lambda, c).with_degree_bound(bound(n)).expect("within bound")
}

fn unit(s: &QSeries) -> QSeries {
    s.invert().expect("constant term one")
}

/// `sum_{d=0}^{n} q^d / {q;q}_d h_{(n-d,1^d)}`.
fn hook_sum(n: usize, trunc: usize) -> SymFunc {
    let mut acc = SymFunc::zero(Basis::H, bound(n), trunc);
    for d in 0..=n.min(trunc) {
        let c = QSeries::monomial(Rational::one(), d, trunc) * unit(&crate::qseries::qfall(d, trunc));
        acc = acc.add(&h(Partition::hook(n, d), c));
    }
    acc
}

/// `h_n / (q;q)_n`.
pub fn frob_sym(n: usize, trunc: usize) -> SymFunc {
    h(Partition::row(n), unit(&qpoch(n, trunc))).to_basis(Basis::S)
}

/// `h_n sum_{d=0}^{n} q^d / {q;q}_d`.
pub fn frob_ncsym(n: usize, trunc: usize) -> SymFunc {
    h(Partition::row(n), setpartition_gf(n, trunc)).to_basis(Basis::S)
}

pub fn frob_qxn(n: usize, trunc: usize) -> SymFunc {
    hook_sum(n, trunc).to_basis(Basis::S)
}

/// `(q;q)_n` times the free algebra.
pub fn frob_mhar(n: usize, trunc: usize) -> SymFunc {
    frob_qxn(n, trunc).scale(&qpoch(n, trunc))
}

/// The free algebra divided by the set-partition series.
pub fn frob_nchar(n: usize, trunc: usize) -> SymFunc {
    frob_qxn(n, trunc).scale(&unit(&setpartition_gf(n, trunc)))
}

/// `h_n[X/(1-q)] (q;q)_n`.
pub fn frob_coinv(n: usize, trunc: usize) -> SymFunc {
    h(Partition::row(n), QSeries::one(trunc))
        .pleth_scale(Pleth::OverOneMinusQ)
        .scale(&qpoch(n, trunc))
        .to_basis(Basis::S)
}

/// `sum_{d=0}^{n} q^d / {q;q}_d h_{(n-d,1^d)}[X(1-q)]`.
pub fn frob_aprime(n: usize, trunc: usize) -> SymFunc {
    let mut acc = SymFunc::zero(Basis::S, bound(n), trunc);
    for d in 0..=n.min(trunc) {
        let c = QSeries::monomial(Rational::one(), d, trunc) * unit(&crate::qseries::qfall(d, trunc));
        let term = h(Partition::hook(n, d), QSeries::one(trunc)).pleth_scale(Pleth::TimesOneMinusQ);
        acc = acc.add(&term.scale(&c));
    }
    acc
}

/// The `GL_n` character of the joint Hausdorff kernel at `a_1 = ... = a_n = q`:
/// `(1-q)^n / (1 - nq)`.
pub fn glchar_aprime(n: usize, trunc: usize) -> QSeries {
    one_minus(1, trunc).pow(n) * unit(&one_minus(n as i64, trunc))
}

fn e_hook_sum(k: usize, from: usize) -> SymFunc {
    let mut acc = SymFunc::zero(Basis::E, bound(k), 0);
    for i in from..=k {
        let sign = if i % 2 == 0 { int(1) } else { int(-1) };
        let lambda = Partition::from_unsorted({
            let mut v = alloc::vec![i];
            v.extend(core::iter::repeat_n(1, k - i));
            v
        });
        let t = SymFunc::term(Basis::E, lambda, QSeries::constant(sign, 0));
        acc = acc.add(&t);
    }
    acc.to_basis(Basis::S)
}

/// Degree-`k` component of the character as a symmetric function in the
/// `a` variables: `sum_{i=0}^{k} (-1)^i e_{(i,1^{k-i})}` in the Schur basis.
/// Coefficients are constant series (truncation order zero).
pub fn glchar_aprime_schur(k: usize) -> SymFunc {
    e_hook_sum(k, 0)
}

/// The same sum started at `i = 2`, which drops the cancelling `i = 0, 1`
/// terms. It agrees with [`glchar_aprime_schur`] for `k >= 1` and is zero at
/// `k = 0`.
pub fn glchar_aprime_schur_from_two(k: usize) -> SymFunc {
    e_hook_sum(k, 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SYTableau {
    pub shape: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl SYTableau {
    pub fn first_column(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0]).collect()
    }

    /// Smallest positive integer missing from the first column.
    pub fn first_column_gap(&self) -> usize {
        let col = self.first_column();
        (1..).find(|i| !col.contains(i)).unwrap()
    }

    pub fn passes_filter(&self) -> bool {
        self.first_column_gap() % 2 == 1
    }
}

/// All standard Young tableaux with `k` cells.
pub fn syt_all(k: usize) -> Vec<SYTableau> {
    fn go(next: usize, k: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<SYTableau>) {
        if next > k {
            let shape = Partition::from_unsorted(rows.iter().map(Vec::len).collect());
            out.push(SYTableau { shape, rows: rows.clone() });
            return;
        }
        for r in 0..=rows.len() {
            let fits = if r == rows.len() {
                true
            } else {
                r == 0 || rows[r - 1].len() > rows[r].len()
            };
            if !fits {
                continue;
            }
            if r == rows.len() {
                rows.push(alloc::vec![next]);
                go(next + 1, k, rows, out);
                rows.pop();
            } else {
                rows[r].push(next);
                go(next + 1, k, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    go(1, k, &mut Vec::new(), &mut out);
    out
}

/// `sum s_{shape(T)}` over standard tableaux of size `k` whose first column
/// misses an odd integer first.
pub fn syt_filter(k: usize) -> SymFunc {
    let mut acc = SymFunc::zero(Basis::S, bound(k), 0);
    for t in syt_all(k).into_iter().filter(SYTableau::passes_filter) {
        acc = acc.add(&SymFunc::basis_element(Basis::S, t.shape, 0));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{lyndon_factorize, Word};
    use crate::symfunc::Basis::{H, S};

    fn s(c: &[i64], d: usize) -> QSeries {
        QSeries::from_ints(c, d)
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn bell_by_enumeration(k: usize) -> usize {
        fn go(i: usize, k: usize, max: usize) -> usize {
            if i == k {
                return 1;
            }
            (0..=max + 1).map(|b| go(i + 1, k, max.max(b))).sum()
        }
        if k == 0 {
            1
        } else {
            go(1, k, 0)
        }
    }

    #[test]
    fn sym_and_ncsym() {
        assert!(frob_sym(2, 3).equals(&SymFunc::term(H, part(&[2]), s(&[1, 1, 2, 2], 3))));
        assert_eq!(Module::Sym.frob(2, 3).hilbert(), s(&[1, 1, 2, 2], 3));
        assert!(frob_sym(1, 2).equals(&SymFunc::term(H, part(&[1]), s(&[1, 1, 1], 2))));
        assert!(frob_ncsym(2, 3).equals(&SymFunc::term(H, part(&[2]), s(&[1, 1, 2, 4], 3))));
        assert_eq!(Module::NCSym.frob(2, 3).hilbert().coeff(3), int(4));
        for n in 1..=5 {
            let hs = Module::NCSym.frob(n, 5).hilbert();
            for k in 0..=n {
                assert_eq!(hs.coeff(k), int(bell_by_enumeration(k) as i64), "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn free_algebra() {
        let f = frob_qxn(2, 2).to_basis(H);
        assert_eq!(f.q_slice(1), [(part(&[1, 1]), int(1))].into_iter().collect());
        assert_eq!(f.q_slice(2), [(part(&[1, 1]), int(2))].into_iter().collect());
        for n in 2..=3 {
            assert_eq!(Module::QXn.frob(n, 6).hilbert(), unit(&one_minus(n as i64, 6)));
        }
        assert!(frob_qxn(1, 5).equals(&SymFunc::term(H, part(&[1]), unit(&one_minus(1, 5)))));
    }

    #[test]
    fn harmonics() {
        let f = frob_mhar(2, 2);
        assert_eq!(f.q_slice(0), [(part(&[2]), int(1))].into_iter().collect());
        assert_eq!(f.q_slice(1), [(part(&[1, 1]), int(1))].into_iter().collect());
        assert_eq!(f.q_slice(2), [(part(&[1, 1]), int(1))].into_iter().collect());
        assert_eq!(Module::MHar.frob(2, 8).hilbert(), s(&[1, 1, 1, 3, 6, 12, 24, 48, 96], 8));
        assert_eq!(Module::NCHar.frob(2, 6).hilbert(), s(&[1; 7], 6));
    }

    #[test]
    fn coinvariants() {
        assert_eq!(Module::Coinv.frob(2, 3).hilbert(), s(&[1, 1], 3));
        assert_eq!(frob_coinv(2, 1).q_slice(1), [(part(&[1, 1]), int(1))].into_iter().collect());
        assert_eq!(Module::Coinv.frob(3, 4).hilbert(), s(&[1, 2, 2, 1], 4));
    }

    #[test]
    fn aprime() {
        assert_eq!(Module::APrime.frob(2, 5).hilbert(), s(&[1, 0, 1, 2, 4, 8], 5));
        let long: Vec<i64> = (0..=5)
            .map(|r| {
                Word::all(2, r)
                    .iter()
                    .filter(|w| lyndon_factorize(w).letter_factors() == 0)
                    .count() as i64
            })
            .collect();
        assert_eq!(Module::APrime.frob(2, 5).hilbert(), s(&long, 5));
        for n in 2..=3 {
            let lhs = frob_aprime(n, 6).kronecker(&frob_coinv(n, 6));
            assert!(lhs.equals(&frob_mhar(n, 6)), "n={}", n);
        }
    }

    #[test]
    fn chevalley_and_drensky() {
        for n in 1..=4 {
            let d = 8;
            let qxn = frob_qxn(n, d);
            assert!(frob_mhar(n, d).kronecker(&frob_sym(n, d)).equals(&qxn), "n={}", n);
            assert!(frob_nchar(n, d).scale(&setpartition_gf(n, d)).equals(&qxn), "n={}", n);
            assert!(frob_aprime(n, d).pleth_scale(Pleth::OverOneMinusQ).equals(&qxn), "n={}", n);
            let hs = Module::MHar.frob(n, d).hilbert();
            assert_eq!(hs, qpoch(n, d) * unit(&one_minus(n as i64, d)));
        }
    }

    #[test]
    fn schur_positive() {
        for n in 1..=4 {
            for m in Module::ALL {
                let f = m.frob(n, 6);
                assert!(f.value.is_schur_positive(), "{}", f.label());
                assert_eq!(f.value.homogeneous_degree(), Some(n));
            }
        }
    }

    #[test]
    fn constants_are_harmonic() {
        for n in 1..=4 {
            for m in [Module::Sym, Module::NCSym, Module::QXn, Module::MHar, Module::NCHar] {
                let slice = m.frob(n, 3).value.q_slice(0);
                assert_eq!(slice, [(Partition::row(n), int(1))].into_iter().collect());
            }
        }
    }

    #[test]
    fn gl_character() {
        assert_eq!(glchar_aprime(2, 5), s(&[1, 0, 1, 2, 4, 8], 5));
        let s21 = SymFunc::basis_element(S, part(&[2, 1]), 0);
        assert!(glchar_aprime_schur(3).equals(&s21));
        assert!(glchar_aprime_schur(2).equals(&SymFunc::basis_element(S, part(&[1, 1]), 0)));
        assert!(glchar_aprime_schur(1).is_zero());
        assert!(glchar_aprime_schur(0).equals(&SymFunc::constant(S, QSeries::one(0))));
        assert!(glchar_aprime_schur_from_two(0).is_zero());
        for k in 1..=8 {
            assert!(glchar_aprime_schur(k).equals(&glchar_aprime_schur_from_two(k)), "k={}", k);
        }
        // Evaluating each degree at a = (1, ..., 1) recovers the specialization.
        for n in 1..=4 {
            let specialized = glchar_aprime(n, 7);
            for k in 0..=7 {
                assert_eq!(glchar_aprime_schur(k).principal_at_ones(n).coeff(0), specialized.coeff(k), "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn standard_tableaux() {
        let counts: Vec<usize> = (0..=7).map(|k| syt_all(k).len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 10, 26, 76, 232]);
        for t in syt_all(5) {
            for r in &t.rows {
                assert!(r.windows(2).all(|p| p[0] < p[1]));
            }
            for i in 1..t.rows.len() {
                for (j, x) in t.rows[i].iter().enumerate() {
                    assert!(t.rows[i - 1][j] < *x);
                }
            }
        }
        assert!(syt_filter(3).equals(&SymFunc::basis_element(S, part(&[2, 1]), 0)));
        assert!(syt_filter(0).equals(&SymFunc::constant(S, QSeries::one(0))));
        for k in 1..=7 {
            assert!(syt_filter(k).equals(&glchar_aprime_schur_from_two(k)), "k={}", k);
        }
        assert!(syt_filter(0).equals(&glchar_aprime_schur(0)));
        assert!(!syt_filter(6).is_zero() && syt_filter(1).is_zero());
    }
}
