//! Verification sweeps over the identities relating the modules.
//!
//! Each sweep returns a [`Report`] with one [`Check`] per case; nothing here
//! panics on a failed identity.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::freealg::bases::{verify_triangularity_with, PExpander};
use crate::freealg::{lyndon_factorize, p_basis, s_basis, Word};
use crate::frobenius::{
    frob_aprime, frob_coinv, frob_mhar, frob_nchar, frob_qxn, frob_sym, glchar_aprime, glchar_aprime_schur,
    glchar_aprime_schur_from_two, syt_filter,
};
use crate::harmonics::{kernel, Flavor};
use crate::linalg::{Echelon, SparseVec};
use crate::partition::Partition;
use crate::qseries::{setpartition_gf, QSeries};
use crate::rational::{self, Rational};
use crate::symfunc::{Basis, Pleth, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Chevalley,
    Drensky,
    Triangularity,
    Duality,
    Kernels,
    Syt,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Chevalley, Suite::Drensky, Suite::Triangularity, Suite::Duality, Suite::Kernels, Suite::Syt];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Chevalley => "chevalley",
            Suite::Drensky => "drensky",
            Suite::Triangularity => "triangularity",
            Suite::Duality => "duality",
            Suite::Kernels => "kernels",
            Suite::Syt => "syt",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub checks: Vec<Check>,
    /// Free-form summary lines (extremal values seen and the like).
    pub notes: Vec<String>,
}

impl Report {
    fn new(suite: Suite) -> Self {
        Report { suite, checks: Vec::new(), notes: Vec::new() }
    }

    fn push(&mut self, name: String, ok: bool, detail: impl FnOnce() -> String) {
        let outcome = if ok { Outcome::Pass } else { Outcome::Fail(detail()) };
        self.checks.push(Check { name, outcome });
    }

    fn skip(&mut self, name: String, reason: String) {
        self.checks.push(Check { name, outcome: Outcome::Skipped(reason) });
    }

    /// No check failed (skips are allowed).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.outcome, Outcome::Fail(_)))
    }

    pub fn count(&self, pred: impl Fn(&Outcome) -> bool) -> usize {
        self.checks.iter().filter(|c| pred(&c.outcome)).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| matches!(c.outcome, Outcome::Fail(_)))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.outcome {
                Outcome::Pass => writeln!(f, "PASS {}", c.name)?,
                Outcome::Fail(why) => writeln!(f, "FAIL {}: {}", c.name, why)?,
                Outcome::Skipped(why) => writeln!(f, "SKIP {}: {}", c.name, why)?,
            }
        }
        for n in &self.notes {
            writeln!(f, "{}", n)?;
        }
        let pass = self.count(|o| *o == Outcome::Pass);
        let skip = self.count(|o| matches!(o, Outcome::Skipped(_)));
        write!(
            f,
            "{}: {} passed, {} failed, {} skipped",
            self.suite.name(),
            pass,
            self.checks.len() - pass - skip,
            skip
        )
    }
}

fn schur_diff(a: &SymFunc, b: &SymFunc) -> String {
    let d = a.sub(b).to_basis(Basis::S);
    alloc::format!("difference {}", d)
}

/// `MHar ⊙ Sym = Q<X>` and `NCSym-series * NCHar = Q<X>`.
pub fn chevalley(nmax: usize, trunc: usize) -> Report {
    let mut r = Report::new(Suite::Chevalley);
    for n in 1..=nmax {
        let qxn = frob_qxn(n, trunc);
        let lhs = frob_mhar(n, trunc).kronecker(&frob_sym(n, trunc));
        r.push(alloc::format!("mhar*sym=qxn n={} D={}", n, trunc), lhs.equals(&qxn), || schur_diff(&lhs, &qxn));
        let lhs = frob_nchar(n, trunc).scale(&setpartition_gf(n, trunc));
        r.push(alloc::format!("ncsym*nchar=qxn n={} D={}", n, trunc), lhs.equals(&qxn), || schur_diff(&lhs, &qxn));
    }
    r
}

/// `A'[X/(1-q)] = Q<X>` for `n <= nmax` and `A' ⊙ coinv = MHar` for `n <= kron_max`.
pub fn drensky(nmax: usize, kron_max: usize, trunc: usize) -> Report {
    let mut r = Report::new(Suite::Drensky);
    for n in 1..=nmax {
        let lhs = frob_aprime(n, trunc).pleth_scale(Pleth::OverOneMinusQ);
        let qxn = frob_qxn(n, trunc);
        r.push(alloc::format!("aprime[X/(1-q)]=qxn n={} D={}", n, trunc), lhs.equals(&qxn), || {
            schur_diff(&lhs, &qxn)
        });
    }
    for n in 1..=kron_max {
        let lhs = frob_aprime(n, trunc).kronecker(&frob_coinv(n, trunc));
        let mhar = frob_mhar(n, trunc);
        r.push(alloc::format!("aprime*coinv=mhar n={} D={}", n, trunc), lhs.equals(&mhar), || {
            schur_diff(&lhs, &mhar)
        });
    }
    r
}

/// Every word over `{1..n}` of length at most `len`.
pub fn triangularity(n: usize, len: usize) -> Report {
    let mut r = Report::new(Suite::Triangularity);
    let mut ex = PExpander::new();
    let mut max_leading = Rational::from_integer(1.into());
    let mut differs = 0usize;
    let mut total = 0usize;
    for k in 0..=len {
        let mut bad: Vec<String> = Vec::new();
        let words = Word::all(n, k);
        for w in &words {
            let rep = verify_triangularity_with(&mut ex, w);
            total += 1;
            if rep.length_factorial_differs() {
                differs += 1;
            }
            if rep.leading > max_leading {
                max_leading = rep.leading.clone();
            }
            if !rep.passed() {
                bad.push(alloc::format!("{} {:?}", w, rep.violations));
            }
        }
        r.push(alloc::format!("H_w in P basis n={} |w|={} ({} words)", n, k, words.len()), bad.is_empty(), || {
            bad.join("; ")
        });
    }
    r.notes.push(alloc::format!("max leading coefficient {}", rational::to_string(&max_leading)));
    r.notes.push(alloc::format!("{} of {} words have leading coefficient m! different from |w|!", differs, total));
    r
}

/// `<P_u, S_v> = δ_{uv}` on `[n]^r` for every `r <= len`.
pub fn duality(n: usize, len: usize) -> Report {
    let mut r = Report::new(Suite::Duality);
    for k in 0..=len {
        let words = Word::all(n, k);
        let ps: Vec<_> = words.iter().map(p_basis).collect();
        let ss: Vec<_> = words.iter().map(s_basis).collect();
        let mut bad = None;
        'outer: for (i, p) in ps.iter().enumerate() {
            // P_u and S_v pair to zero across different contents, so only the
            // same-content pairs need the product.
            for (j, s) in ss.iter().enumerate() {
                if words[i].content() != words[j].content() {
                    continue;
                }
                let v = p.scalar(s);
                let expected = if i == j { Rational::from_integer(1.into()) } else { Rational::from_integer(0.into()) };
                if v != expected {
                    bad = Some(alloc::format!("<P_{}, S_{}> = {}", words[i], words[j], rational::to_string(&v)));
                    break 'outer;
                }
            }
        }
        r.push(alloc::format!("P/S duality n={} r={}", n, k), bad.is_none(), || bad.unwrap_or_default());
    }
    r
}

fn slice_in_schur(f: &SymFunc, d: usize) -> BTreeMap<Partition, Rational> {
    f.to_basis(Basis::S).q_slice(d)
}

/// Brute-force kernels against the formulas, degree by degree.
pub fn kernels(n: usize, trunc: usize, budget: u64) -> Report {
    let mut r = Report::new(Suite::Kernels);
    for flavor in [Flavor::Hausdorff, Flavor::Twisted] {
        let formula = flavor.module().frob(n, trunc).value;
        for d in 0..=trunc {
            let name = alloc::format!("{} n={} d={}", flavor.name(), n, d);
            let k = match kernel(n, d, flavor, budget) {
                Ok(k) => k,
                Err(e @ Error::BudgetExceeded { .. }) => {
                    r.skip(name, alloc::format!("{}", e));
                    continue;
                }
                Err(e) => {
                    r.push(name, false, || alloc::format!("{}", e));
                    continue;
                }
            };
            let p = match k.frobenius() {
                Ok(p) => p,
                Err(e) => {
                    r.push(name, false, || alloc::format!("{}", e));
                    continue;
                }
            };
            let oracle = SymFunc::from_terms(
                Basis::P,
                n.max(crate::symfunc::DEFAULT_DEGREE_BOUND),
                0,
                p.into_iter().map(|(l, c)| (l, QSeries::constant(c, 0))),
            )
            .expect("degree n");
            let got = slice_in_schur(&oracle, 0);
            let want = slice_in_schur(&formula, d);
            r.push(name, got == want, || alloc::format!("kernel dim {}, oracle {:?} vs formula {:?}", k.dim(), got, want));
        }
    }
    r
}

/// Tableau filter against the alternating `e` sum, and the `a_i = q`
/// specialization against dimensions of the span of long-factor `P_w`.
pub fn syt(kmax: usize, nmax: usize, deg: usize) -> Report {
    let mut r = Report::new(Suite::Syt);
    for k in 0..=kmax {
        let lhs = syt_filter(k);
        let rhs = if k == 0 { glchar_aprime_schur(0) } else { glchar_aprime_schur_from_two(k) };
        r.push(alloc::format!("syt_filter k={}", k), lhs.equals(&rhs), || schur_diff(&lhs, &rhs));
    }
    for n in 2..=nmax {
        let specialized = glchar_aprime(n, deg);
        for d in 0..=deg {
            let dim = long_factor_span_dim(n, d);
            let c = specialized.coeff(d);
            r.push(alloc::format!("glchar n={} q^{}", n, d), c == Rational::from_integer(dim.into()), || {
                alloc::format!("specialization {} vs span dimension {}", rational::to_string(&c), dim)
            });
        }
    }
    r
}

/// Rank of `{P_w : |w| = d, every Lyndon factor of length >= 2}`.
pub fn long_factor_span_dim(n: usize, d: usize) -> usize {
    let mut ech = Echelon::new(n.pow(d as u32));
    for w in Word::all(n, d) {
        if lyndon_factorize(&w).letter_factors() == 0 {
            let v: SparseVec = p_basis(&w).terms().iter().map(|(u, c)| (u.rank(n), c.clone())).collect();
            ech.insert(&v);
        }
    }
    ech.rank()
}
