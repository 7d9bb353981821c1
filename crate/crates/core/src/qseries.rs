//! Truncated power series in one variable `q` with exact rational coefficients.
//!
//! A [`QSeries`] of truncation order `D` stores the coefficients of
//! `q^0 ..= q^D` and represents its value modulo `q^(D+1)`. Binary operations
//! on series of different orders truncate to the smaller one.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn zero(trunc: usize) -> Self {
        QSeries {
            coeffs: vec![Rational::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        Self::constant(Rational::one(), trunc)
    }

    pub fn constant(c: Rational, trunc: usize) -> Self {
        Self::monomial(c, 0, trunc)
    }

    /// `c * q^k`, which is zero when `k` lies beyond the truncation.
    pub fn monomial(c: Rational, k: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if k <= trunc {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from leading coefficients, padding with zeros or
    /// dropping the tail so that exactly `trunc + 1` coefficients remain.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, Rational::zero());
        QSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], trunc: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect(), trunc)
    }

    pub fn trunc_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `q^k`; zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), trunc)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse modulo `q^(D+1)`.
    pub fn invert(&self) -> Result<Self> {
        let f0 = &self.coeffs[0];
        if f0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = f0.recip();
        let d = self.trunc_order();
        let mut g: Vec<Rational> = Vec::with_capacity(d + 1);
        g.push(inv0.clone());
        for k in 1..=d {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &g[k - j];
                }
            }
            g.push(-(acc * &inv0));
        }
        Ok(QSeries { coeffs: g })
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.trunc_order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients as integers, if they all are.
    pub fn to_integers(&self) -> Option<Vec<num_bigint::BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if *c < Rational::zero() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag_s = rational::to_string(&mag);
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{}", mag_s)?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{}*q", mag_s)?,
                (_, true) => write!(f, "q^{}", k)?,
                (_, false) => write!(f, "{}*q^{}", mag_s, k)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.trunc_order() + 1)
    }
}

impl<'a> Add<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let d = self.trunc_order().min(rhs.trunc_order());
        QSeries {
            coeffs: (0..=d).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Sub<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        let d = self.trunc_order().min(rhs.trunc_order());
        QSeries {
            coeffs: (0..=d).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Mul<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let d = self.trunc_order().min(rhs.trunc_order());
        let mut out = vec![Rational::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(d + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(d + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs: out }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

/// `(q;q)_k = (1-q)(1-q^2)...(1-q^k)`.
pub fn qpoch(k: usize, trunc: usize) -> QSeries {
    (1..=k).fold(QSeries::one(trunc), |acc, i| {
        acc * (QSeries::one(trunc) - QSeries::monomial(Rational::one(), i, trunc))
    })
}

/// `{q;q}_k = (1-q)(1-2q)...(1-kq)`.
pub fn qfall(k: usize, trunc: usize) -> QSeries {
    (1..=k).fold(QSeries::one(trunc), |acc, i| {
        acc * (QSeries::one(trunc) - QSeries::monomial(int(i as i64), 1, trunc))
    })
}

/// `1 - a q`.
pub fn one_minus(a: i64, trunc: usize) -> QSeries {
    QSeries::one(trunc) - QSeries::monomial(int(a), 1, trunc)
}

/// `sum_{d=0}^{n} q^d / {q;q}_d`, counting set partitions with at most `n` blocks.
pub fn setpartition_gf(n: usize, trunc: usize) -> QSeries {
    let mut acc = QSeries::zero(trunc);
    for d in 0..=n.min(trunc) {
        let term = qfall(d, trunc)
            .invert()
            .expect("{q;q}_d has constant term 1");
        acc = acc + QSeries::monomial(Rational::one(), d, trunc) * term;
    }
    acc
}
