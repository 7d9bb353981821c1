//! Exact sparse linear algebra over the rationals.
//!
//! Rows are stored as primitive integer vectors (denominators cleared, content
//! divided out) and eliminated fraction-free. The matrix is kept in reduced
//! form: every stored row has a pivot column at which all other rows vanish.
//! Among the admissible entries of a new row, the pivot is the one with the
//! smallest bit length.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;
type IntRow = BTreeMap<usize, BigInt>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert {
    /// The row was already in the span.
    Dependent,
    /// The row was added with the given pivot column.
    Pivot(usize),
    /// The row reduced to something supported only on non-pivotable columns.
    Inconsistent,
}

#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivot_limit: usize,
    rows: Vec<(usize, IntRow)>,
    pivot_row: BTreeMap<usize, usize>,
}

fn to_int_row(v: &SparseVec) -> IntRow {
    let lcm = v
        .values()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let row: IntRow = v
        .iter()
        .filter(|(_, r)| !r.is_zero())
        .map(|(&c, r)| (c, r.numer() * (&lcm / r.denom())))
        .collect();
    primitive(row)
}

fn primitive(mut row: IntRow) -> IntRow {
    let g = row.values().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.values_mut() {
            *x /= &g;
        }
    }
    row
}

/// `a * row - b * other`, dropping zeros.
fn combine(row: &IntRow, a: &BigInt, other: &IntRow, b: &BigInt) -> IntRow {
    let mut out: IntRow = row.iter().map(|(&c, x)| (c, x * a)).collect();
    for (&c, y) in other {
        let e = out.entry(c).or_insert_with(BigInt::zero);
        *e -= y * b;
        if e.is_zero() {
            out.remove(&c);
        }
    }
    primitive(out)
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self::with_pivot_limit(ncols, ncols)
    }

    /// Pivots are only chosen among columns `< pivot_limit`; the remaining
    /// columns act as right-hand sides.
    pub fn with_pivot_limit(ncols: usize, pivot_limit: usize) -> Self {
        Echelon {
            ncols,
            pivot_limit,
            rows: Vec::new(),
            pivot_row: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(c, _)| *c)
    }

    fn reduce_int(&self, mut row: IntRow) -> IntRow {
        let hits: Vec<usize> = row
            .keys()
            .filter_map(|c| self.pivot_row.get(c).copied())
            .collect();
        for ri in hits {
            let (pc, prow) = &self.rows[ri];
            if let Some(b) = row.get(pc).cloned() {
                let a = &prow[pc];
                row = combine(&row, a, prow, &b);
            }
        }
        row
    }

    pub fn insert(&mut self, v: &SparseVec) -> Insert {
        let row = self.reduce_int(to_int_row(v));
        if row.is_empty() {
            return Insert::Dependent;
        }
        let pivot = row
            .iter()
            .filter(|(&c, _)| c < self.pivot_limit)
            .min_by_key(|(&c, x)| (x.bits(), c))
            .map(|(&c, _)| c);
        let Some(pc) = pivot else {
            return Insert::Inconsistent;
        };
        let a = row[&pc].clone();
        for (_, other) in self.rows.iter_mut() {
            if let Some(b) = other.get(&pc).cloned() {
                *other = combine(other, &a, &row, &b);
            }
        }
        self.pivot_row.insert(pc, self.rows.len());
        self.rows.push((pc, row));
        Insert::Pivot(pc)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_int(to_int_row(v)).is_empty()
    }

    /// Stored rows scaled so that each pivot entry is one. A vector in the row
    /// space equals the combination of these rows weighted by its own entries
    /// at the pivot columns.
    pub fn normalized_rows(&self) -> Vec<(usize, SparseVec)> {
        self.rows
            .iter()
            .map(|(pc, row)| {
                let p = &row[pc];
                let v = row
                    .iter()
                    .map(|(&c, x)| (c, Rational::new(x.clone(), p.clone())))
                    .collect();
                (*pc, v)
            })
            .collect()
    }

    /// A basis of the right nullspace `{x : row . x = 0 for every row}`, one
    /// vector per free column `f`, with entry 1 at `f` and 0 at the other free
    /// columns.
    pub fn nullspace(&self) -> Vec<(usize, SparseVec)> {
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if self.pivot_row.contains_key(&f) {
                continue;
            }
            let mut v = SparseVec::new();
            v.insert(f, Rational::one());
            for (pc, row) in &self.rows {
                if let Some(x) = row.get(&f) {
                    v.insert(*pc, -Rational::new(x.clone(), row[pc].clone()));
                }
            }
            out.push((f, v));
        }
        out
    }
}

/// Solves `A X = B` for square nonsingular `A` (`n x n`) given as sparse rows
/// of the augmented matrix `[A | B]` with `k` right-hand-side columns. Returns
/// `X` column by column, or `None` when `A` is singular.
pub fn solve_augmented(rows: &[SparseVec], n: usize, k: usize) -> Option<Vec<Vec<Rational>>> {
    let mut ech = Echelon::with_pivot_limit(n + k, n);
    for r in rows {
        if ech.insert(r) == Insert::Inconsistent {
            return None;
        }
    }
    if ech.rank() != n {
        return None;
    }
    let mut x = alloc::vec![alloc::vec![Rational::zero(); n]; k];
    for (pc, row) in &ech.rows {
        let p = &row[pc];
        for (&c, v) in row.range(n..) {
            x[c - n][*pc] = Rational::new(v.clone(), p.clone());
        }
    }
    Some(x)
}

/// Inverse of a dense square matrix, or `None` when singular.
pub fn inverse(a: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let rows: Vec<SparseVec> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v: SparseVec = r
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (j, x.clone()))
                .collect();
            v.insert(n + i, Rational::one());
            v
        })
        .collect();
    // Column j of X solves A x = e_j, so X is the inverse stored by columns.
    let cols = solve_augmented(&rows, n, n)?;
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}
