//! Integer partitions.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::factorial;

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of zero.
///
/// Partitions order by size first, then reverse-lexicographically, so that
/// `(3) < (2,1) < (1,1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(alloc::format!("{:?} has a zero part", parts)));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(alloc::format!("{:?} is not weakly decreasing", parts)));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(alloc::vec![n])
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(alloc::vec![1; n])
    }

    /// The hook `(n-d, 1^d)` with a zero first part dropped, so `d = n` gives `(1^n)`.
    pub fn hook(n: usize, d: usize) -> Self {
        assert!(d <= n, "hook leg {d} longer than size {n}");
        let mut parts = alloc::vec![n - d];
        parts.extend(core::iter::repeat_n(1, d));
        Self::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(i, n_i)` for every part size `i` that occurs.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = prod_i i^{n_i} n_i!`, the order of the centralizer of a
    /// permutation of cycle type λ.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (i, m)| acc * BigInt::from(i).pow(m as u32) * factorial(m))
    }

    /// Concatenates and re-sorts the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::from_unsorted(parts)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// A permutation of `{0..n-1}` with this cycle type, cycles over consecutive
    /// blocks: `(0 1 .. λ1-1)(λ1 ..)...`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm = Vec::with_capacity(self.size());
        let mut start = 0;
        for &p in &self.0 {
            for i in 0..p {
                perm.push(start + (i + 1) % p);
            }
            start += p;
        }
        perm
    }

    /// All partitions of `n`, in this type's order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| alloc::format!("{}", p)).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
