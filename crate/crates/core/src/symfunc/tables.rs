//! Per-degree transition matrices between the classical bases and power sums.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::race::OnceBox;

use super::Basis;
use crate::linalg;
use crate::partition::Partition;
use crate::rational::{int, Rational};

/// Transition data for one degree `n`.
#[derive(Debug)]
pub struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: BTreeMap<Partition, usize>,
    /// `to_p[b][i][j]`: coefficient of `p_{parts[j]}` in `b_{parts[i]}`.
    to_p: [Vec<Vec<Rational>>; 5],
    /// `from_p[b][i][j]`: coefficient of `b_{parts[j]}` in `p_{parts[i]}`.
    from_p: [Vec<Vec<Rational>>; 5],
    /// `characters[i][j] = χ^{parts[i]}(parts[j])`.
    pub characters: Vec<Vec<BigInt>>,
}

impl DegreeTables {
    pub fn to_p(&self, b: Basis) -> &[Vec<Rational>] {
        &self.to_p[b as usize]
    }

    pub fn from_p(&self, b: Basis) -> &[Vec<Rational>] {
        &self.from_p[b as usize]
    }
}

const CACHED: usize = 24;

static CACHE: [OnceBox<DegreeTables>; CACHED] = [const { OnceBox::new() }; CACHED];

/// Tables for degree `n`, built once and shared afterwards.
pub fn tables(n: usize) -> &'static DegreeTables {
    assert!(n < CACHED, "symmetric functions of degree {n} are out of range");
    CACHE[n].get_or_init(|| Box::new(build(n)))
}

/// Irreducible character `χ^λ(μ)` by the Murnaghan–Nakayama rule on beta sets.
pub fn character(lambda: &Partition, mu: &Partition) -> BigInt {
    assert_eq!(lambda.size(), mu.size());
    let l = lambda.len();
    let mut beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect();
    beta.reverse();
    mn(&beta, mu.parts())
}

// `beta` is kept sorted ascending.
fn mn(beta: &[usize], mu: &[usize]) -> BigInt {
    let Some((&k, rest)) = mu.split_first() else {
        return BigInt::one();
    };
    let mut total = BigInt::zero();
    for idx in 0..beta.len() {
        let b = beta[idx];
        if b < k || beta.binary_search(&(b - k)).is_ok() {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next.remove(idx);
        let pos = next.binary_search(&target).unwrap_err();
        next.insert(pos, target);
        let sub = mn(&next, rest);
        if between % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    total
}

// Number of maps from the parts of `mu` onto the rows of `lambda` whose
// fibre sums equal `lambda`: the coefficient of `m_λ` in `p_μ`.
fn power_sum_in_monomials(mu: &Partition, lambda: &Partition) -> u64 {
    fn go(parts: &[usize], rows: &mut Vec<usize>) -> u64 {
        let Some((&p, rest)) = parts.split_first() else {
            return rows.iter().all(|&r| r == 0) as u64;
        };
        let mut count = 0;
        for i in 0..rows.len() {
            if rows[i] >= p {
                rows[i] -= p;
                count += go(rest, rows);
                rows[i] += p;
            }
        }
        count
    }
    go(mu.parts(), &mut lambda.parts().to_vec())
}

type PExpansion = BTreeMap<Partition, Rational>;

fn p_mul(a: &PExpansion, b: &PExpansion) -> PExpansion {
    let mut out = PExpansion::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            *out.entry(la.union(lb)).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn build(n: usize) -> DegreeTables {
    let parts = Partition::all(n);
    let index: BTreeMap<Partition, usize> =
        parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let size = parts.len();
    let inv_z = |mu: &Partition| Rational::new(BigInt::one(), mu.z());

    // h_k and e_k for k <= n in the p basis.
    let mut h_single: Vec<PExpansion> = Vec::with_capacity(n + 1);
    let mut e_single: Vec<PExpansion> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut h = PExpansion::new();
        let mut e = PExpansion::new();
        for mu in Partition::all(k) {
            let w = inv_z(&mu);
            let sign = if (k - mu.len()) % 2 == 0 { int(1) } else { int(-1) };
            e.insert(mu.clone(), &w * sign);
            h.insert(mu, w);
        }
        h_single.push(h);
        e_single.push(e);
    }
    let multiplicative = |single: &[PExpansion]| -> Vec<Vec<Rational>> {
        parts
            .iter()
            .map(|lambda| {
                let mut acc = PExpansion::new();
                acc.insert(Partition::empty(), Rational::one());
                for &k in lambda.parts() {
                    acc = p_mul(&acc, &single[k]);
                }
                let mut row = alloc::vec![Rational::zero(); size];
                for (mu, c) in acc {
                    row[index[&mu]] = c;
                }
                row
            })
            .collect()
    };

    let identity: Vec<Vec<Rational>> = (0..size)
        .map(|i| (0..size).map(|j| if i == j { int(1) } else { int(0) }).collect())
        .collect();
    let h_to_p = multiplicative(&h_single);
    let e_to_p = multiplicative(&e_single);

    let characters: Vec<Vec<BigInt>> = parts
        .iter()
        .map(|lambda| parts.iter().map(|mu| character(lambda, mu)).collect())
        .collect();
    let s_to_p: Vec<Vec<Rational>> = characters
        .iter()
        .map(|row| {
            row.iter()
                .zip(&parts)
                .map(|(chi, mu)| Rational::from_integer(chi.clone()) * inv_z(mu))
                .collect()
        })
        .collect();

    let p_to_m: Vec<Vec<Rational>> = parts
        .iter()
        .map(|mu| {
            parts
                .iter()
                .map(|lambda| int(power_sum_in_monomials(mu, lambda) as i64))
                .collect()
        })
        .collect();
    let m_to_p = linalg::inverse(&p_to_m).expect("power sums span the degree-n ring");

    let to_p = [identity, h_to_p, e_to_p, m_to_p, s_to_p];
    let from_p = [
        to_p[0].clone(),
        linalg::inverse(&to_p[1]).expect("h is a basis"),
        linalg::inverse(&to_p[2]).expect("e is a basis"),
        p_to_m,
        linalg::inverse(&to_p[4]).expect("s is a basis"),
    ];
    DegreeTables {
        parts,
        index,
        to_p,
        from_p,
        characters,
    }
}
