//! Brute-force oracle: symmetric functions evaluated as polynomials in a
//! finite number of commuting variables, each basis built from its
//! combinatorial definition.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use proptest::prelude::*;

use super::{Basis, SymFunc};
use crate::partition::Partition;
use crate::qseries::QSeries;
use crate::rational::{frac, Rational};

type Poly = BTreeMap<Vec<u8>, Rational>;

const VARS: usize = 7;

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn one() -> Poly {
    let mut p = Poly::new();
    p.insert(vec![0; VARS], Rational::one());
    p
}

fn add_into(acc: &mut Poly, p: &Poly, scale: &Rational) {
    for (e, c) in p {
        *acc.entry(e.clone()).or_insert_with(Rational::zero) += c * scale;
    }
    acc.retain(|_, c| !c.is_zero());
}

fn power_sum(k: usize) -> Poly {
    (0..VARS)
        .map(|i| {
            let mut e = vec![0u8; VARS];
            e[i] = k as u8;
            (e, Rational::one())
        })
        .collect()
}

// Sum over exponent vectors of total degree k with each entry <= cap.
fn bounded_monomials(k: usize, cap: u8) -> Poly {
    fn go(i: usize, rem: usize, cap: u8, cur: &mut Vec<u8>, out: &mut Poly) {
        if i == VARS {
            if rem == 0 {
                out.insert(cur.clone(), Rational::one());
            }
            return;
        }
        for x in 0..=(rem.min(cap as usize) as u8) {
            cur.push(x);
            go(i + 1, rem - x as usize, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Poly::new();
    go(0, k, cap, &mut Vec::new(), &mut out);
    out
}

// m_λ: all distinct rearrangements of λ padded with zeros.
fn monomial_sym(lambda: &Partition) -> Poly {
    let mut base: Vec<u8> = lambda.parts().iter().map(|&p| p as u8).collect();
    if base.len() > VARS {
        return Poly::new();
    }
    base.resize(VARS, 0);
    base.sort();
    let mut out = Poly::new();
    loop {
        out.insert(base.clone(), Rational::one());
        // next permutation
        let Some(i) = (0..VARS - 1).rev().find(|&i| base[i] < base[i + 1]) else {
            break;
        };
        let j = (i + 1..VARS).rev().find(|&j| base[j] > base[i]).unwrap();
        base.swap(i, j);
        base[i + 1..].reverse();
    }
    out
}

// s_λ as the generating function of semistandard tableaux with entries < VARS.
fn schur(lambda: &Partition) -> Poly {
    let shape = lambda.parts().to_vec();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut fill: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut out = Poly::new();
    fn go(idx: usize, cells: &[(usize, usize)], fill: &mut Vec<Vec<usize>>, out: &mut Poly) {
        if idx == cells.len() {
            let mut e = vec![0u8; VARS];
            for row in fill.iter() {
                for &x in row {
                    e[x] += 1;
                }
            }
            *out.entry(e).or_insert_with(Rational::zero) += Rational::one();
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { fill[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { fill[r - 1][c] + 1 } else { 0 };
        for x in lo_row.max(lo_col)..VARS {
            fill[r][c] = x;
            go(idx + 1, cells, fill, out);
        }
    }
    go(0, &cells, &mut fill, &mut out);
    out
}

fn element(b: Basis, lambda: &Partition) -> Poly {
    match b {
        Basis::P => lambda.parts().iter().fold(one(), |acc, &k| mul(&acc, &power_sum(k))),
        Basis::H => lambda
            .parts()
            .iter()
            .fold(one(), |acc, &k| mul(&acc, &bounded_monomials(k, u8::MAX))),
        Basis::E => lambda
            .parts()
            .iter()
            .fold(one(), |acc, &k| mul(&acc, &bounded_monomials(k, 1))),
        Basis::M => monomial_sym(lambda),
        Basis::S => schur(lambda),
    }
}

fn eval_slice(f: &SymFunc, k: usize) -> Poly {
    let mut acc = Poly::new();
    for (l, c) in f.q_slice(k) {
        add_into(&mut acc, &element(f.basis(), &l), &c);
    }
    acc
}

#[test]
fn transitions_agree_with_definitions() {
    for n in 0..=5 {
        for lambda in Partition::all(n) {
            for b in Basis::ALL {
                let f = SymFunc::basis_element(b, lambda.clone(), 0);
                let direct = element(b, &lambda);
                for target in Basis::ALL {
                    assert_eq!(eval_slice(&f.to_basis(target), 0), direct, "{:?}{} -> {:?}", b, lambda, target);
                }
            }
        }
    }
}

#[test]
fn pieri_by_monomials() {
    let s1 = SymFunc::basis_element(Basis::S, Partition::row(1), 0);
    let prod = s1.multiply(&s1).unwrap();
    assert_eq!(eval_slice(&prod, 0), mul(&schur(&Partition::row(1)), &schur(&Partition::row(1))));
}

fn arb(max_deg: usize) -> impl Strategy<Value = SymFunc> {
    let parts: Vec<Partition> = (0..=max_deg).flat_map(Partition::all).collect();
    let np = parts.len();
    (
        proptest::sample::select(Basis::ALL.to_vec()),
        proptest::collection::vec((0..np, -4i64..5, 1i64..3), 1..4),
    )
        .prop_map(move |(b, raw)| {
            SymFunc::from_terms(
                b,
                8,
                0,
                raw.into_iter()
                    .map(|(i, c, d)| (parts[i].clone(), QSeries::constant(frac(c, d), 0))),
            )
            .unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn multiply_matches_polynomial_product(f in arb(3), g in arb(2)) {
        let prod = f.multiply(&g).unwrap();
        prop_assert_eq!(eval_slice(&prod, 0), mul(&eval_slice(&f, 0), &eval_slice(&g, 0)));
    }
}
