//! Lyndon words and factorizations.

use alloc::vec::Vec;

use crate::error::{Error, Result};

use super::Word;

/// A word is Lyndon when it is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let l = w.letters();
    Ok((1..l.len()).all(|k| l < &l[k..]))
}

/// The unique factorization `w = l_1 l_2 ... l_k` with every `l_i` Lyndon
/// and `l_1 >= l_2 >= ... >= l_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyndonFactorization {
    factors: Vec<Word>,
}

impl LyndonFactorization {
    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplicity form `l_1^{i_1} ... l_k^{i_k}` with distinct `l_j`.
    pub fn grouped(&self) -> Vec<(Word, usize)> {
        let mut out: Vec<(Word, usize)> = Vec::new();
        for f in &self.factors {
            match out.last_mut() {
                Some((g, m)) if g == f => *m += 1,
                _ => out.push((f.clone(), 1)),
            }
        }
        out
    }

    pub fn concat(&self) -> Word {
        self.factors.iter().fold(Word::empty(), |acc, f| acc.concat(f))
    }

    /// Number of factors that are single letters.
    pub fn letter_factors(&self) -> usize {
        self.factors.iter().filter(|f| f.len() == 1).count()
    }
}

/// Duval's algorithm.
pub fn lyndon_factorize(w: &Word) -> LyndonFactorization {
    let s = w.letters();
    let n = s.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            factors.push(Word::new(s[i..i + j - k].to_vec()));
            i += j - k;
        }
    }
    LyndonFactorization { factors }
}

/// `l = uv` with `v` the lexicographically smallest proper suffix.
pub fn std_factorization(l: &Word) -> Result<(Word, Word)> {
    if l.len() < 2 || !is_lyndon(l)? {
        return Err(Error::NotLyndon(alloc::format!("{}", l)));
    }
    let s = l.letters();
    let cut = (1..s.len()).min_by(|&a, &b| s[a..].cmp(&s[b..])).unwrap();
    let (u, v) = (l.prefix(cut), l.suffix(cut));
    debug_assert!(u < v);
    Ok((u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    // Factorization by repeatedly taking the longest Lyndon prefix.
    fn naive_factorize(word: &Word) -> Vec<Word> {
        let mut out = Vec::new();
        let mut rest = word.clone();
        while !rest.is_empty() {
            let len = (1..=rest.len()).rev().find(|&k| is_lyndon(&rest.prefix(k)).unwrap()).unwrap();
            out.push(rest.prefix(len));
            rest = rest.suffix(len);
        }
        out
    }

    #[test]
    fn examples() {
        assert_eq!(lyndon_factorize(&w("2112")).factors(), &[w("2"), w("112")]);
        assert!(is_lyndon(&w("1122")).unwrap());
        assert!(!is_lyndon(&w("2112")).unwrap());
        assert!(is_lyndon(&Word::empty()).is_err());
        assert_eq!(lyndon_factorize(&w("1")).factors(), &[w("1")]);
        assert!(lyndon_factorize(&Word::empty()).is_empty());
        assert_eq!(std_factorization(&w("12")).unwrap(), (w("1"), w("2")));
        assert_eq!(std_factorization(&w("122")).unwrap(), (w("12"), w("2")));
        assert_eq!(std_factorization(&w("1122")).unwrap(), (w("1"), w("122")));
        assert!(std_factorization(&w("1")).is_err());
        assert!(std_factorization(&w("21")).is_err());
        let f = lyndon_factorize(&w("21211"));
        assert_eq!(f.grouped(), vec![(w("2"), 1), (w("12"), 1), (w("1"), 2)]);
    }

    #[test]
    fn factorization_is_valid_and_unique() {
        for n in 1..=3 {
            for r in 0..=7 {
                for word in Word::all(n, r) {
                    let f = lyndon_factorize(&word);
                    assert_eq!(f.concat(), word);
                    assert!(f.factors().iter().all(|l| is_lyndon(l).unwrap()));
                    assert!(f.factors().windows(2).all(|p| p[0] >= p[1]));
                    assert_eq!(f.factors(), naive_factorize(&word).as_slice());
                }
            }
        }
    }

    #[test]
    fn standard_factors_are_lyndon() {
        for n in 2..=3 {
            for r in 2..=6 {
                for word in Word::all(n, r) {
                    if is_lyndon(&word).unwrap() {
                        let (u, v) = std_factorization(&word).unwrap();
                        assert!(is_lyndon(&u).unwrap() && is_lyndon(&v).unwrap() && u < v);
                        assert_eq!(u.concat(&v), word);
                    }
                }
            }
        }
    }

    #[test]
    fn lyndon_facts() {
        for n in 2..=3 {
            let lyndons: Vec<Word> = (1..=6)
                .flat_map(|r| Word::all(n, r))
                .filter(|x| is_lyndon(x).unwrap())
                .collect();
            for u in &lyndons {
                for v in &lyndons {
                    if u.len() + v.len() > 6 || u >= v {
                        continue;
                    }
                    // u < v Lyndon gives uv Lyndon, and then uv < vu.
                    let uv = u.concat(v);
                    assert!(is_lyndon(&uv).unwrap(), "{} {}", u, v);
                    assert!(uv < v.concat(u));
                }
            }
        }
    }
}
