//! JSON and CSV encodings of the library types.
//!
//! Rationals are strings `"num/den"` (or `"num"` when integral) so that no
//! precision is lost.

use anyhow::{anyhow, bail, Context, Result};
use ncharm::freealg::{NCPoly, Word};
use ncharm::frobenius::{FrobSeries, Module};
use ncharm::harmonics::{Flavor, GradedSubspace};
use ncharm::{rational, Basis, Partition, QSeries, Rational, SymFunc};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Vec<usize>,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub basis: String,
    pub trunc: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobJson {
    pub module: String,
    pub n: usize,
    pub label: String,
    pub hilbert: Vec<String>,
    pub value: SymFuncJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordTermJson {
    pub word: Vec<u8>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NCPolyJson {
    pub terms: Vec<WordTermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelJson {
    pub n: usize,
    pub degree: usize,
    pub flavor: String,
    pub dim: usize,
    pub basis: Vec<NCPolyJson>,
    /// Character values by cycle type, in partition order.
    pub characters: Vec<(Vec<usize>, String)>,
}

fn ratio(s: &str) -> Result<Rational> {
    rational::parse(s).ok_or_else(|| anyhow!("not a rational: {:?}", s))
}

pub fn qseries_strings(s: &QSeries) -> Vec<String> {
    s.coeffs().iter().map(rational::to_string).collect()
}

pub fn symfunc_to_json(f: &SymFunc) -> SymFuncJson {
    SymFuncJson {
        basis: f.basis().tag().to_string(),
        trunc: f.trunc_order(),
        terms: f
            .terms()
            .iter()
            .map(|(l, c)| TermJson { partition: l.parts().to_vec(), coeffs: qseries_strings(c) })
            .collect(),
    }
}

pub fn symfunc_from_json(j: &SymFuncJson) -> Result<SymFunc> {
    let basis = Basis::from_tag(&j.basis).ok_or_else(|| anyhow!("unknown basis {:?}", j.basis))?;
    let mut terms = Vec::new();
    let mut max_deg = 0;
    for t in &j.terms {
        let lambda = Partition::new(t.partition.clone()).map_err(|e| anyhow!(e))?;
        max_deg = max_deg.max(lambda.size());
        let coeffs = t.coeffs.iter().map(|c| ratio(c)).collect::<Result<Vec<_>>>()?;
        if coeffs.len() != j.trunc + 1 {
            bail!("partition {} has {} coefficients, expected {}", lambda, coeffs.len(), j.trunc + 1);
        }
        terms.push((lambda, QSeries::from_coeffs(coeffs, j.trunc)));
    }
    let bound = ncharm::symfunc::DEFAULT_DEGREE_BOUND.max(max_deg);
    SymFunc::from_terms(basis, bound, j.trunc, terms).map_err(|e| anyhow!(e))
}

pub fn frob_to_json(f: &FrobSeries, basis: Basis) -> FrobJson {
    FrobJson {
        module: f.module.name().to_string(),
        n: f.n,
        label: f.label(),
        hilbert: qseries_strings(&f.hilbert()),
        value: symfunc_to_json(&f.value.to_basis(basis)),
    }
}

pub fn frob_from_json(j: &FrobJson) -> Result<FrobSeries> {
    let module = Module::from_name(&j.module).ok_or_else(|| anyhow!("unknown module {:?}", j.module))?;
    let value = symfunc_from_json(&j.value)?;
    if value.terms().keys().any(|l| l.size() != j.n) {
        bail!("series for {} has a term not of degree {}", j.label, j.n);
    }
    Ok(FrobSeries { module, n: j.n, value })
}

pub fn ncpoly_to_json(f: &NCPoly) -> NCPolyJson {
    NCPolyJson {
        terms: f
            .terms()
            .iter()
            .map(|(w, c)| WordTermJson { word: w.letters().to_vec(), coeff: rational::to_string(c) })
            .collect(),
    }
}

pub fn ncpoly_from_json(j: &NCPolyJson) -> Result<NCPoly> {
    let mut terms = Vec::new();
    for t in &j.terms {
        if t.word.contains(&0) {
            bail!("letters start at 1: {:?}", t.word);
        }
        terms.push((Word::new(t.word.clone()), ratio(&t.coeff)?));
    }
    Ok(NCPoly::from_terms(terms))
}

pub fn kernel_to_json(k: &GradedSubspace, flavor: Flavor) -> Result<KernelJson> {
    let characters = Partition::all(k.n())
        .into_iter()
        .map(|l| Ok((l.parts().to_vec(), rational::to_string(&k.graded_character(&l)?))))
        .collect::<ncharm::Result<Vec<_>>>()
        .map_err(|e| anyhow!(e))?;
    Ok(KernelJson {
        n: k.n(),
        degree: k.degree(),
        flavor: flavor.name().to_string(),
        dim: k.dim(),
        basis: k.basis().iter().map(ncpoly_to_json).collect(),
        characters,
    })
}

fn partition_cell(l: &Partition) -> String {
    l.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

/// Rows `degree,basis,partition,coeff`, one per nonzero coefficient, with
/// parts separated by spaces.
pub fn symfunc_to_csv(f: &SymFunc) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["degree", "basis", "partition", "coeff"])?;
    for k in 0..=f.trunc_order() {
        for (l, c) in f.q_slice(k) {
            w.write_record([k.to_string(), f.basis().tag().to_string(), partition_cell(&l), rational::to_string(&c)])?;
        }
    }
    Ok(String::from_utf8(w.into_inner().context("flushing csv")?)?)
}

pub fn symfunc_from_csv(text: &str, trunc: usize) -> Result<SymFunc> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut basis = None;
    let mut terms = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let k: usize = rec[0].parse().context("degree column")?;
        let b = Basis::from_tag(&rec[1]).ok_or_else(|| anyhow!("unknown basis {:?}", &rec[1]))?;
        if basis.replace(b).is_some_and(|old| old != b) {
            bail!("mixed bases in one file");
        }
        let parts = rec[2]
            .split_whitespace()
            .map(|p| p.parse::<usize>().context("partition column"))
            .collect::<Result<Vec<_>>>()?;
        let lambda = Partition::new(parts).map_err(|e| anyhow!(e))?;
        terms.push((lambda, QSeries::monomial(ratio(&rec[3])?, k, trunc)));
    }
    let basis = basis.unwrap_or(Basis::S);
    let bound = terms.iter().map(|(l, _)| l.size()).max().unwrap_or(0).max(ncharm::symfunc::DEFAULT_DEGREE_BOUND);
    SymFunc::from_terms(basis, bound, trunc, terms).map_err(|e| anyhow!(e))
}

/// Rows `degree,value`.
pub fn qseries_to_csv(s: &QSeries) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["degree", "value"])?;
    for (k, c) in s.coeffs().iter().enumerate() {
        w.write_record([k.to_string(), rational::to_string(c)])?;
    }
    Ok(String::from_utf8(w.into_inner().context("flushing csv")?)?)
}

pub fn ncpoly_to_csv(f: &NCPoly) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["word", "coeff"])?;
    for (word, c) in f.terms() {
        w.write_record([word.to_string(), rational::to_string(c)])?;
    }
    Ok(String::from_utf8(w.into_inner().context("flushing csv")?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ncharm::freealg::p_basis;

    #[test]
    fn symfunc_round_trip() {
        let f = Module::MHar.frob(3, 5);
        let j = frob_to_json(&f, Basis::S);
        let text = serde_json::to_string(&j).unwrap();
        let back = frob_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, f);
        let h = f.value.to_basis(Basis::H);
        assert_eq!(symfunc_from_json(&symfunc_to_json(&h)).unwrap(), h);
        let csv = symfunc_to_csv(&f.value).unwrap();
        assert!(symfunc_from_csv(&csv, 5).unwrap().equals(&f.value));
    }

    #[test]
    fn ncpoly_round_trip() {
        let p = p_basis(&Word::parse("1132").unwrap());
        let j = ncpoly_to_json(&p);
        assert_eq!(ncpoly_from_json(&j).unwrap(), p);
        assert!(ncpoly_to_csv(&p).unwrap().starts_with("word,coeff\n"));
    }

    #[test]
    fn bad_input_is_rejected() {
        let j: SymFuncJson = serde_json::from_str(r#"{"basis":"s","trunc":1,"terms":[{"partition":[1,2],"coeffs":["1","0"]}]}"#).unwrap();
        assert!(symfunc_from_json(&j).is_err());
        let j: SymFuncJson = serde_json::from_str(r#"{"basis":"s","trunc":1,"terms":[{"partition":[2],"coeffs":["1"]}]}"#).unwrap();
        assert!(symfunc_from_json(&j).is_err());
        let j: SymFuncJson = serde_json::from_str(r#"{"basis":"x","trunc":0,"terms":[]}"#).unwrap();
        assert!(symfunc_from_json(&j).is_err());
    }
}
