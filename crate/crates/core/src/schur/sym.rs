//! Symmetric functions, realized inside QSym.
//!
//! `m_λ` is the sum of `M_α` over all rearrangements `α` of `λ`, `s_λ = Σ_μ K_{λ,μ} m_μ`
//! with `K` the number of shin-tableaux (equivalently semistandard Young tableaux)
//! of partition shape `λ` and content `μ`, and `h_μ = Σ_λ K_{λ,μ} s_λ`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{canonical_coeffs, convert, multiply, Algebra, Basis, Element};
use crate::composition::{partitions, Composition, Partition, WeakComposition};
use crate::error::{Error, Result};
use crate::tableau::{count_k, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SymBasis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "h")]
    Complete,
    #[serde(rename = "s")]
    Schur,
}

impl SymBasis {
    pub fn token(self) -> &'static str {
        match self {
            SymBasis::Monomial => "m",
            SymBasis::Complete => "h",
            SymBasis::Schur => "s",
        }
    }
}

impl std::str::FromStr for SymBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(SymBasis::Monomial),
            "h" => Ok(SymBasis::Complete),
            "s" => Ok(SymBasis::Schur),
            other => Err(Error::UnknownBasis(other.to_string())),
        }
    }
}

/// An integer combination of `m_λ`, `h_λ` or `s_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElement {
    basis: SymBasis,
    terms: BTreeMap<Partition, BigInt>,
}

struct KostkaTable {
    parts: Vec<Partition>,
    k: Matrix,
}

fn kostka(n: usize) -> KostkaTable {
    let parts = partitions(n);
    let k = parts
        .iter()
        .map(|l| {
            parts
                .iter()
                .map(|m| {
                    let content = WeakComposition::from(m.as_composition());
                    BigInt::from(count_k(Family::Shin, l.as_composition(), &content).expect("sizes agree"))
                })
                .collect()
        })
        .collect();
    KostkaTable { parts, k }
}

impl SymElement {
    pub fn zero(basis: SymBasis) -> Self {
        SymElement {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(basis: SymBasis, lambda: Partition, coeff: impl Into<BigInt>) -> Self {
        let mut out = SymElement::zero(basis);
        out.add_term(lambda, coeff.into());
        out
    }

    fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Applies `row(λ)` (a row of a matrix indexed by partitions of `|λ|`) termwise.
    fn apply<F>(&self, target: SymBasis, mut row: F) -> SymElement
    where
        F: FnMut(&KostkaTable, &Matrix, usize) -> Vec<BigInt>,
    {
        let mut out = SymElement::zero(target);
        let mut by_degree: BTreeMap<usize, Vec<(&Partition, &BigInt)>> = BTreeMap::new();
        for (l, k) in &self.terms {
            by_degree.entry(l.size()).or_default().push((l, k));
        }
        for (n, terms) in by_degree {
            let table = kostka(n);
            let inv = linalg::invert(&table.k, "partition Kostka matrix").expect("unitriangular");
            for (l, k) in terms {
                let i = table.parts.iter().position(|p| p == l).expect("partition of n");
                for (j, a) in row(&table, &inv, i).into_iter().enumerate() {
                    out.add_term(table.parts[j].clone(), k * a);
                }
            }
        }
        out
    }

    fn to_schur(&self) -> SymElement {
        match self.basis {
            SymBasis::Schur => self.clone(),
            // m_μ = Σ_λ (K^{-1})_{μ,λ} s_λ
            SymBasis::Monomial => self.apply(SymBasis::Schur, |_, inv, i| inv[i].clone()),
            // h_μ = Σ_λ K_{λ,μ} s_λ
            SymBasis::Complete => self.apply(SymBasis::Schur, |t, _, i| {
                t.k.iter().map(|row| row[i].clone()).collect()
            }),
        }
    }

    pub fn to_basis(&self, target: SymBasis) -> SymElement {
        let s = self.to_schur();
        match target {
            SymBasis::Schur => s,
            SymBasis::Monomial => s.apply(SymBasis::Monomial, |t, _, i| t.k[i].clone()),
            // s_λ = Σ_μ ((K^T)^{-1})_{λ,μ} h_μ and (K^T)^{-1} = (K^{-1})^T
            SymBasis::Complete => s.apply(SymBasis::Complete, |_, inv, i| {
                inv.iter().map(|row| row[i].clone()).collect()
            }),
        }
    }

    /// The image in QSym, in the `M` basis.
    pub fn to_qsym(&self) -> Element {
        let m = self.to_basis(SymBasis::Monomial);
        let mut terms = Vec::new();
        for (l, k) in &m.terms {
            for alpha in rearrangements(l.parts()) {
                terms.push((Basis::M, alpha, k.clone()));
            }
        }
        Element::from_terms(Algebra::QSym, terms).expect("M terms")
    }

    /// The product, computed in QSym and reported in the Schur basis.
    pub fn multiply(&self, other: &SymElement) -> SymElement {
        let p = multiply(&self.to_qsym(), &other.to_qsym()).expect("QSym product");
        schur_detect(&p)
            .expect("QSym arithmetic")
            .expect("products of symmetric functions are symmetric")
    }
}

fn rearrangements(parts: &[usize]) -> Vec<Composition> {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    // next-permutation walk over the multiset
    loop {
        out.push(Composition::new(sorted.clone()).expect("positive parts"));
        let Some(i) = (1..sorted.len()).rev().find(|&i| sorted[i - 1] < sorted[i]) else {
            break;
        };
        let j = (i..sorted.len()).rev().find(|&j| sorted[j] > sorted[i - 1]).unwrap();
        sorted.swap(i - 1, j);
        sorted[i..].reverse();
    }
    out
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let tok = self.basis.token();
        for (i, (l, k)) in self.terms.iter().enumerate() {
            let neg = k.sign() == num_bigint::Sign::Minus;
            let abs = if neg { -k } else { k.clone() };
            match (i == 0, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            if abs == BigInt::from(1) {
                write!(f, "{tok}{l}")?;
            } else {
                write!(f, "{abs} {tok}{l}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct SymTermJson {
    index: Vec<usize>,
    coeff: String,
}

#[derive(Serialize)]
struct SymJson {
    basis: SymBasis,
    terms: Vec<SymTermJson>,
}

impl Serialize for SymElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymJson {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(l, k)| SymTermJson {
                    index: l.parts().to_vec(),
                    coeff: k.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// The forgetful map `χ(H_α) = h_{sort(α)}`, reported in the `h` basis.
pub fn chi(x: &Element) -> Result<SymElement> {
    if x.algebra() != Algebra::NSym {
        return Err(Error::CrossAlgebra(Algebra::NSym, x.algebra()));
    }
    let h = convert(x, Basis::H)?;
    let mut out = SymElement::zero(SymBasis::Complete);
    for (_, c, k) in h.terms() {
        out.add_term(c.sort_to_partition(), k.clone());
    }
    Ok(out)
}

/// The Schur expansion of `f` if its `M`-coefficients are constant on
/// rearrangement classes, otherwise `None`.
pub fn schur_detect(f: &Element) -> Result<Option<SymElement>> {
    if f.algebra() != Algebra::QSym {
        return Err(Error::CrossAlgebra(Algebra::QSym, f.algebra()));
    }
    let coeffs = canonical_coeffs(f)?;
    let mut m = SymElement::zero(SymBasis::Monomial);
    for (c, k) in &coeffs {
        if c.is_partition() {
            m.add_term(Partition::try_from(c.clone())?, k.clone());
        }
    }
    if canonical_coeffs(&m.to_qsym())? != coeffs {
        return Ok(None);
    }
    Ok(Some(m.to_basis(SymBasis::Schur)))
}

/// `c^λ_{μ,ν}`: the coefficient of `s_λ` in `s_μ s_ν`, multiplying in QSym.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    let p = SymElement::term(SymBasis::Schur, mu.clone(), 1)
        .multiply(&SymElement::term(SymBasis::Schur, nu.clone(), 1));
    p.coeff(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: Vec<usize>) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn chi_examples() {
        let s12: Element = "sh[1,2]".parse().unwrap();
        assert!(chi(&s12).unwrap().to_basis(SymBasis::Schur).is_zero());
        let s22: Element = "sh[2,2]".parse().unwrap();
        assert_eq!(chi(&s22).unwrap().to_basis(SymBasis::Schur).to_string(), "s[2,2]");
        let h12: Element = "H[1,2]".parse().unwrap();
        assert_eq!(chi(&h12).unwrap().to_string(), "h[2,1]");
    }

    #[test]
    fn detection() {
        let f: Element = "sh*[2,2]".parse().unwrap();
        assert_eq!(schur_detect(&f).unwrap().unwrap().to_string(), "s[2,2]");
        let f: Element = "fsh*[2,3]".parse().unwrap();
        assert_eq!(schur_detect(&f).unwrap().unwrap().to_string(), "s[3,2]");
        let f: Element = "sh*[1,2]".parse().unwrap();
        assert_eq!(schur_detect(&f).unwrap(), None);
    }

    #[test]
    fn basis_changes_round_trip() {
        let x = SymElement::term(SymBasis::Complete, part(vec![2, 1, 1]), 3);
        for b in [SymBasis::Monomial, SymBasis::Schur, SymBasis::Complete] {
            assert_eq!(x.to_basis(b).to_basis(SymBasis::Complete), x);
        }
        assert_eq!(rearrangements(&[2, 1, 1]).len(), 3);
        assert_eq!(rearrangements(&[]).len(), 1);
    }

    #[test]
    fn littlewood_richardson() {
        assert_eq!(lr_coefficient(&part(vec![2, 1]), &part(vec![1]), &part(vec![1, 1])), BigInt::from(1));
        assert_eq!(
            lr_coefficient(&part(vec![3, 2, 1]), &part(vec![2, 1]), &part(vec![2, 1])),
            BigInt::from(2)
        );
    }
}
