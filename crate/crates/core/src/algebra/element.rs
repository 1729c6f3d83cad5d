use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::basis::{Algebra, Basis};
use crate::composition::Composition;
use crate::error::{Error, Result};

pub type Term = (Basis, Composition);

/// A finite integer combination of basis elements of one algebra.
///
/// Terms are kept sorted by basis and then by the canonical composition order,
/// and zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    algebra: Algebra,
    terms: BTreeMap<Term, BigInt>,
}

impl Element {
    pub fn zero(algebra: Algebra) -> Self {
        Element {
            algebra,
            terms: BTreeMap::new(),
        }
    }

    /// The unit, written in the canonical basis.
    pub fn one(algebra: Algebra) -> Self {
        Element::basis(algebra.canonical(), Composition::empty())
    }

    pub fn basis(basis: Basis, index: Composition) -> Self {
        Element::term(basis, index, BigInt::one())
    }

    pub fn term(basis: Basis, index: Composition, coeff: impl Into<BigInt>) -> Self {
        let mut e = Element::zero(basis.algebra());
        e.add_term(basis, index, coeff.into());
        e
    }

    /// Builds an element from `(basis, index, coefficient)` triples; repeated terms are summed.
    pub fn from_terms<I, C>(algebra: Algebra, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Basis, Composition, C)>,
        C: Into<BigInt>,
    {
        let mut e = Element::zero(algebra);
        for (b, c, k) in terms {
            if b.algebra() != algebra {
                return Err(Error::CrossAlgebra(algebra, b.algebra()));
            }
            e.add_term(b, c, k.into());
        }
        Ok(e)
    }

    pub(crate) fn add_term(&mut self, basis: Basis, index: Composition, coeff: BigInt) {
        debug_assert_eq!(basis.algebra(), self.algebra);
        if coeff.is_zero() {
            return;
        }
        let key = (basis, index);
        let entry = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Basis, &Composition, &BigInt)> {
        self.terms.iter().map(|((b, c), k)| (b, c, k))
    }

    pub fn coeff(&self, basis: Basis, index: &Composition) -> BigInt {
        self.terms
            .get(&(basis, index.clone()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Bases that occur with a nonzero coefficient.
    pub fn bases(&self) -> Vec<Basis> {
        let mut out: Vec<Basis> = self.terms.keys().map(|(b, _)| *b).collect();
        out.dedup();
        out
    }

    /// The only basis in use, or the canonical one for zero and mixed elements.
    pub fn primary_basis(&self) -> Basis {
        match self.bases().as_slice() {
            [b] => *b,
            _ => self.algebra.canonical(),
        }
    }

    /// Terms of a single basis.
    pub fn restrict(&self, basis: Basis) -> Element {
        Element {
            algebra: self.algebra,
            terms: self
                .terms
                .iter()
                .filter(|((b, _), _)| *b == basis)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Degree `n` part.
    pub fn homogeneous(&self, n: usize) -> Element {
        Element {
            algebra: self.algebra,
            terms: self
                .terms
                .iter()
                .filter(|((_, c), _)| c.size() == n)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.terms.keys().map(|(_, c)| c.size()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        if self.algebra != other.algebra {
            return Err(Error::CrossAlgebra(self.algebra, other.algebra));
        }
        let mut out = self.clone();
        for ((b, c), k) in &other.terms {
            out.add_term(*b, c.clone(), k.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.try_add(&-other)
    }

    pub fn scale(&self, k: &BigInt) -> Element {
        if k.is_zero() {
            return Element::zero(self.algebra);
        }
        Element {
            algebra: self.algebra,
            terms: self.terms.iter().map(|(t, v)| (t.clone(), v * k)).collect(),
        }
    }

    /// Applies `f` to every index and sums the images with the same basis and coefficient.
    pub(crate) fn map_terms<F>(&self, mut f: F) -> Element
    where
        F: FnMut(Basis, &Composition, &BigInt) -> Vec<(Basis, Composition, BigInt)>,
    {
        let mut out = Element::zero(self.algebra);
        for ((b, c), k) in &self.terms {
            for (b2, c2, k2) in f(*b, c, k) {
                out.add_term(b2, c2, k2);
            }
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element {
            algebra: self.algebra,
            terms: self.terms.iter().map(|(t, v)| (t.clone(), -v)).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Element {
        -&self
    }
}

/// Panics if the operands live in different algebras; use [`Element::try_add`] to get an error instead.
impl Add<&Element> for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("sum of elements from different algebras")
    }
}

impl Add for Element {
    type Output = Element;

    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

/// Panics if the operands live in different algebras; use [`Element::try_sub`] to get an error instead.
impl Sub<&Element> for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).expect("difference of elements from different algebras")
    }
}

impl Sub for Element {
    type Output = Element;

    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Mul<i64> for &Element {
    type Output = Element;

    fn mul(self, k: i64) -> Element {
        self.scale(&BigInt::from(k))
    }
}

impl Mul<i64> for Element {
    type Output = Element;

    fn mul(self, k: i64) -> Element {
        self.scale(&BigInt::from(k))
    }
}

/// A finite integer combination of pairs of basis elements from one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    algebra: Algebra,
    terms: BTreeMap<(Term, Term), BigInt>,
}

impl TensorElement {
    pub fn zero(algebra: Algebra) -> Self {
        TensorElement {
            algebra,
            terms: BTreeMap::new(),
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, left: Term, right: Term, coeff: BigInt) {
        debug_assert_eq!(left.0.algebra(), self.algebra);
        debug_assert_eq!(right.0.algebra(), self.algebra);
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        let entry = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Adds `k · (a ⊗ b)` expanded bilinearly.
    pub fn add_product(&mut self, a: &Element, b: &Element, k: &BigInt) {
        for (ba, ca, ka) in a.terms() {
            for (bb, cb, kb) in b.terms() {
                self.add_term((*ba, ca.clone()), (*bb, cb.clone()), k * ka * kb);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Term, &BigInt)> {
        self.terms.iter().map(|((l, r), k)| (l, r, k))
    }

    pub fn coeff(&self, left: &Term, right: &Term) -> BigInt {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn try_add(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.algebra != other.algebra {
            return Err(Error::CrossAlgebra(self.algebra, other.algebra));
        }
        let mut out = self.clone();
        for ((l, r), k) in &other.terms {
            out.add_term(l.clone(), r.clone(), k.clone());
        }
        Ok(out)
    }

    /// Rewrites each leg in the given bases.
    pub fn convert(&self, left: Basis, right: Basis) -> Result<TensorElement> {
        for b in [left, right] {
            if b.algebra() != self.algebra {
                return Err(Error::CrossAlgebra(self.algebra, b.algebra()));
            }
        }
        let mut out = TensorElement::zero(self.algebra);
        for ((l, r), k) in &self.terms {
            let a = super::convert(&Element::basis(l.0, l.1.clone()), left)?;
            let b = super::convert(&Element::basis(r.0, r.1.clone()), right)?;
            out.add_product(&a, &b, k);
        }
        Ok(out)
    }
}
