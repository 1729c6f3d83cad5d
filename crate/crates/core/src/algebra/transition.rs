//! Degree-graded change-of-basis matrices, cached process-wide.
//!
//! Every basis is tied to the canonical basis of its algebra (`H` for NSym,
//! `M` for QSym) by a pair of mutually inverse matrices indexed by
//! [`compositions`] of the degree. Entries are computed on first use; readers
//! share the cache and concurrent first uses may compute the same matrix twice.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::basis::Basis;
use super::linalg::{self, Matrix};
use crate::composition::{compositions, Composition};
use crate::error::{Error, Result};

/// Compositions of one degree with their positions in canonical order.
pub struct Degree {
    pub comps: Vec<Composition>,
    index: HashMap<Composition, usize>,
}

impl Degree {
    pub fn index_of(&self, c: &Composition) -> usize {
        self.index[c]
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }
}

pub fn degree(n: usize) -> Arc<Degree> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Degree>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.read().expect("degree cache poisoned").get(&n) {
        return d.clone();
    }
    let comps = compositions(n);
    let index = comps.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let d = Arc::new(Degree { comps, index });
    cache
        .write()
        .expect("degree cache poisoned")
        .entry(n)
        .or_insert(d)
        .clone()
}

/// Row `i` of `to_canonical` expresses basis element `i` in the canonical basis;
/// row `j` of `from_canonical` expresses canonical element `j` in this basis.
pub struct Transition {
    pub to_canonical: Matrix,
    pub from_canonical: Matrix,
}

pub fn transition(basis: Basis, n: usize) -> Result<Arc<Transition>> {
    static CACHE: OnceLock<RwLock<HashMap<(Basis, usize), Arc<Transition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("transition cache poisoned").get(&(basis, n)) {
        return Ok(t.clone());
    }
    let t = Arc::new(build(basis, n)?);
    log::debug!("built transition for {basis} in degree {n}");
    Ok(cache
        .write()
        .expect("transition cache poisoned")
        .entry((basis, n))
        .or_insert(t)
        .clone())
}

fn sign(exp: usize) -> BigInt {
    if exp % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Fills row `i` by `f(comps[i])`, which lists `(column composition, entry)`.
fn matrix_from<F>(d: &Degree, mut f: F) -> Matrix
where
    F: FnMut(&Composition) -> Vec<(Composition, BigInt)>,
{
    let mut m = vec![vec![BigInt::zero(); d.len()]; d.len()];
    for (i, a) in d.comps.iter().enumerate() {
        for (b, k) in f(a) {
            m[i][d.index_of(&b)] += k;
        }
    }
    m
}

fn build(basis: Basis, n: usize) -> Result<Transition> {
    let d = degree(n);
    let name = format!("{basis} in degree {n}");
    let (to, from) = match basis {
        Basis::H | Basis::M => (linalg::identity(d.len()), linalg::identity(d.len())),
        Basis::R => (
            matrix_from(&d, |a| {
                a.coarsenings()
                    .into_iter()
                    .map(|b| {
                        let s = sign(a.len() - b.len());
                        (b, s)
                    })
                    .collect()
            }),
            matrix_from(&d, |b| b.coarsenings().into_iter().map(|a| (a, BigInt::one())).collect()),
        ),
        Basis::E => (
            matrix_from(&d, |a| {
                a.refinements()
                    .into_iter()
                    .map(|b| {
                        let s = sign(a.size() - b.len());
                        (b, s)
                    })
                    .collect()
            }),
            matrix_from(&d, |b| {
                b.refinements()
                    .into_iter()
                    .map(|a| {
                        let s = sign(b.size() - a.len());
                        (a, s)
                    })
                    .collect()
            }),
        ),
        Basis::F => (
            matrix_from(&d, |a| a.refinements().into_iter().map(|b| (b, BigInt::one())).collect()),
            matrix_from(&d, |b| {
                b.refinements()
                    .into_iter()
                    .map(|a| {
                        let s = sign(a.len() - b.len());
                        (a, s)
                    })
                    .collect()
            }),
        ),
        Basis::Sh | Basis::Rsh | Basis::Fsh | Basis::Bsh => {
            let family = basis.family().expect("Schur-like basis");
            // H_β = Σ_α K_{α,β} X_α, so row β of the H-to-X matrix is column β of K.
            let from = linalg::transpose(&crate::schur::kostka_matrix(family, n));
            let to = linalg::invert(&from, &name)?;
            (to, from)
        }
        Basis::ShStar | Basis::RshStar | Basis::FshStar | Basis::BshStar => {
            let family = basis.family().expect("Schur-like basis");
            // X*_α = Σ_β K_{α,β} M_β.
            let to = crate::schur::kostka_matrix(family, n);
            let from = linalg::invert(&to, &name)?;
            (to, from)
        }
    };
    if cfg!(debug_assertions) && linalg::multiply(&to, &from) != linalg::identity(d.len()) {
        return Err(Error::Singular(name));
    }
    Ok(Transition {
        to_canonical: to,
        from_canonical: from,
    })
}

/// The matrix expressing each `from` basis element of degree `n` in the `to` basis:
/// `from_i = Σ_j entries[i][j] · to_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitionMatrix {
    pub from: Basis,
    pub to: Basis,
    pub degree: usize,
    #[serde(serialize_with = "ser_comps")]
    pub index: Vec<Composition>,
    #[serde(serialize_with = "ser_matrix")]
    pub entries: Matrix,
}

fn ser_comps<S: serde::Serializer>(c: &[Composition], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(c.iter().map(|c| c.parts().to_vec()))
}

fn ser_matrix<S: serde::Serializer>(m: &Matrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(m.iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
}

pub fn transition_matrix(from: Basis, to: Basis, n: usize) -> Result<TransitionMatrix> {
    if from.algebra() != to.algebra() {
        return Err(Error::CrossAlgebra(from.algebra(), to.algebra()));
    }
    let a = transition(from, n)?;
    let b = transition(to, n)?;
    Ok(TransitionMatrix {
        from,
        to,
        degree: n,
        index: degree(n).comps.clone(),
        entries: linalg::multiply(&a.to_canonical, &b.from_canonical),
    })
}

impl std::fmt::Display for TransitionMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let labels: Vec<String> = self.index.iter().map(|c| c.to_string()).collect();
        let width = labels.iter().map(String::len).max().unwrap_or(0);
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect())
            .collect();
        let cell_width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        writeln!(f, "{} -> {} in degree {}", self.from, self.to, self.degree)?;
        for (label, row) in labels.iter().zip(&cells) {
            write!(f, "{label:>width$} |")?;
            for x in row {
                write!(f, " {x:>cell_width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
