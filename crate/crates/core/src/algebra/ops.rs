use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::basis::{Algebra, Basis};
use super::element::{Element, TensorElement};
use super::transition::{degree, transition};
use crate::composition::Composition;
use crate::error::{Error, Result};

pub(crate) type Coeffs = BTreeMap<Composition, BigInt>;

fn accumulate(map: &mut Coeffs, c: Composition, k: BigInt) {
    if k.is_zero() {
        return;
    }
    let entry = map.entry(c.clone()).or_insert_with(BigInt::zero);
    *entry += k;
    if entry.is_zero() {
        map.remove(&c);
    }
}

/// Coefficients of `x` in the canonical basis of its algebra.
pub(crate) fn canonical_coeffs(x: &Element) -> Result<Coeffs> {
    let canonical = x.algebra().canonical();
    let mut out = Coeffs::new();
    for (b, c, k) in x.terms() {
        if *b == canonical {
            accumulate(&mut out, c.clone(), k.clone());
            continue;
        }
        let d = degree(c.size());
        let t = transition(*b, c.size())?;
        for (j, a) in t.to_canonical[d.index_of(c)].iter().enumerate() {
            if !a.is_zero() {
                accumulate(&mut out, d.comps[j].clone(), k * a);
            }
        }
    }
    Ok(out)
}

pub(crate) fn from_canonical(coeffs: &Coeffs, target: Basis) -> Result<Element> {
    let mut out = Element::zero(target.algebra());
    if target == target.algebra().canonical() {
        for (c, k) in coeffs {
            out.add_term(target, c.clone(), k.clone());
        }
        return Ok(out);
    }
    for (c, k) in coeffs {
        let d = degree(c.size());
        let t = transition(target, c.size())?;
        for (j, a) in t.from_canonical[d.index_of(c)].iter().enumerate() {
            if !a.is_zero() {
                out.add_term(target, d.comps[j].clone(), k * a);
            }
        }
    }
    Ok(out)
}

/// Rewrites `x` in the `target` basis.
pub fn convert(x: &Element, target: Basis) -> Result<Element> {
    if target.algebra() != x.algebra() {
        return Err(Error::CrossAlgebra(x.algebra(), target.algebra()));
    }
    if x.bases().iter().all(|&b| b == target) {
        return Ok(x.clone());
    }
    from_canonical(&canonical_coeffs(x)?, target)
}

/// All terms of the quasi-shuffle (overlapping shuffle) of `a` and `b`, with multiplicity.
pub fn quasi_shuffle(a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
    match (a.split_first(), b.split_first()) {
        (None, _) => vec![b.to_vec()],
        (_, None) => vec![a.to_vec()],
        (Some((&x, ra)), Some((&y, rb))) => {
            let mut out = Vec::new();
            for (head, left, right) in [(x, ra, b), (y, a, rb), (x + y, ra, rb)] {
                for mut tail in quasi_shuffle(left, right) {
                    tail.insert(0, head);
                    out.push(tail);
                }
            }
            out
        }
    }
}

/// The product `x · y`, written in the basis of `x` (or the canonical basis if `x` mixes bases).
pub fn multiply(x: &Element, y: &Element) -> Result<Element> {
    if x.algebra() != y.algebra() {
        return Err(Error::CrossAlgebra(x.algebra(), y.algebra()));
    }
    let (cx, cy) = (canonical_coeffs(x)?, canonical_coeffs(y)?);
    let mut out = Coeffs::new();
    for (a, ka) in &cx {
        for (b, kb) in &cy {
            let k = ka * kb;
            match x.algebra() {
                Algebra::NSym => accumulate(&mut out, a.concat(b), k),
                Algebra::QSym => {
                    for parts in quasi_shuffle(a.parts(), b.parts()) {
                        accumulate(&mut out, Composition::from_vec_unchecked(parts), k.clone());
                    }
                }
            }
        }
    }
    from_canonical(&out, x.primary_basis())
}

fn nonzero(parts: impl IntoIterator<Item = usize>) -> Composition {
    Composition::from_vec_unchecked(parts.into_iter().filter(|&p| p > 0).collect())
}

/// The coproduct, with both legs in the canonical basis.
///
/// On NSym `Δ(H_n) = Σ_{i+j=n} H_i ⊗ H_j` extended multiplicatively; on QSym
/// `Δ(M_α)` deconcatenates `α`.
pub fn coproduct(x: &Element) -> Result<TensorElement> {
    let algebra = x.algebra();
    let canonical = algebra.canonical();
    let mut out = TensorElement::zero(algebra);
    for (a, k) in canonical_coeffs(x)? {
        let parts = a.parts();
        match algebra {
            Algebra::NSym => {
                let mut split = vec![0; parts.len()];
                loop {
                    let left = nonzero(split.iter().copied());
                    let right = nonzero(parts.iter().zip(&split).map(|(p, s)| p - s));
                    out.add_term((canonical, left), (canonical, right), k.clone());
                    // odometer over 0 ≤ split_i ≤ α_i
                    let mut i = 0;
                    while i < parts.len() && split[i] == parts[i] {
                        split[i] = 0;
                        i += 1;
                    }
                    if i == parts.len() {
                        break;
                    }
                    split[i] += 1;
                }
            }
            Algebra::QSym => {
                for cut in 0..=parts.len() {
                    out.add_term(
                        (canonical, Composition::from_vec_unchecked(parts[..cut].to_vec())),
                        (canonical, Composition::from_vec_unchecked(parts[cut..].to_vec())),
                        k.clone(),
                    );
                }
            }
        }
    }
    Ok(out)
}

/// `ε(x)`: the coefficient of the empty composition in the canonical basis.
pub fn counit(x: &Element) -> Result<BigInt> {
    Ok(canonical_coeffs(x)?
        .get(&Composition::empty())
        .cloned()
        .unwrap_or_else(BigInt::zero))
}

fn check_pair(h: &Element, f: &Element) -> Result<()> {
    match (h.algebra(), f.algebra()) {
        (Algebra::NSym, Algebra::QSym) => Ok(()),
        (a, b) => Err(Error::Precondition(format!(
            "pairing takes an NSym element and a QSym element, got {a} and {b}"
        ))),
    }
}

/// `⟨h, f⟩` with `⟨H_α, M_β⟩ = δ_{α,β}`.
pub fn pair(h: &Element, f: &Element) -> Result<BigInt> {
    check_pair(h, f)?;
    let (ch, cf) = (canonical_coeffs(h)?, canonical_coeffs(f)?);
    Ok(ch
        .iter()
        .filter_map(|(c, k)| cf.get(c).map(|m| k * m))
        .fold(BigInt::zero(), |acc, x| acc + x))
}

fn perp_impl(h: &Element, f: &Element, from_left: bool) -> Result<Element> {
    check_pair(h, f)?;
    let (ch, cf) = (canonical_coeffs(h)?, canonical_coeffs(f)?);
    let mut out = Coeffs::new();
    for (a, ka) in &ch {
        let a = a.parts();
        for (d, kd) in &cf {
            let d = d.parts();
            if d.len() < a.len() {
                continue;
            }
            let rest = if from_left {
                d.starts_with(a).then(|| &d[a.len()..])
            } else {
                d.ends_with(a).then(|| &d[..d.len() - a.len()])
            };
            if let Some(rest) = rest {
                accumulate(&mut out, Composition::from_vec_unchecked(rest.to_vec()), ka * kd);
            }
        }
    }
    from_canonical(&out, Basis::M)
}

/// `h^⊥(f) = Σ_γ ⟨h · H_γ, f⟩ M_γ`, adjoint to left multiplication by `h`.
pub fn perp(h: &Element, f: &Element) -> Result<Element> {
    perp_impl(h, f, true)
}

/// `Σ_γ ⟨H_γ · h, f⟩ M_γ`, adjoint to right multiplication by `h`.
pub fn rperp(h: &Element, f: &Element) -> Result<Element> {
    perp_impl(h, f, false)
}

/// The three involutions, acting on ribbons and fundamentals by complement,
/// reversal and transpose of the index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Involution {
    Psi,
    Rho,
    Omega,
}

impl Involution {
    pub const ALL: [Involution; 3] = [Involution::Psi, Involution::Rho, Involution::Omega];

    pub fn apply_index(self, c: &Composition) -> Composition {
        match self {
            Involution::Psi => c.complement(),
            Involution::Rho => c.reverse(),
            Involution::Omega => c.transpose(),
        }
    }

    /// The basis in which images of `b`-elements are reported.
    pub fn image_basis(self, b: Basis) -> Basis {
        use Basis::*;
        match (self, b) {
            (Involution::Psi, H) => E,
            (Involution::Psi, E) => H,
            (Involution::Psi, Sh) => Rsh,
            (Involution::Psi, Rsh) => Sh,
            (Involution::Psi, Fsh) => Bsh,
            (Involution::Psi, Bsh) => Fsh,
            (Involution::Psi, ShStar) => RshStar,
            (Involution::Psi, RshStar) => ShStar,
            (Involution::Psi, FshStar) => BshStar,
            (Involution::Psi, BshStar) => FshStar,
            (Involution::Rho, Sh) => Fsh,
            (Involution::Rho, Fsh) => Sh,
            (Involution::Rho, Rsh) => Bsh,
            (Involution::Rho, Bsh) => Rsh,
            (Involution::Rho, ShStar) => FshStar,
            (Involution::Rho, FshStar) => ShStar,
            (Involution::Rho, RshStar) => BshStar,
            (Involution::Rho, BshStar) => RshStar,
            (Involution::Omega, H) => E,
            (Involution::Omega, E) => H,
            (Involution::Omega, Sh) => Bsh,
            (Involution::Omega, Bsh) => Sh,
            (Involution::Omega, Rsh) => Fsh,
            (Involution::Omega, Fsh) => Rsh,
            (Involution::Omega, ShStar) => BshStar,
            (Involution::Omega, BshStar) => ShStar,
            (Involution::Omega, RshStar) => FshStar,
            (Involution::Omega, FshStar) => RshStar,
            (_, other) => other,
        }
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Involution::Psi => "psi",
            Involution::Rho => "rho",
            Involution::Omega => "omega",
        })
    }
}

impl FromStr for Involution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "psi" | "ψ" => Ok(Involution::Psi),
            "rho" | "ρ" => Ok(Involution::Rho),
            "omega" | "ω" => Ok(Involution::Omega),
            other => Err(Error::Precondition(format!("unknown involution `{other}`"))),
        }
    }
}

fn ribbon_basis(a: Algebra) -> Basis {
    match a {
        Algebra::NSym => Basis::R,
        Algebra::QSym => Basis::F,
    }
}

/// Converts each basis block of `x` to ribbons/fundamentals, maps the indices, and
/// converts the result to `target(basis)`.
fn act_on_ribbons<G, T>(x: &Element, mut index_map: G, target: T) -> Result<Element>
where
    G: FnMut(&Composition) -> (Composition, BigInt),
    T: Fn(Basis) -> Basis,
{
    let base = ribbon_basis(x.algebra());
    let mut out = Element::zero(x.algebra());
    for b in x.bases() {
        let r = convert(&x.restrict(b), base)?;
        let mapped = r.map_terms(|bb, c, k| {
            let (c2, s) = index_map(c);
            vec![(bb, c2, k * s)]
        });
        out = out.try_add(&convert(&mapped, target(b))?)?;
    }
    Ok(out)
}

/// Applies ψ, ρ or ω; each basis block of `x` is reported in its image basis
/// (for instance ψ sends `sh`-expansions to `rsh`-expansions).
pub fn involution(which: Involution, x: &Element) -> Result<Element> {
    act_on_ribbons(x, |c| (which.apply_index(c), BigInt::one()), |b| which.image_basis(b))
}

/// The antipode: `S(R_α) = (-1)^{|α|} R_{α^t}` and `S(F_α) = (-1)^{|α|} F_{α^t}`,
/// reported in the input bases.
pub fn antipode(x: &Element) -> Result<Element> {
    act_on_ribbons(
        x,
        |c| {
            let s = if c.size() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            (c.transpose(), s)
        },
        |b| b,
    )
}
