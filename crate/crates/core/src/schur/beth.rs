use crate::algebra::{convert, Algebra, Basis, Element};
use crate::composition::Composition;
use crate::error::{Error, Result};

/// The creation operator `ℶ_m` on NSym: `ℶ_m(1) = H_m` and
/// `ℶ_m(H_α) = H_{(m, α_1, α_2, …)} − H_{(α_1, m, α_2, …)}`, extended linearly.
/// The result is written in the basis of `x`.
pub fn beth(m: usize, x: &Element) -> Result<Element> {
    if x.algebra() != Algebra::NSym {
        return Err(Error::CrossAlgebra(Algebra::NSym, x.algebra()));
    }
    if m == 0 {
        return Err(Error::Precondition("creation operator index must be positive".into()));
    }
    let h = convert(x, Basis::H)?;
    let out = h.map_terms(|_, c, k| {
        let parts = c.parts();
        if parts.is_empty() {
            return vec![(Basis::H, Composition::from_vec_unchecked(vec![m]), k.clone())];
        }
        let mut swapped = vec![parts[0], m];
        swapped.extend_from_slice(&parts[1..]);
        vec![
            (Basis::H, c.prepend(m), k.clone()),
            (Basis::H, Composition::from_vec_unchecked(swapped), -k),
        ]
    });
    convert(&out, x.primary_basis())
}

/// `ℶ_{β_1} ⋯ ℶ_{β_k}(1)` in `H`.
pub fn beth_chain(beta: &Composition) -> Result<Element> {
    let mut x = Element::one(Algebra::NSym);
    for &m in beta.parts().iter().rev() {
        x = beth(m, &x)?;
    }
    Ok(x)
}
